import init, { chi_curves, erf_errors, price_and_invert } from "./pkg/tanhvol_web.js";

const $ = (id) => document.getElementById(id);
const COLORS = ["#1f77b4", "#d62728", "#2ca02c"];

// Plots columns 1.. of a row-major array with `width` columns against column 0.
function plot(canvas, data, width, colors) {
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height, pad = 40;
  ctx.clearRect(0, 0, W, H);
  const rows = data.length / width;
  if (rows < 2) return;
  let xmin = Infinity, xmax = -Infinity, ymin = Infinity, ymax = -Infinity;
  for (let i = 0; i < rows; i++) {
    const x = data[i * width];
    xmin = Math.min(xmin, x); xmax = Math.max(xmax, x);
    for (let c = 1; c < width; c++) {
      const y = data[i * width + c];
      if (Number.isFinite(y)) { ymin = Math.min(ymin, y); ymax = Math.max(ymax, y); }
    }
  }
  if (ymax === ymin) { ymax += 1; ymin -= 1; }
  const sx = (x) => pad + (x - xmin) / (xmax - xmin) * (W - 2 * pad);
  const sy = (y) => H - pad - (y - ymin) / (ymax - ymin) * (H - 2 * pad);

  ctx.strokeStyle = "#999";
  ctx.fillStyle = "#444";
  ctx.font = "11px sans-serif";
  ctx.strokeRect(pad, pad, W - 2 * pad, H - 2 * pad);
  ctx.fillText(ymax.toPrecision(3), 2, pad + 4);
  ctx.fillText(ymin.toPrecision(3), 2, H - pad);
  ctx.fillText(xmin.toPrecision(3), pad, H - pad + 14);
  ctx.fillText(xmax.toPrecision(3), W - pad - 20, H - pad + 14);
  if (ymin < 0 && ymax > 0) {
    ctx.beginPath(); ctx.moveTo(pad, sy(0)); ctx.lineTo(W - pad, sy(0)); ctx.stroke();
  }

  for (let c = 1; c < width; c++) {
    ctx.strokeStyle = colors[c - 1];
    ctx.beginPath();
    for (let i = 0; i < rows; i++) {
      const px = sx(data[i * width]), py = sy(data[i * width + c]);
      i === 0 ? ctx.moveTo(px, py) : ctx.lineTo(px, py);
    }
    ctx.stroke();
  }
}

function drawChi() {
  const alpha = parseFloat($("alpha").value);
  $("alpha-val").textContent = alpha.toFixed(2);
  plot($("chi"), chi_curves(alpha, parseFloat($("xmax").value), 600), 3, COLORS);
}

function drawErf() {
  plot($("erf"), erf_errors(parseFloat($("zmax").value), 800), 4, [COLORS[0], COLORS[2], COLORS[1]]);
}

function fmt(v) {
  return Number.isNaN(v) ? "unavailable" : v.toFixed(8);
}

function summarize() {
  const v = (id) => parseFloat($(id).value);
  const s = price_and_invert(v("spot"), v("strike"), v("rate"), v("maturity"), v("vol"), parseInt($("atm").value));
  $("error").textContent = s.error;
  const rows = s.error ? [] : [
    ["Black-Scholes price", fmt(s.price_bs)],
    ["surrogate price", fmt(s.price_tanh)],
    [`sigma_hat (${s.method})`, fmt(s.sigma_hat)],
    ["Li", fmt(s.sigma_li)],
    ["Brenner-Subrahmanyam", fmt(s.sigma_bs)],
    ["Corrado-Miller", fmt(s.sigma_cm)],
    ["Newton oracle", fmt(s.sigma_oracle)],
  ];
  $("summary").innerHTML = rows.map(([k, x]) => `<tr><th>${k}</th><td>${x}</td></tr>`).join("");
  s.free();
}

await init();
for (const id of ["alpha", "xmax"]) $(id).addEventListener("input", drawChi);
for (const id of ["spot", "strike", "rate", "maturity", "vol", "atm"]) $(id).addEventListener("input", summarize);
$("zmax").addEventListener("input", drawErf);
drawChi();
summarize();
drawErf();
