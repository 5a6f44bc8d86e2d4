/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_get_summary_error: (a: number) => [number, number];
export const __wbg_get_summary_method: (a: number) => [number, number];
export const __wbg_get_summary_price_bs: (a: number) => number;
export const __wbg_get_summary_price_tanh: (a: number) => number;
export const __wbg_get_summary_sigma_bs: (a: number) => number;
export const __wbg_get_summary_sigma_cm: (a: number) => number;
export const __wbg_get_summary_sigma_hat: (a: number) => number;
export const __wbg_get_summary_sigma_li: (a: number) => number;
export const __wbg_get_summary_sigma_oracle: (a: number) => number;
export const __wbg_set_summary_error: (a: number, b: number, c: number) => void;
export const __wbg_set_summary_method: (a: number, b: number, c: number) => void;
export const __wbg_set_summary_price_bs: (a: number, b: number) => void;
export const __wbg_set_summary_price_tanh: (a: number, b: number) => void;
export const __wbg_set_summary_sigma_bs: (a: number, b: number) => void;
export const __wbg_set_summary_sigma_cm: (a: number, b: number) => void;
export const __wbg_set_summary_sigma_hat: (a: number, b: number) => void;
export const __wbg_set_summary_sigma_li: (a: number, b: number) => void;
export const __wbg_set_summary_sigma_oracle: (a: number, b: number) => void;
export const __wbg_summary_free: (a: number, b: number) => void;
export const atm_exact: (a: number, b: number, c: number) => number;
export const chi_curves: (a: number, b: number, c: number) => [number, number];
export const erf_errors: (a: number, b: number) => [number, number];
export const price_and_invert: (a: number, b: number, c: number, d: number, e: number, f: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
