/* tslint:disable */
/* eslint-disable */

/**
 * Black-Scholes price of one contract and what each estimator recovers
 * from it. Unavailable estimates are NaN; `error` is empty on success.
 */
export class Summary {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    error: string;
    method: string;
    price_bs: number;
    price_tanh: number;
    sigma_bs: number;
    sigma_cm: number;
    sigma_hat: number;
    sigma_li: number;
    sigma_oracle: number;
}

/**
 * Exact ATM price `S erf(sigma sqrt(T/8))`, for the page's reference line.
 */
export function atm_exact(spot: number, maturity: number, vol: number): number;

/**
 * `[x, chi(x), chi_hat(x)]` triples for `n` points on `(0, x_max]`.
 * Empty when `alpha` or the range is invalid.
 */
export function chi_curves(alpha: number, x_max: number, n: number): Float64Array;

/**
 * `[z, erf - Theta0, erf - Theta1, erf - Theta2]` for `n + 1` points on `[0, z_max]`.
 */
export function erf_errors(z_max: number, n: number): Float64Array;

/**
 * `atm` selects the at-the-money formula: 0, 1 or 2 for Theta0..Theta2.
 */
export function price_and_invert(spot: number, strike: number, rate: number, maturity: number, vol: number, atm: number): Summary;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_get_summary_error: (a: number) => [number, number];
    readonly __wbg_get_summary_method: (a: number) => [number, number];
    readonly __wbg_get_summary_price_bs: (a: number) => number;
    readonly __wbg_get_summary_price_tanh: (a: number) => number;
    readonly __wbg_get_summary_sigma_bs: (a: number) => number;
    readonly __wbg_get_summary_sigma_cm: (a: number) => number;
    readonly __wbg_get_summary_sigma_hat: (a: number) => number;
    readonly __wbg_get_summary_sigma_li: (a: number) => number;
    readonly __wbg_get_summary_sigma_oracle: (a: number) => number;
    readonly __wbg_set_summary_error: (a: number, b: number, c: number) => void;
    readonly __wbg_set_summary_method: (a: number, b: number, c: number) => void;
    readonly __wbg_set_summary_price_bs: (a: number, b: number) => void;
    readonly __wbg_set_summary_price_tanh: (a: number, b: number) => void;
    readonly __wbg_set_summary_sigma_bs: (a: number, b: number) => void;
    readonly __wbg_set_summary_sigma_cm: (a: number, b: number) => void;
    readonly __wbg_set_summary_sigma_hat: (a: number, b: number) => void;
    readonly __wbg_set_summary_sigma_li: (a: number, b: number) => void;
    readonly __wbg_set_summary_sigma_oracle: (a: number, b: number) => void;
    readonly __wbg_summary_free: (a: number, b: number) => void;
    readonly atm_exact: (a: number, b: number, c: number) => number;
    readonly chi_curves: (a: number, b: number, c: number) => [number, number];
    readonly erf_errors: (a: number, b: number) => [number, number];
    readonly price_and_invert: (a: number, b: number, c: number, d: number, e: number, f: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
