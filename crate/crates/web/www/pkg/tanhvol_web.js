/* @ts-self-types="./tanhvol_web.d.ts" */

/**
 * Black-Scholes price of one contract and what each estimator recovers
 * from it. Unavailable estimates are NaN; `error` is empty on success.
 */
export class Summary {
    static __wrap(ptr) {
        const obj = Object.create(Summary.prototype);
        obj.__wbg_ptr = ptr;
        SummaryFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        SummaryFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_summary_free(ptr, 0);
    }
    /**
     * @returns {string}
     */
    get error() {
        let deferred1_0;
        let deferred1_1;
        try {
            const ret = wasm.__wbg_get_summary_error(this.__wbg_ptr);
            deferred1_0 = ret[0];
            deferred1_1 = ret[1];
            return getStringFromWasm0(ret[0], ret[1]);
        } finally {
            wasm.__wbindgen_free(deferred1_0, deferred1_1, 1);
        }
    }
    /**
     * @returns {string}
     */
    get method() {
        let deferred1_0;
        let deferred1_1;
        try {
            const ret = wasm.__wbg_get_summary_method(this.__wbg_ptr);
            deferred1_0 = ret[0];
            deferred1_1 = ret[1];
            return getStringFromWasm0(ret[0], ret[1]);
        } finally {
            wasm.__wbindgen_free(deferred1_0, deferred1_1, 1);
        }
    }
    /**
     * @returns {number}
     */
    get price_bs() {
        const ret = wasm.__wbg_get_summary_price_bs(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get price_tanh() {
        const ret = wasm.__wbg_get_summary_price_tanh(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get sigma_bs() {
        const ret = wasm.__wbg_get_summary_sigma_bs(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get sigma_cm() {
        const ret = wasm.__wbg_get_summary_sigma_cm(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get sigma_hat() {
        const ret = wasm.__wbg_get_summary_sigma_hat(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get sigma_li() {
        const ret = wasm.__wbg_get_summary_sigma_li(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get sigma_oracle() {
        const ret = wasm.__wbg_get_summary_sigma_oracle(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {string} arg0
     */
    set error(arg0) {
        const ptr0 = passStringToWasm0(arg0, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
        const len0 = WASM_VECTOR_LEN;
        wasm.__wbg_set_summary_error(this.__wbg_ptr, ptr0, len0);
    }
    /**
     * @param {string} arg0
     */
    set method(arg0) {
        const ptr0 = passStringToWasm0(arg0, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
        const len0 = WASM_VECTOR_LEN;
        wasm.__wbg_set_summary_method(this.__wbg_ptr, ptr0, len0);
    }
    /**
     * @param {number} arg0
     */
    set price_bs(arg0) {
        wasm.__wbg_set_summary_price_bs(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set price_tanh(arg0) {
        wasm.__wbg_set_summary_price_tanh(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set sigma_bs(arg0) {
        wasm.__wbg_set_summary_sigma_bs(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set sigma_cm(arg0) {
        wasm.__wbg_set_summary_sigma_cm(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set sigma_hat(arg0) {
        wasm.__wbg_set_summary_sigma_hat(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set sigma_li(arg0) {
        wasm.__wbg_set_summary_sigma_li(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set sigma_oracle(arg0) {
        wasm.__wbg_set_summary_sigma_oracle(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) Summary.prototype[Symbol.dispose] = Summary.prototype.free;

/**
 * Exact ATM price `S erf(sigma sqrt(T/8))`, for the page's reference line.
 * @param {number} spot
 * @param {number} maturity
 * @param {number} vol
 * @returns {number}
 */
export function atm_exact(spot, maturity, vol) {
    const ret = wasm.atm_exact(spot, maturity, vol);
    return ret;
}

/**
 * `[x, chi(x), chi_hat(x)]` triples for `n` points on `(0, x_max]`.
 * Empty when `alpha` or the range is invalid.
 * @param {number} alpha
 * @param {number} x_max
 * @param {number} n
 * @returns {Float64Array}
 */
export function chi_curves(alpha, x_max, n) {
    const ret = wasm.chi_curves(alpha, x_max, n);
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}

/**
 * `[z, erf - Theta0, erf - Theta1, erf - Theta2]` for `n + 1` points on `[0, z_max]`.
 * @param {number} z_max
 * @param {number} n
 * @returns {Float64Array}
 */
export function erf_errors(z_max, n) {
    const ret = wasm.erf_errors(z_max, n);
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}

/**
 * `atm` selects the at-the-money formula: 0, 1 or 2 for Theta0..Theta2.
 * @param {number} spot
 * @param {number} strike
 * @param {number} rate
 * @param {number} maturity
 * @param {number} vol
 * @param {number} atm
 * @returns {Summary}
 */
export function price_and_invert(spot, strike, rate, maturity, vol, atm) {
    const ret = wasm.price_and_invert(spot, strike, rate, maturity, vol, atm);
    return Summary.__wrap(ret);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./tanhvol_web_bg.js": import0,
    };
}

const SummaryFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_summary_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function passStringToWasm0(arg, malloc, realloc) {
    if (realloc === undefined) {
        const buf = cachedTextEncoder.encode(arg);
        const ptr = malloc(buf.length, 1) >>> 0;
        getUint8ArrayMemory0().subarray(ptr, ptr + buf.length).set(buf);
        WASM_VECTOR_LEN = buf.length;
        return ptr;
    }

    let len = arg.length;
    let ptr = malloc(len, 1) >>> 0;

    const mem = getUint8ArrayMemory0();

    let offset = 0;

    for (; offset < len; offset++) {
        const code = arg.charCodeAt(offset);
        if (code > 0x7F) break;
        mem[ptr + offset] = code;
    }
    if (offset !== len) {
        if (offset !== 0) {
            arg = arg.slice(offset);
        }
        ptr = realloc(ptr, len, len = offset + arg.length * 3, 1) >>> 0;
        const view = getUint8ArrayMemory0().subarray(ptr + offset, ptr + len);
        const ret = cachedTextEncoder.encodeInto(arg, view);

        offset += ret.written;
        ptr = realloc(ptr, len, offset, 1) >>> 0;
    }

    WASM_VECTOR_LEN = offset;
    return ptr;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

const cachedTextEncoder = new TextEncoder();

if (!('encodeInto' in cachedTextEncoder)) {
    cachedTextEncoder.encodeInto = function (arg, view) {
        const buf = cachedTextEncoder.encode(arg);
        view.set(buf);
        return {
            read: arg.length,
            written: buf.length
        };
    };
}

let WASM_VECTOR_LEN = 0;

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('tanhvol_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
