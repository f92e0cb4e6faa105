/* tslint:disable */
/* eslint-disable */

/**
 * One steady state as seen from JavaScript.
 */
export class Point {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly coherence: number;
    /**
     * Heat flux `J₁₋₂ = −4ξ Im ρ₃₂`.
     */
    readonly flux: number;
    readonly minEigenvalue: number;
    /**
     * `[ρ₁₁, ρ₂₂, ρ₃₃, ρ₄₄]` in the dressed basis.
     */
    readonly populations: Float64Array;
    readonly residual: number;
    readonly rho32Im: number;
    readonly rho32Re: number;
}

/**
 * `|ρ₃₂|` against `ΔT ∈ [0, delta_t_max]` at fixed `T_a`.
 */
export function coherenceCurve(_case: string, secular: boolean, omega: number, xi: number, delta: number, ta: number, delta_t_max: number, steps: number): Float64Array;

/**
 * `|ρ₃₂|` on an `n_delta_t × n_ta` grid, `T_a` fastest.
 */
export function phaseDiagram(_case: string, secular: boolean, omega: number, xi: number, delta: number, delta_t_max: number, ta_max: number, n_delta_t: number, n_ta: number): Float64Array;

/**
 * Steady state at `(T_a, T_b)`.
 */
export function steadyState(_case: string, secular: boolean, omega: number, xi: number, delta: number, ta: number, tb: number): Point;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_point_free: (a: number, b: number) => void;
    readonly coherenceCurve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number, number];
    readonly phaseDiagram: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number) => [number, number, number, number];
    readonly point_coherence: (a: number) => number;
    readonly point_flux: (a: number) => number;
    readonly point_minEigenvalue: (a: number) => number;
    readonly point_populations: (a: number) => [number, number];
    readonly point_residual: (a: number) => number;
    readonly point_rho32Im: (a: number) => number;
    readonly point_rho32Re: (a: number) => number;
    readonly steadyState: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
