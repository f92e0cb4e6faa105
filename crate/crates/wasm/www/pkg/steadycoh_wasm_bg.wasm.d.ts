/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_point_free: (a: number, b: number) => void;
export const coherenceCurve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number, number];
export const phaseDiagram: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number) => [number, number, number, number];
export const point_coherence: (a: number) => number;
export const point_flux: (a: number) => number;
export const point_minEigenvalue: (a: number) => number;
export const point_populations: (a: number) => [number, number];
export const point_residual: (a: number) => number;
export const point_rho32Im: (a: number) => number;
export const point_rho32Re: (a: number) => number;
export const steadyState: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
