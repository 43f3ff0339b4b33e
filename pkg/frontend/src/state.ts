// Explorer state: the full editable parameter set, its validation, and the
// mapping to render requests. Validation mirrors the service so invalid
// edits never leave the browser.

import type { PresetEntry, RenderRequest } from "./api.js";

export interface ExplorerState {
	mode: "star" | "tiling";
	N: number;
	S: number;
	radii: number[];
	alpha: number;
	spr: number;
	special: number | null;
	base_rotation: number;
	R: number;
	rows: number;
	cols: number;
	gap_N: number;
	inner_ratio: number;
	fill_down_gaps: boolean;
	stroke_width: number;
	size: number;
	margin_ratio: number;
}

export interface Range {
	min: number;
	max: number;
	step: number;
}

export const LIMITS: Record<string, Range> = {
	N: { min: 3, max: 36, step: 1 },
	S: { min: 2, max: 6, step: 1 },
	radius: { min: 1, max: 300, step: 1 },
	alpha: { min: -180, max: 180, step: 1 },
	spr: { min: -300, max: 300, step: 1 },
	base_rotation: { min: -180, max: 180, step: 1 },
	R: { min: 10, max: 400, step: 5 },
	rows: { min: 1, max: 6, step: 1 },
	cols: { min: 1, max: 6, step: 1 },
	gap_N: { min: 3, max: 24, step: 1 },
	inner_ratio: { min: 0.5, max: 0.99, step: 0.01 },
};

export function defaultState(): ExplorerState {
	return {
		mode: "star",
		N: 8,
		S: 3,
		radii: [51, 70, 172],
		alpha: 0,
		spr: 0,
		special: null,
		base_rotation: 0,
		R: 200,
		rows: 3,
		cols: 3,
		gap_N: 6,
		inner_ratio: 0.5,
		fill_down_gaps: true,
		stroke_width: 1,
		size: 800,
		margin_ratio: 0.05,
	};
}

/** Field -> message; empty object when the state may be sent to the service. */
export function validate(state: ExplorerState): Record<string, string> {
	const errors: Record<string, string> = {};
	const isInt = (v: number) => Number.isInteger(v);
	if (!isInt(state.N) || state.N < 3) errors.N = "N must be an integer ≥ 3";
	if (!isInt(state.S) || state.S < 2) errors.S = "S must be an integer ≥ 2";
	if (state.radii.length !== state.S) errors.radii = `expected ${state.S} radii`;
	state.radii.forEach((r, i) => {
		if (!Number.isFinite(r) || r <= 0) errors[`radii.${i}`] = "radius must be > 0";
	});
	if (!(state.alpha > -360 && state.alpha < 360)) {
		errors.alpha = "alpha must lie in (-360, 360)";
	}
	if (state.special !== null) {
		if (!isInt(state.special) || state.special < 2 || state.special > state.S) {
			errors.special = "special must be none or an index in 2..S";
		} else {
			const ring = (state.radii[state.special - 1] ?? 0) - state.spr;
			if (!(ring > 0)) errors.spr = "special-point circle radius must stay > 0";
		}
	}
	if (state.mode === "tiling") {
		if (!(state.R > 0)) errors.R = "R must be > 0";
		if (!isInt(state.rows) || state.rows < 1) errors.rows = "rows must be an integer ≥ 1";
		if (!isInt(state.cols) || state.cols < 1) errors.cols = "cols must be an integer ≥ 1";
		if (!isInt(state.gap_N) || state.gap_N < 3) errors.gap_N = "gap_N must be an integer ≥ 3";
		if (!(state.inner_ratio >= 0.5 && state.inner_ratio < 1)) {
			errors.inner_ratio = "inner_ratio must lie in [0.5, 1)";
		}
		if (state.rows * state.cols > 10000) errors.rows = "rows × cols exceeds the motif cap";
	}
	if (!(state.stroke_width > 0)) errors.stroke_width = "stroke width must be > 0";
	if (!isInt(state.size) || state.size < 1) errors.size = "size must be an integer ≥ 1";
	if (!(state.margin_ratio >= 0 && state.margin_ratio < 1)) {
		errors.margin_ratio = "margin must lie in [0, 1)";
	}
	return errors;
}

/** Resize the radii list and clamp the special index when S changes. */
export function setCircleCount(state: ExplorerState, count: number): ExplorerState {
	const radii = state.radii.slice(0, count);
	while (radii.length < count) {
		const last = radii[radii.length - 1] ?? 50;
		radii.push(Math.min(Math.round(last * 1.25), LIMITS.radius!.max));
	}
	let special = state.special;
	if (special !== null && special > count) special = count;
	return { ...state, S: count, radii, special };
}

export function fromPresetConfig(config: PresetEntry["config"]): ExplorerState {
	const base = defaultState();
	return {
		...base,
		mode: config.mode,
		N: config.N ?? base.N,
		S: config.S ?? base.S,
		radii: config.radii ? [...config.radii] : [...base.radii],
		alpha: config.alpha ?? base.alpha,
		spr: config.spr ?? base.spr,
		special: config.special ?? null,
		base_rotation: config.base_rotation ?? base.base_rotation,
		R: config.R ?? base.R,
		rows: config.rows ?? base.rows,
		cols: config.cols ?? base.cols,
		gap_N: config.gap_N ?? base.gap_N,
		inner_ratio: config.inner_ratio ?? base.inner_ratio,
		fill_down_gaps: config.fill_down_gaps ?? base.fill_down_gaps,
		stroke_width: config.stroke_width ?? base.stroke_width,
		size: config.size ?? base.size,
		margin_ratio: config.margin_ratio ?? base.margin_ratio,
	};
}

/** Build the request body; tiling keys are only sent in tiling mode. */
export function toRenderRequest(state: ExplorerState): RenderRequest {
	const request: RenderRequest = {
		mode: state.mode,
		N: state.N,
		S: state.S,
		radii: [...state.radii],
		alpha: state.alpha,
		spr: state.spr,
		special: state.special,
		base_rotation: state.base_rotation,
		stroke_width: state.stroke_width,
		size: state.size,
		margin_ratio: state.margin_ratio,
	};
	if (state.mode === "tiling") {
		request.R = state.R;
		request.rows = state.rows;
		request.cols = state.cols;
		request.gap_N = state.gap_N;
		request.inner_ratio = state.inner_ratio;
		request.fill_down_gaps = state.fill_down_gaps;
	}
	return request;
}
