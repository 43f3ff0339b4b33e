import { describe, expect, it } from "vitest";

import {
	defaultState,
	fromPresetConfig,
	setCircleCount,
	toRenderRequest,
	validate,
} from "../src/state.js";

describe("validate", () => {
	it("accepts the default state", () => {
		expect(validate(defaultState())).toEqual({});
	});

	it("rejects a non-positive radius with a per-slider field", () => {
		const state = { ...defaultState(), radii: [51, 0, 172] };
		const errors = validate(state);
		expect(errors["radii.1"]).toBeTruthy();
	});

	it("rejects S out of sync with the radii list", () => {
		const state = { ...defaultState(), S: 4 };
		expect(validate(state).radii).toBeTruthy();
	});

	it("rejects a special ring collapsed by spr", () => {
		const state = { ...defaultState(), special: 2, spr: 70 };
		expect(validate(state).spr).toBeTruthy();
	});

	it("checks tiling fields only in tiling mode", () => {
		const star = { ...defaultState(), inner_ratio: 0.2 };
		expect(validate(star)).toEqual({});
		const tiling = { ...star, mode: "tiling" as const };
		expect(validate(tiling).inner_ratio).toBeTruthy();
	});
});

describe("setCircleCount", () => {
	it("dropping S removes the extra radius slider value and clamps special", () => {
		const state = { ...defaultState(), S: 3, radii: [10, 20, 30], special: 3, spr: 1 };
		const next = setCircleCount(state, 2);
		expect(next.radii).toEqual([10, 20]);
		expect(next.special).toBe(2);
	});

	it("growing S appends radii", () => {
		const next = setCircleCount(defaultState(), 5);
		expect(next.radii.length).toBe(5);
		expect(next.radii.slice(0, 3)).toEqual([51, 70, 172]);
		expect(next.radii.every((r) => r > 0)).toBe(true);
	});

	it("keeps special = none untouched", () => {
		expect(setCircleCount(defaultState(), 2).special).toBeNull();
	});
});

describe("toRenderRequest", () => {
	it("omits tiling keys in star mode", () => {
		const request = toRenderRequest(defaultState());
		expect(request.mode).toBe("star");
		expect("R" in request).toBe(false);
		expect("rows" in request).toBe(false);
		expect("fill_down_gaps" in request).toBe(false);
	});

	it("includes tiling keys in tiling mode", () => {
		const request = toRenderRequest({ ...defaultState(), mode: "tiling" });
		expect(request.R).toBe(200);
		expect(request.rows).toBe(3);
		expect(request.fill_down_gaps).toBe(true);
	});

	it("copies rather than aliases the radii array", () => {
		const state = defaultState();
		const request = toRenderRequest(state);
		request.radii[0] = -1;
		expect(state.radii[0]).toBe(51);
	});
});

describe("fromPresetConfig", () => {
	it("fills missing keys with defaults", () => {
		const state = fromPresetConfig({
			mode: "star",
			N: 9,
			S: 2,
			radii: [93, 225],
			alpha: 48,
			spr: -68,
			special: 2,
		});
		expect(state.N).toBe(9);
		expect(state.radii).toEqual([93, 225]);
		expect(state.base_rotation).toBe(0);
		expect(state.size).toBe(800);
		expect(validate(state)).toEqual({});
	});

	it("round-trips through toRenderRequest for tiling presets", () => {
		const config = {
			mode: "tiling" as const,
			N: 12,
			S: 2,
			radii: [171, 23],
			alpha: 53,
			spr: -50,
			special: 2,
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
		expect(toRenderRequest(fromPresetConfig(config))).toEqual(config);
	});
});
