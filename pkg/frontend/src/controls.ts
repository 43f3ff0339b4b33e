// DOM construction and binding for the explorer panel. All geometry lives
// on the server; this file only moves numbers between inputs and state.

import type { PresetEntry } from "./api.js";
import { LIMITS, type ExplorerState, type Range } from "./state.js";

export interface ControlHooks {
	onEdit(mutate: (state: ExplorerState) => ExplorerState): void;
	onPreset(name: string): void;
	onExport(): void;
	onRetry(): void;
}

export interface ControlsView {
	syncFromState(state: ExplorerState, errors: Record<string, string>): void;
	setPresets(presets: PresetEntry[], selected: string): void;
	setStatus(text: string): void;
	setWarnings(warnings: string[]): void;
	showPreview(svg: string): void;
	showConnectionLost(visible: boolean): void;
}

interface SliderRow {
	wrap: HTMLElement;
	slider: HTMLInputElement;
	number: HTMLInputElement;
	error: HTMLElement;
}

function el<K extends keyof HTMLElementTagNameMap>(
	tag: K,
	className?: string,
	text?: string,
): HTMLElementTagNameMap[K] {
	const node = document.createElement(tag);
	if (className) node.className = className;
	if (text !== undefined) node.textContent = text;
	return node;
}

function sliderRow(
	label: string,
	range: Range,
	onValue: (value: number) => void,
): SliderRow {
	const wrap = el("div", "control");
	const head = el("div", "control-head");
	head.append(el("label", undefined, label));
	const number = el("input") as HTMLInputElement;
	number.type = "number";
	number.min = String(range.min);
	number.max = String(range.max);
	number.step = String(range.step);
	head.append(number);
	const slider = el("input") as HTMLInputElement;
	slider.type = "range";
	slider.min = String(range.min);
	slider.max = String(range.max);
	slider.step = String(range.step);
	const error = el("div", "control-error");
	wrap.append(head, slider, error);
	const push = (raw: string) => {
		const value = Number(raw);
		if (Number.isFinite(value)) onValue(value);
	};
	slider.addEventListener("input", () => {
		number.value = slider.value;
		push(slider.value);
	});
	number.addEventListener("input", () => {
		slider.value = number.value;
		push(number.value);
	});
	return { wrap, slider, number, error };
}

function setRow(row: SliderRow, value: number, error: string | undefined): void {
	if (document.activeElement !== row.slider && document.activeElement !== row.number) {
		row.slider.value = String(value);
		row.number.value = String(value);
	}
	row.error.textContent = error ?? "";
	row.wrap.classList.toggle("invalid", error !== undefined);
}

export function buildControls(root: HTMLElement, hooks: ControlHooks): ControlsView {
	root.innerHTML = "";
	const panel = el("div", "panel");
	const preview = el("div", "preview");
	const previewBox = el("div", "preview-box");
	const status = el("div", "status");
	const warnings = el("div", "warnings");
	const banner = el("div", "banner hidden");
	banner.append(el("span", undefined, "render service unreachable"));
	const retry = el("button", undefined, "retry");
	retry.addEventListener("click", () => hooks.onRetry());
	banner.append(retry);
	preview.append(banner, previewBox, status, warnings);
	root.append(panel, preview);

	// preset picker and export
	const presetsRow = el("div", "control");
	const presetSelect = el("select") as HTMLSelectElement;
	presetSelect.addEventListener("change", () => hooks.onPreset(presetSelect.value));
	const exportButton = el("button", undefined, "export SVG");
	exportButton.addEventListener("click", () => hooks.onExport());
	presetsRow.append(el("label", undefined, "preset"), presetSelect, exportButton);
	panel.append(presetsRow);

	// mode toggle
	const modeRow = el("div", "control");
	modeRow.append(el("label", undefined, "mode"));
	const modeSelect = el("select") as HTMLSelectElement;
	for (const mode of ["star", "tiling"]) {
		const option = el("option", undefined, mode) as HTMLOptionElement;
		option.value = mode;
		modeSelect.append(option);
	}
	modeSelect.addEventListener("change", () =>
		hooks.onEdit((s) => ({ ...s, mode: modeSelect.value as ExplorerState["mode"] })),
	);
	modeRow.append(modeSelect);
	panel.append(modeRow);

	const rowN = sliderRow("N (points per circle)", LIMITS.N!, (v) =>
		hooks.onEdit((s) => ({ ...s, N: v })),
	);
	const rowS = sliderRow("S (circles)", LIMITS.S!, (v) =>
		hooks.onEdit((s) => {
			const resized = { ...s, S: v };
			// delegate radii resize/special clamp to state helpers in main
			return resized;
		}),
	);
	panel.append(rowN.wrap, rowS.wrap);

	const radiiBox = el("div", "radii");
	panel.append(radiiBox);
	let radiiRows: SliderRow[] = [];

	const rowAlpha = sliderRow("alpha (special spread)", LIMITS.alpha!, (v) =>
		hooks.onEdit((s) => ({ ...s, alpha: v })),
	);
	const rowSpr = sliderRow("spr (special inset)", LIMITS.spr!, (v) =>
		hooks.onEdit((s) => ({ ...s, spr: v })),
	);
	const rowRotation = sliderRow("base rotation", LIMITS.base_rotation!, (v) =>
		hooks.onEdit((s) => ({ ...s, base_rotation: v })),
	);

	const specialRow = el("div", "control");
	specialRow.append(el("label", undefined, "special circle"));
	const specialSelect = el("select") as HTMLSelectElement;
	specialSelect.addEventListener("change", () =>
		hooks.onEdit((s) => ({
			...s,
			special: specialSelect.value === "none" ? null : Number(specialSelect.value),
		})),
	);
	const specialError = el("div", "control-error");
	specialRow.append(specialSelect, specialError);
	panel.append(rowAlpha.wrap, rowSpr.wrap, specialRow, rowRotation.wrap);

	// tiling section
	const tilingBox = el("div", "tiling");
	tilingBox.append(el("h3", undefined, "tiling"));
	const rowR = sliderRow("R (tangent circle radius)", LIMITS.R!, (v) =>
		hooks.onEdit((s) => ({ ...s, R: v })),
	);
	const rowRows = sliderRow("rows", LIMITS.rows!, (v) =>
		hooks.onEdit((s) => ({ ...s, rows: v })),
	);
	const rowCols = sliderRow("cols", LIMITS.cols!, (v) =>
		hooks.onEdit((s) => ({ ...s, cols: v })),
	);
	const rowGapN = sliderRow("gap_N (gap star points)", LIMITS.gap_N!, (v) =>
		hooks.onEdit((s) => ({ ...s, gap_N: v })),
	);
	const rowInner = sliderRow("inner_ratio (gap star)", LIMITS.inner_ratio!, (v) =>
		hooks.onEdit((s) => ({ ...s, inner_ratio: v })),
	);
	const downRow = el("div", "control");
	const downLabel = el("label", undefined, "fill down-pointing gaps");
	const downToggle = el("input") as HTMLInputElement;
	downToggle.type = "checkbox";
	downToggle.addEventListener("change", () =>
		hooks.onEdit((s) => ({ ...s, fill_down_gaps: downToggle.checked })),
	);
	downRow.append(downLabel, downToggle);
	tilingBox.append(rowR.wrap, rowRows.wrap, rowCols.wrap, rowGapN.wrap, rowInner.wrap, downRow);
	panel.append(tilingBox);

	function rebuildRadii(state: ExplorerState): void {
		radiiRows = [];
		radiiBox.innerHTML = "";
		state.radii.forEach((_, i) => {
			const row = sliderRow(`r${i + 1}`, LIMITS.radius!, (v) =>
				hooks.onEdit((s) => {
					const radii = [...s.radii];
					radii[i] = v;
					return { ...s, radii };
				}),
			);
			radiiRows.push(row);
			radiiBox.append(row.wrap);
		});
	}

	function rebuildSpecialOptions(state: ExplorerState): void {
		specialSelect.innerHTML = "";
		const none = el("option", undefined, "none") as HTMLOptionElement;
		none.value = "none";
		specialSelect.append(none);
		for (let w = 2; w <= state.S; w++) {
			const option = el("option", undefined, `circle ${w}`) as HTMLOptionElement;
			option.value = String(w);
			specialSelect.append(option);
		}
	}

	return {
		syncFromState(state, errors) {
			(modeSelect as HTMLSelectElement).value = state.mode;
			setRow(rowN, state.N, errors.N);
			setRow(rowS, state.S, errors.S);
			if (radiiRows.length !== state.radii.length) rebuildRadii(state);
			state.radii.forEach((r, i) => setRow(radiiRows[i]!, r, errors[`radii.${i}`]));
			setRow(rowAlpha, state.alpha, errors.alpha);
			setRow(rowSpr, state.spr, errors.spr);
			setRow(rowRotation, state.base_rotation, errors.base_rotation);
			if (specialSelect.options.length !== state.S) rebuildSpecialOptions(state);
			specialSelect.value = state.special === null ? "none" : String(state.special);
			specialError.textContent = errors.special ?? "";
			tilingBox.classList.toggle("hidden", state.mode !== "tiling");
			setRow(rowR, state.R, errors.R);
			setRow(rowRows, state.rows, errors.rows);
			setRow(rowCols, state.cols, errors.cols);
			setRow(rowGapN, state.gap_N, errors.gap_N);
			setRow(rowInner, state.inner_ratio, errors.inner_ratio);
			downToggle.checked = state.fill_down_gaps;
		},
		setPresets(presets, selected) {
			presetSelect.innerHTML = "";
			for (const preset of presets) {
				const option = el("option", undefined, preset.name) as HTMLOptionElement;
				option.value = preset.name;
				option.title = preset.provenance;
				presetSelect.append(option);
			}
			presetSelect.value = selected;
		},
		setStatus(text) {
			status.textContent = text;
		},
		setWarnings(list) {
			warnings.innerHTML = "";
			for (const warning of list) {
				warnings.append(el("div", "warning", warning));
			}
		},
		showPreview(svg) {
			previewBox.innerHTML = svg;
		},
		showConnectionLost(visible) {
			banner.classList.toggle("hidden", !visible);
		},
	};
}
