// Wires state, validation, the debounced renderer and the DOM together.

import { fetchPresets, postRender, ServiceError } from "./api.js";
import type { PresetEntry, RenderRequest, RenderResponse } from "./api.js";
import { buildControls } from "./controls.js";
import { DebouncedRenderer } from "./debounce.js";
import {
	defaultState,
	fromPresetConfig,
	setCircleCount,
	toRenderRequest,
	validate,
	type ExplorerState,
} from "./state.js";

const DEBOUNCE_MS = 80;

function serviceBase(): string {
	const override = new URLSearchParams(window.location.search).get("service");
	return override ?? "";
}

function init(): void {
	const root = document.getElementById("app");
	if (!root) throw new Error("missing #app container");
	const base = serviceBase();

	let state: ExplorerState = defaultState();
	let presets: PresetEntry[] = [];
	let selectedPreset = "";
	let lastSvg = "";
	let lastLatencyMs = 0;

	const send = async (request: RenderRequest): Promise<RenderResponse> => {
		const started = performance.now();
		const response = await postRender(base, request);
		lastLatencyMs = performance.now() - started;
		return response;
	};

	const renderer = new DebouncedRenderer<RenderRequest, RenderResponse>(
		send,
		DEBOUNCE_MS,
		(response) => {
			lastSvg = response.svg;
			view.showPreview(response.svg);
			view.setStatus(
				`${response.segment_count} segments · ${lastLatencyMs.toFixed(0)} ms`,
			);
			view.setWarnings(response.warnings);
			view.showConnectionLost(false);
		},
		(error) => {
			if (error instanceof ServiceError) {
				view.setStatus(`rejected — ${error.field}: ${error.reason}`);
			} else {
				view.showConnectionLost(true);
			}
		},
	);

	const requestRender = () => {
		const errors = validate(state);
		view.syncFromState(state, errors);
		if (Object.keys(errors).length === 0) {
			renderer.request(toRenderRequest(state));
		} else {
			view.setStatus("fix highlighted fields to render");
		}
	};

	const view = buildControls(root, {
		onEdit(mutate) {
			const next = mutate(state);
			// S changes resize the radii list and clamp the special selector
			state = next.S === state.S ? next : setCircleCount(next, next.S);
			selectedPreset = "";
			requestRender();
		},
		onPreset(name) {
			const preset = presets.find((p) => p.name === name);
			if (!preset) return;
			state = fromPresetConfig(preset.config);
			selectedPreset = name;
			requestRender();
		},
		onExport() {
			if (!lastSvg) return;
			const blob = new Blob([lastSvg], { type: "image/svg+xml" });
			const url = URL.createObjectURL(blob);
			const a = document.createElement("a");
			a.href = url;
			a.download = `${selectedPreset || "pattern"}.svg`;
			a.click();
			URL.revokeObjectURL(url);
		},
		onRetry() {
			requestRender();
		},
	});

	view.syncFromState(state, {});
	view.setStatus("loading presets…");

	fetchPresets(base)
		.then((list) => {
			presets = list;
			const first = presets[0];
			if (first) {
				selectedPreset = first.name;
				state = fromPresetConfig(first.config);
			}
			view.setPresets(presets, selectedPreset);
			requestRender();
		})
		.catch(() => {
			view.showConnectionLost(true);
			view.setStatus("could not reach the render service");
			requestRender();
		});
}

init();
