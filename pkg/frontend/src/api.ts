// Types and fetch wrappers for the render service.

export interface RenderRequest {
	mode: "star" | "tiling";
	N: number;
	S: number;
	radii: number[];
	alpha: number;
	spr: number;
	special: number | null;
	base_rotation: number;
	R?: number;
	rows?: number;
	cols?: number;
	gap_N?: number;
	inner_ratio?: number;
	fill_down_gaps?: boolean;
	stroke_width: number;
	size: number;
	margin_ratio: number;
}

export interface RenderResponse {
	svg: string;
	segment_count: number;
	warnings: string[];
}

export interface PresetEntry {
	name: string;
	provenance: string;
	notes: string;
	config: Partial<RenderRequest> & { mode: "star" | "tiling" };
}

export class ServiceError extends Error {
	constructor(
		readonly field: string,
		readonly reason: string,
		readonly status: number,
	) {
		super(`${field}: ${reason}`);
		this.name = "ServiceError";
	}
}

export async function postRender(
	baseUrl: string,
	request: RenderRequest,
): Promise<RenderResponse> {
	const res = await fetch(`${baseUrl}/render`, {
		method: "POST",
		headers: { "Content-Type": "application/json" },
		body: JSON.stringify(request),
	});
	if (!res.ok) {
		let field = "request";
		let reason = `service responded with ${res.status}`;
		try {
			const body = (await res.json()) as { field?: string; reason?: string };
			if (body.field) field = body.field;
			if (body.reason) reason = body.reason;
		} catch {
			// non-JSON error body: keep the generic message
		}
		throw new ServiceError(field, reason, res.status);
	}
	return (await res.json()) as RenderResponse;
}

export async function fetchPresets(baseUrl: string): Promise<PresetEntry[]> {
	const res = await fetch(`${baseUrl}/presets`);
	if (!res.ok) {
		throw new ServiceError("presets", `service responded with ${res.status}`, res.status);
	}
	return (await res.json()) as PresetEntry[];
}
