// Debounced render scheduling: edits within the window coalesce, at most
// one request is in flight, the newest edit always wins, and responses to
// superseded requests are discarded by sequence number.

export class DebouncedRenderer<Req, Res> {
	private timer: ReturnType<typeof setTimeout> | null = null;
	private pending: Req | null = null;
	private inFlight = false;
	private seq = 0;

	/** Number of requests actually handed to the sender. */
	requestCount = 0;

	constructor(
		private readonly send: (request: Req) => Promise<Res>,
		private readonly windowMs: number,
		private readonly onResult: (result: Res, request: Req) => void,
		private readonly onError: (error: unknown, request: Req) => void,
	) {}

	request(request: Req): void {
		this.pending = request;
		this.seq += 1;
		if (this.timer === null && !this.inFlight) {
			this.timer = setTimeout(() => this.fire(), this.windowMs);
		}
	}

	dispose(): void {
		if (this.timer !== null) {
			clearTimeout(this.timer);
			this.timer = null;
		}
		this.pending = null;
	}

	private fire(): void {
		this.timer = null;
		if (this.pending === null || this.inFlight) return;
		const request = this.pending;
		const seq = this.seq;
		this.pending = null;
		this.inFlight = true;
		this.requestCount += 1;
		this.send(request).then(
			(result) => {
				this.inFlight = false;
				if (this.seq === seq) this.onResult(result, request);
				this.continueIfPending();
			},
			(error) => {
				this.inFlight = false;
				if (this.seq === seq) this.onError(error, request);
				this.continueIfPending();
			},
		);
	}

	private continueIfPending(): void {
		if (this.pending !== null && this.timer === null) {
			this.timer = setTimeout(() => this.fire(), 0);
		}
	}
}
