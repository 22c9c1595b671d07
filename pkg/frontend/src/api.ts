/** Thin client for the solver endpoint; fetch is injectable for tests. */

import { SolveReport } from "./types.js";

export interface HttpResponse {
    status: number;
    text(): Promise<string>;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<HttpResponse>;

export class ApiClient {
    constructor(
        private readonly baseUrl: string = "",
        private readonly fetchImpl: FetchLike = globalThis.fetch as unknown as FetchLike,
    ) {}

    async health(): Promise<boolean> {
        try {
            const res = await this.fetchImpl(`${this.baseUrl}/healthz`);
            return res.status === 200;
        } catch {
            return false;
        }
    }

    /** POSTs DSL text; both 200 and 400 carry a report body. */
    async solve(rawText: string): Promise<{ status: number; report: SolveReport }> {
        const res = await this.fetchImpl(`${this.baseUrl}/api/solve`, {
            method: "POST",
            headers: { "Content-Type": "text/plain; charset=utf-8" },
            body: rawText,
        });
        const body = await res.text();
        if (res.status !== 200 && res.status !== 400) {
            throw new Error(`solve failed with HTTP ${res.status}`);
        }
        return { status: res.status, report: JSON.parse(body) as SolveReport };
    }
}
