import { readFileSync } from "node:fs";

import { SolveReport } from "../src/types.js";

export function loadReport(name: string): SolveReport {
    const url = new URL(`../../tests/fixtures/${name}.report.json`, import.meta.url);
    return JSON.parse(readFileSync(url, "utf-8")) as SolveReport;
}
