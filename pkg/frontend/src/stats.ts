/** Statistics panel rows: server-reported counts plus client-perceived
 *  runtime.  Every number except the perceived runtime comes verbatim from
 *  the report. */

import { SolveReport } from "./types.js";

export interface StatRow {
    label: string;
    value: string;
}

const COUNT_ROWS: [string, keyof SolveReport["stats"]][] = [
    ["Number of symbols", "n_symbols"],
    ["Number of potential arguments", "n_potential_arguments"],
    ["Number of actual arguments", "n_actual_arguments"],
    ["Number of assumptions", "n_assumptions"],
    ["Number of conflict-free arguments", "n_conflict_free"],
    ["Number of admissible arguments", "n_admissible"],
    ["Number of complete arguments", "n_complete"],
    ["Number of grounded arguments", "n_grounded"],
    ["Number of ideal arguments", "n_ideal"],
    ["Number of stable arguments", "n_stable"],
];

export function buildStatsPanel(
    report: SolveReport | null,
    perceivedSeconds: number | null,
): StatRow[] {
    const rows: StatRow[] = COUNT_ROWS.map(([label, key]) => ({
        label,
        value: report ? String(report.stats[key]) : "0",
    }));
    rows.push({
        label: "Overall runtime, as perceived by user",
        value: perceivedSeconds === null ? "—" : `${perceivedSeconds.toFixed(3)} s`,
    });
    rows.push({
        label: "Solver wall time",
        value: report?.timing ? `${report.timing.wall_time_seconds.toFixed(6)} s` : "—",
    });
    rows.push({
        label: "Solver CPU time",
        value: report?.timing ? `${report.timing.cpu_time_seconds.toFixed(6)} s` : "—",
    });
    return rows;
}
