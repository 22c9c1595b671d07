/** Shapes of the canonical JSON report served by POST /api/solve. */

export interface FrameworkSummary {
    symbols: string[];
    assumptions: string[];
    rules: { body: string[]; head: string }[];
    contraries: Record<string, string>;
}

export interface ArgumentEntry {
    claim: string;
    tree_index: number;
    nodes: string[];
    edges: [string, string][];
    assumption_set: string[];
    is_actual: boolean;
    conflict_free: boolean;
    stable: boolean;
    admissible: boolean;
    grounded: boolean;
    complete: boolean;
    ideal: boolean;
}

export interface DisputeTreeEntry {
    root_claim: string;
    root_index: number;
    nodes: string[];
    edges: [string, string][];
    statuses: Record<string, string>;
    grounded: boolean;
    admissible: boolean;
    complete: boolean;
    ideal: boolean;
}

export interface ReportStats {
    n_symbols: number;
    n_potential_arguments: number;
    n_actual_arguments: number;
    n_assumptions: number;
    n_conflict_free: number;
    n_admissible: number;
    n_complete: number;
    n_grounded: number;
    n_ideal: number;
    n_stable: number;
}

export interface ReportError {
    category: string;
    message: string;
    line?: number;
    text?: string;
}

export interface SolveReport {
    framework: FrameworkSummary | null;
    arguments: ArgumentEntry[];
    dispute_trees: DisputeTreeEntry[];
    stats: ReportStats;
    errors: ReportError[];
    timing?: { wall_time_seconds: number; cpu_time_seconds: number };
}
