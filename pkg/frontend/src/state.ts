/** View state and transitions. The UI computes no semantics: every change
 *  here either stores server output verbatim or moves a selection. */

import { ReportError, SolveReport } from "./types.js";

export type Selection =
    | { kind: "none" }
    | { kind: "argument"; claim: string; index: number }
    | { kind: "dispute"; tree: number };

export interface InlineError {
    line: number | null;
    message: string;
    text: string;
}

export interface ViewState {
    rawText: string;
    report: SolveReport | null;
    selection: Selection;
    inlineErrors: InlineError[];
    banner: string | null;
}

export function initialState(): ViewState {
    return {
        rawText: "",
        report: null,
        selection: { kind: "none" },
        inlineErrors: [],
        banner: null,
    };
}

export function editText(state: ViewState, text: string): ViewState {
    return { ...state, rawText: text };
}

function isInputError(e: ReportError): boolean {
    return e.category === "parse" || e.category === "validation";
}

/** Apply a server response. Input errors keep the previous report and show
 *  inline; a clean (or limit-hit) report replaces it and resets the view. */
export function applyResponse(state: ViewState, report: SolveReport): ViewState {
    const inputErrors = report.errors.filter(isInputError);
    if (inputErrors.length > 0) {
        return {
            ...state,
            inlineErrors: inputErrors.map((e) => ({
                line: e.line ?? null,
                message: e.message,
                text: e.text ?? "",
            })),
            banner: null,
        };
    }
    return {
        ...state,
        report,
        selection: { kind: "none" },
        inlineErrors: [],
        banner: null,
    };
}

/** Network failure: non-blocking banner, previous report retained. */
export function applyFailure(state: ViewState, message: string): ViewState {
    return { ...state, banner: message };
}

export function actualArguments(report: SolveReport | null): { claim: string; index: number }[] {
    if (!report) return [];
    return report.arguments
        .filter((a) => a.is_actual)
        .map((a) => ({ claim: a.claim, index: a.tree_index }));
}

export function selectArgument(state: ViewState, claim: string, index: number): ViewState {
    const exists = actualArguments(state.report).some(
        (a) => a.claim === claim && a.index === index,
    );
    const selection: Selection = exists
        ? { kind: "argument", claim, index }
        : { kind: "none" };
    return { ...state, selection };
}

export function selectDispute(state: ViewState, tree: number): ViewState {
    const exists =
        state.report !== null &&
        tree >= 0 &&
        tree < state.report.dispute_trees.length;
    const selection: Selection = exists ? { kind: "dispute", tree } : { kind: "none" };
    return { ...state, selection };
}

export function clearSelection(state: ViewState): ViewState {
    return { ...state, selection: { kind: "none" } };
}
