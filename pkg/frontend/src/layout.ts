/** Deterministic scene construction from a report: no DOM, just geometry.
 *
 *  Argument trees use a layered layout (depth = row), root bigger and red,
 *  support edges ending in a dot near the supporting node.  Dispute trees
 *  use the same rows but curved, arrowed attack edges and a proponent /
 *  opponent colour split.
 */

import { SolveReport } from "./types.js";

export const ROOT_COLOR = "#c0392b";
export const NODE_COLOR = "#4a7fb5";
export const PROPONENT_COLOR = "#2e7d32";
export const OPPONENT_COLOR = "#e67e22";

export const NODE_RADIUS = 12;
export const ROOT_RADIUS = 17;
const ROW_HEIGHT = 85;
const COLUMN_WIDTH = 110;
const MARGIN = 55;

export interface SceneNode {
    id: string;
    label: string;
    x: number;
    y: number;
    depth: number;
    radius: number;
    color: string;
    isRoot: boolean;
    role?: "proponent" | "opponent";
}

export interface SceneEdge {
    from: string;
    to: string;
    path: string;
    marker: "dot" | "arrow";
}

export interface Scene {
    kind: "argument" | "dispute";
    width: number;
    height: number;
    nodes: SceneNode[];
    edges: SceneEdge[];
}

/** Breadth-first depth per node; the input is a tree/DAG rooted at `root`. */
function nodeDepths(root: string, edges: [string, string][]): Map<string, number> {
    const children = new Map<string, string[]>();
    for (const [from, to] of edges) {
        if (!children.has(from)) children.set(from, []);
        children.get(from)!.push(to);
    }
    const depths = new Map<string, number>([[root, 0]]);
    const queue = [root];
    while (queue.length > 0) {
        const current = queue.shift()!;
        for (const next of children.get(current) ?? []) {
            if (!depths.has(next)) {
                depths.set(next, depths.get(current)! + 1);
                queue.push(next);
            }
        }
    }
    return depths;
}

function positions(
    nodes: string[],
    depths: Map<string, number>,
): Map<string, { x: number; y: number; depth: number }> {
    const rows = new Map<number, string[]>();
    for (const node of nodes) {
        const depth = depths.get(node) ?? 0;
        if (!rows.has(depth)) rows.set(depth, []);
        rows.get(depth)!.push(node);
    }
    const out = new Map<string, { x: number; y: number; depth: number }>();
    const widest = Math.max(...[...rows.values()].map((r) => r.length));
    const width = widest * COLUMN_WIDTH + MARGIN;
    for (const [depth, row] of rows) {
        row.sort();
        row.forEach((node, i) => {
            const x = ((i + 1) * width) / (row.length + 1);
            out.set(node, { x, y: MARGIN + depth * ROW_HEIGHT, depth });
        });
    }
    return out;
}

function sceneSize(placed: Iterable<{ x: number; y: number }>): { width: number; height: number } {
    let width = 2 * MARGIN;
    let height = 2 * MARGIN;
    for (const p of placed) {
        width = Math.max(width, p.x + MARGIN);
        height = Math.max(height, p.y + MARGIN);
    }
    return { width, height };
}

export function buildArgumentScene(
    report: SolveReport,
    claim: string,
    index: number,
): Scene {
    const arg = report.arguments.find(
        (a) => a.claim === claim && a.tree_index === index,
    );
    if (!arg) throw new Error(`no argument ${claim}#${index} in report`);
    const depths = nodeDepths(claim, arg.edges);
    const placed = positions(arg.nodes, depths);
    const nodes: SceneNode[] = arg.nodes.map((symbol) => {
        const p = placed.get(symbol)!;
        const isRoot = symbol === claim;
        return {
            id: symbol,
            label: symbol,
            x: p.x,
            y: p.y,
            depth: p.depth,
            radius: isRoot ? ROOT_RADIUS : NODE_RADIUS,
            color: isRoot ? ROOT_COLOR : NODE_COLOR,
            isRoot,
        };
    });
    // straight support edge, terminal dot drawn near the supporting child
    const edges: SceneEdge[] = arg.edges.map(([from, to]) => {
        const a = placed.get(from)!;
        const b = placed.get(to)!;
        return {
            from,
            to,
            path: `M ${a.x} ${a.y} L ${b.x} ${b.y}`,
            marker: "dot",
        };
    });
    return { kind: "argument", ...sceneSize(placed.values()), nodes, edges };
}

function argumentLabel(report: SolveReport, nodeId: string): string {
    const hash = nodeId.lastIndexOf("#");
    const claim = nodeId.slice(0, hash);
    const index = Number(nodeId.slice(hash + 1));
    const arg = report.arguments.find(
        (a) => a.claim === claim && a.tree_index === index,
    );
    const support = arg ? arg.assumption_set.join(",") : "";
    return `{${support}} ⊢ ${claim}`;
}

export function buildDisputeScene(report: SolveReport, tree: number): Scene {
    const entry = report.dispute_trees[tree];
    if (!entry) throw new Error(`no dispute tree at position ${tree}`);
    const rootId = `${entry.root_claim}#${entry.root_index}`;
    const depths = nodeDepths(rootId, entry.edges);
    const placed = positions(entry.nodes, depths);
    const nodes: SceneNode[] = entry.nodes.map((id) => {
        const p = placed.get(id)!;
        const role = entry.statuses[id] === "Opponent" ? "opponent" : "proponent";
        const isRoot = id === rootId;
        return {
            id,
            label: argumentLabel(report, id),
            x: p.x,
            y: p.y,
            depth: p.depth,
            radius: isRoot ? ROOT_RADIUS : NODE_RADIUS,
            color: role === "opponent" ? OPPONENT_COLOR : PROPONENT_COLOR,
            isRoot,
            role,
        };
    });
    // curvy arc per attack edge; alternate the bulge so repeated edges
    // between the same rows stay distinguishable
    const edges: SceneEdge[] = entry.edges.map(([from, to], i) => {
        const a = placed.get(from)!;
        const b = placed.get(to)!;
        const mx = (a.x + b.x) / 2;
        const my = (a.y + b.y) / 2;
        const bulge = 28 + 8 * (i % 3);
        const sign = i % 2 === 0 ? 1 : -1;
        const dx = b.x - a.x;
        const dy = b.y - a.y;
        const len = Math.hypot(dx, dy) || 1;
        const cx = mx + (sign * bulge * -dy) / len;
        const cy = my + (sign * bulge * dx) / len;
        return {
            from,
            to,
            path: `M ${a.x} ${a.y} Q ${cx} ${cy} ${b.x} ${b.y}`,
            marker: "arrow",
        };
    });
    return { kind: "dispute", ...sceneSize(placed.values()), nodes, edges };
}
