/** DOM wiring: editor with submit, scene selectors, SVG rendering, stats. */

import { ApiClient } from "./api.js";
import { Scene, buildArgumentScene, buildDisputeScene } from "./layout.js";
import { SceneHost } from "./sceneHost.js";
import {
    ViewState,
    actualArguments,
    applyFailure,
    applyResponse,
    editText,
    initialState,
    selectArgument,
    selectDispute,
} from "./state.js";
import { buildStatsPanel } from "./stats.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
}

function renderScene(container: HTMLElement, scene: Scene): () => void {
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${scene.width} ${scene.height}`);
    svg.setAttribute("class", `scene scene-${scene.kind}`);

    const defs = document.createElementNS(SVG_NS, "defs");
    defs.innerHTML =
        '<marker id="arrowhead" markerWidth="8" markerHeight="8" refX="7" ' +
        'refY="3" orient="auto"><path d="M0,0 L7,3 L0,6 z"/></marker>';
    svg.appendChild(defs);

    for (const edge of scene.edges) {
        const path = document.createElementNS(SVG_NS, "path");
        path.setAttribute("d", edge.path);
        path.setAttribute("class", `edge edge-${edge.marker}`);
        if (edge.marker === "arrow") {
            path.setAttribute("marker-end", "url(#arrowhead)");
        } else {
            // terminal dot near the supporting node
            const target = scene.nodes.find((n) => n.id === edge.to)!;
            const source = scene.nodes.find((n) => n.id === edge.from)!;
            const t = 1 - (target.radius + 5) / Math.hypot(target.x - source.x, target.y - source.y);
            const dot = document.createElementNS(SVG_NS, "circle");
            dot.setAttribute("cx", String(source.x + (target.x - source.x) * t));
            dot.setAttribute("cy", String(source.y + (target.y - source.y) * t));
            dot.setAttribute("r", "3.5");
            dot.setAttribute("class", "edge-dot");
            svg.appendChild(dot);
        }
        svg.appendChild(path);
    }
    for (const node of scene.nodes) {
        const group = document.createElementNS(SVG_NS, "g");
        const circle = document.createElementNS(SVG_NS, "circle");
        circle.setAttribute("cx", String(node.x));
        circle.setAttribute("cy", String(node.y));
        circle.setAttribute("r", String(node.radius));
        circle.setAttribute("fill", node.color);
        circle.setAttribute(
            "class",
            `node${node.isRoot ? " node-root" : ""}${node.role ? ` node-${node.role}` : ""}`,
        );
        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("x", String(node.x));
        label.setAttribute("y", String(node.y - node.radius - 6));
        label.setAttribute("text-anchor", "middle");
        label.textContent = node.label;
        group.appendChild(circle);
        group.appendChild(label);
        svg.appendChild(group);
    }
    container.appendChild(svg);
    return () => {
        container.removeChild(svg);
    };
}

function run(): void {
    const client = new ApiClient("");
    const host = new SceneHost();
    let state: ViewState = initialState();

    const editor = el<HTMLTextAreaElement>("editor");
    const submit = el<HTMLButtonElement>("submit");
    const errorsBox = el<HTMLUListElement>("errors");
    const banner = el<HTMLDivElement>("banner");
    const argumentSelect = el<HTMLSelectElement>("argument-select");
    const disputeSelect = el<HTMLSelectElement>("dispute-select");
    const sceneBox = el<HTMLDivElement>("scene");
    const statsTable = el<HTMLTableElement>("stats");
    let perceivedSeconds: number | null = null;

    function redraw(): void {
        banner.textContent = state.banner ?? "";
        banner.hidden = state.banner === null;

        errorsBox.replaceChildren(
            ...state.inlineErrors.map((e) => {
                const item = document.createElement("li");
                const where = e.line === null ? "" : `line ${e.line}: `;
                item.textContent = `${where}${e.message}` + (e.text ? ` — "${e.text}"` : "");
                return item;
            }),
        );

        argumentSelect.replaceChildren(
            new Option("— argument tree —", ""),
            ...actualArguments(state.report).map(
                (a) => new Option(`${a.claim}#${a.index}`, `${a.claim}#${a.index}`),
            ),
        );
        disputeSelect.replaceChildren(
            new Option("— dispute tree —", ""),
            ...(state.report?.dispute_trees ?? []).map(
                (t, i) => new Option(`${t.root_claim}#${t.root_index} [${i}]`, String(i)),
            ),
        );

        statsTable.replaceChildren(
            ...buildStatsPanel(state.report, perceivedSeconds).map((row) => {
                const tr = document.createElement("tr");
                const name = document.createElement("td");
                name.textContent = row.label;
                const value = document.createElement("td");
                value.textContent = row.value;
                tr.append(name, value);
                return tr;
            }),
        );

        if (state.selection.kind === "none" || state.report === null) {
            host.clear();
        } else if (state.selection.kind === "argument") {
            const { claim, index } = state.selection;
            const scene = buildArgumentScene(state.report, claim, index);
            host.show(`argument:${claim}#${index}`, () => renderScene(sceneBox, scene));
        } else {
            const scene = buildDisputeScene(state.report, state.selection.tree);
            host.show(`dispute:${state.selection.tree}`, () => renderScene(sceneBox, scene));
        }
    }

    editor.addEventListener("input", () => {
        state = editText(state, editor.value);
    });

    submit.addEventListener("click", async () => {
        const started = performance.now();
        try {
            const { report } = await client.solve(state.rawText);
            perceivedSeconds = (performance.now() - started) / 1000;
            state = applyResponse(state, report);
        } catch (err) {
            state = applyFailure(state, `request failed: ${String(err)}`);
        }
        redraw();
    });

    argumentSelect.addEventListener("change", () => {
        const value = argumentSelect.value;
        if (value === "") {
            state = { ...state, selection: { kind: "none" } };
        } else {
            const hash = value.lastIndexOf("#");
            state = selectArgument(state, value.slice(0, hash), Number(value.slice(hash + 1)));
        }
        redraw();
    });

    disputeSelect.addEventListener("change", () => {
        state = disputeSelect.value === ""
            ? { ...state, selection: { kind: "none" } }
            : selectDispute(state, Number(disputeSelect.value));
        redraw();
    });

    redraw();
}

document.addEventListener("DOMContentLoaded", run);
