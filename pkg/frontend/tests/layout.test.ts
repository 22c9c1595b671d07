import assert from "node:assert/strict";
import { test } from "node:test";

import {
    NODE_COLOR,
    NODE_RADIUS,
    ROOT_COLOR,
    ROOT_RADIUS,
    buildArgumentScene,
    buildDisputeScene,
} from "../src/layout.js";
import { loadReport } from "./helpers.js";

test("argument scene: two-node tree with a bigger red root", () => {
    const scene = buildArgumentScene(loadReport("ex2"), "a", 0);
    assert.equal(scene.nodes.length, 2);
    const root = scene.nodes.find((n) => n.id === "a")!;
    const leaf = scene.nodes.find((n) => n.id === "b")!;
    assert.ok(root.isRoot && !leaf.isRoot);
    assert.equal(root.color, ROOT_COLOR);
    assert.equal(leaf.color, NODE_COLOR);
    assert.ok(root.radius > leaf.radius);
    assert.equal(root.radius, ROOT_RADIUS);
    assert.equal(leaf.radius, NODE_RADIUS);
});

test("argument scene: depth decides the row", () => {
    // a <- p <- τ is a three-node chain
    const scene = buildArgumentScene(loadReport("ex5"), "a", 0);
    assert.equal(scene.nodes.length, 3);
    const byId = new Map(scene.nodes.map((n) => [n.id, n]));
    assert.equal(byId.get("a")!.depth, 0);
    assert.equal(byId.get("p")!.depth, 1);
    assert.equal(byId.get("τ")!.depth, 2);
    assert.ok(byId.get("a")!.y < byId.get("p")!.y);
    assert.ok(byId.get("p")!.y < byId.get("τ")!.y);
});

test("argument scene: support edges end in a dot marker", () => {
    const scene = buildArgumentScene(loadReport("ex5"), "a", 0);
    assert.equal(scene.edges.length, 2);
    assert.ok(scene.edges.every((e) => e.marker === "dot"));
    assert.ok(scene.edges.every((e) => e.path.startsWith("M ")));
});

test("argument scene: assumption root is a single red node", () => {
    const scene = buildArgumentScene(loadReport("ex3"), "a", 0);
    assert.equal(scene.nodes.length, 1);
    assert.equal(scene.edges.length, 0);
    assert.equal(scene.nodes[0].color, ROOT_COLOR);
});

test("dispute scene: one attack, proponent and opponent distinguished", () => {
    const report = loadReport("ex4");
    const position = report.dispute_trees.findIndex((t) => t.root_claim === "a");
    const scene = buildDisputeScene(report, position);
    assert.equal(scene.nodes.length, 2);
    assert.equal(scene.edges.length, 1);
    const root = scene.nodes.find((n) => n.isRoot)!;
    const attacker = scene.nodes.find((n) => !n.isRoot)!;
    assert.equal(root.role, "proponent");
    assert.equal(attacker.role, "opponent");
    assert.notEqual(root.color, attacker.color);
    assert.equal(scene.edges[0].marker, "arrow");
});

test("dispute scene: attack edges are curved arcs", () => {
    const report = loadReport("ex3");
    const position = report.dispute_trees.findIndex((t) => t.root_claim === "a");
    const scene = buildDisputeScene(report, position);
    assert.ok(scene.edges.length >= 1);
    assert.ok(scene.edges.every((e) => e.path.includes(" Q ")));
});

test("dispute scene: nodes are labelled claim plus assumption set", () => {
    const report = loadReport("ex4");
    const position = report.dispute_trees.findIndex((t) => t.root_claim === "a");
    const scene = buildDisputeScene(report, position);
    const labels = scene.nodes.map((n) => n.label).sort();
    assert.deepEqual(labels, ["{a} ⊢ a", "{} ⊢ b"]);
});

test("dispute scene: unattacked root renders alone", () => {
    const report = loadReport("ex4");
    const position = report.dispute_trees.findIndex((t) => t.root_claim === "b");
    const scene = buildDisputeScene(report, position);
    assert.equal(scene.nodes.length, 1);
    assert.equal(scene.edges.length, 0);
    assert.equal(scene.nodes[0].role, "proponent");
});

test("scenes are deterministic for the same report", () => {
    const a = buildArgumentScene(loadReport("fig12"), "p", 0);
    const b = buildArgumentScene(loadReport("fig12"), "p", 0);
    assert.deepEqual(a, b);
});

test("unknown selections throw instead of rendering garbage", () => {
    const report = loadReport("ex4");
    assert.throws(() => buildArgumentScene(report, "zzz", 0), /no argument/);
    assert.throws(() => buildDisputeScene(report, 999), /no dispute tree/);
});
