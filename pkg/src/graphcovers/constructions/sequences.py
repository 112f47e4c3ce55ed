"""Construction sequences for (simple) k-trees and partial k-trees.

A sequence starts from a (k+1)-clique and stacks one new vertex onto an
existing k-clique per step.  Keep masks mark which potential edges are
present in the realized (partial) graph; the underlying full k-tree is the
sequence with every edge kept.  The initial clique carries its own keep
mask so that constructions whose starting clique is not complete in the
realized graph (the lower-bound gadgets need this) are expressible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from ..graphs import Graph


@dataclass(frozen=True)
class StackStep:
    vertex: int
    base: tuple[int, ...]        # k existing vertices, sorted
    keep: tuple[bool, ...]       # aligned with base: keep edge (vertex, base[i])

    def __post_init__(self):
        if len(self.keep) != len(self.base):
            raise ValueError("keep mask must align with the base clique")


@dataclass(frozen=True)
class ConstructionSequence:
    width: int
    initial: tuple[int, ...]                 # k+1 vertices
    initial_keep: tuple[bool, ...]           # lex pairs of initial, default all
    steps: tuple[StackStep, ...]

    def __post_init__(self):
        k = self.width
        if len(self.initial) != k + 1:
            raise ValueError("initial clique must have width+1 vertices")
        npairs = (k + 1) * k // 2
        if len(self.initial_keep) != npairs:
            raise ValueError("initial keep mask must cover all clique pairs")

    @staticmethod
    def full_initial_keep(width: int) -> tuple[bool, ...]:
        return tuple([True] * ((width + 1) * width // 2))

    def vertex_ids(self) -> list[int]:
        return list(self.initial) + [s.vertex for s in self.steps]

    def initial_pairs(self) -> list[tuple[int, int]]:
        verts = sorted(self.initial)
        return list(combinations(verts, 2))


def sequence(width: int, initial, steps, initial_keep=None) -> ConstructionSequence:
    init = tuple(initial)
    ik = tuple(initial_keep) if initial_keep is not None \
        else ConstructionSequence.full_initial_keep(width)
    st = tuple(StackStep(v, tuple(sorted(base)), tuple(keep))
               for v, base, keep in steps)
    return ConstructionSequence(width, init, ik, st)


def validate_sequence(seq: ConstructionSequence, require_simple: bool
                      ) -> tuple[list[str], Graph | None, Graph | None]:
    """Check the sequence and realize its graphs.

    Returns (violations, kept_graph, full_graph); the graphs are None when
    violations make realization impossible.  Simplicity means no k-clique
    of the full tree is stacked onto twice.
    """
    violations: list[str] = []
    k = seq.width
    ids = seq.vertex_ids()
    if len(set(ids)) != len(ids):
        violations.append("duplicate vertex ids")
        return violations, None, None
    if sorted(ids) != list(range(len(ids))):
        violations.append("vertex ids must be exactly 0..n-1")
        return violations, None, None
    n = len(ids)
    placed = set(seq.initial)
    full_edges: set[tuple[int, int]] = set()
    kept_edges: set[tuple[int, int]] = set()
    for (a, b), keep in zip(seq.initial_pairs(), seq.initial_keep):
        e = (min(a, b), max(a, b))
        full_edges.add(e)
        if keep:
            kept_edges.add(e)
    used_bases: set[tuple[int, ...]] = set()
    for si, step in enumerate(seq.steps):
        if len(step.base) != k:
            violations.append(f"step {si}: base size {len(step.base)} != {k}")
            continue
        if len(set(step.base)) != k:
            violations.append(f"step {si}: base has repeats")
            continue
        if step.vertex in placed:
            violations.append(f"step {si}: vertex {step.vertex} already placed")
            continue
        if not set(step.base) <= placed:
            violations.append(f"step {si}: base not yet placed")
            continue
        for a, b in combinations(sorted(step.base), 2):
            if (a, b) not in full_edges:
                violations.append(
                    f"step {si}: base {step.base} is not a clique "
                    f"(missing ({a},{b}))")
                break
        else:
            base_key = tuple(sorted(step.base))
            if base_key in used_bases:
                if require_simple:
                    violations.append(
                        f"step {si}: base {base_key} stacked onto twice")
            used_bases.add(base_key)
            for w, keep in zip(step.base, step.keep):
                e = (min(step.vertex, w), max(step.vertex, w))
                full_edges.add(e)
                if keep:
                    kept_edges.add(e)
            placed.add(step.vertex)
    if violations:
        return violations, None, None
    return [], Graph(n, sorted(kept_edges)), Graph(n, sorted(full_edges))


def realize(seq: ConstructionSequence, require_simple: bool = False) -> Graph:
    violations, kept, _ = validate_sequence(seq, require_simple)
    if violations:
        raise ValueError("invalid sequence: " + "; ".join(violations))
    return kept


def lift_to_simple(seq: ConstructionSequence) -> ConstructionSequence:
    """Re-base a width-k sequence as a simple width-(k+1) sequence whose
    kept graph contains the input's kept graph.

    Repeated stackings onto one clique C re-base onto C plus the previous
    stacked vertex, with the connecting edge omitted; single stackings
    re-base onto C plus a deterministic completion vertex.  If the input
    has no steps, an auxiliary vertex extends the initial clique.
    """
    violations, _, full = validate_sequence(seq, require_simple=False)
    if violations:
        raise ValueError("invalid sequence: " + "; ".join(violations))
    k = seq.width
    if not seq.steps:
        aux = full.n
        init = tuple(seq.initial) + (aux,)
        old_pairs = {tuple(sorted(p)): keep
                     for p, keep in zip(ConstructionSequence(
                         k, seq.initial, seq.initial_keep, ()).initial_pairs(),
                         seq.initial_keep)}
        new_keep = []
        for a, b in combinations(sorted(init), 2):
            new_keep.append(old_pairs.get((a, b), False))
        return ConstructionSequence(k + 1, init, tuple(new_keep), ())

    placed_order = list(seq.initial)
    first_step_vertex = seq.steps[0].vertex
    # new initial clique: the old one plus the first stacked vertex
    init = tuple(sorted(seq.initial + (first_step_vertex,)))
    old_init_pairs = dict(zip(seq.initial_pairs(), seq.initial_keep))
    first = seq.steps[0]
    first_kept = {w: keep for w, keep in zip(first.base, first.keep)}
    new_keep = []
    for a, b in combinations(sorted(init), 2):
        if a != first_step_vertex and b != first_step_vertex:
            new_keep.append(old_init_pairs[(a, b)])
        else:
            other = b if a == first_step_vertex else a
            new_keep.append(first_kept.get(other, False))
    placed = set(init)
    placed_order.append(first_step_vertex)

    # adjacency of the lifted FULL tree, which can exceed the input's
    new_adj: dict[int, set[int]] = {v: set() for v in full_graph_ids(seq)}
    for a, b in combinations(init, 2):
        new_adj[a].add(b)
        new_adj[b].add(a)

    last_on_base: dict[tuple[int, ...], int] = {
        tuple(sorted(first.base)): first_step_vertex}
    new_steps: list[tuple[int, tuple[int, ...], tuple[bool, ...]]] = []
    used_new_bases: set[tuple[int, ...]] = set()

    def completion_vertex(base: tuple[int, ...]) -> int:
        # deterministic placed vertex adjacent in the lifted tree to all of
        # base, whose addition gives an unused (k+1)-base
        for x in placed_order:
            if x in base:
                continue
            if all(w in new_adj[x] for w in base):
                cand = tuple(sorted(base + (x,)))
                if cand not in used_new_bases:
                    return x
        raise ValueError(f"no completion vertex for base {base}")

    for step in seq.steps[1:]:
        base_key = tuple(sorted(step.base))
        extra = None
        if base_key in last_on_base:
            prev = last_on_base[base_key]
            if tuple(sorted(base_key + (prev,))) not in used_new_bases:
                extra = prev
        if extra is None:
            extra = completion_vertex(base_key)
        new_base = tuple(sorted(step.base + (extra,)))
        used_new_bases.add(new_base)
        keep_map = {w: kp for w, kp in zip(step.base, step.keep)}
        keep_map[extra] = False  # the re-basing edge is always omitted
        new_keep_step = tuple(keep_map[w] for w in new_base)
        new_steps.append((step.vertex, new_base, new_keep_step))
        for w in new_base:
            new_adj[step.vertex].add(w)
            new_adj[w].add(step.vertex)
        last_on_base[base_key] = step.vertex
        placed.add(step.vertex)
        placed_order.append(step.vertex)

    out = sequence(k + 1, init, new_steps, tuple(new_keep))
    return out


def full_graph_ids(seq: ConstructionSequence) -> list[int]:
    return seq.vertex_ids()


def random_partial_simple_ktree(rng: random.Random, width: int, n: int,
                                keep_prob: float = 0.75,
                                full_step_prob: float = 0.3
                                ) -> ConstructionSequence:
    """Random simple width-k sequence on n vertices with random keep masks;
    a slice of the steps keeps every edge so that tight cases appear."""
    k = width
    if n < k + 1:
        raise ValueError("need at least width+1 vertices")
    init = tuple(range(k + 1))
    stackable: list[tuple[int, ...]] = [
        tuple(sorted(set(init) - {x})) for x in init]
    used: set[tuple[int, ...]] = set()
    steps = []
    for v in range(k + 1, n):
        while True:
            base = rng.choice(stackable)
            if base not in used:
                break
        used.add(base)
        if rng.random() < full_step_prob:
            keep = tuple([True] * k)
        else:
            keep = tuple(rng.random() < keep_prob for _ in range(k))
        steps.append((v, base, keep))
        base_set = set(base)
        for x in base:
            nb = tuple(sorted((base_set - {x}) | {v}))
            stackable.append(nb)
    return sequence(width, init, steps)


# -- text format ---------------------------------------------------------

def sequence_to_text(seq: ConstructionSequence) -> str:
    lines = [f"width {seq.width}",
             "init " + " ".join(str(v) for v in seq.initial)]
    if not all(seq.initial_keep):
        lines.append("initkeep " + "".join("1" if b else "0"
                                           for b in seq.initial_keep))
    for s in seq.steps:
        mask = "".join("1" if b else "0" for b in s.keep)
        lines.append(f"stack {s.vertex} : " +
                     " ".join(str(c) for c in s.base) + f" keep {mask}")
    return "\n".join(lines) + "\n"


def sequence_from_text(text: str) -> ConstructionSequence:
    width = None
    initial = None
    initial_keep = None
    steps = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "width" and len(parts) == 2:
            width = int(parts[1])
        elif parts[0] == "init":
            initial = tuple(int(x) for x in parts[1:])
        elif parts[0] == "initkeep" and len(parts) == 2:
            initial_keep = tuple(c == "1" for c in parts[1])
        elif parts[0] == "stack":
            if ":" not in parts or "keep" not in parts:
                raise ValueError(f"bad stack line {ln}: {raw!r}")
            v = int(parts[1])
            ci = parts.index(":")
            ki = parts.index("keep")
            base = tuple(int(x) for x in parts[ci + 1:ki])
            keep = tuple(c == "1" for c in parts[ki + 1])
            steps.append((v, base, keep))
        else:
            raise ValueError(f"bad sequence line {ln}: {raw!r}")
    if width is None or initial is None:
        raise ValueError("missing width or init line")
    return sequence(width, initial, steps, initial_keep)
