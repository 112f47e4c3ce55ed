"""Independent brute-force oracles used to cross-check the solvers.

These deliberately use different decompositions than the production code:
covers are searched over explicitly enumerated class subgraphs (or, for
clique collections, over responsibility partitions), and folded covers are
enumerated over raw copy-pair choices without symmetry breaking.
"""

from __future__ import annotations

from itertools import combinations

from graphcovers.graphs import Graph
from graphcovers.templates import recognize, CLASSES


def edge_subset_graph(g: Graph, subset: tuple[tuple[int, int], ...]) -> Graph:
    verts = sorted({v for e in subset for v in e})
    idx = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), [(idx[a], idx[b]) for a, b in subset])


def class_edge_subsets(g: Graph, tag: str) -> list[frozenset[tuple[int, int]]]:
    """All non-empty edge subsets of g whose graph lies in the class."""
    out = []
    m = g.m
    for mask in range(1, 1 << m):
        subset = tuple(g.edges[i] for i in range(m) if mask >> i & 1)
        if recognize(tag, edge_subset_graph(g, subset)):
            out.append(frozenset(subset))
    return out


def oracle_global_feasible(g: Graph, tag: str, k: int,
                           candidates=None) -> bool:
    """Can <= k enumerated class subgraphs cover every edge?"""
    if g.m == 0:
        return True
    if candidates is None:
        candidates = class_edge_subsets(g, tag)
    by_edge = {e: [c for c in candidates if e in c] for e in g.edges}

    def rec(covered: frozenset, used: int) -> bool:
        if len(covered) == g.m:
            return True
        if used == k:
            return False
        e = next(x for x in g.edges if x not in covered)
        for cand in by_edge[e]:
            if rec(covered | cand, used + 1):
                return True
        return False

    return rec(frozenset(), 0)


def oracle_min_global(g: Graph, tag: str, cap: int) -> int | None:
    candidates = class_edge_subsets(g, tag) if g.m else []
    for k in range(0, cap + 1):
        if oracle_global_feasible(g, tag, k, candidates):
            return k
    return None


def oracle_local_feasible(g: Graph, tag: str, j: int, candidates=None) -> bool:
    """Cover by class subgraphs with every vertex in at most j of them."""
    if g.m == 0:
        return True
    if candidates is None:
        candidates = class_edge_subsets(g, tag)
    cand_verts = {c: frozenset(v for e in c for v in e) for c in candidates}
    by_edge = {e: [c for c in candidates if e in c] for e in g.edges}
    counts = [0] * g.n

    def rec(covered: frozenset) -> bool:
        if len(covered) == g.m:
            return True
        e = next(x for x in g.edges if x not in covered)
        for cand in by_edge[e]:
            if any(counts[v] + 1 > j for v in cand_verts[cand]):
                continue
            for v in cand_verts[cand]:
                counts[v] += 1
            if rec(covered | cand):
                return True
            for v in cand_verts[cand]:
                counts[v] -= 1
        return False

    return rec(frozenset())


def oracle_min_local(g: Graph, tag: str, cap: int) -> int | None:
    candidates = class_edge_subsets(g, tag) if g.m else []
    for j in range(0, cap + 1):
        if oracle_local_feasible(g, tag, j, candidates):
            return j
    return None


def oracle_folded_feasible(g: Graph, tag: str, j: int) -> bool:
    """Naive folded check over the j-fold blowup: every host edge picks a
    non-empty set of copy pairs, with no symmetry breaking at all."""
    if g.m == 0:
        return True
    pairs = [(a, b) for a in range(j) for b in range(j)]
    if CLASSES[tag].closed_under_subgraphs:
        # one pair per edge suffices: extra pairs can always be dropped
        per_edge = [[(p,) for p in pairs] for _ in range(g.m)]
    else:
        opts = []
        for size in range(1, len(pairs) + 1):
            opts.extend(combinations(pairs, size))
        per_edge = [opts for _ in range(g.m)]

    chosen: list[tuple[tuple[int, int], ...]] = []

    def build() -> bool:
        edges = set()
        used = set()
        for (u, v), sel in zip(g.edges, chosen):
            for a, b in sel:
                x, y = (u, a), (v, b)
                used.add(x)
                used.add(y)
                edges.add((min(x, y), max(x, y)))
        verts = sorted(used)
        idx = {c: i for i, c in enumerate(verts)}
        h = Graph(len(verts), [(idx[x], idx[y]) for x, y in edges])
        return recognize(tag, h)

    def rec(i: int) -> bool:
        if i == g.m:
            return build()
        for sel in per_edge[i]:
            chosen.append(sel)
            if rec(i + 1):
                return True
            chosen.pop()
        return False

    return rec(0)


def oracle_clique_global_partition(g: Graph, k: int) -> bool:
    """Independent check for clique-collection covers: assign every edge a
    responsible bag in [k]; a bag's edge set is extendable to one disjoint
    clique family iff each of its connected components spans a host clique."""
    m = g.m
    assign = [0] * m

    def bag_ok(b: int, upto: int) -> bool:
        edges = [g.edges[i] for i in range(upto + 1) if assign[i] == b]
        adj: dict[int, set[int]] = {}
        for u, v in edges:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        seen: set[int] = set()
        for s in adj:
            if s in seen:
                continue
            comp = {s}
            queue = [s]
            while queue:
                x = queue.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            for a, bb in combinations(sorted(comp), 2):
                if not g.has_edge(a, bb):
                    return False
        return True

    def rec(i: int, used: int) -> bool:
        if i == m:
            return True
        for b in range(min(used + 1, k)):
            assign[i] = b
            if bag_ok(b, i) and rec(i + 1, max(used, b + 1)):
                return True
        return False

    return rec(0, 0)
