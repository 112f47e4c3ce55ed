"""Parametric lower-bound gadget generators.

Each gadget returns the graph, an optional width-k construction sequence
witnessing its simple tree-width bound, a role map, and free-text notes
about any repairs applied to the printed construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

from ..graphs import Graph
from .sequences import ConstructionSequence, sequence

GADGET_NAMES = ("t_deg", "i_tw", "t_stw", "fca")


@dataclass(frozen=True)
class GadgetResult:
    graph: Graph
    sequence: Optional[ConstructionSequence]
    roles: dict[str, tuple[int, ...]]
    notes: tuple[str, ...] = ()


def gadget(name: str, k: int, max_vertices: int = 5000) -> GadgetResult:
    if name == "t_deg":
        return _gadget_t_deg(k, max_vertices)
    if name == "i_tw":
        return _gadget_i_tw(k, max_vertices)
    if name == "t_stw":
        return _gadget_t_stw(k, max_vertices)
    if name == "fca":
        return _gadget_fca(k, max_vertices)
    raise ValueError(f"unknown gadget {name!r}")


def _gadget_t_deg(k: int, max_vertices: int) -> GadgetResult:
    """Bipartite graph with degeneracy <= k whose caterpillar and track
    numbers reach 2k: a K_{k,n} where every k-subset of the large class
    carries a private K_{k,(k-1)^2+1}."""
    if k < 1:
        raise ValueError("t_deg needs k >= 1")
    n = (k - 1) * comb(2 * k - 1, k - 1) + 2 * k * (2 * k - 1) + 1
    private = (k - 1) ** 2 + 1
    total = k + n + comb(n, k) * private
    if total > max_vertices:
        raise ValueError(
            f"size guard: t_deg(k={k}) needs {total} vertices "
            f"(limit {max_vertices})")
    a = tuple(range(k))
    b = tuple(range(k, k + n))
    edges = [(x, y) for x in a for y in b]
    labels = {x: "A" for x in a}
    labels.update({y: "B" for y in b})
    nxt = k + n
    privates = []
    for subset in combinations(b, k):
        bs = tuple(range(nxt, nxt + private))
        nxt += private
        for x in subset:
            for y in bs:
                edges.append((x, y))
        for y in bs:
            labels[y] = "private"
        privates.extend(bs)
    g = Graph(nxt, edges, labels)
    roles = {"A": a, "B": b, "private": tuple(privates)}
    return GadgetResult(g, None, roles)


def _gadget_i_tw(k: int, max_vertices: int) -> GadgetResult:
    """K_{k,2k^2+1} plus a private pendant for every large-class vertex;
    tree-width k but folded caterpillar number at least k+1."""
    if k < 1:
        raise ValueError("i_tw needs k >= 1")
    n = 2 * k * k + 1
    total = k + 2 * n
    if total > max_vertices:
        raise ValueError(f"size guard: i_tw(k={k}) needs {total} vertices")
    a = tuple(range(k))
    b = tuple(range(k, k + n))
    pend = tuple(range(k + n, k + 2 * n))
    edges = [(x, y) for x in a for y in b]
    edges += [(b[i], pend[i]) for i in range(n)]
    labels = {x: "A" for x in a}
    labels.update({y: "B" for y in b})
    labels.update({p: "pendant" for p in pend})
    g = Graph(k + 2 * n, edges, labels)
    return GadgetResult(g, None, {"A": a, "B": b, "pendant": pend})


def _gadget_t_stw(k: int, max_vertices: int) -> GadgetResult:
    """Bipartite graph of simple tree-width <= k whose caterpillar and track
    numbers exceed k, with the witnessing width-k stacking sequence."""
    if k < 3:
        raise ValueError("t_stw needs k >= 3")
    m1 = 2 * (2 * k * k - 2 * k + 1)
    half = m1 // 2
    m2 = (k - 2) ** 2 + 1
    total = (k - 1) + m1 + half * 5 * (k - 1) + half * 5 * m2
    if total > max_vertices:
        raise ValueError(f"size guard: t_stw(k={k}) needs {total} vertices")

    a = tuple(range(k - 1))
    ids = {}
    nxt = k - 1
    for i in range(1, half + 1):
        ids[("u", i)] = nxt
        ids[("v", i)] = nxt + 1
        nxt += 2
    for i in range(1, half + 1):
        for j in range(1, 6):
            for ell in range(1, k):
                ids[("b", i, j, ell)] = nxt
                nxt += 1
    for i in range(1, half + 1):
        for j in range(1, 6):
            for ell in range(1, m2 + 1):
                ids[("c", i, j, ell)] = nxt
                nxt += 1

    edges = []
    for i in range(1, half + 1):
        for x in a:
            edges.append((x, ids[("u", i)]))
            edges.append((x, ids[("v", i)]))
        for j in range(1, 6):
            for ell in range(1, k):
                bid = ids[("b", i, j, ell)]
                edges.append((ids[("u", i)], bid))
                edges.append((ids[("v", i)], bid))
                for ell2 in range(1, m2 + 1):
                    edges.append((bid, ids[("c", i, j, ell2)]))

    labels = {x: "A" for x in a}
    for key, vid in ids.items():
        labels[vid] = key[0].upper()
    g = Graph(nxt, sorted(set(edges)), labels)

    # stacking sequence, width k
    init = tuple(sorted(a + (ids[("u", 1)], ids[("v", 1)])))
    init_keep = []
    uv1 = {ids[("u", 1)], ids[("v", 1)]}
    for x, y in combinations(init, 2):
        init_keep.append((x in uv1) != (y in uv1))
    steps = []
    for i in range(2, half + 1):
        u, v = ids[("u", i)], ids[("v", i)]
        prev_v = ids[("v", i - 1)]
        base = tuple(sorted(a + (prev_v,)))
        steps.append((u, base, tuple(w != prev_v for w in base)))
        base = tuple(sorted(a + (u,)))
        steps.append((v, base, tuple(w != u for w in base)))
    notes = []
    for i in range(1, half + 1):
        u, v = ids[("u", i)], ids[("v", i)]
        for j in range(1, 6):
            for ell in range(1, k):
                bid = ids[("b", i, j, ell)]
                if j == 1:
                    base = tuple(a[: k - ell - 1]) + (u, v) + tuple(
                        ids[("b", i, 1, t)] for t in range(1, ell))
                else:
                    # the printed list bases this on the previous layer's
                    # prefix 1..k-ell-1, which repeats the clique used by
                    # the previous layer's last vertex; shifting to the
                    # suffix ell+1..k-1 keeps all bases distinct
                    base = (u, v) + tuple(
                        ids[("b", i, j - 1, t)] for t in range(ell + 1, k)
                    ) + tuple(ids[("b", i, j, t)] for t in range(1, ell))
                base = tuple(sorted(base))
                keep = tuple(w in (u, v) for w in base)
                steps.append((bid, base, keep))
    notes.append(
        "layer-to-layer stackings use the previous layer's suffix instead "
        "of its prefix; the printed prefix variant reuses a clique")
    for i in range(1, half + 1):
        u = ids[("u", i)]
        for j in range(1, 6):
            aij = tuple(ids[("b", i, j, t)] for t in range(1, k))
            c1 = ids[("c", i, j, 1)]
            base = tuple(sorted(aij + (u,)))
            steps.append((c1, base, tuple(w != u for w in base)))
            for ell in range(2, m2 + 1):
                cprev = ids[("c", i, j, ell - 1)]
                cid = ids[("c", i, j, ell)]
                base = tuple(sorted(aij + (cprev,)))
                steps.append((cid, base, tuple(w != cprev for w in base)))

    seq = sequence(k, init, steps, tuple(init_keep))
    roles = {
        "A": a,
        "U": tuple(ids[("u", i)] for i in range(1, half + 1)),
        "V": tuple(ids[("v", i)] for i in range(1, half + 1)),
        "B": tuple(v for kk, v in ids.items() if kk[0] == "b"),
        "C": tuple(v for kk, v in ids.items() if kk[0] == "c"),
    }
    return GadgetResult(g, seq, roles, tuple(notes))


def _gadget_fca(k: int, max_vertices: int) -> GadgetResult:
    """Graph of simple tree-width <= k with folded caterpillar number at
    least k+1: a chain of centers over a fixed leaf set, with doubly-attached
    side vertices carrying pendants."""
    if k < 2:
        raise ValueError("fca needs k >= 2")
    n = 16 * k * k - 16 * k + 4
    total = (k - 1) + n + 2 * (n - 1)
    if total > max_vertices:
        raise ValueError(f"size guard: fca(k={k}) needs {total} vertices")
    leaves = tuple(range(k - 1))
    c = tuple(range(k - 1, k - 1 + n))                      # c_1..c_n
    s = tuple(range(k - 1 + n, k - 1 + n + (n - 1)))        # s_2..s_n
    aa = tuple(range(k - 1 + 2 * n - 1, k - 1 + 3 * n - 2))  # a_2..a_n
    edges = []
    for ci in c:
        for x in leaves:
            edges.append((x, ci))
    for i in range(1, n):
        edges.append((c[i - 1], c[i]))
    for i in range(n - 1):  # s_{i+2} sits over c_{i+1}, c_{i+2}
        for x in leaves[: k - 2]:
            edges.append((x, s[i]))
        edges.append((c[i], s[i]))
        edges.append((c[i + 1], s[i]))
        edges.append((s[i], aa[i]))
    labels = {x: "leaf" for x in leaves}
    labels.update({x: "c" for x in c})
    labels.update({x: "s" for x in s})
    labels.update({x: "a" for x in aa})
    g = Graph(k - 1 + 3 * n - 2, edges, labels)

    init = tuple(sorted(leaves + (c[0], c[1])))
    cset = {c[0], c[1]}
    init_keep = []
    for x, y in combinations(init, 2):
        init_keep.append(x in cset or y in cset)
    steps = []
    for i in range(2, n):
        base = tuple(sorted(leaves + (c[i - 1],)))
        steps.append((c[i], base, tuple([True] * k)))
    for i in range(n - 1):
        base = tuple(sorted(leaves[: k - 2] + (c[i], c[i + 1])))
        steps.append((s[i], base, tuple([True] * k)))
    for i in range(n - 1):
        base = tuple(sorted(leaves[: k - 2] + (c[i], s[i])))
        keep = tuple(w == s[i] for w in base)
        steps.append((aa[i], base, keep))
    seq = sequence(k, init, steps, tuple(init_keep))
    roles = {"leaf": leaves, "c": c, "s": s, "a": aa}
    return GadgetResult(g, seq, roles)


def fca_core(k: int, i: int = 2) -> Graph:
    """The 10-vertex induced core of the fca gadget: centers c_i..c_{i+3}
    (a path), side vertices s_{i+1}..s_{i+3} each adjacent to its two
    consecutive centers, and one pendant per side vertex.

    Vertices 0-3 are the centers in path order, 4-6 the side vertices,
    7-9 the pendants; labels carry the roles.
    """
    if k < 2:
        raise ValueError("fca core needs k >= 2")
    if i < 2:
        raise ValueError("core index starts at 2")
    n = 16 * k * k - 16 * k + 4
    if i + 3 > n:
        raise ValueError(f"core index out of range for k={k}")
    edges = [(0, 1), (1, 2), (2, 3)]
    for t in range(3):
        edges += [(t, 4 + t), (t + 1, 4 + t), (4 + t, 7 + t)]
    labels = {0: "c", 1: "c", 2: "c", 3: "c",
              4: "s", 5: "s", 6: "s", 7: "a", 8: "a", 9: "a"}
    return Graph(10, edges, labels)
