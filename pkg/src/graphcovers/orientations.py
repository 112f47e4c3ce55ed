"""Degree-constrained orientations via max flow, density parameters, and the
polynomial local-star-arboricity computation they support.

The flow network is fixed so that infeasibility witnesses are comparable:
source -> one node per edge (capacity 1), edge node -> its two endpoints
(capacity 1), endpoint v -> sink (capacity alpha(v)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Optional

from .graphs import Graph
from .covers import CoverCertificate, CoverComponent


@dataclass(frozen=True)
class Orientation:
    """One head per host edge, aligned with the host's sorted edge list."""
    edges: tuple[tuple[int, int], ...]
    heads: tuple[int, ...]

    def __post_init__(self):
        for (u, v), h in zip(self.edges, self.heads):
            if h not in (u, v):
                raise ValueError(f"head {h} not an endpoint of ({u},{v})")

    def out_degrees(self, n: int) -> list[int]:
        out = [0] * n
        for (u, v), h in zip(self.edges, self.heads):
            out[u if h == v else v] += 1
        return out

    def in_degrees(self, n: int) -> list[int]:
        ind = [0] * n
        for h in self.heads:
            ind[h] += 1
        return ind

    def max_out_degree(self, n: int) -> int:
        return max(self.out_degrees(n), default=0)


@dataclass(frozen=True)
class DensityWitness:
    """Vertex subset with its induced edge count; kind picks the ratio
    denominator: |S|-1 for arboricity, |S| for pseudoarboricity."""
    vertices: tuple[int, ...]
    induced_edge_count: int
    kind: str  # "arboricity" | "pseudoarboricity"

    def value(self) -> int:
        s = len(self.vertices)
        if self.kind == "pseudoarboricity":
            return ceil(self.induced_edge_count / s) if s else 0
        if s < 2:
            return 0
        return ceil(self.induced_edge_count / (s - 1))

    def recount(self, g: Graph) -> int:
        sset = set(self.vertices)
        return sum(1 for u, v in g.edges if u in sset and v in sset)


# -- Dinic max flow ------------------------------------------------------

class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int) -> int:
        i = len(self.to)
        self.head[u].append(i)
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(i + 1)
        self.to.append(u)
        self.cap.append(0)
        return i

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for x in queue:
                for i in self.head[x]:
                    if self.cap[i] > 0 and level[self.to[i]] == -1:
                        level[self.to[i]] = level[x] + 1
                        queue.append(self.to[i])
            if level[t] == -1:
                return flow
            it = [0] * self.n

            def dfs(x: int, f: int) -> int:
                if x == t:
                    return f
                while it[x] < len(self.head[x]):
                    i = self.head[x][it[x]]
                    y = self.to[i]
                    if self.cap[i] > 0 and level[y] == level[x] + 1:
                        d = dfs(y, min(f, self.cap[i]))
                        if d > 0:
                            self.cap[i] -= d
                            self.cap[i ^ 1] += d
                            return d
                    it[x] += 1
                return 0

            while True:
                f = dfs(s, 1 << 60)
                if f == 0:
                    break
                flow += f

    def residual_reachable(self, s: int) -> list[bool]:
        seen = [False] * self.n
        seen[s] = True
        queue = [s]
        for x in queue:
            for i in self.head[x]:
                if self.cap[i] > 0 and not seen[self.to[i]]:
                    seen[self.to[i]] = True
                    queue.append(self.to[i])
        return seen


def orient_bounded(g: Graph, alpha: dict[int, int] | list[int]
                   ) -> tuple[Optional[Orientation], Optional[DensityWitness]]:
    """Orientation with out-degree of v at most alpha(v), or an infeasibility
    witness S with |E[S]| > sum of alpha over S.

    Returns (orientation, None) if feasible, (None, witness) otherwise.
    """
    if isinstance(alpha, dict):
        missing = [v for v in range(g.n) if v not in alpha]
        if missing:
            raise ValueError(f"alpha missing vertices {missing}")
        avals = [alpha[v] for v in range(g.n)]
    else:
        if len(alpha) != g.n:
            raise ValueError("alpha must cover every vertex")
        avals = list(alpha)
    if any(a < 0 for a in avals):
        raise ValueError("alpha must be non-negative")
    m = g.m
    if m == 0:
        return Orientation((), ()), None
    # nodes: 0 = source, 1..m = edge nodes, m+1..m+n = vertices, m+n+1 = sink
    net = _Dinic(m + g.n + 2)
    s, t = 0, m + g.n + 1
    edge_arc = []
    end_arcs = []
    for i, (u, v) in enumerate(g.edges):
        edge_arc.append(net.add(s, 1 + i, 1))
        a = net.add(1 + i, 1 + m + u, 1)
        b = net.add(1 + i, 1 + m + v, 1)
        end_arcs.append((a, b))
    for v in range(g.n):
        net.add(1 + m + v, t, avals[v])
    flow = net.max_flow(s, t)
    if flow == m:
        # the endpoint that absorbs the edge's unit pays out-degree budget,
        # so it is the tail; the head is the other endpoint
        heads = []
        for i, (u, v) in enumerate(g.edges):
            a, _ = end_arcs[i]
            heads.append(v if net.cap[a] == 0 else u)
        return Orientation(g.edges, tuple(heads)), None
    reach = net.residual_reachable(s)
    sset = tuple(v for v in range(g.n) if reach[1 + m + v])
    inside = set(sset)
    count = sum(1 for u, v in g.edges if u in inside and v in inside)
    return None, DensityWitness(sset, count, "pseudoarboricity")


def pseudoarboricity(g: Graph) -> tuple[int, Orientation, DensityWitness]:
    """Minimum possible maximum out-degree, an optimal orientation, and a
    densest-subset witness with ceil(|E[S]|/|S|) equal to the optimum."""
    if g.m == 0:
        return 0, Orientation((), ()), DensityWitness(
            tuple(range(g.n)), 0, "pseudoarboricity")
    lo = ceil(g.m / g.n)
    hi = max(lo, g.max_degree())
    best: Optional[Orientation] = None
    while lo < hi:
        mid = (lo + hi) // 2
        orient, _ = orient_bounded(g, [mid] * g.n)
        if orient is not None:
            best = orient
            hi = mid
        else:
            lo = mid + 1
    p = lo
    if best is None or best.max_out_degree(g.n) > p:
        best, _ = orient_bounded(g, [p] * g.n)
        assert best is not None
    if p == ceil(g.m / g.n):
        witness = DensityWitness(tuple(range(g.n)), g.m, "pseudoarboricity")
    else:
        _, witness = orient_bounded(g, [p - 1] * g.n)
        assert witness is not None and witness.value() >= p
    return p, best, witness


def arboricity(g: Graph) -> tuple[int, DensityWitness]:
    """Exact forest-cover number by the density formula, via subset
    enumeration.  Guarded to |V| <= 20."""
    if g.n > 20:
        raise ValueError("arboricity subset enumeration is guarded to n <= 20")
    if g.m == 0:
        return 0, DensityWitness((), 0, "arboricity")
    adj_mask = [0] * g.n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    n = g.n
    ecount = [0] * (1 << n)
    best_val, best_set, best_cnt = 0, None, 0
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        cnt = ecount[rest] + (adj_mask[low] & rest).bit_count()
        ecount[mask] = cnt
        k = mask.bit_count()
        if k >= 2:
            val = -(-cnt // (k - 1))
            if val > best_val:
                best_val, best_set, best_cnt = val, mask, cnt
    assert best_set is not None
    verts = tuple(v for v in range(n) if best_set >> v & 1)
    return best_val, DensityWitness(verts, best_cnt, "arboricity")


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Minimum over acyclic orientations of the maximum out-degree, by
    min-degree peeling; the elimination order witnesses the orientation."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    order = []
    k = 0
    for _ in range(g.n):
        v = min((x for x in range(g.n) if not removed[x]),
                key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        removed[v] = True
        order.append(v)
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
    return k, order


def local_star_arboricity(g: Graph) -> tuple[int, CoverCertificate]:
    """Minimum j such that the edges split into star forests with every
    vertex in at most j of them; polynomial via two flow solves.

    Let p be the pseudoarboricity.  The answer is p exactly when an
    orientation exists whose out-degree hits p only at vertices of degree p;
    otherwise it is p+1.  The certificate takes at each vertex the star of
    its incoming edges.
    """
    p, orient, _ = pseudoarboricity(g)
    if p == 0:
        return 0, CoverCertificate(g.n, ())
    alpha = [p if g.degree(v) == p else p - 1 for v in range(g.n)]
    tight, _ = orient_bounded(g, alpha)
    if tight is not None:
        value, chosen = p, tight
    else:
        value, chosen = p + 1, orient
    by_center: dict[int, list[int]] = {}
    for (u, v), h in zip(chosen.edges, chosen.heads):
        by_center.setdefault(h, []).append(u if h == v else v)
    comps = []
    for center in sorted(by_center):
        leaves = sorted(by_center[center])
        t = Graph(1 + len(leaves), [(0, i + 1) for i in range(len(leaves))])
        comps.append(CoverComponent(t, tuple([center] + leaves)))
    return value, CoverCertificate(g.n, tuple(comps))


# -- text format ---------------------------------------------------------

def orientation_to_text(o: Orientation) -> str:
    lines = []
    for (u, v), h in zip(o.edges, o.heads):
        tail = u if h == v else v
        lines.append(f"a {tail} {h}")
    return "\n".join(lines) + "\n"


def orientation_from_text(text: str) -> Orientation:
    edges = []
    heads = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "a" or len(parts) != 3:
            raise ValueError(f"bad orientation line {ln}: {raw!r}")
        tail, head = int(parts[1]), int(parts[2])
        edges.append((min(tail, head), max(tail, head)))
        heads.append(head)
    pairs = sorted(zip(edges, heads))
    return Orientation(tuple(e for e, _ in pairs), tuple(h for _, h in pairs))
