"""Immutable simple graphs, named families, and basic traversals.

Vertices are dense integers 0..n-1.  Every generator documents its
numbering so that certificates built on top of these graphs are
reproducible run to run.
"""

from __future__ import annotations

from typing import Iterable, Optional


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Immutable after construction.  Edges are stored sorted, as (u, v)
    with u < v.  Optional text labels attach to vertices (bipartite
    generators use 'A'/'B').
    """

    __slots__ = ("n", "edges", "labels", "_adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[dict[int, str]] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        self.n = n
        self.edges = tuple(norm)
        if labels:
            for v in labels:
                if not (0 <= v < n):
                    raise ValueError(f"label on unknown vertex {v}")
        self.labels = dict(labels) if labels else {}
        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._edge_set = frozenset(self.edges)

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return self._edge_set

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, sorted by minimum."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return False
        return True

    def has_triangle(self) -> bool:
        for u, v in self.edges:
            if self._adj[u] & self._adj[v]:
                return True
        return False

    def bridges(self) -> set[tuple[int, int]]:
        """Bridge edges, via iterative lowpoint DFS."""
        low = [0] * self.n
        num = [-1] * self.n
        out: set[tuple[int, int]] = set()
        counter = 0
        for root in range(self.n):
            if num[root] != -1:
                continue
            stack = [(root, -1, iter(sorted(self._adj[root])))]
            num[root] = low[root] = counter
            counter += 1
            while stack:
                x, parent, it = stack[-1]
                advanced = False
                for y in it:
                    if num[y] == -1:
                        num[y] = low[y] = counter
                        counter += 1
                        stack.append((y, x, iter(sorted(self._adj[y]))))
                        advanced = True
                        break
                    elif y != parent:
                        low[x] = min(low[x], num[y])
                    # one parent edge is skipped; multi-edges cannot occur
                if not advanced:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        low[p] = min(low[p], low[x])
                        if low[x] > num[p]:
                            out.add((p, x) if p < x else (x, p))
        return out

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges and self.labels == other.labels)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- named families ------------------------------------------------------

def path(n: int) -> Graph:
    """Path 0-1-...-(n-1).  n >= 1."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0.  n >= 3."""
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: class A = 0..m-1, class B = m..m+n-1, labelled."""
    if m < 1 or n < 1:
        raise ValueError("both classes need at least one vertex")
    labels = {i: "A" for i in range(m)}
    labels.update({m + j: "B" for j in range(n)})
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)], labels)


def star(n: int) -> Graph:
    """K_{1,n}: center 0 (label A), leaves 1..n (label B)."""
    if n < 1:
        raise ValueError("star needs at least one leaf")
    labels = {0: "A"}
    labels.update({i: "B" for i in range(1, n + 1)})
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)], labels)


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9 (i+5 ~ ((i+2) mod 5)+5),
    spokes i ~ i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def spider(legs: int, leg_length: int) -> Graph:
    """Center 0; leg j occupies 1 + j*leg_length .. 1 + (j+1)*leg_length - 1,
    walking outward."""
    if legs < 1 or leg_length < 1:
        raise ValueError("spider needs legs >= 1 and leg_length >= 1")
    edges = []
    for j in range(legs):
        base = 1 + j * leg_length
        edges.append((0, base))
        for t in range(leg_length - 1):
            edges.append((base + t, base + t + 1))
    return Graph(1 + legs * leg_length, edges)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "petersen": (petersen, 0),
    "spider": (spider, 2),
}


def generate(family: str, params: list[int]) -> Graph:
    """Build a named family graph; raises ValueError on unknown family or
    wrong parameter count."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    fn, arity = FAMILIES[family]
    if len(params) != arity:
        raise ValueError(f"{family} expects {arity} parameter(s), got {len(params)}")
    return fn(*params)


# -- derived graphs ------------------------------------------------------

def line_graph(h: Graph) -> tuple[Graph, dict[int, tuple[int, int]]]:
    """Line graph of h plus the map from new vertices back to h's edges.

    New vertex i corresponds to h.edges[i] (lexicographic order).
    """
    back = {i: e for i, e in enumerate(h.edges)}
    idx = {e: i for i, e in enumerate(h.edges)}
    edges = []
    for v in range(h.n):
        inc = sorted(idx[(min(v, w), max(v, w))] for w in h.neighbors(v))
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                e = (inc[a], inc[b])
                edges.append(e)
    # edges sharing both endpoints appear once: dedupe pairs sharing two ends
    return Graph(h.m, sorted(set(edges))), back


def blowup(g: Graph, j: int) -> tuple[Graph, list[int]]:
    """j-fold blowup: copy a of u gets id u*j + a; all copy pairs of
    adjacent originals are joined.  Returns (graph, projection list)."""
    if j < 1:
        raise ValueError("blowup factor must be >= 1")
    edges = []
    for u, v in g.edges:
        for a in range(j):
            for b in range(j):
                x, y = u * j + a, v * j + b
                edges.append((min(x, y), max(x, y)))
    proj = [x // j for x in range(g.n * j)]
    return Graph(g.n * j, edges), proj


# -- Euler tours ---------------------------------------------------------

def euler_tours(g: Graph) -> list[list[int]]:
    """One closed Euler tour per non-trivial component (Hierholzer).

    Requires all degrees even; each tour starts at the component's
    minimum-degree vertex (ties broken by id), and the tours are listed
    by that start vertex.
    """
    odd = [v for v in range(g.n) if g.degree(v) % 2]
    if odd:
        raise ValueError(f"odd-degree vertices present: {odd}")
    adj: list[list[int]] = [[] for _ in range(g.n)]  # edge indices
    for i, (u, v) in enumerate(g.edges):
        adj[u].append(i)
        adj[v].append(i)
    used = [False] * g.m
    ptr = [0] * g.n
    tours = []
    for comp in g.components():
        verts = [v for v in comp if g.degree(v) > 0]
        if not verts:
            continue
        start = min(verts, key=lambda v: (g.degree(v), v))
        # iterative Hierholzer
        stack = [start]
        circuit: list[int] = []
        while stack:
            x = stack[-1]
            found = False
            while ptr[x] < len(adj[x]):
                ei = adj[x][ptr[x]]
                if used[ei]:
                    ptr[x] += 1
                    continue
                used[ei] = True
                u, v = g.edges[ei]
                stack.append(v if x == u else u)
                found = True
                break
            if not found:
                circuit.append(stack.pop())
        circuit.reverse()
        tours.append(circuit)
    return tours


# -- text format ---------------------------------------------------------

def graph_to_text(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    lines += [f"label {v} {g.labels[v]}" for v in sorted(g.labels)]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    n = None
    edges = []
    labels = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            n = int(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((int(parts[1]), int(parts[2])))
        elif parts[0] == "label" and len(parts) >= 3:
            labels[int(parts[1])] = " ".join(parts[2:])
        else:
            raise ValueError(f"bad graph line {ln}: {raw!r}")
    if n is None:
        raise ValueError("missing 'n' line")
    return Graph(n, edges, labels)
