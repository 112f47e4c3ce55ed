"""Desk-scale exact solvers for the three covering numbers and the three
packing numbers, producing verifiable certificates.

Search strategy by class:

* subgraph-closed classes (linear/star/caterpillar forests, matchings,
  forests, pseudoforests): every edge can be assumed to lie in exactly one
  component, so the search partitions the edge list into bags with
  incremental membership checks.
* cycle collections and, on hosts with triangles, interval graphs: covers
  may need overlapping components (removing a duplicated edge can destroy
  membership), so each edge is assigned a non-empty SET of bags.
* clique collections on hosts with triangles: bags are families of
  vertex-disjoint host cliques; the search branches on which clique covers
  the first uncovered edge.
* on triangle-free hosts, interval bags degenerate to caterpillar forests
  and clique bags to matchings, which restores the partition search.

Folded numbers are decided over the blowup: each host edge picks one copy
pair (or a set of pairs for classes that are not subgraph-closed), with
copy indices introduced in canonical first-use order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import ceil
from typing import Optional

from .graphs import Graph
from .templates import CLASSES, recognize
from .covers import CoverCertificate, CoverComponent

DEFAULT_NODE_BUDGET = 50_000_000
DEFAULT_TIME_BUDGET = 300.0

# maximum degree a single component can place at one vertex, where bounded
_DEGREE_CAP = {"linear_forest": 2, "matching": 1, "cycle_collection": 2}


@dataclass(frozen=True)
class Budget:
    max_nodes: int = DEFAULT_NODE_BUDGET
    max_seconds: float = DEFAULT_TIME_BUDGET


class OutOfBudget(Exception):
    pass


class _Ticker:
    __slots__ = ("max_nodes", "deadline", "nodes")

    def __init__(self, budget: Budget):
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_seconds
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise OutOfBudget
        if not (self.nodes & 0x3FF) and time.monotonic() > self.deadline:
            raise OutOfBudget


@dataclass
class SolveResult:
    status: str  # feasible | infeasible | infinite | unknown
    value: Optional[int] = None
    certificate: Optional[CoverCertificate] = None
    nodes_explored: int = 0
    time_limit_hit: bool = False


# -- bag state -------------------------------------------------------------

class _Bag:
    """A growing edge set with per-class partial membership checks.

    For subgraph-closed classes the partial check equals full membership,
    so a bag that never fails a check is a class member at every step.
    """

    __slots__ = ("tag", "adj", "deg", "vertices", "stack", "image")

    def __init__(self, tag: str):
        self.tag = tag
        self.adj: dict[int, list[int]] = {}
        self.deg: dict[int, int] = {}
        self.vertices: set[int] = set()
        self.stack: list[tuple[int, int]] = []
        # set when bag vertices are blowup copies rather than host vertices
        self.image: dict[int, int] | None = None

    def add(self, u: int, v: int):
        self.adj.setdefault(u, []).append(v)
        self.adj.setdefault(v, []).append(u)
        self.deg[u] = self.deg.get(u, 0) + 1
        self.deg[v] = self.deg.get(v, 0) + 1
        self.vertices.add(u)
        self.vertices.add(v)
        self.stack.append((u, v))

    def pop(self):
        u, v = self.stack.pop()
        self.adj[u].pop()
        self.adj[v].pop()
        self.deg[u] -= 1
        self.deg[v] -= 1
        if self.deg[u] == 0:
            self.vertices.discard(u)
        if self.deg[v] == 0:
            self.vertices.discard(v)

    @property
    def nedges(self) -> int:
        return len(self.stack)

    def component(self, start: int) -> tuple[list[int], int]:
        seen = {start}
        queue = [start]
        for x in queue:
            for y in self.adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        edges = sum(len([y for y in self.adj[x] if y in seen]) for x in seen) // 2
        return list(seen), edges

    def partial_ok(self, u: int, v: int, host: Graph) -> bool:
        """Check the component touched by a just-added edge (u, v)."""
        tag = self.tag
        if tag == "matching":
            return self.deg[u] == 1 and self.deg[v] == 1
        if tag == "linear_forest":
            if self.deg[u] > 2 or self.deg[v] > 2:
                return False
            verts, edges = self.component(u)
            return edges == len(verts) - 1
        if tag == "forest":
            verts, edges = self.component(u)
            return edges == len(verts) - 1
        if tag == "pseudoforest":
            verts, edges = self.component(u)
            return edges <= len(verts)
        if tag == "star_forest":
            verts, edges = self.component(u)
            if edges != len(verts) - 1:
                return False
            return sum(1 for x in verts if self.deg[x] >= 2) <= 1
        if tag == "caterpillar_forest":
            verts, edges = self.component(u)
            if edges != len(verts) - 1:
                return False
            return self._caterpillar_component(verts)
        if tag == "cycle_collection":
            if self.deg[u] > 2 or self.deg[v] > 2:
                return False
            verts, edges = self.component(u)
            return edges <= len(verts)
        if tag == "clique_collection":
            verts, _ = self.component(u)
            if self.image is not None:
                hosts = [self.image[x] for x in verts]
            else:
                hosts = verts
            if len(set(hosts)) != len(hosts):
                return False  # two copies of one vertex can never be joined
            for i, a in enumerate(hosts):
                for b in hosts[i + 1:]:
                    if not host.has_edge(a, b):
                        return False
            return True
        if tag == "interval":
            return True
        raise ValueError(tag)

    def _caterpillar_component(self, verts: list[int]) -> bool:
        inner = [x for x in verts if self.deg[x] >= 2]
        if len(inner) <= 1:
            return True
        inner_set = set(inner)
        ones = 0
        for x in inner:
            d = sum(1 for y in self.adj[x] if y in inner_set)
            if d > 2 or d == 0:
                return False
            if d == 1:
                ones += 1
        return ones == 2

    def final_ok(self) -> bool:
        tag = self.tag
        if tag == "cycle_collection":
            return all(self.deg[x] == 2 for x in self.vertices)
        if tag == "clique_collection":
            seen: set[int] = set()
            for x in list(self.vertices):
                if x in seen:
                    continue
                verts, edges = self.component(x)
                seen.update(verts)
                k = len(verts)
                if edges != k * (k - 1) // 2:
                    return False
            return True
        if tag == "interval":
            return recognize("interval", self.graph())
        return True

    def graph(self) -> Graph:
        verts = sorted(self.vertices)
        idx = {x: i for i, x in enumerate(verts)}
        return Graph(len(verts),
                     [(idx[a], idx[b]) for a, b in self.stack])

    def to_component(self) -> CoverComponent:
        verts = sorted(self.vertices)
        idx = {x: i for i, x in enumerate(verts)}
        t = Graph(len(verts), [(idx[a], idx[b]) for a, b in self.stack])
        return CoverComponent(t, tuple(verts))


def _effective_tag(tag: str, g: Graph) -> str:
    """On triangle-free hosts, interval bags are caterpillar forests and
    clique bags are matchings; both swaps restore subgraph closure."""
    if tag == "interval" and not g.has_triangle():
        return "caterpillar_forest"
    if tag == "clique_collection" and not g.has_triangle():
        return "matching"
    return tag


def _is_hereditary(tag: str) -> bool:
    return CLASSES[tag].closed_under_subgraphs


class _Remaining:
    """#host edges at v with index strictly greater than i (edges sorted)."""

    def __init__(self, g: Graph):
        self.per_vertex: list[list[int]] = [[] for _ in range(g.n)]
        for i, (u, v) in enumerate(g.edges):
            self.per_vertex[u].append(i)
            self.per_vertex[v].append(i)

    def after(self, v: int, i: int) -> int:
        lst = self.per_vertex[v]
        # lists are short; linear scan from the back
        c = 0
        for x in reversed(lst):
            if x > i:
                c += 1
            else:
                break
        return c


def _empty_result(ticker: Optional[_Ticker] = None) -> SolveResult:
    return SolveResult("feasible", value=0,
                       certificate=CoverCertificate(0, ()),
                       nodes_explored=ticker.nodes if ticker else 0)


def _has_bridge(g: Graph) -> bool:
    return bool(g.bridges())


def _cycle_cover_infinite(g: Graph, tag: str, mode: str) -> bool:
    # an edge on no cycle of the host can never be covered injectively
    return tag == "cycle_collection" and mode in ("global", "local") \
        and g.m > 0 and _has_bridge(g)


# -- partition search (subgraph-closed classes) ----------------------------

def _search_partition_global(g: Graph, tag: str, k: int,
                             ticker: _Ticker) -> Optional[list[_Bag]]:
    m = g.m
    bags: list[_Bag] = []
    cap = _DEGREE_CAP.get(tag)
    rem = _Remaining(g) if cap else None

    def capacity_ok(w: int, i: int) -> bool:
        avail = sum(cap - b.deg.get(w, 0) for b in bags)
        avail += (k - len(bags)) * cap
        return avail >= rem.after(w, i)

    def rec(i: int) -> bool:
        ticker.tick()
        if i == m:
            return True
        u, v = g.edges[i]
        limit = len(bags)
        for bi in range(limit + 1):
            if bi == limit:
                if limit >= k:
                    break
                bags.append(_Bag(tag))
            bag = bags[bi]
            bag.add(u, v)
            ok = bag.partial_ok(u, v, g)
            if ok and cap:
                ok = capacity_ok(u, i) and capacity_ok(v, i)
            if ok and rec(i + 1):
                return True
            bag.pop()
            if bi == limit:
                bags.pop()
        return False

    return bags if rec(0) else None


def _search_partition_local(g: Graph, tag: str, j: int,
                            ticker: _Ticker) -> Optional[list[_Bag]]:
    m = g.m
    bags: list[_Bag] = []
    counts = [0] * g.n
    cap = _DEGREE_CAP.get(tag)
    rem = _Remaining(g)

    def capacity_ok(w: int, i: int) -> bool:
        if cap:
            avail = sum(cap - b.deg.get(w, 0) for b in bags if w in b.vertices)
            avail += (j - counts[w]) * cap
            return avail >= rem.after(w, i)
        if tag == "star_forest":
            # a vertex locked as a leaf in all its stars, with no budget for
            # new stars, cannot absorb further edges
            if counts[w] < j or rem.after(w, i) == 0:
                return True
            for b in bags:
                d = b.deg.get(w, 0)
                if d == 0:
                    continue
                verts, _ = b.component(w)
                if len(verts) <= 2 or d >= 2:
                    return True  # can still grow at w (or w is the center)
            return False
        return True

    def rec(i: int) -> bool:
        ticker.tick()
        if i == m:
            return True
        u, v = g.edges[i]
        limit = len(bags)
        for bi in range(limit + 1):
            if bi == limit:
                bags.append(_Bag(tag))
            bag = bags[bi]
            du = counts[u] + (0 if u in bag.vertices else 1)
            dv = counts[v] + (0 if v in bag.vertices else 1)
            if du > j or dv > j:
                if bi == limit:
                    bags.pop()
                    break
                continue
            cu, cv = counts[u], counts[v]
            bag.add(u, v)
            counts[u], counts[v] = du, dv
            ok = bag.partial_ok(u, v, g)
            if ok:
                ok = capacity_ok(u, i) and capacity_ok(v, i)
            if ok and rec(i + 1):
                return True
            bag.pop()
            counts[u], counts[v] = cu, cv
            if bi == limit:
                bags.pop()
                break
        return False

    return bags if rec(0) else None


# -- subset-assignment search (overlapping components) ---------------------

def _subset_choices(nexisting: int, max_new: int):
    """All (existing subset, new count) pairs, singletons first."""
    choices = []
    subsets = []
    for mask in range(1 << nexisting):
        subsets.append([i for i in range(nexisting) if mask >> i & 1])
    for size in range(0, nexisting + 1):
        for sub in subsets:
            if len(sub) != size:
                continue
            for t in range(0, max_new + 1):
                if size + t >= 1:
                    choices.append((sub, t))
    choices.sort(key=lambda c: (len(c[0]) + c[1], c[1], c[0]))
    return choices


def _search_subsets(g: Graph, tag: str, mode: str, limit: int,
                    ticker: _Ticker) -> Optional[list[_Bag]]:
    """Cover search where an edge may enter several bags.

    mode 'global': at most `limit` bags.  mode 'local': unbounded bags,
    every vertex in at most `limit` of them.
    """
    m = g.m
    bags: list[_Bag] = []
    counts = [0] * g.n
    cap = _DEGREE_CAP.get(tag)
    rem = _Remaining(g)

    def capacity_ok(w: int, i: int) -> bool:
        if not cap:
            return True
        if mode == "global":
            avail = sum(cap - b.deg.get(w, 0) for b in bags)
            avail += (limit - len(bags)) * cap
        else:
            avail = sum(cap - b.deg.get(w, 0) for b in bags if w in b.vertices)
            avail += (limit - counts[w]) * cap
        return avail >= rem.after(w, i)

    def extendable(w: int, i: int) -> bool:
        # every path endpoint of a cycle bag needs a future host edge
        if tag != "cycle_collection":
            return True
        if rem.after(w, i) > 0:
            return True
        return all(b.deg.get(w, 0) in (0, 2) for b in bags)

    def rec(i: int) -> bool:
        ticker.tick()
        if i == m:
            return all(b.final_ok() for b in bags)
        u, v = g.edges[i]
        nexist = len(bags)
        max_new = (limit - nexist) if mode == "global" else \
            min(limit - counts[u], limit - counts[v])
        max_new = max(0, max_new)
        for sub, tnew in _subset_choices(nexist, max_new):
            chosen = list(sub) + list(range(nexist, nexist + tnew))
            if mode == "local":
                du = counts[u] + sum(1 for bi in chosen
                                     if bi >= nexist or u not in bags[bi].vertices)
                dv = counts[v] + sum(1 for bi in chosen
                                     if bi >= nexist or v not in bags[bi].vertices)
                if du > limit or dv > limit:
                    continue
            added = []
            ok = True
            cu, cv = counts[u], counts[v]
            for bi in chosen:
                if bi == len(bags):
                    bags.append(_Bag(tag))
                bag = bags[bi]
                if mode == "local":
                    if u not in bag.vertices:
                        counts[u] += 1
                    if v not in bag.vertices:
                        counts[v] += 1
                bag.add(u, v)
                added.append(bi)
                if not bag.partial_ok(u, v, g):
                    ok = False
                    break
            if ok:
                ok = capacity_ok(u, i) and capacity_ok(v, i) \
                    and extendable(u, i) and extendable(v, i)
            if ok and rec(i + 1):
                return True
            for bi in reversed(added):
                bags[bi].pop()
                if bags[bi].nedges == 0 and bi == len(bags) - 1:
                    bags.pop()
            counts[u], counts[v] = cu, cv
        return False

    return bags if rec(0) else None


# -- clique-structure search (clique collections with triangles) -----------

def _cliques_containing_edge(g: Graph, u: int, v: int,
                             forbidden: set[int],
                             maximal_only: bool) -> list[tuple[int, ...]]:
    cand = sorted((g.neighbors(u) & g.neighbors(v)) - forbidden)
    base = (u, v)
    out: list[tuple[int, ...]] = []

    def extend(clique: list[int], rest: list[int]):
        grown = False
        for i, w in enumerate(rest):
            if all(g.has_edge(w, x) for x in clique):
                grown = True
                extend(clique + [w], rest[i + 1:])
        if not grown and maximal_only:
            # maximal w.r.t. candidates that could extend it
            if all(not all(g.has_edge(w, x) for x in clique) for w in cand
                   if w not in clique):
                out.append(tuple(sorted(clique)))
        if not maximal_only:
            out.append(tuple(sorted(clique)))

    extend(list(base), cand)
    return sorted(set(out))


def _search_cliques(g: Graph, mode: str, limit: int,
                    ticker: _Ticker) -> Optional[list[list[tuple[int, ...]]]]:
    """Bags are families of vertex-disjoint host cliques; an edge is covered
    when some bag has a clique containing both endpoints."""
    m = g.m
    bags: list[list[tuple[int, ...]]] = []
    bag_vertices: list[set[int]] = []
    covered: dict[tuple[int, int], int] = {}
    counts = [0] * g.n

    def first_uncovered(start: int) -> int:
        i = start
        while i < m and covered.get(g.edges[i], 0) > 0:
            i += 1
        return i

    def rec(start: int) -> bool:
        ticker.tick()
        i = first_uncovered(start)
        if i == m:
            return True
        u, v = g.edges[i]
        nexist = len(bags)
        can_new = (nexist < limit) if mode == "global" else True
        for bi in range(nexist + (1 if can_new else 0)):
            if bi == nexist:
                bags.append([])
                bag_vertices.append(set())
            forbidden = bag_vertices[bi]
            if u in forbidden or v in forbidden:
                if bi == nexist:
                    bags.pop()
                    bag_vertices.pop()
                continue
            for clique in _cliques_containing_edge(
                    g, u, v, forbidden, maximal_only=(mode == "global")):
                if mode == "local" and any(counts[w] + 1 > limit for w in clique):
                    continue
                bags[bi].append(clique)
                bag_vertices[bi].update(clique)
                for w in clique:
                    counts[w] += 1
                for a in range(len(clique)):
                    for b in range(a + 1, len(clique)):
                        e = (clique[a], clique[b])
                        covered[e] = covered.get(e, 0) + 1
                if rec(i):
                    return True
                for a in range(len(clique)):
                    for b in range(a + 1, len(clique)):
                        e = (clique[a], clique[b])
                        covered[e] -= 1
                for w in clique:
                    counts[w] -= 1
                bag_vertices[bi].difference_update(clique)
                bags[bi].pop()
            if bi == nexist:
                bags.pop()
                bag_vertices.pop()
                break
        return False

    return bags if rec(0) else None


def _clique_bags_to_cert(g: Graph, bags: list[list[tuple[int, ...]]]
                         ) -> CoverCertificate:
    comps = []
    for bag in bags:
        verts = sorted(w for clique in bag for w in clique)
        idx = {w: i for i, w in enumerate(verts)}
        edges = []
        for clique in bag:
            for a in range(len(clique)):
                for b in range(a + 1, len(clique)):
                    edges.append((idx[clique[a]], idx[clique[b]]))
        comps.append(CoverComponent(Graph(len(verts), edges), tuple(verts)))
    return CoverCertificate(g.n, tuple(comps))


# -- folded search over the blowup -----------------------------------------

class _CopySpace:
    """Copies of host vertices, opened in canonical first-use order."""

    def __init__(self, g: Graph, bounds: list[int]):
        self.g = g
        self.bounds = bounds
        self.used = [0] * g.n
        self.copies: list[tuple[int, int]] = []  # copy id -> (host vertex, index)
        self.index: dict[tuple[int, int], int] = {}
        self.image_map: dict[int, int] = {}

    def copy_id(self, v: int, a: int) -> int:
        key = (v, a)
        if key not in self.index:
            self.index[key] = len(self.copies)
            self.image_map[len(self.copies)] = v
            self.copies.append(key)
        return self.index[key]

    def options(self, v: int) -> range:
        return range(min(self.used[v] + 1, self.bounds[v]))


def _search_folded(g: Graph, tag: str, bounds: list[int],
                   ticker: _Ticker, subset_mode: bool
                   ) -> Optional[tuple[_Bag, _CopySpace]]:
    """Folded cover: host edges choose copy pairs; the copy graph H must be
    in the class and project edge-surjectively.

    subset_mode lets a host edge pick several copy pairs (needed for
    classes that are not subgraph-closed).
    """
    m = g.m
    space = _CopySpace(g, bounds)
    h = _Bag(tag)
    h.image = space.image_map
    cap = _DEGREE_CAP.get(tag)
    rem = _Remaining(g)
    used = space.used

    def capacity_ok(w: int, i: int) -> bool:
        if not cap:
            return True
        avail = sum(cap - h.deg.get(space.copy_id(w, a), 0)
                    for a in range(used[w]))
        avail += (bounds[w] - used[w]) * cap
        return avail >= rem.after(w, i)

    def extendable(w: int, i: int) -> bool:
        if tag != "cycle_collection" or rem.after(w, i) > 0:
            return True
        return all(h.deg.get(space.copy_id(w, a), 0) in (0, 2)
                   for a in range(used[w]))

    def add_pairs(u: int, v: int, pairs: list[tuple[int, int]]) -> Optional[int]:
        added = 0
        for a, b in pairs:
            if a > used[u] or b > used[v] or a >= bounds[u] or b >= bounds[v]:
                break
            cu = space.copy_id(u, a)
            cv = space.copy_id(v, b)
            if a == used[u]:
                used[u] += 1
            if b == used[v]:
                used[v] += 1
            h.add(cu, cv)
            added += 1
            if not h.partial_ok(cu, cv, g):
                break
        else:
            return added
        return -added - 1  # signal failure, still report how many to undo

    def undo(u: int, v: int, n: int):
        for _ in range(n):
            h.pop()
        # copies opened by the undone pairs are exactly the top zero-degree
        # ones: older copies keep at least one earlier edge
        for w in (u, v):
            while used[w] > 0 and h.deg.get(space.copy_id(w, used[w] - 1), 0) == 0:
                used[w] -= 1

    def pair_choices(u: int, v: int) -> list[list[tuple[int, int]]]:
        opts = [(a, b) for a in space.options(u) for b in space.options(v)]
        if not subset_mode:
            return [[p] for p in opts]
        out: list[list[tuple[int, int]]] = [[p] for p in opts]
        # larger subsets, by size; copy-open validity is rechecked on add
        from itertools import combinations
        full = [(a, b) for a in range(bounds[u]) for b in range(bounds[v])]
        for size in range(2, len(full) + 1):
            for comb in combinations(full, size):
                out.append(sorted(comb))
        return out

    def rec(i: int) -> bool:
        ticker.tick()
        if i == m:
            return h.final_ok()
        u, v = g.edges[i]
        for pairs in pair_choices(u, v):
            res = add_pairs(u, v, pairs)
            if res is not None and res >= 0:
                if capacity_ok(u, i) and capacity_ok(v, i) \
                        and extendable(u, i) and extendable(v, i) \
                        and rec(i + 1):
                    return True
                undo(u, v, res)
            else:
                undo(u, v, -res - 1)
        return False

    return (h, space) if rec(0) else None


def _folded_to_cert(g: Graph, h: _Bag, space: _CopySpace) -> CoverCertificate:
    verts = sorted(h.vertices)
    comps = []
    seen: set[int] = set()
    for x in verts:
        if x in seen:
            continue
        comp_verts, _ = h.component(x)
        comp_verts = sorted(comp_verts)
        seen.update(comp_verts)
        idx = {w: i for i, w in enumerate(comp_verts)}
        inside = set(comp_verts)
        edges = [(idx[a], idx[b]) for a, b in h.stack if a in inside]
        t = Graph(len(comp_verts), edges)
        vmap = tuple(space.copies[w][0] for w in comp_verts)
        comps.append(CoverComponent(t, vmap))
    return CoverCertificate(g.n, tuple(comps))


# -- public deciders --------------------------------------------------------

def _bags_to_cert(g: Graph, bags: list[_Bag]) -> CoverCertificate:
    return CoverCertificate(
        g.n, tuple(b.to_component() for b in bags if b.nedges))


def decide_global(g: Graph, tag: str, k: int,
                  budget: Budget = Budget()) -> SolveResult:
    """Is there an injective cover with at most k components?"""
    if tag not in CLASSES:
        raise ValueError(f"unknown template class {tag!r}")
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.m == 0:
        return SolveResult("feasible", value=0,
                           certificate=CoverCertificate(g.n, ()))
    if _cycle_cover_infinite(g, tag, "global"):
        return SolveResult("infinite")
    eff = _effective_tag(tag, g)
    ticker = _Ticker(budget)
    try:
        if _is_hereditary(eff):
            bags = _search_partition_global(g, eff, k, ticker)
        elif eff == "clique_collection":
            cb = _search_cliques(g, "global", k, ticker)
            if cb is None:
                return SolveResult("infeasible", nodes_explored=ticker.nodes)
            return SolveResult("feasible", value=len(cb),
                               certificate=_clique_bags_to_cert(g, cb),
                               nodes_explored=ticker.nodes)
        else:
            bags = _search_subsets(g, eff, "global", k, ticker)
    except OutOfBudget:
        return SolveResult("unknown", nodes_explored=ticker.nodes,
                           time_limit_hit=True)
    if bags is None:
        return SolveResult("infeasible", nodes_explored=ticker.nodes)
    return SolveResult("feasible", value=len([b for b in bags if b.nedges]),
                       certificate=_bags_to_cert(g, bags),
                       nodes_explored=ticker.nodes)


def decide_local(g: Graph, tag: str, j: int,
                 budget: Budget = Budget()) -> SolveResult:
    """Is there an injective cover with every vertex in at most j components?"""
    if tag not in CLASSES:
        raise ValueError(f"unknown template class {tag!r}")
    if j < 0:
        raise ValueError("j must be non-negative")
    if g.m == 0:
        return SolveResult("feasible", value=0,
                           certificate=CoverCertificate(g.n, ()))
    if j == 0:
        return SolveResult("infeasible")
    if _cycle_cover_infinite(g, tag, "local"):
        return SolveResult("infinite")
    eff = _effective_tag(tag, g)
    cap = _DEGREE_CAP.get(eff)
    if cap is not None and any(ceil(g.degree(v) / cap) > j for v in range(g.n)):
        return SolveResult("infeasible")
    ticker = _Ticker(budget)
    try:
        if _is_hereditary(eff):
            bags = _search_partition_local(g, eff, j, ticker)
        elif eff == "clique_collection":
            cb = _search_cliques(g, "local", j, ticker)
            if cb is None:
                return SolveResult("infeasible", nodes_explored=ticker.nodes)
            cert = _clique_bags_to_cert(g, cb)
            return SolveResult("feasible", value=cert.max_preimage(),
                               certificate=cert, nodes_explored=ticker.nodes)
        else:
            bags = _search_subsets(g, eff, "local", j, ticker)
    except OutOfBudget:
        return SolveResult("unknown", nodes_explored=ticker.nodes,
                           time_limit_hit=True)
    if bags is None:
        return SolveResult("infeasible", nodes_explored=ticker.nodes)
    cert = _bags_to_cert(g, bags)
    return SolveResult("feasible", value=cert.max_preimage(),
                       certificate=cert, nodes_explored=ticker.nodes)


def decide_folded(g: Graph, tag: str, j: int,
                  budget: Budget = Budget()) -> SolveResult:
    """Does a (not necessarily injective) cover exist with at most j
    preimages per vertex?  Searched over the j-fold blowup."""
    if j < 1:
        raise ValueError("j must be at least 1")
    return decide_constrained_folded(g, tag, {v: j for v in range(g.n)}, budget)


def decide_constrained_folded(g: Graph, tag: str,
                              bounds: dict[int, int] | list[int],
                              budget: Budget = Budget()) -> SolveResult:
    """Folded cover with per-vertex preimage bounds (heterogeneous blowup)."""
    if tag not in CLASSES:
        raise ValueError(f"unknown template class {tag!r}")
    if isinstance(bounds, dict):
        missing = [v for v in range(g.n) if v not in bounds]
        if missing:
            raise ValueError(f"bounds missing vertices {missing}")
        blist = [bounds[v] for v in range(g.n)]
    else:
        if len(bounds) != g.n:
            raise ValueError("bounds must cover every vertex")
        blist = list(bounds)
    if g.m == 0:
        return SolveResult("feasible", value=0,
                           certificate=CoverCertificate(g.n, ()))
    if any(g.degree(v) > 0 and blist[v] < 1 for v in range(g.n)):
        return SolveResult("infeasible")
    eff = _effective_tag(tag, g)
    subset_mode = not _is_hereditary(eff)
    ticker = _Ticker(budget)
    try:
        found = _search_folded(g, eff, blist, ticker, subset_mode)
    except OutOfBudget:
        return SolveResult("unknown", nodes_explored=ticker.nodes,
                           time_limit_hit=True)
    if found is None:
        return SolveResult("infeasible", nodes_explored=ticker.nodes)
    h, space = found
    cert = _folded_to_cert(g, h, space)
    return SolveResult("feasible", value=cert.max_preimage(),
                       certificate=cert, nodes_explored=ticker.nodes)


def compute_number(g: Graph, tag: str, mode: str,
                   budget: Budget = Budget()) -> SolveResult:
    """Minimum k (global) or j (local/folded) by iterative deepening from
    the applicable lower bound; returns the optimum with a certificate."""
    if mode not in ("global", "local", "folded"):
        raise ValueError(f"unknown mode {mode!r}")
    if g.m == 0:
        return SolveResult("feasible", value=0,
                           certificate=CoverCertificate(g.n, ()))
    if _cycle_cover_infinite(g, tag, mode):
        return SolveResult("infinite")
    delta = g.max_degree()
    lb = 1
    if tag == "linear_forest":
        lb = max(1, ceil(delta / 2))
    cap_value = g.m + delta + 2
    total_nodes = 0
    for value in range(lb, cap_value + 1):
        if mode == "global":
            res = decide_global(g, tag, value, budget)
        elif mode == "local":
            res = decide_local(g, tag, value, budget)
        else:
            res = decide_folded(g, tag, value, budget)
        total_nodes += res.nodes_explored
        if res.status == "feasible":
            return SolveResult("feasible", value=value,
                               certificate=res.certificate,
                               nodes_explored=total_nodes)
        if res.status in ("unknown", "infinite"):
            return SolveResult(res.status, nodes_explored=total_nodes,
                               time_limit_hit=res.time_limit_hit)
    return SolveResult("unknown", nodes_explored=total_nodes)


# -- packing ----------------------------------------------------------------

def compute_packing(g: Graph, tag: str, mode: str,
                    budget: Budget = Budget()) -> SolveResult:
    """Maximum packing numbers by brute force with edge-disjointness pruning.

    Packing components carry no isolated vertices: zero-edge components are
    forbidden outright (they would make the global size unbounded and the
    local/folded minima degenerate).
    """
    if tag not in CLASSES:
        raise ValueError(f"unknown template class {tag!r}")
    if mode not in ("global", "local", "folded"):
        raise ValueError(f"unknown mode {mode!r}")
    eff = _effective_tag(tag, g)
    ticker = _Ticker(budget)
    try:
        if mode == "global":
            value, bags = _pack_global(g, eff, ticker)
            cert = _bags_to_cert(g, bags)
        elif mode == "local":
            value, bags = _pack_local(g, eff, ticker)
            cert = _bags_to_cert(g, bags)
        else:
            value, hs = _pack_folded(g, eff, ticker)
            cert = _folded_to_cert(g, hs[0], hs[1]) if hs else \
                CoverCertificate(g.n, ())
    except OutOfBudget:
        return SolveResult("unknown", nodes_explored=ticker.nodes,
                           time_limit_hit=True)
    return SolveResult("feasible", value=value, certificate=cert,
                       nodes_explored=ticker.nodes)


def _pack_global(g: Graph, tag: str, ticker: _Ticker) -> tuple[int, list[_Bag]]:
    m = g.m
    best: tuple[int, list[list[tuple[int, int]]]] = (0, [])
    bags: list[_Bag] = []

    def snapshot() -> list[list[tuple[int, int]]]:
        return [list(b.stack) for b in bags if b.nedges]

    def rec(i: int):
        nonlocal best
        ticker.tick()
        if i == m:
            if all(b.final_ok() for b in bags):
                count = len([b for b in bags if b.nedges])
                if count > best[0]:
                    best = (count, snapshot())
            return
        if len(bags) + (m - i) <= best[0]:
            return
        u, v = g.edges[i]
        # new bag first: maximizes count greedily
        bags.append(_Bag(tag))
        bags[-1].add(u, v)
        if bags[-1].partial_ok(u, v, g):
            rec(i + 1)
        bags[-1].pop()
        bags.pop()
        for bag in bags:
            bag.add(u, v)
            if bag.partial_ok(u, v, g):
                rec(i + 1)
            bag.pop()
        rec(i + 1)  # leave the edge unpacked

    rec(0)
    out = []
    for stack in best[1]:
        b = _Bag(tag)
        for u, v in stack:
            b.add(u, v)
        out.append(b)
    return best[0], out


def _pack_local(g: Graph, tag: str, ticker: _Ticker) -> tuple[int, list[_Bag]]:
    if g.n == 0:
        return 0, []
    if any(g.degree(v) == 0 for v in range(g.n)):
        return 0, []
    m = g.m
    best = 0
    best_bags: list[list[tuple[int, int]]] = []
    bags: list[_Bag] = []
    counts = [0] * g.n
    rem = _Remaining(g)

    def target_ok(t: int, i: int) -> bool:
        return all(counts[v] + rem.after(v, i - 1) >= t for v in range(g.n))

    def rec(i: int, t: int) -> bool:
        ticker.tick()
        if i == m:
            return (min(counts) >= t
                    and all(b.final_ok() for b in bags))
        if not target_ok(t, i):
            return False
        u, v = g.edges[i]
        bags.append(_Bag(tag))
        for bag in [bags[-1]] + bags[:-1]:
            fresh_u = u not in bag.vertices
            fresh_v = v not in bag.vertices
            bag.add(u, v)
            if bag.partial_ok(u, v, g):
                counts[u] += fresh_u
                counts[v] += fresh_v
                if rec(i + 1, t):
                    return True
                counts[u] -= fresh_u
                counts[v] -= fresh_v
            bag.pop()
        bags.pop()
        return rec(i + 1, t)

    t = 1
    while True:
        bags.clear()
        counts[:] = [0] * g.n
        if not rec(0, t):
            break
        best = t
        best_bags = [list(b.stack) for b in bags if b.nedges]
        t += 1
    out = []
    for stack in best_bags:
        b = _Bag(tag)
        for u, v in stack:
            b.add(u, v)
        out.append(b)
    return best, out


def _pack_folded(g: Graph, tag: str, ticker: _Ticker):
    if g.n == 0 or any(g.degree(v) == 0 for v in range(g.n)):
        return 0, None
    best = 0
    best_state = None
    delta = g.max_degree()

    for t in range(1, delta + 1):
        found = _decide_pack_folded(g, tag, t, ticker)
        if found is None:
            break
        best = t
        best_state = found
    return best, best_state


def _decide_pack_folded(g: Graph, tag: str, t: int, ticker: _Ticker):
    """Edge-injective folded packing with >= t used copies at each vertex."""
    m = g.m
    bounds = [g.degree(v) for v in range(g.n)]
    space = _CopySpace(g, bounds)
    h = _Bag(tag)
    used = space.used
    rem = _Remaining(g)

    def rec(i: int):
        ticker.tick()
        if i == m:
            return all(used[v] >= t for v in range(g.n)) and h.final_ok()
        u, v = g.edges[i]
        if used[u] + rem.after(u, i - 1) < t or used[v] + rem.after(v, i - 1) < t:
            return False
        for a in space.options(u):
            for b in space.options(v):
                cu, cv = space.copy_id(u, a), space.copy_id(v, b)
                ou, ov = used[u], used[v]
                if a == used[u]:
                    used[u] += 1
                if b == used[v]:
                    used[v] += 1
                h.add(cu, cv)
                if h.partial_ok(cu, cv, g) and rec(i + 1):
                    return True
                h.pop()
                used[u], used[v] = ou, ov
        return rec(i + 1)  # skip the edge

    if rec(0):
        return (h, space)
    return None
