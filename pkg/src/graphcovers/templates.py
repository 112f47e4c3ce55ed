"""Template classes and membership tests.

The nine template classes are keyed by lowercase tags.  Each carries
closure flags used by the property-test suite and by the solvers (the
subgraph-closure flag decides whether a cover search may assume each
edge sits in exactly one component).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, path, cycle


@dataclass(frozen=True)
class TemplateClass:
    tag: str
    closed_under_subgraphs: bool
    closed_under_disjoint_union: bool
    closed_under_merging_within_components: bool


# Flag notes:
#  * disjoint-union closure holds for all nine classes (standing assumption).
#  * merging within a component keeps stars, cliques and matchings in class;
#    every other class has a counterexample (see MERGE_COUNTEREXAMPLES).
#  * interval graphs are NOT subgraph-closed: the diamond is interval but
#    deleting its chord leaves a chordless 4-cycle.
CLASSES: dict[str, TemplateClass] = {
    "linear_forest": TemplateClass("linear_forest", True, True, False),
    "star_forest": TemplateClass("star_forest", True, True, True),
    "caterpillar_forest": TemplateClass("caterpillar_forest", True, True, False),
    "interval": TemplateClass("interval", False, True, False),
    "clique_collection": TemplateClass("clique_collection", False, True, True),
    "cycle_collection": TemplateClass("cycle_collection", False, True, False),
    "matching": TemplateClass("matching", True, True, True),
    "forest": TemplateClass("forest", True, True, False),
    "pseudoforest": TemplateClass("pseudoforest", True, True, False),
}

CLASS_TAGS = tuple(CLASSES)


def class_properties(tag: str) -> TemplateClass:
    if tag not in CLASSES:
        raise ValueError(f"unknown template class {tag!r}")
    return CLASSES[tag]


# For every class whose merging flag is false: (graph, (u, v)) such that
# merging u and v inside one component leaves the class.
def _merge(g: Graph, u: int, v: int) -> Graph:
    keep = [x for x in range(g.n) if x != v]
    ren = {x: i for i, x in enumerate(keep)}
    ren[v] = ren[u]
    edges = set()
    for a, b in g.edges:
        x, y = ren[a], ren[b]
        if x != y:
            edges.add((min(x, y), max(x, y)))
    return Graph(g.n - 1, sorted(edges))


merge_vertices = _merge

MERGE_COUNTEREXAMPLES: dict[str, tuple[Graph, tuple[int, int]]] = {
    "linear_forest": (path(4), (0, 3)),        # P4 -> triangle
    "caterpillar_forest": (path(4), (0, 3)),   # P4 -> triangle, not a forest
    "interval": (path(5), (0, 4)),             # P5 -> chordless C4
    "cycle_collection": (cycle(4), (0, 2)),    # C4 -> star on 3 vertices
    "forest": (path(4), (0, 3)),
    "pseudoforest": (
        Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]),
        (2, 5),                                # second cycle in one component
    ),
}


# -- membership ----------------------------------------------------------

def _acyclic(g: Graph) -> bool:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_linear_forest(g: Graph) -> bool:
    return g.max_degree() <= 2 and _acyclic(g)


def is_star_forest(g: Graph) -> bool:
    # forest with no path on 4 vertices: every edge has an endpoint of degree 1
    if not _acyclic(g):
        return False
    return all(g.degree(u) == 1 or g.degree(v) == 1 for u, v in g.edges)


def is_caterpillar_forest(g: Graph) -> bool:
    """Forest in which, per component, the non-leaf vertices induce a path."""
    if not _acyclic(g):
        return False
    for comp in g.components():
        inner = [v for v in comp if g.degree(v) >= 2]
        if len(inner) <= 1:
            continue
        degs_inside = []
        for v in inner:
            d = sum(1 for w in g.neighbors(v) if g.degree(w) >= 2)
            degs_inside.append(d)
        # connected subforest of a tree; a path has exactly two inner-degree-1
        # vertices and the rest of inner degree 2
        if any(d > 2 for d in degs_inside):
            return False
        if sum(1 for d in degs_inside if d == 1) != 2:
            return False
        if any(d == 0 for d in degs_inside):
            return False
    return True


def is_matching(g: Graph) -> bool:
    return g.max_degree() <= 1


def is_forest(g: Graph) -> bool:
    return _acyclic(g)


def is_pseudoforest(g: Graph) -> bool:
    for comp in g.components():
        comp_set = set(comp)
        m = sum(1 for u, _ in g.edges if u in comp_set)
        if m > len(comp):
            return False
    return True


def is_clique_collection(g: Graph) -> bool:
    for comp in g.components():
        comp_set = set(comp)
        k = len(comp)
        have = sum(1 for u, _ in g.edges if u in comp_set)
        if have != k * (k - 1) // 2:
            return False
    return True


def is_cycle_collection(g: Graph) -> bool:
    # disjoint simple cycles of length >= 3, i.e. 2-regular
    return all(g.degree(v) == 2 for v in range(g.n))


def _perfect_elimination_order(g: Graph) -> list[int] | None:
    """Maximum-cardinality search; returns a PEO if g is chordal, else None."""
    n = g.n
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        v = max((x for x in range(n) if not visited[x]),
                key=lambda x: (weight[x], -x), default=None)
        if v is None:
            break
        visited[v] = True
        order.append(v)
        for w in g.neighbors(v):
            if not visited[w]:
                weight[w] += 1
    order.reverse()  # elimination order: reverse of MCS visit order
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=lambda w: pos[w])
        for w in later:
            if w != u and not g.has_edge(u, w):
                return None
    return order


def is_chordal(g: Graph) -> bool:
    return _perfect_elimination_order(g) is not None


def has_asteroidal_triple(g: Graph) -> bool:
    """Cubic-time check: three pairwise non-adjacent vertices such that each
    pair is joined by a path avoiding the closed neighborhood of the third."""
    n = g.n
    # component id of G - N[w] for every w
    comp_of = []
    for w in range(n):
        banned = set(g.neighbors(w)) | {w}
        cid = [-1] * n
        c = 0
        for s in range(n):
            if s in banned or cid[s] != -1:
                continue
            stack = [s]
            cid[s] = c
            while stack:
                x = stack.pop()
                for y in g.neighbors(x):
                    if y not in banned and cid[y] == -1:
                        cid[y] = c
                        stack.append(y)
            c += 1
        comp_of.append(cid)
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            for w in range(v + 1, n):
                if g.has_edge(u, w) or g.has_edge(v, w):
                    continue
                if (comp_of[w][u] == comp_of[w][v] != -1
                        and comp_of[v][u] == comp_of[v][w] != -1
                        and comp_of[u][v] == comp_of[u][w] != -1):
                    return True
    return False


def is_interval(g: Graph) -> bool:
    """Lekkerkerker-Boland: chordal and asteroidal-triple-free."""
    return is_chordal(g) and not has_asteroidal_triple(g)


_RECOGNIZERS = {
    "linear_forest": is_linear_forest,
    "star_forest": is_star_forest,
    "caterpillar_forest": is_caterpillar_forest,
    "interval": is_interval,
    "clique_collection": is_clique_collection,
    "cycle_collection": is_cycle_collection,
    "matching": is_matching,
    "forest": is_forest,
    "pseudoforest": is_pseudoforest,
}


def recognize(tag: str, g: Graph) -> bool:
    if tag not in _RECOGNIZERS:
        raise ValueError(f"unknown template class {tag!r}")
    return _RECOGNIZERS[tag](g)


# -- brute-force interval oracle (small n) -------------------------------

def is_interval_bruteforce(g: Graph) -> bool:
    """Independent oracle: a graph is interval iff its maximal cliques admit
    a linear order in which every vertex's cliques are consecutive.

    Exhaustive search over clique orderings with memoization; intended for
    small graphs (n <= 9 or so).
    """
    if g.n > 12:
        raise ValueError("brute-force interval check is limited to small graphs")
    cliques = _maximal_cliques(g)
    k = len(cliques)
    if k <= 1:
        return True
    memo: set[tuple[frozenset[int], int]] = set()

    def dfs(placed: frozenset[int], last: int, covered: set[int]) -> bool:
        if len(placed) == k:
            return True
        key = (placed, last)
        if key in memo:
            return False
        for i in range(k):
            if i in placed:
                continue
            # a vertex reappearing after a gap breaks consecutiveness
            if any(v in covered and v not in cliques[last] for v in cliques[i]):
                continue
            if dfs(placed | {i}, i, covered | cliques[i]):
                return True
        memo.add(key)
        return False

    for first in range(k):
        if dfs(frozenset([first]), first, set(cliques[first])):
            return True
    return False


def _maximal_cliques(g: Graph) -> list[set[int]]:
    out: list[set[int]] = []

    def bron(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            out.append(set(r))
            return
        pivot = max(p | x, key=lambda u: len(g.neighbors(u) & p), default=None)
        cand = p - g.neighbors(pivot) if pivot is not None else set(p)
        for v in sorted(cand):
            bron(r | {v}, p & g.neighbors(v), x & g.neighbors(v))
            p.remove(v)
            x.add(v)

    bron(set(), set(range(g.n)), set())
    return out
