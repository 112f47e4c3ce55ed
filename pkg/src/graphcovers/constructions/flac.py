"""Folded linear-forest covers from Euler tours.

Per component: if every degree is even, one closed Euler tour starting at a
minimum-degree vertex covers it; otherwise an auxiliary vertex joined to
all odd-degree vertices makes it Eulerian, and deleting the auxiliary
vertex's visits splits the tour into open walks.  The resulting walk cover
has at most ceil((max_degree+1)/2) appearances per vertex, and at most
ceil(max_degree/2) when every component has an odd-degree vertex.
"""

from __future__ import annotations

from ..graphs import Graph, euler_tours
from ..covers import CoverCertificate, walks_to_certificate


def flac_cover(g: Graph) -> CoverCertificate:
    if g.m == 0:
        raise ValueError("host graph needs at least one edge")
    walks: list[list[int]] = []
    for comp in g.components():
        comp_edges = [(u, v) for u, v in g.edges if u in set(comp)]
        if not comp_edges:
            continue
        walks.extend(_component_walks(g, comp, comp_edges))
    return walks_to_certificate(g, walks)


def _component_walks(g: Graph, comp: list[int],
                     comp_edges: list[tuple[int, int]]) -> list[list[int]]:
    odd = [v for v in comp if g.degree(v) % 2 == 1]
    idx = {v: i for i, v in enumerate(comp)}
    if not odd:
        sub = Graph(len(comp), [(idx[u], idx[v]) for u, v in comp_edges])
        tours = euler_tours(sub)
        assert len(tours) == 1
        return [[comp[x] for x in tours[0]]]
    # auxiliary vertex: local id len(comp), joined to every odd vertex
    aux = len(comp)
    edges = [(idx[u], idx[v]) for u, v in comp_edges]
    edges += [(idx[v], aux) for v in odd]
    sub = Graph(len(comp) + 1, edges)
    tours = euler_tours(sub)
    assert len(tours) == 1
    tour = tours[0]
    # rotate the closed tour to start at the auxiliary vertex
    if aux in tour:
        pos = tour.index(aux)
        tour = tour[pos:-1] + tour[:pos] + [aux]
    # split at every auxiliary visit
    walks: list[list[int]] = []
    current: list[int] = []
    for x in tour:
        if x == aux:
            if len(current) >= 2:
                walks.append([comp[y] for y in current])
            current = []
        else:
            current.append(x)
    if len(current) >= 2:
        walks.append([comp[y] for y in current])
    return walks
