"""Krausz clique covers of line graphs: one clique per host vertex, formed
by the line-graph vertices of its incident edges.  Every line-graph vertex
lies in exactly the cliques of its edge's two endpoints, so the cover is
injective with at most 2 preimages per vertex.
"""

from __future__ import annotations

from ..graphs import Graph, line_graph
from ..covers import CoverCertificate, CoverComponent


def krausz_cover(h: Graph) -> tuple[Graph, CoverCertificate]:
    """Build line_graph(h) and its clique cover; returns (L, certificate)."""
    lg, back = line_graph(h)
    edge_index = {e: i for i, e in back.items()}
    comps = []
    for v in range(h.n):
        if h.degree(v) == 0:
            continue
        members = sorted(edge_index[(min(v, w), max(v, w))]
                         for w in h.neighbors(v))
        k = len(members)
        template = Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
        comps.append(CoverComponent(template, tuple(members)))
    return lg, CoverCertificate(lg.n, tuple(comps))
