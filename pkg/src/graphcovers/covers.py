"""Cover certificates: explicit homomorphisms from template graphs into a
host, with a verifier that reports every violation it finds.

A certificate never trusts its producer: verify_cover re-checks the
homomorphism property, class membership of every component, coverage of
every host edge, and (for global/local modes) per-component injectivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph
from .templates import recognize


@dataclass(frozen=True)
class CoverComponent:
    template: Graph
    vmap: tuple[int, ...]  # template vertex -> host vertex

    def __post_init__(self):
        if len(self.vmap) != self.template.n:
            raise ValueError("vertex map must be total on the template")


@dataclass(frozen=True)
class CoverCertificate:
    host_vertex_count: int
    components: tuple[CoverComponent, ...]

    def preimage_counts(self) -> list[int]:
        counts = [0] * self.host_vertex_count
        for comp in self.components:
            for hv in comp.vmap:
                if 0 <= hv < self.host_vertex_count:
                    counts[hv] += 1
        return counts

    def max_preimage(self) -> int:
        return max(self.preimage_counts(), default=0)

    @property
    def size(self) -> int:
        return len(self.components)


@dataclass
class CoverReport:
    valid: bool
    violations: list[str] = field(default_factory=list)
    size: int = 0
    max_preimage: int = 0
    injective: bool = True
    covered_edge_count: int = 0


MODES = ("global", "local", "folded")


def verify_cover(g: Graph, cert: CoverCertificate, tag: str,
                 mode: str) -> CoverReport:
    """Check cert against host g for the given template class and mode.

    Global and local modes additionally require each component's map to be
    injective; folded mode does not.  All violations are collected.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if cert.host_vertex_count != g.n:
        raise ValueError(
            f"certificate host size {cert.host_vertex_count} != graph size {g.n}")
    violations: list[str] = []
    covered: set[tuple[int, int]] = set()
    injective = True
    for ci, comp in enumerate(cert.components):
        t, vmap = comp.template, comp.vmap
        for tv, hv in enumerate(vmap):
            if not (0 <= hv < g.n):
                raise ValueError(
                    f"component {ci}: template vertex {tv} maps to "
                    f"out-of-range host vertex {hv}")
        if not recognize(tag, t):
            violations.append(f"component {ci} is not in class {tag}")
        if len(set(vmap)) != len(vmap):
            injective = False
            if mode in ("global", "local"):
                violations.append(f"component {ci} map is not injective")
        for a, b in t.edges:
            ha, hb = vmap[a], vmap[b]
            if ha == hb:
                violations.append(
                    f"component {ci}: template edge ({a},{b}) collapses "
                    f"to host vertex {ha}")
                continue
            he = (ha, hb) if ha < hb else (hb, ha)
            if he not in g.edge_set:
                violations.append(
                    f"component {ci}: template edge ({a},{b}) maps to "
                    f"non-edge {he}")
            else:
                covered.add(he)
    for e in g.edges:
        if e not in covered:
            violations.append(f"uncovered edge {e}")
    report = CoverReport(
        valid=not violations,
        violations=violations,
        size=cert.size,
        max_preimage=cert.max_preimage(),
        injective=injective,
        covered_edge_count=len(covered),
    )
    return report


def walks_to_certificate(g: Graph, walks: list[list[int]]) -> CoverCertificate:
    """Turn walks into path components; the preimage count of a host vertex
    equals its total number of appearances across walks."""
    comps = []
    for wi, walk in enumerate(walks):
        for a, b in zip(walk, walk[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"walk {wi}: ({a},{b}) is not an edge")
        m = len(walk)
        template = Graph(m, [(i, i + 1) for i in range(m - 1)])
        comps.append(CoverComponent(template, tuple(walk)))
    return CoverCertificate(g.n, tuple(comps))


def restrict_cover(cert: CoverCertificate,
                   removed_host_edges: set[tuple[int, int]]) -> CoverCertificate:
    """Restriction of the cover to the host minus the given edges.

    Template edges mapping into removed host edges are deleted; template
    vertices isolated by those deletions are dropped; components are split
    into their connected pieces.
    """
    removed = {(min(u, v), max(u, v)) for u, v in removed_host_edges}
    out: list[CoverComponent] = []
    for comp in cert.components:
        t, vmap = comp.template, comp.vmap
        kept_edges = []
        for a, b in t.edges:
            ha, hb = vmap[a], vmap[b]
            he = (min(ha, hb), max(ha, hb))
            if he not in removed:
                kept_edges.append((a, b))
        had_edge = [False] * t.n
        for a, b in t.edges:
            had_edge[a] = had_edge[b] = True
        has_edge_now = [False] * t.n
        for a, b in kept_edges:
            has_edge_now[a] = has_edge_now[b] = True
        # keep originally-isolated vertices, drop deletion-caused ones
        keep = [v for v in range(t.n) if has_edge_now[v] or not had_edge[v]]
        sub = Graph(len(keep),
                    [(keep.index(a), keep.index(b)) for a, b in kept_edges])
        sub_map = tuple(vmap[v] for v in keep)
        # split into connected pieces
        for piece in sub.components():
            pset = set(piece)
            pe = [(piece.index(a), piece.index(b))
                  for a, b in sub.edges if a in pset]
            pt = Graph(len(piece), pe)
            out.append(CoverComponent(pt, tuple(sub_map[v] for v in piece)))
    return CoverCertificate(cert.host_vertex_count, tuple(out))


# -- text format ---------------------------------------------------------

def cover_to_text(cert: CoverCertificate) -> str:
    lines = [f"host {cert.host_vertex_count}"]
    for comp in cert.components:
        lines.append("component")
        for tv, hv in enumerate(comp.vmap):
            lines.append(f"tv {tv} {hv}")
        for a, b in comp.template.edges:
            lines.append(f"te {a} {b}")
    return "\n".join(lines) + "\n"


def cover_from_text(text: str) -> CoverCertificate:
    host = None
    comps: list[CoverComponent] = []
    cur_map: dict[int, int] | None = None
    cur_edges: list[tuple[int, int]] | None = None

    def flush():
        if cur_map is None:
            return
        nt = max(cur_map, default=-1) + 1
        if sorted(cur_map) != list(range(nt)):
            raise ValueError("template vertices must be 0..k-1")
        t = Graph(nt, cur_edges or [])
        comps.append(CoverComponent(t, tuple(cur_map[i] for i in range(nt))))

    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "host" and len(parts) == 2:
            host = int(parts[1])
        elif parts[0] == "component":
            flush()
            cur_map, cur_edges = {}, []
        elif parts[0] == "tv" and len(parts) == 3 and cur_map is not None:
            cur_map[int(parts[1])] = int(parts[2])
        elif parts[0] == "te" and len(parts) == 3 and cur_edges is not None:
            cur_edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"bad certificate line {ln}: {raw!r}")
    flush()
    if host is None:
        raise ValueError("missing 'host' line")
    return CoverCertificate(host, tuple(comps))
