"""Injective interval covers of partial simple k-trees, built along the
construction sequence with at most width-many preimages per vertex.

Every template vertex is an explicit closed interval with rational
endpoints, so each component is an interval graph by construction (the
recognizer re-checks the result anyway).  The per-vertex budget works out
because a vertex stacked onto a clique with all k edges kept covers two of
them with a single new interval, attached to structure reserved earlier:

* station: one long interval per host vertex; covering a kept edge to an
  old vertex usually starts a fresh chain inside its station.
* chain append: a chain's last interval can take one more neighbor, so a
  new interval touching the chain's station and its end covers two edges.
* spare singletons and station carve slots: a new station can be laid
  overlapping a spare copy or the free end of an old station, covering one
  edge while also serving as the new vertex's station.
* overlap corridors: where a station was carved over another object, small
  intervals inside the overlap touch both, again covering two edges; any
  two stations sharing a component are a carve pair, and a vertex adjacent
  to both owners must use this move so that the component never sees two
  of its copies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from ..graphs import Graph
from ..covers import CoverCertificate, CoverComponent
from .sequences import ConstructionSequence, validate_sequence, lift_to_simple


class SlugConstructionError(RuntimeError):
    """No budget-respecting attachment exists; indicates a gap in the
    construction's invariants rather than bad input."""


class _Region:
    """Disjoint open slices of (lo, hi), allocated on demand."""

    def __init__(self, lo: Fraction, hi: Fraction):
        self.lo, self.hi = Fraction(lo), Fraction(hi)
        self.t = 0

    def next_slice(self) -> tuple[Fraction, Fraction]:
        c = self.hi - self.lo
        band_lo = self.hi - c / (2 ** self.t)
        band_hi = self.hi - c / (2 ** (self.t + 1))
        self.t += 1
        w = band_hi - band_lo
        return band_lo + w / 4, band_hi - w / 4


class _Corridor:
    """Chain positions inside (a, b): element t overlaps exactly элement
    t-1 and t+1."""

    def __init__(self, a: Fraction, b: Fraction):
        self.a, self.b = Fraction(a), Fraction(b)

    def _m(self, t: int) -> Fraction:
        return self.b - (self.b - self.a) / (2 ** t)

    def element(self, t: int) -> tuple[Fraction, Fraction]:
        lo = (self._m(t) + self._m(t + 1)) / 2
        hi = self._m(t + 2)
        return lo, hi


@dataclass
class _Chain:
    corridor: _Corridor
    owners: tuple[int, ...]      # station/object copy ids touched by members
    slug: int
    elements: list[int] = field(default_factory=list)
    kind: str = "internal"       # internal | overlap


@dataclass
class _ObjectInfo:
    """A station or singleton copy: base position and carve bookkeeping."""
    base: Fraction
    is_station: bool
    carve_free: bool = True
    internal: Optional[_Region] = None
    overlap_with_carver: Optional[_Region] = None


_STATION_LEN = 16


class _SlugState:
    def __init__(self, width: int):
        self.k = width
        self.zones = 0
        self.intervals: list[tuple[Fraction, Fraction]] = []
        self.image: list[int] = []
        self.slug_of: list[int] = []
        self.slugs = 0
        self.stations_in_slug: dict[int, int] = {}
        self.station_of: dict[int, int] = {}       # host vertex -> copy id
        self.count: dict[int, int] = {}            # host vertex -> copies
        self.objects: dict[int, _ObjectInfo] = {}  # copy id -> geometry
        self.chains: list[_Chain] = []
        self.chains_by_station: dict[int, list[_Chain]] = {}
        self.overlaps: dict[int, list[tuple[int, int, _Region]]] = {}
        self.spares_by_image: dict[int, list[int]] = {}

    # -- primitive copies -------------------------------------------------

    def _new_copy(self, lo: Fraction, hi: Fraction, img: int, slug: int) -> int:
        cid = len(self.intervals)
        self.intervals.append((lo, hi))
        self.image.append(img)
        self.slug_of.append(slug)
        self.count[img] = self.count.get(img, 0) + 1
        return cid

    def _new_zone_base(self) -> Fraction:
        base = Fraction(100 * self.zones)
        self.zones += 1
        return base

    def _new_slug(self) -> int:
        s = self.slugs
        self.slugs += 1
        self.stations_in_slug[s] = 0
        return s

    def _place_object(self, base: Fraction, img: int, slug: int,
                      is_station: bool) -> int:
        cid = self._new_copy(base, base + _STATION_LEN, img, slug)
        info = _ObjectInfo(base, is_station)
        if is_station:
            info.internal = _Region(base + 4, base + 8)
            self.stations_in_slug[slug] += 1
        self.objects[cid] = info
        return cid

    def new_standalone_station(self, v: int) -> int:
        slug = self._new_slug()
        cid = self._place_object(self._new_zone_base(), v, slug, True)
        self.station_of[v] = cid
        return cid

    def new_spare_singleton(self, v: int) -> int:
        slug = self._new_slug()
        cid = self._place_object(self._new_zone_base(), v, slug, False)
        self.spares_by_image.setdefault(v, []).append(cid)
        return cid

    def carve_station(self, onto: int, w: int) -> int:
        """New station for w overlapping the object `onto`, covering the
        edge {w, image(onto)}; consumes onto's carve slot."""
        info = self.objects[onto]
        assert info.carve_free
        slug = self.slug_of[onto]
        assert self.stations_in_slug[slug] < 2
        info.carve_free = False
        base = info.base + 12
        cid = self._place_object(base, w, slug, True)
        # a second carve in this component would make a third station
        if self.stations_in_slug[slug] >= 2:
            self.objects[cid].carve_free = False
        region = _Region(info.base + 13, info.base + 15)
        self.objects[onto].overlap_with_carver = region
        self.overlaps.setdefault(slug, []).append((onto, cid, region))
        self.station_of[w] = cid
        return cid

    # -- covering moves ---------------------------------------------------

    def new_leaf_chain(self, station: int, w: int) -> int:
        """Fresh chain at a station: covers {w, image(station)}."""
        info = self.objects[station]
        a, b = info.internal.next_slice()
        chain = _Chain(_Corridor(a, b), (station,), self.slug_of[station])
        lo, hi = chain.corridor.element(0)
        cid = self._new_copy(lo, hi, w, chain.slug)
        chain.elements.append(cid)
        self.chains.append(chain)
        self.chains_by_station.setdefault(station, []).append(chain)
        return cid

    def append_chain(self, chain: _Chain, w: int) -> int:
        """Extend a chain: covers {w, image(end)} plus {w, image(owner)}
        for each owner station."""
        t = len(chain.elements)
        lo, hi = chain.corridor.element(t)
        cid = self._new_copy(lo, hi, w, chain.slug)
        chain.elements.append(cid)
        return cid

    def new_overlap_element(self, slug: int, o1: int, o2: int,
                            region: _Region, w: int) -> int:
        """Interval inside the overlap of a carve pair: covers the edges to
        both owners' images with one copy."""
        a, b = region.next_slice()
        chain = _Chain(_Corridor(a, b), (o1, o2), slug, kind="overlap")
        lo, hi = chain.corridor.element(0)
        cid = self._new_copy(lo, hi, w, slug)
        chain.elements.append(cid)
        self.chains.append(chain)
        return cid

    # -- stacking ----------------------------------------------------------

    def stack_vertex(self, w: int, kept: list[int]):
        """Place all copies of w, covering every edge {w, u} for u in kept."""
        kept = sorted(kept)
        by_slug: dict[int, list[int]] = {}
        for u in kept:
            su = self.slug_of[self.station_of[u]]
            by_slug.setdefault(su, []).append(u)
        pairs = {s: grp for s, grp in by_slug.items() if len(grp) == 2}
        singles = [grp[0] for s, grp in by_slug.items() if len(grp) == 1]
        if any(len(grp) > 2 for grp in by_slug.values()):
            raise SlugConstructionError("three member stations in one slug")

        station_done = False
        covered: set[int] = set()

        for s, (u1, u2) in sorted(pairs.items()):
            st1, st2 = self.station_of[u1], self.station_of[u2]
            entry = self._find_overlap(s, st1, st2)
            if entry is None:
                raise SlugConstructionError(
                    f"no overlap corridor for carve pair {u1},{u2}")
            o1, o2, region = entry
            self.new_overlap_element(s, o1, o2, region, w)
            covered.update((u1, u2))

        need_double = (len(kept) == self.k) and not pairs
        if need_double:
            covered_by_double = self._double_duty(w, singles)
            covered.update(covered_by_double)
            station_done = self.station_of.get(w) is not None

        for z in singles:
            if z in covered:
                continue
            self.new_leaf_chain(self.station_of[z], w)
            covered.add(z)

        if not station_done:
            self.new_standalone_station(w)
        if self.count.get(w, 0) > self.k:
            raise SlugConstructionError(
                f"budget exceeded at vertex {w}: {self.count[w]} > {self.k}")

    def _find_overlap(self, slug: int, st1: int, st2: int):
        for o1, o2, region in self.overlaps.get(slug, ()):
            if {o1, o2} == {st1, st2}:
                return o1, o2, region
        return None

    def _double_duty(self, w: int, singles: list[int]) -> set[int]:
        """Cover two kept edges (or one edge plus w's station) with one
        attachment; returns the covered members."""
        sset = set(singles)
        # (a) append to a chain whose end maps into the clique
        for u in singles:
            st = self.station_of[u]
            for chain in self.chains_by_station.get(st, ()):
                if chain.kind != "internal":
                    continue
                end = chain.elements[-1]
                z = self.image[end]
                if z in sset and z != u:
                    self.append_chain(chain, w)
                    return {u, z}
        # (b) consume a spare singleton copy of a member
        for u in singles:
            spares = self.spares_by_image.get(u, [])
            while spares:
                sp = spares.pop()
                if self.objects[sp].carve_free:
                    self.carve_station(sp, w)
                    return {u}
        # (c) carve onto a member's station end
        for u in singles:
            st = self.station_of[u]
            info = self.objects[st]
            if info.carve_free and self.stations_in_slug[self.slug_of[st]] < 2:
                self.carve_station(st, w)
                return {u}
        # (d) lazy spare: a member with unused budget donates a copy
        for u in singles:
            if self.count.get(u, 0) < self.k:
                sp = self.new_spare_singleton(u)
                self.spares_by_image[u].remove(sp)
                self.carve_station(sp, w)
                return {u}
        raise SlugConstructionError(
            f"no double-duty attachment available at vertex {w}")

    # -- extraction ---------------------------------------------------------

    def build_certificate(self, host_n: int) -> CoverCertificate:
        by_slug: dict[int, list[int]] = {}
        for cid in range(len(self.intervals)):
            by_slug.setdefault(self.slug_of[cid], []).append(cid)
        comps = []
        for s in sorted(by_slug):
            cids = sorted(by_slug[s])
            images = [self.image[c] for c in cids]
            idx = {c: i for i, c in enumerate(cids)}
            edges = []
            for a, b in combinations(cids, 2):
                la, ha = self.intervals[a]
                lb, hb = self.intervals[b]
                if max(la, lb) <= min(ha, hb):
                    edges.append((idx[a], idx[b]))
            # split the slug into its actual connected pieces
            tgraph = Graph(len(cids), edges)
            for piece in tgraph.components():
                pset = set(piece)
                pe = [(piece.index(a), piece.index(b))
                      for a, b in tgraph.edges if a in pset]
                pimages = [images[x] for x in piece]
                if any(img >= host_n for img in pimages):
                    if pe:
                        raise SlugConstructionError(
                            "auxiliary vertex acquired edges")
                    continue
                if len(set(pimages)) != len(pimages):
                    raise SlugConstructionError(
                        "component maps two copies to one host vertex")
                comps.append(CoverComponent(Graph(len(piece), pe),
                                            tuple(pimages)))
        return CoverCertificate(host_n, tuple(comps))


def slug_cover(g: Graph, seq: ConstructionSequence) -> CoverCertificate:
    """Injective interval cover of the partial simple k-tree realized by
    seq, with at most max(3, seq.width) preimages per vertex."""
    violations, kept, _ = validate_sequence(seq, require_simple=True)
    if violations:
        raise ValueError("invalid sequence: " + "; ".join(violations))
    if kept.n != g.n or kept.edges != g.edges:
        raise ValueError("sequence does not realize the given graph")
    while seq.width < 3:
        seq = lift_to_simple(seq)
        violations, _, _ = validate_sequence(seq, require_simple=True)
        if violations:
            raise ValueError("lifted sequence invalid: " + "; ".join(violations))

    state = _SlugState(seq.width)
    kept_init = {}
    for (a, b), kp in zip(seq.initial_pairs(), seq.initial_keep):
        kept_init[(a, b)] = kp
    placed: list[int] = []
    for v in seq.initial:
        neigh = [u for u in placed
                 if kept_init.get((min(u, v), max(u, v)), False)]
        state.stack_vertex(v, neigh)
        placed.append(v)
    for step in seq.steps:
        neigh = [u for u, kp in zip(step.base, step.keep) if kp]
        state.stack_vertex(step.vertex, neigh)
    return state.build_certificate(g.n)
