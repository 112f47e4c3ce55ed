"""Star forests from a segment-contact representation.

A contact representation assigns every vertex an axis (horizontal or
vertical segment) and realizes every edge by a named endpoint (up, down,
left, right) of one of its vertices (the owner) touching the other
segment's interior.  Classifying edges by that endpoint name partitions
them into at most four star forests: within one class an owner appears at
most once, and axis parity stops a vertex from being both an owner and a
center.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graphs import Graph
from ..covers import CoverCertificate, CoverComponent

LABELS = ("up", "down", "left", "right")
_AXIS_OF_LABEL = {"up": "v", "down": "v", "left": "h", "right": "h"}


@dataclass(frozen=True)
class Contact:
    owner: int
    label: str
    other: int


@dataclass(frozen=True)
class ContactRepresentation:
    axes: tuple[str, ...]             # per vertex: "h" | "v"
    contacts: tuple[Contact, ...]     # one per host edge


def validate_representation(g: Graph, rep: ContactRepresentation) -> list[str]:
    errs: list[str] = []
    if len(rep.axes) != g.n:
        return [f"axes cover {len(rep.axes)} vertices, host has {g.n}"]
    for a in rep.axes:
        if a not in ("h", "v"):
            errs.append(f"bad axis {a!r}")
    seen_ends: set[tuple[int, str]] = set()
    seen_edges: set[tuple[int, int]] = set()
    for c in rep.contacts:
        if c.label not in LABELS:
            errs.append(f"bad endpoint label {c.label!r}")
            continue
        e = (min(c.owner, c.other), max(c.owner, c.other))
        if e not in g.edge_set:
            errs.append(f"contact for non-edge {e}")
            continue
        if e in seen_edges:
            errs.append(f"edge {e} realized twice")
        seen_edges.add(e)
        if (c.owner, c.label) in seen_ends:
            errs.append(f"endpoint ({c.owner},{c.label}) used twice")
        seen_ends.add((c.owner, c.label))
        if rep.axes[c.owner] != _AXIS_OF_LABEL[c.label]:
            errs.append(
                f"owner {c.owner} axis {rep.axes[c.owner]} inconsistent "
                f"with label {c.label}")
        if rep.axes[c.owner] == rep.axes[c.other]:
            errs.append(f"edge {e} joins two {rep.axes[c.owner]} segments")
    for e in g.edges:
        if e not in seen_edges:
            errs.append(f"edge {e} has no contact")
    return errs


def contact_star_forests(g: Graph, rep: ContactRepresentation
                         ) -> CoverCertificate:
    """Partition the edges into <= 4 star forests by endpoint label; the
    centers are the non-owner endpoints."""
    errs = validate_representation(g, rep)
    if errs:
        raise ValueError("invalid representation: " + "; ".join(errs))
    comps = []
    for label in LABELS:
        by_center: dict[int, list[int]] = {}
        for c in rep.contacts:
            if c.label == label:
                by_center.setdefault(c.other, []).append(c.owner)
        if not by_center:
            continue
        verts: list[int] = []
        edges: list[tuple[int, int]] = []
        for center in sorted(by_center):
            ci = len(verts)
            verts.append(center)
            for leaf in sorted(by_center[center]):
                li = len(verts)
                verts.append(leaf)
                edges.append((ci, li))
        comps.append(CoverComponent(Graph(len(verts), edges), tuple(verts)))
    return CoverCertificate(g.n, tuple(comps))


# -- text format ---------------------------------------------------------

def representation_to_text(rep: ContactRepresentation) -> str:
    lines = [f"seg {v} {a}" for v, a in enumerate(rep.axes)]
    lines += [f"touch {c.owner} {c.label} {c.other}" for c in rep.contacts]
    return "\n".join(lines) + "\n"


def representation_from_text(text: str) -> ContactRepresentation:
    axes: dict[int, str] = {}
    contacts = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "seg" and len(parts) == 3:
            axes[int(parts[1])] = parts[2]
        elif parts[0] == "touch" and len(parts) == 4:
            contacts.append(Contact(int(parts[1]), parts[2], int(parts[3])))
        else:
            raise ValueError(f"bad representation line {ln}: {raw!r}")
    n = max(axes, default=-1) + 1
    if sorted(axes) != list(range(n)):
        raise ValueError("segment axes must cover vertices 0..n-1")
    return ContactRepresentation(tuple(axes[v] for v in range(n)),
                                 tuple(contacts))
