"""Exact covering-number toolkit: certificates, solvers, orientations, and
constructive covers for graph template classes."""

from .graphs import (
    Graph, generate, line_graph, blowup, euler_tours,
    graph_to_text, graph_from_text,
)
from .templates import (
    TemplateClass, CLASSES, CLASS_TAGS, class_properties, recognize,
)
from .covers import (
    CoverCertificate, CoverComponent, CoverReport,
    verify_cover, restrict_cover, walks_to_certificate,
    cover_to_text, cover_from_text,
)
from .orientations import (
    Orientation, DensityWitness, orient_bounded, pseudoarboricity,
    arboricity, degeneracy, local_star_arboricity,
)

__all__ = [
    "Graph", "generate", "line_graph", "blowup", "euler_tours",
    "graph_to_text", "graph_from_text",
    "TemplateClass", "CLASSES", "CLASS_TAGS", "class_properties", "recognize",
    "CoverCertificate", "CoverComponent", "CoverReport",
    "verify_cover", "restrict_cover", "walks_to_certificate",
    "cover_to_text", "cover_from_text",
    "Orientation", "DensityWitness", "orient_bounded", "pseudoarboricity",
    "arboricity", "degeneracy", "local_star_arboricity",
]
