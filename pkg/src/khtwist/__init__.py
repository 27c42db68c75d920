"""Exact framed Khovanov homology of link diagrams, Kauffman bracket
reconstruction, Tait graphs, and twist-number verification."""

from .diagram import (
    Crossing,
    Diagram,
    Face,
    FaceSet,
    TwistClasses,
    faces,
    is_alternating,
    is_reduced,
    mirror,
    parse_corpus,
    parse_pd,
    smooth,
    twist_classes,
    writhe,
)
from .homology import (
    BracketPolynomial,
    GaussianInt,
    HomologyTable,
    bracket_from_homology,
    bracket_state_sum,
    coefficient,
    framing_normalized,
    homology_table,
)
from .states import ChainComplex, EnhancedState, build_complex, enumerate_enhanced, incidence, resolve_state
from .tait import Coloring, ReducedTaitGraph, TaitGraph, checkerboard, psi, reduce_graph, tait_graphs
from .adequacy import AdequacyReport, check_adequacy

__version__ = "0.1.0"

__all__ = [
    "AdequacyReport",
    "BracketPolynomial",
    "ChainComplex",
    "Coloring",
    "Crossing",
    "Diagram",
    "EnhancedState",
    "Face",
    "FaceSet",
    "GaussianInt",
    "HomologyTable",
    "ReducedTaitGraph",
    "TaitGraph",
    "TwistClasses",
    "bracket_from_homology",
    "bracket_state_sum",
    "build_complex",
    "check_adequacy",
    "checkerboard",
    "coefficient",
    "enumerate_enhanced",
    "faces",
    "framing_normalized",
    "homology_table",
    "incidence",
    "is_alternating",
    "is_reduced",
    "mirror",
    "parse_corpus",
    "parse_pd",
    "psi",
    "reduce_graph",
    "resolve_state",
    "smooth",
    "tait_graphs",
    "twist_classes",
    "writhe",
]
