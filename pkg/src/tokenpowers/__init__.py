"""Reduced powers and token graphs of finite simple graphs, with exact
first-homology computations and verification suites."""

from .complexes import TwoComplex, build_UD, build_X, verify_skeleton_iso
from .exceptions import CheckFailure, GraphError, ResourceCapError
from .exchanges import (count_local_exchanges, enumerate_local_exchanges, rank_formula,
                        verify_star_conjecture)
from .graph import (Graph, box_product, chordless_4cycles, complete, cycle, generate,
                    klein_grid, parse_edgelist, path, read_edgelist, star, subdivide,
                    subdivide_for, triangles, wedge_cycles)
from .groups import Presentation, abelianize, presentation_from_complex, tietze_simplify
from .homology import AbelianGroupDesc, cubical_h1, h1_cellular, verify_hombasis
from .powers import PowerGraph, complement_iso, reduced_power, token_graph
from .snf import IntMatrix, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupDesc", "CheckFailure", "Graph", "GraphError", "IntMatrix", "PowerGraph",
    "Presentation", "ResourceCapError", "TwoComplex", "abelianize", "box_product",
    "build_UD", "build_X", "chordless_4cycles", "complement_iso", "complete",
    "count_local_exchanges", "cubical_h1", "cycle", "enumerate_local_exchanges", "generate",
    "h1_cellular", "klein_grid", "parse_edgelist", "path", "presentation_from_complex",
    "rank_formula", "read_edgelist", "reduced_power", "smith_normal_form", "star",
    "subdivide", "subdivide_for", "tietze_simplify", "token_graph", "triangles",
    "verify_hombasis", "verify_skeleton_iso", "verify_star_conjecture", "wedge_cycles",
]
