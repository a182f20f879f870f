"""Exact Seidel-matrix tools for constructing and checking equiangular line systems."""

from .certificates import NBoundCert, RBoundCert, ShearerCert, load_certificate, verify
from .constructions import (
    certify,
    line_graph_complement_cert,
    n_from_r,
    shearer_construction,
    shearer_graph,
    shearer_threshold,
    spectral_radius,
    tau_threshold,
    theorem1_pipeline,
    union_cert,
)
from .exact import AlgebraicNumber, IntPoly, Ordering, as_algebraic, compare
from .graph import Graph, graph6_decode, graph6_encode, parse_graph
from .realize import LineSystem, graph_from_lines, realize_lines, verify_lines
from .search import RTableEntry, compute_R, enumerate_switching_classes, parity_audit, r_table
from .seidel import (
    parity_identity_check,
    seidel,
    seidel_charpoly,
    seidel_eigen_multiplicity,
    seidel_min_eigenvalue,
    seidel_spectrum,
    switch,
    switching_canonical,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber", "Graph", "IntPoly", "LineSystem", "NBoundCert", "Ordering", "RBoundCert",
    "RTableEntry", "ShearerCert", "as_algebraic", "certify", "compare", "compute_R",
    "enumerate_switching_classes", "graph6_decode", "graph6_encode", "graph_from_lines",
    "line_graph_complement_cert", "load_certificate", "n_from_r", "parity_audit",
    "parity_identity_check", "parse_graph", "r_table", "realize_lines", "seidel",
    "seidel_charpoly", "seidel_eigen_multiplicity", "seidel_min_eigenvalue", "seidel_spectrum",
    "shearer_construction", "shearer_graph", "shearer_threshold", "spectral_radius", "switch",
    "switching_canonical", "tau_threshold", "theorem1_pipeline", "union_cert", "verify",
    "verify_lines",
]
