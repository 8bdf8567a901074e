"""Token graphs, their Laplacian spectra, and mechanical verification of
spectral inclusion and eigenvalue lower bounds at desk scale."""

from .graphs import (
    Graph,
    cartesian_product,
    delete_vertices,
    family,
    is_connected,
    make_graph,
    max_degree,
    min_degree,
)
from .kernels import BACKEND
from .lift import BinomialMatrix, classify_eigenvalues, project, restrict, spectral_inclusion_check
from .spectra import algebraic_connectivity, eigen_sym, graph_spectrum, laplacian, rayleigh_quotient
from .subsets import KSubsetIndex
from .tokens import TokenGraph, token_degree, token_graph, token_subset_vertices

__version__ = "0.1.0"
__all__ = [
    "BACKEND",
    "BinomialMatrix",
    "Graph",
    "KSubsetIndex",
    "TokenGraph",
    "algebraic_connectivity",
    "cartesian_product",
    "classify_eigenvalues",
    "delete_vertices",
    "eigen_sym",
    "family",
    "graph_spectrum",
    "is_connected",
    "laplacian",
    "make_graph",
    "max_degree",
    "min_degree",
    "project",
    "rayleigh_quotient",
    "restrict",
    "spectral_inclusion_check",
    "token_degree",
    "token_graph",
    "token_subset_vertices",
]
