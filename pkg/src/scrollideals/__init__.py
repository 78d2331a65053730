"""Binomial edge ideals of closed graphs on the 2 x n Hankel matrix over GF(p)."""

from .artinian import (
    ArtinianQuotient,
    GradedQuotient,
    artinian_quotient,
    is_gorenstein_criterion,
    is_gorenstein_socle,
    quotient_basis,
    socle,
    socle_dimension,
)
from .betti import (
    BettiTable,
    extremal_betti_table,
    gorenstein_by_betti,
    graph_betti,
    koszul_betti,
)
from .graphs import (
    ClosedGraph,
    EdgeList,
    ValidationError,
    enumerate_all,
    enumerate_connected,
    graph_from_json,
)
from .groebner import GroebnerBasis, buchberger, normal_form
from .hilbert import HVector, h_vector, has_max_regularity, regularity, witness_monomial
from .ideals import IdealPresentation, artinian_reduce, build_ideal, predicted_initial
from .linalg import BACKEND
from .polyfield import DEFAULT_PRIME, DimensionError, Monomial, Polynomial, parse_polynomial
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "ArtinianQuotient", "BACKEND", "BettiTable", "ClosedGraph", "DEFAULT_PRIME",
    "DimensionError", "EdgeList", "GradedQuotient", "GroebnerBasis", "HVector",
    "IdealPresentation", "Monomial", "Polynomial", "ValidationError",
    "VerificationReport", "artinian_quotient", "artinian_reduce", "buchberger",
    "build_ideal", "enumerate_all", "enumerate_connected", "extremal_betti_table",
    "gorenstein_by_betti", "graph_betti", "graph_from_json", "h_vector",
    "has_max_regularity", "is_gorenstein_criterion", "is_gorenstein_socle",
    "koszul_betti", "normal_form", "parse_polynomial", "predicted_initial",
    "quotient_basis", "regularity", "run_suite", "socle", "socle_dimension",
    "witness_monomial",
]
