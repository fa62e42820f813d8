"""Exact construction and verification of the Hermite and Joubert covariants,
the Tschirnhaus transformations they induce, and normal forms of equations
of degree 3 to 6."""

from .domains import GF, QQ, ZZ, parse_field
from .polyring import MultiPoly, divide_exact, format_poly, parse_poly
from .unipoly import UniPoly

__version__ = "0.1.0"

__all__ = ["GF", "QQ", "ZZ", "parse_field", "MultiPoly", "divide_exact",
           "format_poly", "parse_poly", "UniPoly"]
