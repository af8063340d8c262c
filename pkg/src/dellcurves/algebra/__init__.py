"""Exact arithmetic kernel: finite fields, polynomials, rational functions, Laurent series."""

from .field import (FieldSpec, FqElem, field_from_q, field_make, fq_distinguished_element,
                    fq_element_order, fq_is_square)
from .laurent import LaurentSeries, laurent_sqrt
from .poly import (NEG_INF, Poly, count_monic_irreducibles, first_irreducible,
                   iter_monic_irreducibles, monic_irreducibles, poly_basic, poly_is_irreducible,
                   poly_is_square, poly_sqrt)
from .ratfunc import RatFunc

__all__ = [
    "FieldSpec", "FqElem", "field_make", "field_from_q", "fq_is_square",
    "fq_distinguished_element", "fq_element_order", "LaurentSeries", "laurent_sqrt",
    "NEG_INF", "Poly", "poly_basic", "poly_is_irreducible", "monic_irreducibles",
    "iter_monic_irreducibles", "first_irreducible", "count_monic_irreducibles",
    "poly_is_square", "poly_sqrt", "RatFunc",
]
