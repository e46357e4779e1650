"""Exact algebra for Z-genus computations of knots and boundary links."""

from .errors import ZGenusError
from .laurent import LaurentPoly, is_associate, normalize_assoc, poly_gcd
from .matrix import LambdaMatrix, det, rank_over_fractions, signature
from .rational import RationalFunction, ResidueClass, residue
from .seifert import (
    BoundarySeifertSystem,
    KnotSeifert,
    internal_band_sum,
    parallel_link,
    split_system,
    validate_boundary_system,
    validate_knot_seifert,
    whitehead_double_2,
    whitehead_double_3,
)
from .alexander import alexander_polynomial, is_torsion_free, presentation, torsion_decomposition
from .blanchfield import conway_pair, pair, verify_certificate
from .genus import (
    SearchBudget,
    algebraic_genus,
    find_hermitian_presentation,
    shake_genus,
    z_genus_knot,
    z_genus_link,
)

__version__ = "0.1.0"

__all__ = [
    "ZGenusError",
    "LaurentPoly",
    "is_associate",
    "normalize_assoc",
    "poly_gcd",
    "LambdaMatrix",
    "det",
    "rank_over_fractions",
    "signature",
    "RationalFunction",
    "ResidueClass",
    "residue",
    "BoundarySeifertSystem",
    "KnotSeifert",
    "internal_band_sum",
    "parallel_link",
    "split_system",
    "validate_boundary_system",
    "validate_knot_seifert",
    "whitehead_double_2",
    "whitehead_double_3",
    "alexander_polynomial",
    "is_torsion_free",
    "presentation",
    "torsion_decomposition",
    "conway_pair",
    "pair",
    "verify_certificate",
    "SearchBudget",
    "algebraic_genus",
    "find_hermitian_presentation",
    "shake_genus",
    "z_genus_knot",
    "z_genus_link",
]
