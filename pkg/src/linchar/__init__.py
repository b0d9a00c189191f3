"""Exact characteristic quasi-polynomials of extended Linial arrangements
over irreducible root systems, with certified root-line localization."""

from .errors import (
    InexactDivision,
    LincharError,
    NonConvergence,
    NotAdmissible,
    QTooSmall,
    SymmetryViolation,
    UnsupportedRank,
)
from .ratpoly import (
    RatPoly,
    ShiftPoly,
    all_roots_real_nonpositive,
    apply_shift,
    reflect,
    routh_hurwitz_all_roots_left,
    sturm_real_root_count,
)
from .rootdata import (
    ALL_TABLE_IDS,
    EXCEPTIONAL_IDS,
    PositiveRootForms,
    RootSystemData,
    RootSystemId,
    lookup,
    positive_roots,
)
from .eulerian import asc_oracle, classical_eulerian, generalized_eulerian, truncate_half
from .ehrhart import (
    GcdPropertyReport,
    QuasiPoly,
    apply_shift_qp,
    check_reciprocity,
    ehrhart_qp,
    gcd_property,
    series_coeffs,
)
from .linial import (
    AdmissibleReport,
    LinialInstance,
    admissible_residues,
    averaged_half,
    char_poly,
    char_quasi,
    half_char_quasi,
    toy_poly,
    weyl_char_quasi,
)
from .verify import (
    ComplexRootSet,
    LineCheckReport,
    asymptotic_track,
    bruteforce_modq,
    check_on_line_exact,
    check_on_line_numeric,
    find_roots,
    halfplane_exact,
    halfplane_numeric_margin,
    limit_combination,
    limit_poly,
    max_real_part,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_TABLE_IDS",
    "AdmissibleReport",
    "ComplexRootSet",
    "EXCEPTIONAL_IDS",
    "GcdPropertyReport",
    "InexactDivision",
    "LinialInstance",
    "LincharError",
    "LineCheckReport",
    "NonConvergence",
    "NotAdmissible",
    "PositiveRootForms",
    "QTooSmall",
    "QuasiPoly",
    "RatPoly",
    "RootSystemData",
    "RootSystemId",
    "ShiftPoly",
    "SymmetryViolation",
    "UnsupportedRank",
    "admissible_residues",
    "all_roots_real_nonpositive",
    "apply_shift",
    "apply_shift_qp",
    "asc_oracle",
    "asymptotic_track",
    "averaged_half",
    "bruteforce_modq",
    "char_poly",
    "char_quasi",
    "check_on_line_exact",
    "check_on_line_numeric",
    "check_reciprocity",
    "classical_eulerian",
    "ehrhart_qp",
    "find_roots",
    "gcd_property",
    "generalized_eulerian",
    "half_char_quasi",
    "halfplane_exact",
    "halfplane_numeric_margin",
    "limit_combination",
    "limit_poly",
    "lookup",
    "max_real_part",
    "positive_roots",
    "reflect",
    "routh_hurwitz_all_roots_left",
    "series_coeffs",
    "sturm_real_root_count",
    "toy_poly",
    "truncate_half",
    "weyl_char_quasi",
]
