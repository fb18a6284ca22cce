"""Lefschetz complexes, their exact homology, and the comparison with the
singular homology of the associated finite space.

Rings are given as strings: "Z", "Q", "Zp 5" (or "Z5"). Homology profiles
are lists with one (rank, [torsion coefficients]) pair per degree.
"""

from ._core import (
    Complex,
    LefschetzError,
    NonFieldRing,
    NotClosed,
    NotLocallyClosed,
    ParseError,
    TooManyClosedSets,
    TooManySimplices,
    UnsupportedRing,
    ValidationError,
    basis_change,
    check_corollary,
    check_main_theorem,
    excision_check,
    format_homology,
    homology,
    is_augmentable,
    long_exact_sequence,
    relative_homology,
    relative_singular_homology,
    search_converse,
    singular_homology,
    smith_normal_form,
)

__all__ = [name for name in dir() if not name.startswith("_")]
