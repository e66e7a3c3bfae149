"""Weierstrass semigroups at totally ramified places of Kummer extensions.

Exact computations for curves ``y^m = f(x)^lambda`` with ``deg f = r``:
one-point gap sets, closed-form minimal generating sets for any tuple of
ramified places, the full semigroup rebuilt by lub closure, and an
independent Riemann-Roch oracle to check all of them.
"""

__version__ = "0.1.0"

from .curve import (INFINITY, CurveParams, DivisorSpec, Monomial, Place, PlaceTuple,
                    ZExponents, genus, monomial_divisor, validate_params, z_exponents)
from .errors import (InvalidTuple, InvalidTupleLength, KummerError, LengthMismatch,
                     NotAGammaElement, NotAMember, RejectedParams, UnsupportedSupport)
from .gamma import GammaSet, gamma, gamma_finite, gamma_tilde, gamma_with_infinity
from .onepoint import GapList, gaps_at_finite, gaps_at_infinity, is_gap
from .closure import contains, is_minimal_in_fiber, lub, semigroup_box
from .oracle import (gamma_oracle, gaps_oracle, member_oracle, pure_gap_oracle,
                     pure_gaps_box, rr_dimension)
from .witness import witness_function

__all__ = [
    "INFINITY", "CurveParams", "DivisorSpec", "Monomial", "Place", "PlaceTuple",
    "ZExponents", "genus", "monomial_divisor", "validate_params", "z_exponents",
    "InvalidTuple", "InvalidTupleLength", "KummerError", "LengthMismatch",
    "NotAGammaElement", "NotAMember", "RejectedParams", "UnsupportedSupport",
    "GammaSet", "gamma", "gamma_finite", "gamma_tilde", "gamma_with_infinity",
    "GapList", "gaps_at_finite", "gaps_at_infinity", "is_gap",
    "contains", "is_minimal_in_fiber", "lub", "semigroup_box",
    "gamma_oracle", "gaps_oracle", "member_oracle", "pure_gap_oracle",
    "pure_gaps_box", "rr_dimension", "witness_function",
]
