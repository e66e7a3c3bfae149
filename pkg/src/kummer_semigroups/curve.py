"""Curve parameters, ramified places and divisors of monomials.

The curve is the Kummer cover ``y^m = f(x)^lambda`` with ``f`` a product of
``r`` distinct linear factors ``x - alpha_i``.  Only the counts matter for
everything computed here, so the roots themselves are never represented.

A monomial is ``z^e * prod_i (x - alpha_i)^c_i`` where ``z = y^A f^B`` with
``A*lambda + B*m = 1``.  Its divisor is supported on ``P_1..P_r`` and
``P_inf``:

    (z)             = P_1 + ... + P_r - r P_inf
    (x - alpha_i)   = m P_i - m P_inf
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidTuple, LengthMismatch, RejectedParams

PoleVector = tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


@dataclass(frozen=True)
class CurveParams:
    r: int
    m: int
    lam: int = 1
    characteristic: int | None = None

    @property
    def genus(self) -> int:
        return genus(self)

    def as_dict(self) -> dict:
        return {"r": self.r, "m": self.m, "lambda": self.lam,
                "characteristic": self.characteristic}


def validate_params(r: int, m: int, lam: int = 1,
                    characteristic: int | None = None) -> CurveParams:
    """Return :class:`CurveParams` or raise :class:`RejectedParams`.

    All violated conditions are reported together.
    """
    reasons = []
    if r <= 2:
        reasons.append("r-too-small")
    if m < 2:
        reasons.append("m-too-small")
    if lam < 1:
        reasons.append("lambda-too-small")
    detail = ""
    g = math.gcd(m, r * lam)
    if g != 1:
        reasons.append("non-coprime")
        detail = f"gcd(m, r*lambda) = {g}"
    if characteristic is not None:
        if not _is_prime(characteristic):
            reasons.append("characteristic-not-prime")
        elif m % characteristic == 0:
            reasons.append("characteristic-divides-m")
    if reasons:
        raise RejectedParams(reasons, detail)
    return CurveParams(r, m, lam, characteristic)


def is_admissible(r: int, m: int, lam: int = 1) -> bool:
    try:
        validate_params(r, m, lam)
    except RejectedParams:
        return False
    return True


def genus(params: CurveParams) -> int:
    return (params.r - 1) * (params.m - 1) // 2


@dataclass(frozen=True)
class ZExponents:
    a_exp: int
    b_exp: int


def z_exponents(params: CurveParams) -> ZExponents:
    """Solve ``A*lambda + B*m = 1`` with ``0 <= A < m``."""
    a = pow(params.lam, -1, params.m)
    b, rem = divmod(1 - a * params.lam, params.m)
    assert rem == 0
    return ZExponents(a, b)


@dataclass(frozen=True, order=True)
class Place:
    """A totally ramified place: ``index`` in ``1..r`` or ``None`` for P_inf."""

    index: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.index is None

    def __str__(self) -> str:
        return "inf" if self.index is None else f"P{self.index}"


INFINITY = Place(None)


@dataclass(frozen=True)
class PlaceTuple:
    """Ordered distinct ramified places; P_inf, if present, is coordinate 0."""

    includes_infinity: bool
    finite_indices: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.finite_indices)) != len(self.finite_indices):
            raise InvalidTuple("duplicate place in tuple")
        if any(i < 1 for i in self.finite_indices):
            raise InvalidTuple("finite place indices start at 1")
        if self.length == 0:
            raise InvalidTuple("empty place tuple")

    @classmethod
    def finite(cls, *indices: int) -> "PlaceTuple":
        return cls(False, tuple(indices))

    @classmethod
    def with_infinity(cls, *indices: int) -> "PlaceTuple":
        return cls(True, tuple(indices))

    @classmethod
    def initial(cls, l: int, infinity: bool = False) -> "PlaceTuple":
        """The tuple ``(P_inf?, P_1, ..., P_l)``."""
        return cls(infinity, tuple(range(1, l + 1)))

    @classmethod
    def parse(cls, text: str) -> "PlaceTuple":
        """Parse ``"inf,1,2"``; ``inf`` may only appear first."""
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        if not tokens:
            raise InvalidTuple("empty place tuple")
        inf = tokens[0].lower() == "inf"
        rest = tokens[1:] if inf else tokens
        indices = []
        for t in rest:
            if t.lower() == "inf":
                raise InvalidTuple("'inf' is only allowed as the first place")
            try:
                indices.append(int(t))
            except ValueError:
                raise InvalidTuple(f"bad place token {t!r}") from None
        return cls(inf, tuple(indices))

    @property
    def l(self) -> int:
        """Number of finite places."""
        return len(self.finite_indices)

    @property
    def length(self) -> int:
        return self.l + int(self.includes_infinity)

    @property
    def shape(self) -> tuple[int, bool]:
        return (self.l, self.includes_infinity)

    @property
    def places(self) -> tuple[Place, ...]:
        head = (INFINITY,) if self.includes_infinity else ()
        return head + tuple(Place(i) for i in self.finite_indices)

    def check(self, params: CurveParams) -> "PlaceTuple":
        if any(i > params.r for i in self.finite_indices):
            raise InvalidTuple(f"finite place index exceeds r = {params.r}")
        return self

    def sub(self, coords: Sequence[int]) -> "PlaceTuple":
        """The sub-tuple on the given (increasing) coordinate positions."""
        places = self.places
        chosen = [places[c] for c in coords]
        inf = bool(chosen) and chosen[0].is_infinity
        return PlaceTuple(inf, tuple(p.index for p in chosen if not p.is_infinity))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.places) + ")"

    def spec(self) -> str:
        return ",".join("inf" if p.is_infinity else str(p.index) for p in self.places)


@dataclass(frozen=True)
class DivisorSpec:
    """Integer combination of P_inf and P_1..P_r."""

    coeff_infinity: int
    coeff_finite: tuple[int, ...]

    @classmethod
    def zero(cls, r: int) -> "DivisorSpec":
        return cls(0, (0,) * r)

    @classmethod
    def from_pole_vector(cls, params: CurveParams, tup: PlaceTuple,
                         v: Sequence[int]) -> "DivisorSpec":
        """``sum v_i Q_i`` for the places ``Q_i`` of ``tup``."""
        if len(v) != tup.length:
            raise LengthMismatch(f"vector of length {len(v)} for a tuple of length {tup.length}")
        inf = 0
        fin = [0] * params.r
        for place, n in zip(tup.places, v):
            if place.is_infinity:
                inf = n
            else:
                fin[place.index - 1] = n
        return cls(inf, tuple(fin))

    @property
    def degree(self) -> int:
        return self.coeff_infinity + sum(self.coeff_finite)

    def coefficient(self, place: Place) -> int:
        if place.is_infinity:
            return self.coeff_infinity
        return self.coeff_finite[place.index - 1]

    def minus(self, place: Place, k: int = 1) -> "DivisorSpec":
        if place.is_infinity:
            return DivisorSpec(self.coeff_infinity - k, self.coeff_finite)
        fin = list(self.coeff_finite)
        fin[place.index - 1] -= k
        return DivisorSpec(self.coeff_infinity, tuple(fin))

    def pole_part(self, tup: PlaceTuple) -> PoleVector:
        """Pole orders at the places of ``tup`` (negated negative coefficients)."""
        return tuple(max(0, -self.coefficient(p)) for p in tup.places)

    def as_dict(self) -> dict:
        return {"inf": self.coeff_infinity, "finite": list(self.coeff_finite)}


@dataclass(frozen=True)
class Monomial:
    """``z^z_exp * prod_i (x - alpha_i)^linear_exps[i]``."""

    z_exp: int
    linear_exps: tuple[int, ...]

    @classmethod
    def one(cls, r: int) -> "Monomial":
        return cls(0, (0,) * r)

    def as_dict(self) -> dict:
        return {"z": self.z_exp, "linear": list(self.linear_exps)}

    def __str__(self) -> str:
        parts = []
        if self.z_exp:
            parts.append(f"z^{self.z_exp}")
        parts += [f"(x-a{i})^{e}" for i, e in enumerate(self.linear_exps, 1) if e]
        return "*".join(parts) or "1"


def monomial_divisor(params: CurveParams, mono: Monomial) -> DivisorSpec:
    if len(mono.linear_exps) != params.r:
        raise LengthMismatch(f"monomial has {len(mono.linear_exps)} linear factors, r = {params.r}")
    e, m = mono.z_exp, params.m
    fin = tuple(e + m * c for c in mono.linear_exps)
    inf = -(params.r * e + m * sum(mono.linear_exps))
    return DivisorSpec(inf, fin)


def lub(vectors: Iterable[Sequence[int]]) -> PoleVector:
    """Coordinatewise maximum of a nonempty collection of equal-length vectors."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ValueError("lub of an empty collection")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise LengthMismatch("vectors of different lengths")
    return tuple(max(col) for col in zip(*vectors))


def precedes(u: Sequence[int], v: Sequence[int]) -> bool:
    """The product order: ``u_i <= v_i`` for all ``i``."""
    return all(a <= b for a, b in zip(u, v))
