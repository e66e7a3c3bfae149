"""Explicit monomials whose pole divisor is a prescribed generating-set element.

For an element ``(m k_1 + j, ..., m k_l + j)`` on finite places
``(Q_1, ..., Q_l)`` (optionally preceded by P_inf with ``m k_0 - r j``) the
function is::

    z^-(m k_1 + j) * prod_{s>=2} (x - a_{Q_s})^(k_1 - k_s)
                   * prod_{Q not in tuple} (x - a_Q)^(k_1 + 1)

Single places are handled separately: ``(x - a_1)^a z^b`` realizes
``a m + b r`` at P_inf, and ``z^-n prod_{i != Q} (x - a_i)^ceil(n/m)``
realizes any nongap ``n`` at a finite place ``Q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curve import (INFINITY, CurveParams, DivisorSpec, Monomial, Place,
                    PlaceTuple, PoleVector, monomial_divisor)
from .errors import LengthMismatch, NotAGammaElement
from .gamma import _ceil_div


@dataclass(frozen=True)
class Decomposition:
    j: int
    ks: tuple[int, ...]  # (k_0, k_1, ..., k_l) with P_inf, else (k_1, ..., k_l)


def decompose(params: CurveParams, tup: PlaceTuple, v: Sequence[int]) -> Decomposition:
    """Recover ``j`` and the ``k`` vector of a generating-set element."""
    r, m = params.r, params.m
    v = tuple(v)
    if len(v) != tup.length:
        raise LengthMismatch(f"vector of length {len(v)} for a tuple of length {tup.length}")
    if tup.l == 0 or (tup.length == 1):
        raise NotAGammaElement("single places have no parametric form")
    fin = v[1:] if tup.includes_infinity else v
    j = fin[0] % m
    if not 1 <= j <= m - 1 - m // r:
        raise NotAGammaElement(f"{v} is not a generating-set element")
    if any(c % m != j or c < j for c in fin):
        raise NotAGammaElement(f"{v} is not a generating-set element")
    ks = tuple((c - j) // m for c in fin)
    if tup.includes_infinity:
        k0, rem = divmod(v[0] + r * j, m)
        if rem or k0 < _ceil_div(r * j, m) or k0 + sum(ks) != r - tup.l:
            raise NotAGammaElement(f"{v} is not a generating-set element")
        return Decomposition(j, (k0,) + ks)
    if sum(ks) != r - tup.l - (r * j) // m:
        raise NotAGammaElement(f"{v} is not a generating-set element")
    return Decomposition(j, ks)


def _single_place_witness(params: CurveParams, tup: PlaceTuple, n: int) -> Monomial:
    r, m = params.r, params.m
    lin = [0] * r
    if tup.includes_infinity:
        for b in range(m):
            a, rem = divmod(n - b * r, m)
            if a < 0:
                break
            if rem == 0:
                lin[0] = a
                return Monomial(b, tuple(lin))
        raise NotAGammaElement(f"{n} is a gap at P_inf")
    q = tup.finite_indices[0]
    if n < 0 or (n % m and n < (r - 1) * (m - n % m)):
        raise NotAGammaElement(f"{n} is a gap at P{q}")
    c = _ceil_div(n, m)
    for i in range(1, r + 1):
        if i != q:
            lin[i - 1] = c
    return Monomial(-n, tuple(lin))


def witness_function(params: CurveParams, tup: PlaceTuple, gamma_elem: Sequence[int]) -> Monomial:
    tup.check(params)
    gamma_elem = tuple(gamma_elem)
    if tup.length == 1:
        if len(gamma_elem) != 1:
            raise LengthMismatch("expected a one-coordinate vector")
        return _single_place_witness(params, tup, gamma_elem[0])
    dec = decompose(params, tup, gamma_elem)
    ks = dec.ks[1:] if tup.includes_infinity else dec.ks
    k1 = ks[0]
    lin = [k1 + 1] * params.r
    for idx, k in zip(tup.finite_indices, ks):
        lin[idx - 1] = k1 - k
    return Monomial(-(params.m * k1 + dec.j), tuple(lin))


def witness_divisor(params: CurveParams, tup: PlaceTuple, gamma_elem: Sequence[int]) -> DivisorSpec:
    return monomial_divisor(params, witness_function(params, tup, gamma_elem))


def realizes(params: CurveParams, tup: PlaceTuple, v: Sequence[int], mono: Monomial) -> bool:
    """True iff ``mono`` has pole divisor exactly ``sum v_i Q_i``."""
    div = monomial_divisor(params, mono)
    target = DivisorSpec.from_pole_vector(params, tup, v)
    in_tuple = set(tup.places)
    for place in _all_places(params):
        c = div.coefficient(place)
        if place in in_tuple:
            want = target.coefficient(place)
            if want > 0 and c != -want:
                return False
            if want == 0 and c < 0:
                return False
        elif c < 0:
            return False
    return True


def _all_places(params: CurveParams):
    yield INFINITY
    for i in range(1, params.r + 1):
        yield Place(i)


def pole_vector(params: CurveParams, tup: PlaceTuple, mono: Monomial) -> PoleVector:
    return monomial_divisor(params, mono).pole_part(tup)
