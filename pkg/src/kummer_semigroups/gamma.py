"""Closed-form minimal generating sets of multi-point Weierstrass semigroups.

For ``l`` finite places ``(P_1, ..., P_l)``, ``2 <= l <= r - r//m``::

    Gamma = {(m k_1 + j, ..., m k_l + j) :
             1 <= j <= m - 1 - m//r,  k_i >= 0,  sum k_i = r - l - (r j)//m}

and with the place at infinity in front, ``1 <= l <= r - ceil(r/m)``::

    Gamma = {(m k_0 - r j, m k_1 + j, ..., m k_l + j) :
             1 <= j <= m - 1 - m//r,  k_i >= 0,  k_0 >= ceil(r j/m),
             k_0 + ... + k_l = r - l}

Beyond those lengths the sets are empty.  Both families only depend on
``l`` and on whether P_inf is present: ``y^m = f(x)^lambda`` is symmetric in
the roots of ``f``, so any choice of ``l`` finite places gives the same set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .compositions import weak_compositions
from .curve import CurveParams, PlaceTuple, PoleVector
from .errors import InvalidTupleLength
from .onepoint import OnePointSemigroup, semigroup_at


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class GammaSet:
    params: CurveParams
    l: int
    includes_infinity: bool
    elements: tuple[PoleVector, ...]

    @property
    def tuple_shape(self) -> tuple[int, bool]:
        return (self.l, self.includes_infinity)

    def __iter__(self) -> Iterator[PoleVector]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, v) -> bool:
        return tuple(v) in set(self.elements)


def j_range(params: CurveParams) -> range:
    return range(1, params.m - params.m // params.r)


def finite_threshold(params: CurveParams) -> int:
    """Largest ``l`` with a nonempty Gamma(P_1..P_l)."""
    return params.r - params.r // params.m


def infinity_threshold(params: CurveParams) -> int:
    """Largest ``l`` with a nonempty Gamma(P_inf, P_1..P_l)."""
    return params.r - _ceil_div(params.r, params.m)


def iter_finite(params: CurveParams, l: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(j, (k_1..k_l))`` in generation order (j ascending, k colex)."""
    r, m = params.r, params.m
    for j in j_range(params):
        yield from ((j, ks) for ks in weak_compositions(r - l - (r * j) // m, l))


def iter_with_infinity(params: CurveParams, l: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(j, (k_0..k_l))``; the ``k_0 >= ceil(rj/m)`` offset is folded
    into the composition budget."""
    r, m = params.r, params.m
    for j in j_range(params):
        low = _ceil_div(r * j, m)
        for ks in weak_compositions(r - l - low, l + 1):
            yield j, (ks[0] + low,) + ks[1:]


def gamma_finite(params: CurveParams, l: int) -> GammaSet:
    if not 2 <= l <= params.r:
        raise InvalidTupleLength(f"finite tuple length must lie in [2, {params.r}], got {l}")
    m = params.m
    elems = {tuple(m * k + j for k in ks) for j, ks in iter_finite(params, l)}
    return GammaSet(params, l, False, tuple(sorted(elems)))


def gamma_with_infinity(params: CurveParams, l: int) -> GammaSet:
    if not 1 <= l <= params.r:
        raise InvalidTupleLength(f"number of finite places must lie in [1, {params.r}], got {l}")
    r, m = params.r, params.m
    elems = {(m * ks[0] - r * j,) + tuple(m * k + j for k in ks[1:])
             for j, ks in iter_with_infinity(params, l)}
    return GammaSet(params, l, True, tuple(sorted(elems)))


def infinity_pairs(params: CurveParams) -> tuple[PoleVector, ...]:
    """Gamma(P_inf, P_1) straight from its two-place description.

    Written as a plain double loop, separate from :func:`gamma_with_infinity`.
    """
    r, m = params.r, params.m
    out = []
    for j in range(1, m - m // r):
        for k0 in range(0, r):
            k1 = r - 1 - k0
            if m * k0 >= r * j:
                out.append((m * k0 - r * j, m * k1 + j))
    return tuple(sorted(out))


def gamma(params: CurveParams, tup: PlaceTuple) -> GammaSet | OnePointSemigroup:
    """Dispatch on the tuple shape.

    A single place gives its whole one-point semigroup, represented by its
    gap complement.
    """
    tup.check(params)
    if tup.length == 1:
        return semigroup_at(params, tup.places[0])
    if tup.includes_infinity:
        return gamma_with_infinity(params, tup.l)
    return gamma_finite(params, tup.l)


def default_tilde_bound(params: CurveParams, margin: int = 2) -> int:
    return 2 * params.genus + margin


@dataclass(frozen=True)
class GammaTilde:
    tuple: PlaceTuple
    bound: int
    elements: tuple[PoleVector, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[PoleVector]:
        return iter(self.elements)


def gamma_tilde(params: CurveParams, tup: PlaceTuple, bound: int | None = None) -> GammaTilde:
    """All sub-tuple generating sets embedded with zero padding.

    One-place pieces are whole semigroups, so everything is truncated to
    coordinates ``<= bound``.
    """
    tup.check(params)
    if bound is None:
        bound = default_tilde_bound(params)
    n = tup.length
    out: set[PoleVector] = set()
    for size in range(1, n + 1):
        for coords in combinations(range(n), size):
            sub = tup.sub(coords)
            g = gamma(params, sub)
            if isinstance(g, OnePointSemigroup):
                pieces = [(h,) for h in g.elements(bound)]
            else:
                pieces = [e for e in g.elements if max(e) <= bound]
            for piece in pieces:
                vec = [0] * n
                for c, value in zip(coords, piece):
                    vec[c] = value
                out.add(tuple(vec))
    return GammaTilde(tup, bound, tuple(sorted(out)))
