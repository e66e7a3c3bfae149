"""Weierstrass gaps at a single totally ramified place."""

from __future__ import annotations

from dataclasses import dataclass

from .curve import INFINITY, CurveParams, Place


@dataclass(frozen=True)
class GapList:
    place: Place
    gaps: tuple[int, ...]

    def __contains__(self, n: int) -> bool:
        return n in self.gaps

    def __len__(self) -> int:
        return len(self.gaps)


def gaps_at_finite(params: CurveParams, place: Place = Place(1)) -> GapList:
    """Gaps ``m*k + j`` at any finite ramified place.

    ``1 <= j <= m - 1 - m//r`` and ``0 <= k <= r - 2 - (r*j)//m``.
    """
    r, m = params.r, params.m
    gaps = [m * k + j
            for j in range(1, m - m // r)
            for k in range(r - 1 - (r * j) // m)]
    return GapList(place, tuple(sorted(gaps)))


def numerical_semigroup_sieve(generators: tuple[int, ...], limit: int) -> list[bool]:
    """``mask[n]`` is True iff ``n`` is a nonnegative combination of ``generators``."""
    mask = [False] * (limit + 1)
    mask[0] = True
    for n in range(1, limit + 1):
        mask[n] = any(n >= a and mask[n - a] for a in generators)
    return mask


def gaps_at_infinity(params: CurveParams) -> GapList:
    """Gaps of ``<m, r>``; the Frobenius number ``m*r - m - r`` is below ``m*r``."""
    mask = numerical_semigroup_sieve((params.m, params.r), params.m * params.r)
    return GapList(INFINITY, tuple(n for n, hit in enumerate(mask) if not hit))


def gaps_at(params: CurveParams, place: Place) -> GapList:
    if place.is_infinity:
        return gaps_at_infinity(params)
    return gaps_at_finite(params, place)


def is_gap(params: CurveParams, place: Place, n: int) -> bool:
    if n <= 0:
        return False
    return n in gaps_at(params, place)


@dataclass(frozen=True)
class OnePointSemigroup:
    """``H(Q)``: every nonnegative integer except the listed gaps."""

    place: Place
    gaps: tuple[int, ...]

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self.gaps

    def elements(self, bound: int) -> list[int]:
        return [n for n in range(bound + 1) if n not in self.gaps]


def semigroup_at(params: CurveParams, place: Place) -> OnePointSemigroup:
    return OnePointSemigroup(place, gaps_at(params, place).gaps)
