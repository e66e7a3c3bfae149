"""Rebuilding the multi-point semigroup from its generating set.

``H(Q_1..Q_L)`` is the set of least upper bounds (coordinatewise maxima) of
``L`` elements of Gamma-tilde.  Picking one generator per coordinate shows
this is the same as asking, for every coordinate ``i``, for a generator
``u <= v`` with ``u_i = v_i``.  Membership uses that criterion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

import numpy as np

from .curve import CurveParams, PlaceTuple, PoleVector, lub, precedes
from .errors import LengthMismatch, NotAMember
from .gamma import GammaSet, gamma_tilde
from .onepoint import gaps_at, semigroup_at

__all__ = ["lub", "contains", "semigroup_box", "is_minimal_in_fiber",
           "SemigroupBox", "recover_gamma"]


def contains(params: CurveParams, tup: PlaceTuple, v: Sequence[int]) -> bool:
    v = tuple(v)
    if len(v) != tup.length:
        raise LengthMismatch(f"vector of length {len(v)} for a tuple of length {tup.length}")
    if any(c < 0 for c in v):
        return False
    if tup.length == 1:
        return v[0] in semigroup_at(params, tup.check(params).places[0])
    gens = gamma_tilde(params, tup, max(v)).elements
    return all(any(u[i] == v[i] and precedes(u, v) for u in gens)
               for i in range(len(v)))


@dataclass(frozen=True)
class SemigroupBox:
    """Members of ``H`` inside ``[0, bound]^L``."""

    tuple: PlaceTuple
    bound: int
    mask: np.ndarray = field(repr=False, compare=False)

    @property
    def tuple_shape(self) -> tuple[int, bool]:
        return self.tuple.shape

    @property
    def members(self) -> tuple[PoleVector, ...]:
        return tuple(tuple(int(c) for c in row) for row in np.argwhere(self.mask))

    def __contains__(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.mask.ndim or any(not 0 <= c <= self.bound for c in v):
            return False
        return bool(self.mask[v])

    def __len__(self) -> int:
        return int(self.mask.sum())

    def fiber_minimal(self, v: Sequence[int], i: int) -> bool:
        """No other member ``u <= v`` of the box has ``u_i = v_i``."""
        v = tuple(v)
        if v not in self:
            raise NotAMember(f"{v} is not in H{self.tuple}")
        idx = tuple(slice(c, c + 1) if axis == i else slice(0, c + 1)
                    for axis, c in enumerate(v))
        return int(self.mask[idx].sum()) == 1


def _box_by_scan(params: CurveParams, tup: PlaceTuple, bound: int) -> np.ndarray:
    """Mark every point that has a per-coordinate witness in Gamma-tilde."""
    dim = tup.length
    gens = gamma_tilde(params, tup, bound).elements
    mask = np.ones((bound + 1,) * dim, dtype=bool)
    for i in range(dim):
        hit = np.zeros_like(mask)
        for u in gens:
            hit[tuple(slice(c, c + 1) if axis == i else slice(c, None)
                      for axis, c in enumerate(u))] = True
        mask &= hit
    return mask


def _box_by_lub(params: CurveParams, tup: PlaceTuple, bound: int) -> np.ndarray:
    """Collect the lub of every multiset of ``L`` generators."""
    dim = tup.length
    gens = gamma_tilde(params, tup, bound).elements
    mask = np.zeros((bound + 1,) * dim, dtype=bool)
    for combo in combinations_with_replacement(gens, dim):
        mask[lub(combo)] = True
    return mask


def _box_one_place(params: CurveParams, tup: PlaceTuple, bound: int) -> np.ndarray:
    h = semigroup_at(params, tup.places[0])
    mask = np.zeros(bound + 1, dtype=bool)
    mask[h.elements(bound)] = True
    return mask


def semigroup_box(params: CurveParams, tup: PlaceTuple, bound: int,
                  strategy: str = "auto") -> SemigroupBox:
    """``H`` restricted to ``[0, bound]^L``.

    ``strategy`` is ``"scan"`` (per-coordinate witness test over the
    lattice), ``"lub"`` (close Gamma-tilde under lub) or ``"auto"``, which
    picks whichever needs fewer steps.  Both give the same set.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    tup.check(params)
    if tup.length == 1:
        return SemigroupBox(tup, bound, _box_one_place(params, tup, bound))
    if strategy == "auto":
        n_gens = len(gamma_tilde(params, tup, bound))
        lub_cost = comb(n_gens + tup.length - 1, tup.length)
        strategy = "lub" if lub_cost < n_gens * tup.length * 8 else "scan"
    if strategy == "scan":
        mask = _box_by_scan(params, tup, bound)
    elif strategy == "lub":
        mask = _box_by_lub(params, tup, bound)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return SemigroupBox(tup, bound, mask)


def is_minimal_in_fiber(params: CurveParams, tup: PlaceTuple, v: Sequence[int], i: int) -> bool:
    """Whether ``v`` is minimal among members of ``H`` whose ``i``-th coordinate is ``v_i``.

    Only the box ``[0, v]`` can hold a smaller member, so the search is
    confined to it.
    """
    v = tuple(v)
    if not contains(params, tup, v):
        raise NotAMember(f"{v} is not in H{tup}")
    box = semigroup_box(params, tup, max(v), strategy="scan")
    return box.fiber_minimal(v, i)


def recover_gamma(params: CurveParams, box: SemigroupBox, i: int = 0) -> GammaSet:
    """Gamma as the fiber-minimal members with positive gap coordinates.

    Goes through the closure only, so comparing it with :func:`gamma`
    re-derives the generating set from its definition.
    """
    tup = box.tuple
    gap_sets = [set(gaps_at(params, p).gaps) for p in tup.places]
    out = [v for v in box.members
           if all(c in gs for c, gs in zip(v, gap_sets)) and box.fiber_minimal(v, i)]
    return GammaSet(params, tup.l, tup.includes_infinity, tuple(out))

