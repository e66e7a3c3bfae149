"""Brute-force ground truth from Riemann-Roch dimensions.

Why ``l(D)`` is a lattice count
-------------------------------
Every function on the curve is uniquely ``sum_{j<m} h_j(x) y^j`` with
``h_j`` rational in ``x``.  At a finite ramified place ``P_i``::

    v_{P_i}(h_j y^j) = m * ord_{alpha_i}(h_j) + j*lambda

and at infinity ``v(h_j y^j) = -m * deg(h_j) - j*r*lambda``.  Because
``gcd(m, lambda) = gcd(m, r*lambda) = 1`` the ``m`` terms have pairwise
distinct valuations mod ``m`` at each of those places, so the valuation of
the sum is the minimum over the terms.  ``f`` lies in ``L(D)`` iff every
term does.  For ``D = n_inf P_inf + sum n_i P_i`` this means::

    ord_{alpha_i}(h_j) >= a_ij = ceil((-n_i - j*lambda) / m)
    -deg(h_j)          >= b_j  = ceil((j*r*lambda - n_inf) / m)

and ``h_j`` is regular elsewhere (``K[x][y]`` is integrally closed over
``K[x]`` because ``y = z^lambda`` with ``z^m = f`` squarefree).  The
rational functions with those bounds form a space of dimension
``max(0, 1 - b_j - sum_i a_ij)``, which gives::

    l(D) = sum_{j=0}^{m-1} max(0, 1 - b_j - sum_i a_ij)

Nothing here uses the closed-form generating sets or gap formulas.  The
Riemann-Roch identity ``l(D) = deg D + 1 - g`` for ``deg D >= 2g - 1`` is
an independent check of the formula (see the test suite).

Membership assumes the constant field is large enough that ``L(D)`` is not
a union of the ``l`` subspaces ``L(D - Q_i)``; over an algebraic closure
this always holds.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .curve import CurveParams, DivisorSpec, Place, PlaceTuple
from .errors import InvalidTupleLength, UnsupportedSupport
from .gamma import GammaSet
from .onepoint import GapList


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@lru_cache(maxsize=1 << 16)
def _rr(params: CurveParams, d: DivisorSpec) -> int:
    r, m, lam = params.r, params.m, params.lam
    total = 0
    for j in range(m):
        b = _ceil_div(j * r * lam - d.coeff_infinity, m)
        a = sum(_ceil_div(-n - j * lam, m) for n in d.coeff_finite)
        total += max(0, 1 - b - a)
    return total


def rr_dimension(params: CurveParams, d: DivisorSpec) -> int:
    """``l(D)`` for a divisor supported on the totally ramified places."""
    if len(d.coeff_finite) != params.r:
        raise UnsupportedSupport(
            f"divisor has {len(d.coeff_finite)} finite coefficients, expected r = {params.r}")
    return _rr(params, d)


def clear_cache() -> None:
    _rr.cache_clear()


def _divisor(params: CurveParams, tup: PlaceTuple, v: Sequence[int]) -> DivisorSpec:
    return DivisorSpec.from_pole_vector(params, tup.check(params), v)


def member_oracle(params: CurveParams, tup: PlaceTuple, v: Sequence[int]) -> bool:
    """True iff some function has pole divisor exactly ``sum v_i Q_i``."""
    if any(c < 0 for c in v):
        return False
    d = _divisor(params, tup, v)
    ell = rr_dimension(params, d)
    return all(ell > rr_dimension(params, d.minus(p))
               for p, c in zip(tup.places, v) if c > 0)


def pure_gap_oracle(params: CurveParams, tup: PlaceTuple, v: Sequence[int]) -> bool:
    """True iff ``l(D) = l(D - Q_i)`` for every place of the tuple."""
    if any(c <= 0 for c in v):
        return False
    d = _divisor(params, tup, v)
    ell = rr_dimension(params, d)
    return all(ell == rr_dimension(params, d.minus(p)) for p in tup.places)


def is_fiber_minimal_oracle(params: CurveParams, tup: PlaceTuple, v: Sequence[int], i: int) -> bool:
    """Minimality of a member ``v`` among members with the same ``i``-th coordinate.

    A member ``u <= v``, ``u != v`` with ``u_i = v_i`` exists iff for some
    ``k != i`` a function in ``L(D - Q_k)`` has pole order exactly ``v_i``
    at ``Q_i``, i.e. ``l(D - Q_k) > l(D - Q_k - Q_i)``.
    """
    d = _divisor(params, tup, v)
    places = tup.places
    qi = places[i]
    for k, (p, c) in enumerate(zip(places, v)):
        if k == i or c == 0:
            continue
        dk = d.minus(p)
        if rr_dimension(params, dk) > rr_dimension(params, dk.minus(qi)):
            return False
    return True


def gaps_oracle(params: CurveParams, place: Place) -> GapList:
    """``n`` in ``[1, 2g-1]`` with ``l(nP) = l((n-1)P)``."""
    tup = PlaceTuple(True, ()) if place.is_infinity else PlaceTuple(False, (place.index,))
    tup.check(params)
    g = params.genus
    dims = [rr_dimension(params, _divisor(params, tup, (n,))) for n in range(2 * g)]
    gaps = tuple(n for n in range(1, 2 * g) if dims[n] == dims[n - 1])
    return GapList(place, gaps)


class OracleBox:
    """Dimension table and derived masks over the lattice box ``[0, bound]^L``.

    ``ell`` is indexed by coordinate + 1 so that ``D - Q_k`` with a zero
    coordinate (coefficient ``-1``) stays inside the table.
    """

    def __init__(self, params: CurveParams, tup: PlaceTuple, bound: int):
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        self.params = params
        self.tuple = tup.check(params)
        self.bound = bound
        self.ell = self._dimension_grid()
        self.member = self._member_mask()

    def _dimension_grid(self) -> np.ndarray:
        r, m, lam = self.params.r, self.params.m, self.params.lam
        places = self.tuple.places
        dim = len(places)
        coords = np.arange(-1, self.bound + 1, dtype=np.int64)
        shape = (len(coords),) * dim
        # l(D) <= deg(D) + 1 is tiny; int32 keeps large boxes affordable
        out = np.zeros(shape, dtype=np.int32)
        absent_finite = r - self.tuple.l
        for j in range(m):
            # constant part: places outside the tuple have coefficient 0
            const = 1 - absent_finite * _ceil_div(-j * lam, m)
            if not self.tuple.includes_infinity:
                const -= _ceil_div(j * r * lam, m)
            term = np.full(shape, const, dtype=np.int32)
            for axis, p in enumerate(places):
                if p.is_infinity:
                    part = -(-(j * r * lam - coords) // m)   # b_j
                else:
                    part = -(-(-coords - j * lam) // m)      # a_ij
                view = [1] * dim
                view[axis] = len(coords)
                term -= part.astype(np.int32).reshape(view)
            np.maximum(term, 0, out=term)
            out += term
        return out

    def _inner(self, arr: np.ndarray, shift_axis: int | None = None) -> np.ndarray:
        idx = []
        for axis in range(arr.ndim):
            idx.append(slice(0, -1) if axis == shift_axis else slice(1, None))
        return arr[tuple(idx)]

    def _member_mask(self) -> np.ndarray:
        here = self._inner(self.ell)
        mask = np.ones(here.shape, dtype=bool)
        for axis in range(here.ndim):
            zero = np.zeros(here.shape[axis], dtype=bool)
            zero[0] = True
            view = [1] * here.ndim
            view[axis] = len(zero)
            mask &= (here > self._inner(self.ell, axis)) | zero.reshape(view)
        return mask

    def dimension(self, v: Sequence[int]) -> int:
        return int(self.ell[tuple(c + 1 for c in v)])

    def fiber_minimal_mask(self, i: int) -> np.ndarray:
        """Members ``v`` with no other member ``u <= v`` sharing coordinate ``i``.

        Counts members in each lower box by prefix sums over every axis
        except ``i``.
        """
        counts = self.member.astype(np.int32)
        for axis in range(counts.ndim):
            if axis != i:
                np.cumsum(counts, axis=axis, out=counts)
        return self.member & (counts == 1)

    def pure_gap_mask(self) -> np.ndarray:
        here = self._inner(self.ell)
        mask = np.ones(here.shape, dtype=bool)
        for axis in range(here.ndim):
            mask &= here == self._inner(self.ell, axis)
        return mask

    def gap_product_mask(self) -> np.ndarray:
        mask = np.ones(self.member.shape, dtype=bool)
        for axis, p in enumerate(self.tuple.places):
            gaps = gaps_oracle(self.params, p).gaps
            line = np.zeros(self.bound + 1, dtype=bool)
            line[[n for n in gaps if n <= self.bound]] = True
            view = [1] * mask.ndim
            view[axis] = self.bound + 1
            mask &= line.reshape(view)
        return mask


def _vectors(mask: np.ndarray) -> tuple[tuple[int, ...], ...]:
    # np.argwhere returns indices in C (lexicographic) order
    return tuple(tuple(int(c) for c in row) for row in np.argwhere(mask))


def _scan_bound(params: CurveParams) -> int:
    return max(2 * params.genus - 1, 0)


# dense boxes above this many cells go through the gap-product route
BOX_CELL_LIMIT = 1 << 22


def _gap_product_dimensions(params: CurveParams, tup: PlaceTuple,
                            offsets: Sequence[int]) -> np.ndarray:
    """``l(D + sum offsets_i Q_i)`` for every ``D`` in the product of gap sets.

    Axis ``i`` runs over the gaps at the ``i``-th place (ascending).
    """
    r, m, lam = params.r, params.m, params.lam
    places = tup.places
    axes = [np.asarray(gaps_oracle(params, p).gaps, dtype=np.int64) + off
            for p, off in zip(places, offsets)]
    shape = tuple(len(a) for a in axes)
    out = np.zeros(shape, dtype=np.int16)
    absent_finite = r - tup.l
    for j in range(m):
        const = 1 - absent_finite * _ceil_div(-j * lam, m)
        if not tup.includes_infinity:
            const -= _ceil_div(j * r * lam, m)
        term = np.full(shape, const, dtype=np.int16)
        for axis, (p, vals) in enumerate(zip(places, axes)):
            if p.is_infinity:
                part = -(-(j * r * lam - vals) // m)
            else:
                part = -(-(-vals - j * lam) // m)
            view = [1] * len(shape)
            view[axis] = len(vals)
            term -= part.astype(np.int16).reshape(view)
        np.maximum(term, 0, out=term)
        out += term
    return out


def gamma_by_dimensions(params: CurveParams, tup: PlaceTuple, fiber: int = 0) -> GammaSet:
    """Generating set from dimension drops on the product of gap sets.

    ``v`` is a member iff ``l(D) > l(D - Q_k)`` for all ``k``; it is minimal
    in fiber ``i`` iff ``l(D - Q_k) = l(D - Q_k - Q_i)`` for all ``k != i``
    (see :func:`is_fiber_minimal_oracle`).  Only ``g^L`` cells are needed,
    against ``(2g)^L`` for :class:`OracleBox`.
    """
    if tup.length < 2:
        raise InvalidTupleLength("gamma_oracle needs at least two places")
    tup.check(params)
    n = tup.length

    def unit(*ks):
        return [-sum(1 for k in ks if k == a) for a in range(n)]

    base = _gap_product_dimensions(params, tup, [0] * n)
    mask = np.ones(base.shape, dtype=bool)
    for k in range(n):
        drop_k = _gap_product_dimensions(params, tup, unit(k))
        mask &= base > drop_k
        if k != fiber:
            mask &= drop_k == _gap_product_dimensions(params, tup, unit(k, fiber))
    values = [gaps_oracle(params, p).gaps for p in tup.places]
    elems = tuple(tuple(values[a][int(i)] for a, i in enumerate(row))
                  for row in np.argwhere(mask))
    return GammaSet(params, tup.l, tup.includes_infinity, elems)


def gamma_by_box(params: CurveParams, tup: PlaceTuple, fiber: int = 0) -> GammaSet:
    """Generating set by scanning every lattice point of ``[0, 2g-1]^L``.

    Keeps members with gap coordinates that have no other member below them
    in the same fiber.
    """
    if tup.length < 2:
        raise InvalidTupleLength("gamma_oracle needs at least two places")
    box = OracleBox(params, tup, _scan_bound(params))
    mask = box.gap_product_mask() & box.fiber_minimal_mask(fiber)
    return GammaSet(params, tup.l, tup.includes_infinity, _vectors(mask))


def gamma_oracle(params: CurveParams, tup: PlaceTuple, fiber: int = 0) -> GammaSet:
    """Generating set by exhaustive search over the product of gap sets."""
    if (_scan_bound(params) + 2) ** tup.length <= BOX_CELL_LIMIT:
        return gamma_by_box(params, tup, fiber)
    return gamma_by_dimensions(params, tup, fiber)


def pure_gaps_box(params: CurveParams, tup: PlaceTuple) -> tuple[tuple[int, ...], ...]:
    if tup.length < 2:
        raise InvalidTupleLength("pure gaps need at least two places")
    box = OracleBox(params, tup, _scan_bound(params))
    return _vectors(box.gap_product_mask() & box.pure_gap_mask())


def member_box(params: CurveParams, tup: PlaceTuple, bound: int) -> tuple[tuple[int, ...], ...]:
    """All oracle members in ``[0, bound]^L``, sorted."""
    return _vectors(OracleBox(params, tup, bound).member)

