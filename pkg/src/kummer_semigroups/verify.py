"""Sweep that checks the closed forms against the brute-force oracle."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .curve import INFINITY, Place, PlaceTuple, is_admissible, validate_params
from .gamma import gamma_finite, gamma_with_infinity
from .onepoint import gaps_at_finite, gaps_at_infinity
from .oracle import gamma_oracle, gaps_oracle


@dataclass(frozen=True)
class CaseResult:
    r: int
    m: int
    lam: int
    shapes: int
    failures: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def as_dict(self) -> dict:
        return {"r": self.r, "m": self.m, "lambda": self.lam, "shapes": self.shapes,
                "status": self.status, "failures": list(self.failures)}


def admissible_cases(max_r: int, max_m: int, lambdas: Iterable[int],
                     min_r: int = 3, min_m: int = 2) -> list[tuple[int, int, int]]:
    return [(r, m, lam)
            for r in range(min_r, max_r + 1)
            for m in range(min_m, max_m + 1)
            for lam in sorted(set(lambdas))
            if is_admissible(r, m, lam)]


def tuple_shapes(r: int, max_len: int) -> list[PlaceTuple]:
    """Initial-segment tuples of total length ``1..max_len``, finite first."""
    out = []
    for length in range(1, max_len + 1):
        if length <= r:
            out.append(PlaceTuple.initial(length))
        if 1 <= length - 1 <= r:
            out.append(PlaceTuple.initial(length - 1, infinity=True))
        elif length == 1:
            out.append(PlaceTuple.with_infinity())
    return out


def _formula_gamma(params, tup: PlaceTuple):
    if tup.includes_infinity:
        return gamma_with_infinity(params, tup.l)
    return gamma_finite(params, tup.l)


def _formula_gaps(params, place: Place):
    if place.is_infinity:
        return gaps_at_infinity(params)
    return gaps_at_finite(params, place)


def _label(tup: PlaceTuple) -> str:
    return f"l={tup.l}{',inf' if tup.includes_infinity else ''}"


def run_case(r: int, m: int, lam: int, max_len: int) -> CaseResult:
    params = validate_params(r, m, lam)
    failures = []
    shapes = tuple_shapes(r, max_len)
    for tup in shapes:
        if tup.length == 1:
            place = INFINITY if tup.includes_infinity else Place(tup.finite_indices[0])
            ok = _formula_gaps(params, place).gaps == gaps_oracle(params, place).gaps
        else:
            ok = _formula_gamma(params, tup).elements == gamma_oracle(params, tup).elements
        if not ok:
            failures.append(_label(tup))
    return CaseResult(r, m, lam, len(shapes), tuple(failures))


def _run_case_args(args: tuple[int, int, int, int]) -> CaseResult:
    return run_case(*args)


def run_verify(max_r: int, max_m: int, lambdas: Iterable[int] = (1,), max_len: int = 4,
               workers: int = 1, min_r: int = 3, min_m: int = 2) -> list[CaseResult]:
    """Results in case order, whatever the worker count."""
    if max_len < 1:
        raise ValueError("max tuple length must be at least 1")
    cases = [c + (max_len,) for c in admissible_cases(max_r, max_m, lambdas, min_r, min_m)]
    if workers <= 1 or len(cases) <= 1:
        return [_run_case_args(c) for c in cases]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_case_args, cases))
