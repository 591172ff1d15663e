"""Exhaustive verification sweeps with deterministic JSON reports."""

from __future__ import annotations

import os
import time
from typing import Callable

from .checks import (
    BUILDING_LEMMAS,
    verify_building_lemmas,
    verify_embedder,
    verify_exception_catalog,
    verify_main_corollary,
    verify_reversal_counts,
    verify_small_lemmas,
    verify_theorem_2_1,
)
from .report import VerificationReport, Violation, canonical_json, report_schema
from .sweep import pmap, tournament_units

DEFAULT_MAX_ORDER = 7
DEEP_MAX_ORDER = 8


def _swept(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    def run(max_order: int | None, deep: bool, jobs: int, seed: int, samples: int | None) -> VerificationReport:
        n = max_order if max_order is not None else (DEEP_MAX_ORDER if deep else DEFAULT_MAX_ORDER)
        return fn(n, jobs=jobs)

    return run


def _catalog(max_order, deep, jobs, seed, samples):
    return verify_exception_catalog(max_order or 8)


def _small(max_order, deep, jobs, seed, samples):
    return verify_small_lemmas(jobs=jobs)


def _reversal(max_order, deep, jobs, seed, samples):
    n = max_order if max_order is not None else (7 if deep else 6)
    return verify_reversal_counts(n, 100 if samples is None else samples, seed=seed, jobs=jobs)


def _embedder(max_order, deep, jobs, seed, samples):
    n = max_order if max_order is not None else DEFAULT_MAX_ORDER
    return verify_embedder(n, 200 if samples is None else samples, seed=seed, jobs=jobs)


def _building(which: str):
    def run(max_order, deep, jobs, seed, samples):
        return verify_building_lemmas(which, jobs=jobs)

    return run


CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "catalog": _catalog,
    "thm2.1": _swept(verify_theorem_2_1),
    **{f"building:{w}": _building(w) for w in BUILDING_LEMMAS},
    "small-lemmas": _small,
    "reversal": _reversal,
    "corollary": _swept(verify_main_corollary),
    "embedder": _embedder,
}


def deep_requested(flag: bool = False) -> bool:
    return flag or os.environ.get("TK_DEEP") == "1"


def run_check(
    name: str,
    max_order: int | None = None,
    deep: bool = False,
    jobs: int = 1,
    seed: int = 0,
    samples: int | None = None,
    timing: bool = False,
) -> VerificationReport:
    """Run one registered check.  ``wall_time`` is only recorded when
    ``timing`` is set, so reports stay byte-identical between runs."""
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    start = time.perf_counter()
    rep = CHECKS[name](max_order, deep_requested(deep), max(1, jobs), seed, samples)
    if timing:
        rep.wall_time = time.perf_counter() - start
    return rep


__all__ = [
    "CHECKS",
    "VerificationReport",
    "Violation",
    "canonical_json",
    "deep_requested",
    "pmap",
    "report_schema",
    "run_check",
    "tournament_units",
    "verify_building_lemmas",
    "verify_embedder",
    "verify_exception_catalog",
    "verify_main_corollary",
    "verify_reversal_counts",
    "verify_small_lemmas",
    "verify_theorem_2_1",
]
