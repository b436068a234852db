"""Exact continuants, extremal arrangements, multiplicity censuses and counting bounds."""

import json
from fractions import Fraction

from ._contin import (
    ContinError,
    LimitExceeded,
    MemoryBudgetExceeded,
    PrecisionExhausted,
    ValidationError,
    H_interval,
    build_w_max,
    canonicalize,
    continuant,
    continuant_matrix,
    doubling_bound_check,
    enumerate_classes,
    exact_class_count,
    find_witness,
    generalized_fibonacci,
    geometric_bound_holds,
    m0,
    multiplicity_of,
    n_lower_bound,
    p_upper_bound,
    s0,
    smallest_admissible_s,
    split_identity,
    stirling_brackets_factorial,
    verify_wmax,
)
from ._contin import f_exact as _f_exact
from ._contin import run_census_json as _run_census_json

_BIG_FIELDS = ("N", "P", "max_value", "min_value")


def f_exact(t, l, s):
    """((s - l + t) / (s + 1)) ** (s + 1) as an exact Fraction."""
    num, den = _f_exact(t, l, s)
    return Fraction(num, den)


def run_census(alphabet, parikh, workers=1, limit=100_000_000):
    """Census report as a dict; big values are Python ints."""
    report = json.loads(_run_census_json(alphabet, parikh, workers, limit))
    for key in _BIG_FIELDS:
        report[key] = int(report[key])
    report["spectrum"] = {mu: count for mu, count in report["spectrum"]}
    for group in report["witnesses"]:
        for entry in group["values"]:
            entry["value"] = int(entry["value"])
            entry["words"] = [[int(x) for x in w.split(",")] for w in entry["words"]]
    return report


__all__ = [name for name in dir() if not name.startswith("_") and name not in ("json", "Fraction")]
