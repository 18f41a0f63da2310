"""Exact character computations for graded modules over finite fields.

Every function takes and returns JSON strings in the same formats the
``fvect`` CLI uses, so results can be piped between the two freely.
"""

from ._core import (
    SizeGateError,
    ValidationError,
    big_char,
    cha,
    direct_sum,
    dual,
    exp_f,
    od_check,
    oracle_compare,
    random_od,
    raynaud_check,
    raynaud_iso,
    run_cli,
    special_drinfeld,
)

__all__ = [
    "SizeGateError",
    "ValidationError",
    "big_char",
    "cha",
    "direct_sum",
    "dual",
    "exp_f",
    "od_check",
    "oracle_compare",
    "random_od",
    "raynaud_check",
    "raynaud_iso",
    "run_cli",
    "special_drinfeld",
]
