"""Reference values for the coproduct, dual substitution, flows and Bell polynomials.

Loaded as package data so the self-test works from an installed package.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .. import forest as fo
from ..hopf import TensorSeries
from ..idempotents import BellElement
from ..series import Series


@lru_cache(maxsize=None)
def _load(name: str) -> dict:
    return json.loads(resources.files(__name__).joinpath(name).read_text(encoding="utf-8"))


def dn_table() -> dict[str, TensorSeries]:
    """Forest -> its ``Delta_N`` coproduct, all forests of order <= 4."""
    return {
        row["forest"]: TensorSeries(
            fo.order(row["forest"]),
            [((t["left"], t["right"]), Fraction(t["coeff"])) for t in row["terms"]],
        )
        for row in _load("dn_coproduct.json")["rows"]
    }


def dual_substitution_rows() -> dict[str, list[tuple[Fraction, tuple[str, ...], str]]]:
    """Forest -> ``[(c, factors, w)]`` meaning the term ``c * a(f1) * ... * a(fk) * w``."""
    return {
        row["forest"]: [(Fraction(t["coeff"]), tuple(t["factors"]), t["forest"]) for t in row["terms"]]
        for row in _load("dual_substitution.json")["rows"]
    }


def dual_substitution_expected(w: str, a: Series) -> Series:
    """Evaluate the reference expression for ``a*T(w)`` at a concrete ``a``."""
    acc: dict[str, Fraction] = {}
    for c, factors, out in dual_substitution_rows()[w]:
        for f in factors:
            c *= a[f]
        acc[out] = acc.get(out, Fraction(0)) + c
    return Series(a.order, acc)


def _series(name: str) -> Series:
    data = _load(name)
    return Series(data["order"], [(t["forest"], Fraction(t["coeff"])) for t in data["terms"]])


def exact_flow_type3() -> Series:
    """The exact-flow type 3 series through order 5."""
    return _series("exact_flow_type3.json")


def euler_modified_field() -> Series:
    """Backward error of exponential Euler through order 4."""
    return _series("euler_modified_field.json")


def bell_table() -> dict[str, BellElement]:
    """Keys ``"0"`` .. ``"4"`` for ``B_n`` and ``"4,3"`` for the length-3 part of ``B_4``."""
    return {k: BellElement.from_json(v) for k, v in _load("bell.json").items()}
