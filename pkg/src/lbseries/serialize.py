"""JSON encoding of series, tensor series and Bell elements, plus operand parsing."""
from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from . import forest as fo
from .errors import BadRepresentation
from .hopf import TensorSeries
from .idempotents import BellElement, compose_functional_endo, dynkin_projection
from .series import Series, format_fraction


def series_to_json(s: Series) -> dict:
    return {
        "order": s.order,
        "terms": [{"forest": fo.render(w), "coeff": format_fraction(c)} for w, c in s.items()],
    }


def _terms_max_order(words) -> int:
    return max((fo.order(w) for w in words), default=0)


def series_from_json(data: Mapping[str, Any], order: int | None = None) -> Series:
    """Accepts ``{"order": N, "terms": [{"forest", "coeff"}]}``.

    ``terms`` may also be a mapping ``forest -> coeff``.  Without an order in
    either the data or the argument, the largest forest order is used.
    """
    raw = data.get("terms", [])
    if isinstance(raw, Mapping):
        pairs = [(fo.parse(k), Fraction(str(v))) for k, v in raw.items()]
    else:
        pairs = [(fo.parse(t["forest"]), Fraction(str(t["coeff"]))) for t in raw]
    n = order if order is not None else data.get("order", _terms_max_order(w for w, _ in pairs))
    return Series(int(n), pairs)


def tensor_to_json(t: TensorSeries) -> dict:
    return {
        "order": t.order,
        "terms": [
            {"left": fo.render(l), "right": fo.render(r), "coeff": format_fraction(c)}
            for (l, r), c in t.items()
        ],
    }


def tensor_from_json(data: Mapping[str, Any]) -> TensorSeries:
    pairs = [((fo.parse(t["left"]), fo.parse(t["right"])), Fraction(str(t["coeff"]))) for t in data["terms"]]
    n = data.get("order", _terms_max_order(w for (l, r), _ in pairs for w in (l, r)))
    return TensorSeries(int(n), pairs)


def bell_to_json(b: BellElement) -> dict:
    return b.to_json()


def bell_from_json(data: Mapping[str, Any]) -> BellElement:
    return BellElement.from_json(data)


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=False)


def random_infinitesimal(order: int, rng: random.Random, spread: int = 9) -> Series:
    """A pseudorandom rational Lie series: a random functional times the Dynkin projection."""
    raw = Series(order, {
        w: Fraction(rng.randint(-spread, spread), rng.randint(1, spread))
        for w in fo.enumerate_forests(order)[1:]
    })
    return compose_functional_endo(raw, dynkin_projection(order))


def load_series(text: str, order: int | None = None, rng: random.Random | None = None) -> Series:
    """Read a series operand.

    In turn: ``random`` (needs ``rng``), a path to a JSON file, inline JSON,
    or a forest literal such as ``(())()`` which stands for that basis
    element.
    """
    stripped = text.strip()
    if stripped == "random":
        if rng is None or order is None:
            raise BadRepresentation("a random operand needs an order and a seed")
        return random_infinitesimal(order, rng)
    path = Path(stripped)
    if stripped and not stripped.startswith(("(", "{")) and path.is_file():
        return series_from_json(json.loads(path.read_text()), order)
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise BadRepresentation(f"invalid inline JSON: {exc}") from None
        return series_from_json(data, order)
    w = fo.parse(stripped)
    return Series.basis(w, max(fo.order(w), order or 0))
