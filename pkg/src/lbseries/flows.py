"""Flow representations, the built-in method series, and backward error analysis.

A flow can be stored three ways:

* ``TYPE1``: the pullback character ``alpha`` (a character of H_N)
* ``TYPE2``: the autonomous modified field ``beta`` with ``alpha = exp_gl(beta)``
* ``TYPE3``: the time-dependent Lie-type series ``gamma`` with ``alpha = Q(gamma)``

All conversions pass through ``TYPE1``.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import forest as fo
from .errors import BadRepresentation
from .forest import DOT
from .hopf import HopfStructure, is_character, is_infinitesimal_character
from .idempotents import compose_functional_endo, dynkin_projection, eulerian, grading_Y_inverse, q_operator
from .series import Series, b_plus_series, exponential

__all__ = [
    "FlowRepresentation",
    "convert",
    "gamma_exact",
    "alpha_exact",
    "method_euler",
    "midpoint_sigma",
    "method_midpoint",
    "backward_error",
    "builtin_method",
    "METHODS",
]


class FlowRepresentation(enum.Enum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3

    @classmethod
    def parse(cls, value: str | int | FlowRepresentation) -> FlowRepresentation:
        if isinstance(value, cls):
            return value
        text = str(value).strip().upper().removeprefix("TYPE")
        try:
            return cls(int(text))
        except ValueError:
            raise BadRepresentation(f"unknown representation {value!r}; use 1, 2 or 3") from None


def _validate(s: Series, rep: FlowRepresentation) -> None:
    if rep is FlowRepresentation.TYPE1:
        if not is_character(s, HopfStructure.H_N):
            raise BadRepresentation("a type 1 series must be an H_N character")
    elif rep is FlowRepresentation.TYPE2:
        if not is_infinitesimal_character(s, HopfStructure.H_N):
            raise BadRepresentation("a type 2 series must be an infinitesimal character")
    elif s.constant != 0:
        raise BadRepresentation("a type 3 series must vanish on the empty forest")


def _to_type1(s: Series, rep: FlowRepresentation) -> Series:
    if rep is FlowRepresentation.TYPE1:
        return s
    if rep is FlowRepresentation.TYPE2:
        return exponential(s, "gl")
    return q_operator(s)


def _from_type1(alpha: Series, rep: FlowRepresentation) -> Series:
    if rep is FlowRepresentation.TYPE1:
        return alpha
    if rep is FlowRepresentation.TYPE2:
        return compose_functional_endo(alpha, eulerian(alpha.order))
    return compose_functional_endo(alpha, dynkin_projection(alpha.order))


def convert(s: Series, source, target) -> Series:
    """Re-express ``s`` from one representation in another.

    ``source`` and ``target`` accept enum members, ``1``/``2``/``3`` or
    ``"TYPE1"`` style strings.
    """
    source, target = FlowRepresentation.parse(source), FlowRepresentation.parse(target)
    _validate(s, source)
    if source is target:
        return s
    return _from_type1(_to_type1(s, source), target)


@lru_cache(maxsize=None)
def gamma_exact(order: int) -> Series:
    """Fixed point of ``gamma = Y^-1 B+(Q(gamma))`` by ``order`` iterations from zero.

    Each pass fixes one more degree, so ``order`` passes are exact.
    """
    y_inv = grading_Y_inverse(order)
    gamma = Series.zero(order)
    for _ in range(order):
        gamma = y_inv(b_plus_series(q_operator(gamma)))
    return gamma


@lru_cache(maxsize=None)
def alpha_exact(order: int) -> Series:
    return q_operator(gamma_exact(order))


@lru_cache(maxsize=None)
def method_euler(order: int) -> Series:
    """Exponential Euler: ``exp(•)`` with concatenation powers."""
    return exponential(Series.basis(DOT, order), "concat")


@lru_cache(maxsize=None)
def midpoint_sigma(order: int) -> Series:
    """Tree coefficients ``sigma(•) = 1``, ``sigma(B+(t1..tj)) = sigma(t1)..sigma(tj) / (2^j j!)``."""
    coeff: dict[str, Fraction] = {}
    for n in range(1, order + 1):
        for t in fo.trees_of_order(n):
            kids = fo.children(t)
            j = len(kids)
            coeff[t] = prod((coeff[k] for k in kids), start=Fraction(1)) / (2**j * factorial(j))
    return Series(order, coeff)


@lru_cache(maxsize=None)
def method_midpoint(order: int) -> Series:
    """Implicit midpoint as the frozen-field exponential ``exp(sigma)``.

    Concatenation powers are used, as for the Euler method, so tree
    coefficients equal ``sigma`` itself.
    """
    return exponential(midpoint_sigma(order), "concat")


def backward_error(alpha: Series) -> Series:
    """Modified field ``beta = alpha o e``; the exact flow of ``beta`` is ``alpha``."""
    if not is_character(alpha, HopfStructure.H_N):
        raise BadRepresentation("backward error analysis needs an H_N character")
    return compose_functional_endo(alpha, eulerian(alpha.order))


METHODS = {
    "exact": alpha_exact,
    "euler": method_euler,
    "midpoint": method_midpoint,
}


def builtin_method(name: str, order: int) -> Series:
    """Type 1 character of a named method."""
    try:
        return METHODS[name](order)
    except KeyError:
        raise BadRepresentation(f"unknown method {name!r}; choose from {sorted(METHODS)}") from None
