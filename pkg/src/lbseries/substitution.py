"""The substitution law and its dual.

``substitute(a, b)`` is the unique D-algebra endomorphism sending the
single-vertex tree to the Lie series ``a``, applied to ``b``.  It is built
from the magma decomposition ``w = w_L x w_R``::

    a*(1) = 1,        a*(w_L x w_R) = a*(w_L) ((a*(w_R)) -> a)

``substitute_dual(a, w)`` computes the adjoint independently, through
deconcatenation and left admissible cuts, so the two cross-check each other
via ``<a*b, w> = <b, a*T(w)>``.
"""
from __future__ import annotations

import warnings
from collections import defaultdict
from fractions import Fraction

from . import forest as fo
from .cuts import lac_terms
from .errors import BadConstantTerm, NoSolution, NotConsistent, NotInfinitesimal, OrderMismatch
from .forest import DOT, Forest
from .hopf import HopfStructure, deconcat_basis, is_character, is_infinitesimal_character
from .series import Series, concat_product, graft


class NotInfinitesimalWarning(UserWarning):
    pass


def _check_datum(a: Series, strict: bool) -> None:
    if a.constant != 0:
        raise BadConstantTerm("the substituted series must vanish on the empty forest")
    if not is_infinitesimal_character(a, HopfStructure.H_N):
        msg = "substituted series is not an infinitesimal character (not a Lie series)"
        if strict:
            raise NotInfinitesimal(msg)
        warnings.warn(msg, NotInfinitesimalWarning, stacklevel=3)


class _Substitution:
    """Memoised images ``a*(w)`` for one substitution datum ``a``."""

    def __init__(self, a: Series):
        self.a = a
        self.order = a.order
        self.cache: dict[Forest, Series] = {fo.EMPTY: Series.one(a.order)}

    def image(self, w: Forest) -> Series:
        got = self.cache.get(w)
        if got is None:
            if fo.order(w) > self.order:
                got = Series.zero(self.order)
            else:
                left, right = fo.magma_split(w)
                got = concat_product(self.image(left), graft(self.image(right), self.a))
            self.cache[w] = got
        return got

    def __call__(self, s: Series) -> Series:
        acc = Series.zero(self.order)
        for w, c in s.items():
            acc = acc + self.image(w) * c
        return acc


def substitute(a: Series, s: Series | Forest, strict: bool = False) -> Series:
    """``a * s``; ``s`` may be a series or a single forest."""
    if isinstance(s, str):
        s = Series.basis(s, a.order)
    if s.order != a.order:
        raise OrderMismatch(f"substitution datum has order {a.order}, argument has order {s.order}")
    _check_datum(a, strict)
    return _Substitution(a)(s)


class _DualSubstitution:
    def __init__(self, a: Series):
        self.a = a
        self.order = a.order
        self.cache: dict[Forest, Series] = {fo.EMPTY: Series.one(a.order)}

    def image(self, w: Forest) -> Series:
        got = self.cache.get(w)
        if got is not None:
            return got
        n = self.order
        acc = Series.zero(n)
        for (w1, w2), _ in deconcat_basis(w):
            if not w2:
                continue  # a(R) = a(1) = 0
            head = self.image(w1)
            # tree part of a*T(w2): sum over LAC(w2) of B+(a*T(P)) a(R)
            planted: dict[Forest, Fraction] = defaultdict(Fraction)
            for (p, rem), m in lac_terms(w2):
                weight = self.a[rem]
                if weight:
                    for v, c in self.image(p).items():
                        planted[fo.b_plus(v)] += m * weight * c
            if planted:
                acc = acc + concat_product(head, Series(n, planted))
        self.cache[w] = acc
        return acc


def substitute_dual(a: Series, w: Forest, strict: bool = False) -> Series:
    """``a*T(w)``, the adjoint of substitution, with ``a*T(1) = 1``."""
    if fo.order(w) > a.order:
        raise OrderMismatch(f"forest of order {fo.order(w)} exceeds truncation order {a.order}")
    _check_datum(a, strict)
    return _DualSubstitution(a).image(w)


def substitute_dual_series(a: Series, s: Series, strict: bool = False) -> Series:
    """Linear extension of :func:`substitute_dual` to a series argument."""
    if s.order != a.order:
        raise OrderMismatch("orders differ")
    _check_datum(a, strict)
    dual = _DualSubstitution(a)
    acc = Series.zero(a.order)
    for w, c in s.items():
        acc = acc + dual.image(w) * c
    return acc


def solve_substitution(target: Series, base: Series) -> Series:
    """Find the Lie series ``a`` with ``substitute(a, base) = target``.

    Degree by degree: the degree-``n`` part of ``a * base`` equals
    ``base(•) a_n`` plus terms built from ``a_1 .. a_{n-1}`` only.
    """
    if target.order != base.order:
        raise OrderMismatch("target and base orders differ")
    H = HopfStructure.H_N
    if base.order >= 1 and base[DOT] != 1:
        raise NotConsistent(f"base series has coefficient {base[DOT]} on the single vertex, expected 1")
    if not is_character(base, H):
        raise NotConsistent("base series is not an H_N character")
    if not is_character(target, H):
        raise NoSolution("target is not an H_N character, so it is not the flow of any field")
    n = target.order
    a = Series.zero(n)
    for k in range(1, n + 1):
        current = _Substitution(a)(base)
        a = a + (target - current).homogeneous(k)
    if n >= 1 and a[DOT] == 0:
        raise NoSolution("first-order coefficient of the solution vanishes; substitution is degenerate")
    if not is_infinitesimal_character(a, H):
        raise NoSolution("the degree-wise solution is not a Lie series")
    if substitute(a, base, strict=True) != target:
        raise NoSolution("re-substitution does not reproduce the target")
    return a
