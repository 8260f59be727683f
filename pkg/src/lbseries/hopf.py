"""Coproducts, antipodes, convolution and characters.

Three bialgebra structures on the forest span are used:

* ``H_SH``        shuffle product, deconcatenation coproduct
* ``H_N``         shuffle product, the coproduct ``Delta_N`` dual to the
                  Grossman-Larson product
* ``CONCAT_DESH`` concatenation product, deshuffle coproduct (trees primitive)

Functionals (``Series`` read as ``w -> a[w]``) convolve with scalar
multiplication in the codomain; endomorphisms convolve with the product of
the Hopf algebra itself.
"""
from __future__ import annotations

import enum
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Mapping

from . import forest as fo
from .errors import BadConstantTerm, OrderMismatch
from .forest import Forest
from .series import (
    BasisTerms,
    Endomorphism,
    Number,
    Series,
    _render_terms,
    as_fraction,
    bilinear,
    concat_basis,
    shuffle_basis,
)

Pair = tuple[Forest, Forest]
TensorTerms = tuple[tuple[Pair, Fraction], ...]


def tensor_sort_key(pair: Pair) -> tuple:
    """Right factor first, so ``w (x) 1`` leads and ``1 (x) w`` closes a coproduct."""
    return (fo.sort_key(pair[1]), fo.sort_key(pair[0]))


class TensorSeries:
    """Finite map (forest, forest) -> Fraction; zero values are dropped."""

    __slots__ = ("order", "_terms")

    def __init__(self, order: int, terms: Mapping[Pair, Number] | Iterable[tuple[Pair, Number]] = ()):
        self.order = order
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Pair, Fraction] = defaultdict(Fraction)
        for (l, r), c in items:
            if fo.order(l) > order or fo.order(r) > order:
                continue
            acc[(l, r)] += as_fraction(c)
        self._terms = {k: c for k, c in acc.items() if c}

    def __getitem__(self, pair: Pair) -> Fraction:
        return self._terms.get(pair, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> list[tuple[Pair, Fraction]]:
        return [(k, self._terms[k]) for k in sorted(self._terms, key=tensor_sort_key)]

    @property
    def terms(self) -> dict[Pair, Fraction]:
        return dict(self._terms)

    def __add__(self, other: TensorSeries) -> TensorSeries:
        if other.order != self.order:
            raise OrderMismatch("tensor series orders differ")
        return TensorSeries(self.order, list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: TensorSeries) -> TensorSeries:
        return self + TensorSeries(other.order, {k: -c for k, c in other._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorSeries):
            return NotImplemented
        return self.order == other.order and self._terms == other._terms

    def __repr__(self) -> str:
        return f"TensorSeries(order={self.order}, {render_tensor(self)})"


def render_tensor(t: TensorSeries) -> str:
    return _render_terms((f"{fo.render(l)}⊗{fo.render(r)}", c) for (l, r), c in t.items())


# ---------------------------------------------------------------------------
# coproducts on basis forests

def _pack(acc: Mapping[Pair, Fraction]) -> TensorTerms:
    return tuple((k, c) for k, c in sorted(acc.items(), key=lambda kv: tensor_sort_key(kv[0])) if c)


@lru_cache(maxsize=None)
def deconcat_basis(w: Forest) -> TensorTerms:
    cuts = [0]
    for t in fo.trees(w):
        cuts.append(cuts[-1] + len(t))
    return tuple(((w[:i], w[i:]), Fraction(1)) for i in cuts)


@lru_cache(maxsize=None)
def deshuffle_basis(w: Forest) -> TensorTerms:
    ts = fo.trees(w)
    n = len(ts)
    acc: dict[Pair, Fraction] = defaultdict(Fraction)
    for k in range(n + 1):
        for chosen in combinations(range(n), k):
            picked = set(chosen)
            left = "".join(ts[i] for i in chosen)
            right = "".join(ts[i] for i in range(n) if i not in picked)
            acc[(left, right)] += 1
    return _pack(acc)


@lru_cache(maxsize=None)
def dn_basis(w: Forest) -> TensorTerms:
    """``Delta_N(w) = w (x) 1 + Delta_N(w_L) [shuffle (x) magma] Delta_N(w_R)``."""
    if not w:
        return (((fo.EMPTY, fo.EMPTY), Fraction(1)),)
    left, right = fo.magma_split(w)
    acc: dict[Pair, Fraction] = defaultdict(Fraction)
    acc[(w, fo.EMPTY)] += 1
    for (a, b), c in dn_basis(left):
        for (x, y), d in dn_basis(right):
            tail = fo.magma_times(b, y)
            for s, e in shuffle_basis(a, x):
                acc[(s, tail)] += c * d * e
    return _pack(acc)


def _tensor(w: Forest, basis: Callable[[Forest], TensorTerms], order: int | None) -> TensorSeries:
    return TensorSeries(fo.order(w) if order is None else order, basis(w))


def coproduct_deconcat(w: Forest, order: int | None = None) -> TensorSeries:
    return _tensor(w, deconcat_basis, order)


def coproduct_deshuffle(w: Forest, order: int | None = None) -> TensorSeries:
    return _tensor(w, deshuffle_basis, order)


def coproduct_dn(w: Forest, order: int | None = None) -> TensorSeries:
    return _tensor(w, dn_basis, order)


def apply_coproduct_series(s: Series, basis: Callable[[Forest], TensorTerms]) -> TensorSeries:
    acc: dict[Pair, Fraction] = defaultdict(Fraction)
    for w, c in s.items():
        for k, d in basis(w):
            acc[k] += c * d
    return TensorSeries(s.order, acc)


# ---------------------------------------------------------------------------

class HopfStructure(enum.Enum):
    H_SH = "sh"
    H_N = "n"
    CONCAT_DESH = "concat"

    @property
    def coproduct(self) -> Callable[[Forest], TensorTerms]:
        return {
            HopfStructure.H_SH: deconcat_basis,
            HopfStructure.H_N: dn_basis,
            HopfStructure.CONCAT_DESH: deshuffle_basis,
        }[self]

    @property
    def product(self) -> Callable[[Forest, Forest], BasisTerms]:
        if self is HopfStructure.CONCAT_DESH:
            return concat_basis
        return shuffle_basis

    @property
    def commutative(self) -> bool:
        return self is not HopfStructure.CONCAT_DESH


def _multiply(s1: Series, s2: Series, H: HopfStructure) -> Series:
    return bilinear(s1, s2, H.product)


def antipode_shuffle(w: Forest, order: int | None = None) -> Series:
    """``S(t1 ... tn) = (-1)^n tn ... t1``."""
    ts = fo.trees(w)
    return Series(fo.order(w) if order is None else order, {"".join(reversed(ts)): (-1) ** len(ts)})


@lru_cache(maxsize=None)
def _antipode_generic(w: Forest, H: HopfStructure) -> BasisTerms:
    if not w:
        return ((fo.EMPTY, Fraction(1)),)
    # sum S(w1) w2 = 0 over Delta(w); the (w, 1) term isolates S(w)
    acc: dict[Forest, Fraction] = defaultdict(Fraction)
    for (w1, w2), c in H.coproduct(w):
        if w1 == w and not w2:
            continue
        for v, d in _antipode_generic(w1, H):
            for u, e in H.product(v, w2):
                acc[u] -= c * d * e
    return tuple((u, c) for u, c in acc.items() if c)


def antipode_generic(w: Forest, H: HopfStructure, order: int | None = None) -> Series:
    """Antipode of a graded connected bialgebra by the recursion on ``S * Id = delta``."""
    return Series(fo.order(w) if order is None else order, _antipode_generic(w, H))


def antipode_endomorphism(order: int, H: HopfStructure = HopfStructure.H_SH) -> Endomorphism:
    if H is HopfStructure.CONCAT_DESH or H is HopfStructure.H_SH:
        return Endomorphism.from_function(order, lambda w: antipode_shuffle(w, order))
    return Endomorphism.from_function(order, lambda w: antipode_generic(w, H, order))


def counit(w: Forest) -> int:
    return 1 if not w else 0


def epsilon(order: int) -> Series:
    """The counit as a functional; unit of functional convolution."""
    return Series.one(order)


# ---------------------------------------------------------------------------
# convolution

def convolve_functionals(a: Series, b: Series, H: HopfStructure) -> Series:
    """``(a * b)(w) = sum a(w1) b(w2)`` over ``Delta_H(w)``."""
    a._check(b)
    n = a.order
    out: dict[Forest, Fraction] = {}
    for w in fo.enumerate_forests(n):
        total = Fraction(0)
        for (w1, w2), c in H.coproduct(w):
            x = a[w1]
            if x:
                y = b[w2]
                if y:
                    total += c * x * y
        if total:
            out[w] = total
    return Series(n, out)


def convolve_endomorphisms(f: Endomorphism, g: Endomorphism, H: HopfStructure) -> Endomorphism:
    """``mu_H o (f (x) g) o Delta_H``."""
    f._check(g)
    n = f.order
    images = {}
    for w in fo.enumerate_forests(n):
        acc = Series.zero(n)
        for (w1, w2), c in H.coproduct(w):
            x, y = f.image(w1), g.image(w2)
            if x.is_zero() or y.is_zero():
                continue
            acc = acc + _multiply(x, y, H) * c
        images[w] = acc
    return Endomorphism(n, images)


def _basis_pairs(n: int, ordered: bool) -> Iterable[tuple[Forest, Forest]]:
    nonempty = fo.enumerate_forests(n)[1:]
    for i, w1 in enumerate(nonempty):
        for j, w2 in enumerate(nonempty):
            if not ordered and j < i:
                continue
            if fo.order(w1) + fo.order(w2) <= n:
                yield w1, w2


def _evaluate(a: Series, terms: BasisTerms) -> Fraction:
    return sum((c * a[w] for w, c in terms), Fraction(0))


def is_character(a: Series, H: HopfStructure = HopfStructure.H_N) -> bool:
    """``a(w1 w2) = a(w1) a(w2)`` for every basis pair inside the truncation."""
    if a.constant != 1:
        return False
    for w1, w2 in _basis_pairs(a.order, ordered=not H.commutative):
        if _evaluate(a, H.product(w1, w2)) != a[w1] * a[w2]:
            return False
    return True


def is_infinitesimal_character(a: Series, H: HopfStructure = HopfStructure.H_N) -> bool:
    """``a`` kills the empty forest and every product of two non-empty forests."""
    if a.constant != 0:
        return False
    for w1, w2 in _basis_pairs(a.order, ordered=not H.commutative):
        if _evaluate(a, H.product(w1, w2)) != 0:
            return False
    return True


def log_star(a: Series, H: HopfStructure = HopfStructure.H_N) -> Series:
    """Convolution logarithm ``sum (-1)^(k+1) (a - eps)^{*k} / k``."""
    if a.constant != 1:
        raise BadConstantTerm("log_star needs a(1) = 1")
    n = a.order
    x = a - epsilon(n)
    result = Series.zero(n)
    power = epsilon(n)
    for k in range(1, n + 1):
        power = convolve_functionals(power, x, H)
        if power.is_zero():
            break
        result = result + power * Fraction((-1) ** (k + 1), k)
    return result


def exp_star(b: Series, H: HopfStructure = HopfStructure.H_N) -> Series:
    """Convolution exponential ``sum b^{*k} / k!``."""
    if b.constant != 0:
        raise BadConstantTerm("exp_star needs b(1) = 0")
    n = b.order
    result = epsilon(n)
    power = epsilon(n)
    for k in range(1, n + 1):
        power = convolve_functionals(power, b, H) / k
        if power.is_zero():
            break
        result = result + power
    return result
