"""Grading operator, Eulerian and Dynkin idempotents, Bell polynomials, Q.

The grading operator multiplies a forest by its number of vertices (not by
its number of trees); on words of single vertices the two agree.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from . import forest as fo
from .errors import BadConstantTerm, OrderMismatch
from .hopf import (
    HopfStructure,
    antipode_endomorphism,
    convolve_endomorphisms,
    convolve_functionals,
    epsilon,
)
from .series import Endomorphism, Number, Series, as_fraction, format_fraction

__all__ = [
    "Endomorphism",
    "BellElement",
    "render_bell",
    "grading_Y",
    "grading_Y_inverse",
    "eulerian",
    "dynkin",
    "dynkin_projection",
    "compose_functional_endo",
    "bell",
    "bell_part",
    "q_polynomial",
    "q_part",
    "q_operator",
]


def grading_Y(order: int) -> Endomorphism:
    return Endomorphism.from_function(order, lambda w: Series.basis(w, order, fo.order(w)))


def grading_Y_inverse(order: int) -> Endomorphism:
    """``w / |w|`` on non-empty forests, 0 on the empty forest."""
    return Endomorphism.from_function(
        order, lambda w: Series.basis(w, order, Fraction(1, fo.order(w))) if w else Series.zero(order)
    )


@lru_cache(maxsize=None)
def eulerian(order: int) -> Endomorphism:
    """``e = log*(Id) = J - J*J/2 + J*J*J/3 - ...`` in End(H_N), ``J = Id - delta``."""
    H = HopfStructure.H_N
    J = Endomorphism.identity(order) - Endomorphism.unit_counit(order)
    result = J
    power = J
    for k in range(2, order + 1):
        power = convolve_endomorphisms(power, J, H)
        result = result + power * Fraction((-1) ** (k + 1), k)
    return result


@lru_cache(maxsize=None)
def dynkin(order: int) -> Endomorphism:
    """``D = S * Y`` in End(H_SH)."""
    S = antipode_endomorphism(order, HopfStructure.H_SH)
    return convolve_endomorphisms(S, grading_Y(order), HopfStructure.H_SH)


@lru_cache(maxsize=None)
def dynkin_projection(order: int) -> Endomorphism:
    """``Y^-1 o D``."""
    return grading_Y_inverse(order).compose(dynkin(order))


def compose_functional_endo(a: Series, f: Endomorphism) -> Series:
    """The functional ``w -> a(f(w))``."""
    if a.order != f.order:
        raise OrderMismatch(f"functional of order {a.order} composed with endomorphism of order {f.order}")
    out = {}
    for w, img in f.images.items():
        v = sum((c * a[u] for u, c in img.items()), Fraction(0))
        if v:
            out[w] = v
    return Series(a.order, out)


# ---------------------------------------------------------------------------
# non-commutative Bell polynomials

Word = tuple[int, ...]


class BellElement:
    """Non-commutative polynomial in letters ``d1, d2, ...``; words are index tuples."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Number] | Iterable[tuple[Word, Number]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = defaultdict(Fraction)
        for word, c in items:
            word = tuple(int(j) for j in word)
            if any(j < 1 for j in word):
                raise ValueError(f"letter indices start at 1, got {word}")
            acc[word] += as_fraction(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def one(cls) -> BellElement:
        return cls({(): 1})

    @classmethod
    def letter(cls, j: int) -> BellElement:
        return cls({(j,): 1})

    def __getitem__(self, word: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Word, Fraction]]:
        """Longest words first, then lexicographic in the letter indices."""
        return sorted(self._terms.items(), key=lambda kv: (-len(kv[0]), kv[0]))

    def __add__(self, other: BellElement) -> BellElement:
        return BellElement(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: BellElement) -> BellElement:
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, BellElement):
            acc: dict[Word, Fraction] = defaultdict(Fraction)
            for u, c in self._terms.items():
                for v, d in other._terms.items():
                    acc[u + v] += c * d
            return BellElement(acc)
        c = as_fraction(other)
        return BellElement({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c: Number) -> BellElement:
        return self * c

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BellElement):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return f"BellElement({render_bell(self)})"

    @staticmethod
    def weight(word: Word) -> int:
        return sum(word)

    def homogeneous(self, n: int) -> BellElement:
        return BellElement({k: v for k, v in self._terms.items() if sum(k) == n})

    def part(self, k: int) -> BellElement:
        """Words of length ``k``."""
        return BellElement({w: v for w, v in self._terms.items() if len(w) == k})

    def derivative(self) -> BellElement:
        """The derivation ``d_i -> d_{i+1}`` extended by the Leibniz rule."""
        acc: dict[Word, Fraction] = defaultdict(Fraction)
        for word, c in self._terms.items():
            for i, j in enumerate(word):
                acc[word[:i] + (j + 1,) + word[i + 1:]] += c
        return BellElement(acc)

    def rescale(self, weights: Mapping[int, Fraction] | None = None) -> BellElement:
        """Substitute ``d_j -> j! d_j`` (or the given per-letter weights)."""
        out = {}
        for word, c in self._terms.items():
            for j in word:
                c = c * (weights[j] if weights is not None else factorial(j))
            out[word] = c
        return BellElement(out)

    def to_json(self) -> dict:
        return {"terms": [{"word": list(w), "coeff": format_fraction(c)} for w, c in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> BellElement:
        return cls((tuple(t["word"]), Fraction(t["coeff"])) for t in data["terms"])


def render_bell(b: BellElement) -> str:
    """``d1^3 + 2 d1 d2 + d2 d1 + d3``; the empty word prints as ``1``."""
    from .series import _render_terms

    def label(word: Word) -> str:
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            run = j - i
            parts.append(f"d{word[i]}" + (f"^{run}" if run > 1 else ""))
            i = j
        return " ".join(parts)

    return _render_terms((label(w), c) for w, c in b.items())


@lru_cache(maxsize=None)
def bell(n: int) -> BellElement:
    """``B_0 = 1``, ``B_n = (d1 + ∂) B_{n-1}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return BellElement.one()
    prev = bell(n - 1)
    return BellElement.letter(1) * prev + prev.derivative()


def bell_part(n: int, k: int) -> BellElement:
    return bell(n).part(k)


@lru_cache(maxsize=None)
def q_polynomial(n: int) -> BellElement:
    """``Q_n = B_n(1! d1, 2! d2, ...) / n!``; ``Q_0 = 1``."""
    return bell(n).rescale() * Fraction(1, factorial(n))


def q_part(n: int, k: int) -> BellElement:
    return q_polynomial(n).part(k)


def q_operator(gamma: Series) -> Series:
    """Evaluate ``sum_n Q_n`` at ``d_j -> gamma_j``, words -> convolution in H_SH.

    ``gamma_j`` is the degree-``j`` part of ``gamma``.  Maps infinitesimal
    characters to characters.
    """
    if gamma.constant != 0:
        raise BadConstantTerm("Q needs gamma(1) = 0")
    N = gamma.order
    H = HopfStructure.H_SH
    parts = {j: gamma.homogeneous(j) for j in range(1, N + 1)}
    products: dict[Word, Series] = {(): epsilon(N)}

    def word_value(word: Word) -> Series:
        if word not in products:
            products[word] = convolve_functionals(word_value(word[:-1]), parts[word[-1]], H)
        return products[word]

    result = epsilon(N)
    for n in range(1, N + 1):
        for word, c in q_polynomial(n).items():
            if any(parts[j].is_zero() for j in word):
                continue
            result = result + word_value(word) * c
    return result
