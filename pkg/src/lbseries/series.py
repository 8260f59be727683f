"""Truncated series over planar forests with exact rational coefficients.

A :class:`Series` of truncation order ``N`` is a finite map forest ->
Fraction whose keys all have order <= N.  Through the orthonormal pairing
of forests the same object serves as a vector and as a linear functional,
so ``a[w]`` is both "coefficient of w" and "a evaluated at w".

Every bilinear product below is graded (the order of a product term is the
sum of the orders of the factors) and silently drops terms above ``N``.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Union

from . import forest as fo
from .errors import BadConstantTerm, OrderMismatch
from .forest import Forest

Number = Union[int, Fraction, str]
BasisTerms = tuple[tuple[Forest, Fraction], ...]


def as_fraction(c: Number) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(c)


def format_fraction(c: Fraction) -> str:
    """Wire form ``p/q`` (always with a denominator)."""
    return f"{c.numerator}/{c.denominator}"


def _pack(acc: Mapping[Forest, Fraction]) -> BasisTerms:
    return tuple((w, c) for w, c in sorted(acc.items(), key=lambda kv: fo.sort_key(kv[0])) if c)


class Series:
    """Element of the span of forests of order <= ``order``.

    Treat instances as immutable; every operation returns a new one.
    """

    __slots__ = ("order", "_terms")

    def __init__(self, order: int, terms: Mapping[Forest, Number] | Iterable[tuple[Forest, Number]] = ()):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.order = order
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Forest, Fraction] = {}
        for w, c in items:
            if fo.order(w) > order:
                continue
            c = as_fraction(c)
            if c:
                clean[w] = clean.get(w, Fraction(0)) + c
        self._terms = {w: c for w, c in clean.items() if c}

    # construction helpers
    @classmethod
    def zero(cls, order: int) -> Series:
        return cls(order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls(order, {fo.EMPTY: 1})

    @classmethod
    def basis(cls, w: Forest, order: int | None = None, coeff: Number = 1) -> Series:
        return cls(fo.order(w) if order is None else order, {w: coeff})

    # mapping-like access
    def __getitem__(self, w: Forest) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def __contains__(self, w: Forest) -> bool:
        return w in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self.forests())

    def forests(self) -> list[Forest]:
        return sorted(self._terms, key=fo.sort_key)

    def items(self) -> list[tuple[Forest, Fraction]]:
        """Terms in canonical basis order."""
        return [(w, self._terms[w]) for w in self.forests()]

    @property
    def terms(self) -> dict[Forest, Fraction]:
        return dict(self._terms)

    @property
    def constant(self) -> Fraction:
        return self[fo.EMPTY]

    def is_zero(self) -> bool:
        return not self._terms

    # grading
    def homogeneous(self, n: int) -> Series:
        """Degree-``n`` component."""
        return Series(self.order, {w: c for w, c in self._terms.items() if fo.order(w) == n})

    def truncate(self, n: int) -> Series:
        return Series(n, self._terms)

    def with_order(self, n: int) -> Series:
        return Series(n, self._terms)

    # vector space structure
    def _check(self, other: Series) -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: Series) -> Series:
        self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, Fraction(0)) + c
        return Series(self.order, acc)

    def __sub__(self, other: Series) -> Series:
        return self + (-other)

    def __neg__(self) -> Series:
        return Series(self.order, {w: -c for w, c in self._terms.items()})

    def __mul__(self, c: Number) -> Series:
        if isinstance(c, Series):
            return NotImplemented
        c = as_fraction(c)
        return Series(self.order, {w: c * v for w, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c: Number) -> Series:
        return self * (1 / as_fraction(c))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self._terms == other._terms

    def __hash__(self):
        return hash((self.order, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Series(order={self.order}, {render_series(self)})"


def render_series(s: Series) -> str:
    """Canonical text, e.g. ``() - 1/2 (())``; the zero series prints ``0``."""
    return _render_terms((fo.render(w), c) for w, c in s.items())


def _render_terms(terms: Iterable[tuple[str, Fraction]]) -> str:
    out = []
    for label, c in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = label if mag == 1 else f"{mag} {label}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out) if out else "0"


# ---------------------------------------------------------------------------
# basis-level products (cached on word pairs)

@lru_cache(maxsize=None)
def shuffle_basis(w1: Forest, w2: Forest) -> BasisTerms:
    """Shuffle of two words over the alphabet of trees."""
    if not w1:
        return ((w2, Fraction(1)),)
    if not w2:
        return ((w1, Fraction(1)),)
    t1 = fo.trees(w1)[0]
    t2 = fo.trees(w2)[0]
    acc: dict[Forest, Fraction] = defaultdict(Fraction)
    for w, c in shuffle_basis(w1[len(t1):], w2):
        acc[t1 + w] += c
    for w, c in shuffle_basis(w1, w2[len(t2):]):
        acc[t2 + w] += c
    return _pack(acc)


@lru_cache(maxsize=None)
def graft_basis(left: Forest, right: Forest) -> BasisTerms:
    """Left grafting ``left -> right`` by the defining recursion.

    Besides the stated clauses this uses ``t -> B+(v) = B+(t v) + B+(t -> v)``
    for a tree ``t``, which follows from the last clause with ``w1 = ()``.
    """
    if not left:
        return ((right, Fraction(1)),)
    if not right:
        return ()
    acc: dict[Forest, Fraction] = defaultdict(Fraction)
    lt = fo.trees(left)
    if len(lt) == 1:
        rt = fo.trees(right)
        if len(rt) > 1:
            # Leibniz rule over concatenation
            pos = 0
            for t in rt:
                prefix, suffix = right[:pos], right[pos + len(t):]
                for w, c in graft_basis(left, t):
                    acc[prefix + w + suffix] += c
                pos += len(t)
        else:
            inner = right[1:-1]
            acc[fo.b_plus(left + inner)] += 1
            for w, c in graft_basis(left, inner):
                acc[fo.b_plus(w)] += c
    else:
        tau, rest = lt[0], left[len(lt[0]):]
        # (t w) -> w1 = t -> (w -> w1) - (t -> w) -> w1
        for w, c in graft_basis(rest, right):
            for w2, c2 in graft_basis(tau, w):
                acc[w2] += c * c2
        for w, c in graft_basis(tau, rest):
            for w2, c2 in graft_basis(w, right):
                acc[w2] -= c * c2
    return _pack(acc)


@lru_cache(maxsize=None)
def gl_basis(w1: Forest, w2: Forest) -> BasisTerms:
    """Grossman-Larson product ``B-(w1 -> B+(w2))``."""
    return tuple((w[1:-1], c) for w, c in graft_basis(w1, fo.b_plus(w2)))


def concat_basis(w1: Forest, w2: Forest) -> BasisTerms:
    return ((w1 + w2, Fraction(1)),)


def bilinear(s1: Series, s2: Series, basis_product: Callable[[Forest, Forest], BasisTerms]) -> Series:
    """Extend a graded basis product to truncated series."""
    s1._check(s2)
    n = s1.order
    acc: dict[Forest, Fraction] = defaultdict(Fraction)
    right = [(w, c, fo.order(w)) for w, c in s2._terms.items()]
    for w1, c1 in s1._terms.items():
        k1 = fo.order(w1)
        for w2, c2, k2 in right:
            if k1 + k2 > n:
                continue
            for w, c in basis_product(w1, w2):
                acc[w] += c1 * c2 * c
    return Series(n, acc)


# ---------------------------------------------------------------------------
# public operations

def linear_combine(c1: Number, s1: Series, c2: Number, s2: Series) -> Series:
    return s1 * c1 + s2 * c2


def pairing(a: Series, w: Forest) -> Fraction:
    return a[w]


def concat_product(s1: Series, s2: Series) -> Series:
    return bilinear(s1, s2, concat_basis)


def shuffle_product(s1: Series, s2: Series) -> Series:
    return bilinear(s1, s2, shuffle_basis)


def graft(s1: Series, s2: Series) -> Series:
    return bilinear(s1, s2, graft_basis)


def gl_product(s1: Series, s2: Series) -> Series:
    return bilinear(s1, s2, gl_basis)


PRODUCTS: dict[str, Callable[[Series, Series], Series]] = {
    "concat": concat_product,
    "shuffle": shuffle_product,
    "graft": graft,
    "gl": gl_product,
}


def _product(name: str) -> Callable[[Series, Series], Series]:
    try:
        return PRODUCTS[name]
    except KeyError:
        raise ValueError(f"unknown product {name!r}; expected one of {sorted(PRODUCTS)}") from None


def commutator(s1: Series, s2: Series, product: str = "concat") -> Series:
    mul = _product(product)
    return mul(s1, s2) - mul(s2, s1)


def b_plus_series(s: Series) -> Series:
    """Linear extension of ``B+``; raises degree by one, so the top degree is lost."""
    return Series(s.order, {fo.b_plus(w): c for w, c in s.items()})


def exponential(s: Series, product: str = "concat") -> Series:
    """``sum s^n / n!`` for ``s`` without constant term."""
    if s.constant != 0:
        raise BadConstantTerm("exponential needs a zero coefficient on the empty forest")
    mul = _product(product)
    result = Series.one(s.order)
    power = Series.one(s.order)
    for n in range(1, s.order + 1):
        power = mul(power, s) / n
        if power.is_zero():
            break
        result = result + power
    return result


def logarithm(s: Series, product: str = "concat") -> Series:
    """``sum (-1)^(n+1) (s - 1)^n / n`` for ``s`` with constant term 1."""
    if s.constant != 1:
        raise BadConstantTerm("logarithm needs coefficient 1 on the empty forest")
    mul = _product(product)
    x = s - Series.one(s.order)
    result = Series.zero(s.order)
    power = Series.one(s.order)
    for n in range(1, s.order + 1):
        power = mul(power, x)
        if power.is_zero():
            break
        result = result + power * Fraction((-1) ** (n + 1), n)
    return result


# ---------------------------------------------------------------------------

class Endomorphism:
    """Linear map on the span of forests of order <= ``order``.

    Stored as the images of basis forests; forests without an entry map to 0.
    """

    __slots__ = ("order", "images")

    def __init__(self, order: int, images: Mapping[Forest, Series]):
        self.order = order
        self.images = {}
        for w, img in images.items():
            if fo.order(w) > order:
                continue
            if img.order != order:
                raise OrderMismatch(f"image of {fo.render(w)} has order {img.order}, expected {order}")
            if not img.is_zero():
                self.images[w] = img

    @classmethod
    def from_function(cls, order: int, f: Callable[[Forest], Series]) -> Endomorphism:
        return cls(order, {w: f(w) for w in fo.enumerate_forests(order)})

    @classmethod
    def identity(cls, order: int) -> Endomorphism:
        return cls.from_function(order, lambda w: Series.basis(w, order))

    @classmethod
    def unit_counit(cls, order: int) -> Endomorphism:
        """``delta = eta o epsilon``: keeps the empty forest, kills the rest."""
        return cls(order, {fo.EMPTY: Series.one(order)})

    def image(self, w: Forest) -> Series:
        return self.images.get(w) or Series.zero(self.order)

    def __call__(self, x: Series | Forest) -> Series:
        if isinstance(x, str):
            return self.image(x)
        if x.order != self.order:
            raise OrderMismatch(f"endomorphism of order {self.order} applied to series of order {x.order}")
        acc: dict[Forest, Fraction] = defaultdict(Fraction)
        for w, c in x.items():
            img = self.images.get(w)
            if img is not None:
                for v, d in img.items():
                    acc[v] += c * d
        return Series(self.order, acc)

    def compose(self, other: Endomorphism) -> Endomorphism:
        """``self o other``."""
        if other.order != self.order:
            raise OrderMismatch("endomorphism orders differ")
        return Endomorphism(self.order, {w: self(img) for w, img in other.images.items()})

    def _check(self, other: Endomorphism) -> None:
        if other.order != self.order:
            raise OrderMismatch("endomorphism orders differ")

    def __add__(self, other: Endomorphism) -> Endomorphism:
        self._check(other)
        keys = set(self.images) | set(other.images)
        return Endomorphism(self.order, {w: self.image(w) + other.image(w) for w in keys})

    def __sub__(self, other: Endomorphism) -> Endomorphism:
        return self + other * -1

    def __mul__(self, c: Number) -> Endomorphism:
        return Endomorphism(self.order, {w: img * c for w, img in self.images.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.order == other.order and self.images == other.images

    def __repr__(self) -> str:
        return f"Endomorphism(order={self.order}, {len(self.images)} nonzero images)"
