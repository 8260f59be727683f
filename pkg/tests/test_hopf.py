import random
from collections import defaultdict
from fractions import Fraction

import pytest
from hypothesis import given

from lbseries import forest as fo
from lbseries import golden
from lbseries.checks import random_character
from lbseries.errors import BadConstantTerm
from lbseries.hopf import (
    HopfStructure,
    TensorSeries,
    antipode_endomorphism,
    antipode_generic,
    antipode_shuffle,
    convolve_endomorphisms,
    convolve_functionals,
    coproduct_deconcat,
    coproduct_deshuffle,
    coproduct_dn,
    dn_basis,
    epsilon,
    exp_star,
    is_character,
    is_infinitesimal_character,
    log_star,
    render_tensor,
)
from lbseries.series import Endomorphism, Series, exponential, shuffle_product

from conftest import forests_up_to

H_SH, H_N, CD = HopfStructure.H_SH, HopfStructure.H_N, HopfStructure.CONCAT_DESH


def T(terms, order=4):
    return TensorSeries(order, terms)


def test_deconcat_examples():
    assert coproduct_deconcat("") == T({("", ""): 1}, 0)
    assert coproduct_deconcat("()(())") == T({("", "()(())"): 1, ("()", "(())"): 1, ("()(())", ""): 1}, 3)
    assert coproduct_deconcat("(())") == T({("", "(())"): 1, ("(())", ""): 1}, 2)


def test_deshuffle_examples():
    assert coproduct_deshuffle("()") == T({("()", ""): 1, ("", "()"): 1}, 1)
    assert coproduct_deshuffle("()()") == T({("()()", ""): 1, ("()", "()"): 2, ("", "()()"): 1}, 2)
    assert coproduct_deshuffle("") == T({("", ""): 1}, 0)


def test_dn_examples():
    assert coproduct_dn("(())") == T({("(())", ""): 1, ("()", "()"): 1, ("", "(())"): 1}, 2)
    assert coproduct_dn("()(())") == T({
        ("()(())", ""): 1, ("()()", "()"): 2, ("()", "(())"): 1, ("()", "()()"): 1, ("", "()(())"): 1}, 3)


def test_render_tensor():
    assert render_tensor(coproduct_dn("(())")) == "(())⊗1 + ()⊗() + 1⊗(())"


@pytest.mark.parametrize("w", list(golden.dn_table()))
def test_dn_reference_table(w):
    assert coproduct_dn(w) == golden.dn_table()[w]


@given(forests_up_to(5))
def test_dn_counit_and_primitive_ends(w):
    t = coproduct_dn(w)
    assert t[(w, "")] == 1 and t[("", w)] == 1
    for (l, r), _ in t.items():
        assert fo.order(l) + fo.order(r) == fo.order(w)


def _coassociative(basis, w):
    left, right = defaultdict(Fraction), defaultdict(Fraction)
    for (x, y), c in basis(w):
        for (p, q), d in basis(x):
            left[(p, q, y)] += c * d
        for (p, q), d in basis(y):
            right[(x, p, q)] += c * d
    clean = lambda d: {k: v for k, v in d.items() if v}
    return clean(left) == clean(right)


@pytest.mark.parametrize("H", [H_SH, H_N, CD])
def test_coassociativity(H):
    for w in fo.enumerate_forests(5):
        assert _coassociative(H.coproduct, w), w


@pytest.mark.parametrize("H", [H_SH, H_N])
@given(u=forests_up_to(2), v=forests_up_to(2))
def test_coproduct_is_shuffle_multiplicative(H, u, v):
    """Delta(u ⧢ v) = Delta(u) ⧢ Delta(v) with the componentwise shuffle."""
    n = fo.order(u) + fo.order(v)
    lhs = defaultdict(Fraction)
    for w, c in shuffle_product(Series.basis(u, n), Series.basis(v, n)).items():
        for k, d in H.coproduct(w):
            lhs[k] += c * d
    rhs = defaultdict(Fraction)
    for (a, b), c in H.coproduct(u):
        for (x, y), d in H.coproduct(v):
            for p, e in shuffle_product(Series.basis(a, n), Series.basis(x, n)).items():
                for q, f in shuffle_product(Series.basis(b, n), Series.basis(y, n)).items():
                    rhs[(p, q)] += c * d * e * f
    assert TensorSeries(n, lhs) == TensorSeries(n, rhs)


def test_antipode_shuffle_examples():
    assert antipode_shuffle("()") == Series.basis("()", 1, -1)
    assert antipode_shuffle("()(())") == Series.basis("(())()", 3)
    assert antipode_shuffle("") == Series.one(0)


def test_antipode_generic_examples():
    assert antipode_generic("()", H_N) == Series.basis("()", 1, -1)
    for w in fo.enumerate_forests(4):
        assert antipode_generic(w, H_SH) == antipode_shuffle(w)


@pytest.mark.parametrize("H", [H_SH, H_N, CD])
def test_antipode_axiom(H):
    n = 4
    S = antipode_endomorphism(n, H) if H is not H_N else Endomorphism.from_function(
        n, lambda w: antipode_generic(w, H, n))
    ident = Endomorphism.identity(n)
    unit = Endomorphism.unit_counit(n)
    assert convolve_endomorphisms(S, ident, H) == unit
    assert convolve_endomorphisms(ident, S, H) == unit


def test_convolution_examples():
    a = Series.basis("()", 4)
    s = Series(4, {"()": 3, "(())": -1, "()()": Fraction(1, 2)})
    assert convolve_functionals(epsilon(4), s, H_N) == s
    sh = convolve_functionals(a, a, H_SH)
    assert sh["()()"] == 1 and sh["(())"] == 0
    assert convolve_functionals(a, a, H_N)["(())"] == 1
    ident = Endomorphism.identity(4)
    unit = Endomorphism.unit_counit(4)
    assert convolve_endomorphisms(unit, ident, H_N) == ident
    assert convolve_endomorphisms(ident, ident, H_N).image("(())") == Series(4, {"(())": 2, "()()": 2})


def test_character_examples():
    assert is_character(exponential(Series.basis("()", 4)), H_N)
    assert is_infinitesimal_character(Series.basis("()", 4))
    assert not is_infinitesimal_character(Series.basis("()()", 4))
    assert not is_character(Series.basis("()", 4))


def test_log_exp_examples():
    assert log_star(epsilon(4)).is_zero()
    beta = log_star(exponential(Series.basis("()", 4)), H_N)
    assert beta == golden.euler_modified_field()
    with pytest.raises(BadConstantTerm):
        log_star(Series.zero(3))
    with pytest.raises(BadConstantTerm):
        exp_star(Series.one(3))


@pytest.mark.parametrize("seed", range(3))
def test_log_exp_round_trip_on_random_characters(seed):
    alpha = random_character(5, random.Random(seed))
    assert is_character(alpha)
    b = log_star(alpha)
    assert is_infinitesimal_character(b)
    assert exp_star(b) == alpha


@pytest.mark.parametrize("seed", range(3))
def test_characters_closed_under_convolution(seed):
    rng = random.Random(seed)
    x, y = random_character(5, rng), random_character(5, rng)
    assert is_character(convolve_functionals(x, y, H_N))
    assert is_character(convolve_functionals(x, y, H_SH))


def test_dn_cached_terms_sorted():
    terms = dn_basis("()(())")
    assert terms[0][0] == ("()(())", "")
    assert terms[-1][0] == ("", "()(())")
