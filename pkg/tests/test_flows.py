import random
from fractions import Fraction

import pytest

from lbseries import forest as fo
from lbseries import golden
from lbseries.checks import random_character
from lbseries.errors import BadRepresentation
from lbseries.flows import (
    FlowRepresentation,
    alpha_exact,
    backward_error,
    builtin_method,
    convert,
    gamma_exact,
    method_euler,
    method_midpoint,
    midpoint_sigma,
)
from lbseries.hopf import is_character, is_infinitesimal_character
from lbseries.idempotents import grading_Y_inverse, q_operator
from lbseries.serialize import random_infinitesimal
from lbseries.series import Series, b_plus_series, concat_product, exponential, pairing
from lbseries.substitution import solve_substitution, substitute

T1, T2, T3 = FlowRepresentation.TYPE1, FlowRepresentation.TYPE2, FlowRepresentation.TYPE3
DOT = "()"


def test_gamma_exact_reference():
    assert gamma_exact(5) == golden.exact_flow_type3()


def test_gamma_exact_low_orders():
    assert gamma_exact(3) == Series(3, {DOT: 1, "(())": Fraction(1, 2), "(()())": Fraction(1, 6),
                                        "((()))": Fraction(1, 6)})
    assert gamma_exact(5)["(()(()))"] == Fraction(2, 24)
    for w in ["(()()(()))", "((())(()))", "(()(()()))", "(()((())))"]:
        assert gamma_exact(5)[w] == Fraction(3, 120)
    assert gamma_exact(0) == Series.zero(0)


@pytest.mark.parametrize("n", range(7))
def test_gamma_exact_is_a_fixed_point(n):
    g = gamma_exact(n)
    assert grading_Y_inverse(n)(b_plus_series(q_operator(g))) == g


def test_gamma_exact_has_only_trees_and_no_commutators():
    g = gamma_exact(5)
    assert all(fo.is_tree(w) for w in g.forests())
    words = fo.enumerate_forests(5)[1:]
    for u in words:
        for v in words:
            if fo.order(u) + fo.order(v) <= 5:
                bracket = concat_product(Series.basis(u, 5), Series.basis(v, 5)) - \
                    concat_product(Series.basis(v, 5), Series.basis(u, 5))
                assert sum((c * g[w] for w, c in bracket.items()), Fraction(0)) == 0


def test_alpha_exact():
    assert alpha_exact(2) == Series(2, {"": 1, DOT: 1, "()()": Fraction(1, 2), "(())": Fraction(1, 2)})
    assert is_character(alpha_exact(5))
    assert pairing(alpha_exact(4), "(())") == Fraction(1, 2)
    for n in range(6):
        assert alpha_exact(n) == exponential(Series.basis(DOT, n), "gl")


def test_euler():
    e = method_euler(4)
    assert pairing(e, "()()") == Fraction(1, 2)
    assert pairing(e, "(())") == 0
    assert is_character(e)
    assert convert(e, T1, T3) == Series.basis(DOT, 4)
    assert backward_error(e) == golden.euler_modified_field()


def test_midpoint_coefficients():
    sigma = midpoint_sigma(4)
    assert sigma[DOT] == 1
    assert sigma["(())"] == Fraction(1, 2)
    assert sigma["(()())"] == Fraction(1, 8)
    assert sigma["((()))"] == Fraction(1, 4)
    assert sigma["(((())))"] == Fraction(1, 8)
    assert is_infinitesimal_character(sigma)
    alpha = method_midpoint(4)
    assert is_character(alpha)
    for t in fo.trees_of_order(3) + fo.trees_of_order(4):
        assert alpha[t] == sigma[t]


@pytest.mark.parametrize("method", [method_euler, method_midpoint, alpha_exact])
def test_backward_error_resubstitutes(method):
    alpha = method(4)
    beta = backward_error(alpha)
    assert is_infinitesimal_character(beta)
    assert substitute(beta, alpha_exact(4), strict=True) == alpha
    assert solve_substitution(alpha, alpha_exact(4)) == beta


def test_backward_error_of_exact_flow_is_the_field():
    assert backward_error(alpha_exact(5)) == Series.basis(DOT, 5)


@pytest.mark.parametrize("seed", range(3))
def test_backward_error_on_random_orbit_elements(seed):
    rng = random.Random(seed)
    a = random_infinitesimal(4, rng)
    a = a + Series.basis(DOT, 4, 1 - a[DOT])
    alpha = substitute(a, alpha_exact(4))
    assert backward_error(alpha) == a


def test_backward_error_rejects_non_characters():
    with pytest.raises(BadRepresentation):
        backward_error(Series.basis(DOT, 3))


@pytest.mark.parametrize("seed", range(3))
def test_conversion_round_trips(seed):
    rng = random.Random(seed)
    alpha = random_character(5, rng)
    for rep in (T2, T3):
        there = convert(alpha, T1, rep)
        assert is_infinitesimal_character(there)
        assert convert(there, rep, T1) == alpha
    beta = convert(alpha, T1, T2)
    assert convert(convert(beta, T2, T3), T3, T2) == beta


def test_convert_examples_and_errors():
    assert convert(exponential(Series.basis(DOT, 4)), 1, 3) == Series.basis(DOT, 4)
    assert convert(Series.basis(DOT, 4), "TYPE2", "TYPE1") == alpha_exact(4)
    assert convert(alpha_exact(3), 1, 1) == alpha_exact(3)
    with pytest.raises(BadRepresentation):
        convert(Series.basis(DOT, 3), 1, 2)
    with pytest.raises(BadRepresentation):
        convert(Series.basis("()()", 3), 2, 1)
    with pytest.raises(BadRepresentation):
        convert(Series.one(3), 3, 1)
    with pytest.raises(BadRepresentation):
        FlowRepresentation.parse("7")
    with pytest.raises(BadRepresentation):
        builtin_method("rk4", 3)
