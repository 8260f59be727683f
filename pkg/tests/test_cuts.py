import pytest
from hypothesis import given

from lbseries import forest as fo
from lbseries import golden
from lbseries.cuts import (
    admissible_cuts,
    coproduct_dn_cuts,
    cut_count_bruteforce,
    elementary_cuts,
    left_admissible_cuts,
    prune,
)
from lbseries.errors import NotATree
from lbseries.hopf import TensorSeries, coproduct_dn
from lbseries.series import Series, graft

from conftest import forests_up_to


def test_elementary_cuts_examples():
    assert set(elementary_cuts("(()(()))")) == {
        ("", "(()(()))"), ("()", "((()))"), ("()(())", "()"), ("()", "(()())")}
    assert elementary_cuts("()") == [("", "()")]
    assert elementary_cuts("(())") == [("", "(())"), ("()", "()")]
    with pytest.raises(NotATree):
        elementary_cuts("()()")


def test_left_admissible_cuts_of_a_tree():
    got = {(tuple(p.items()), r) for p, r in left_admissible_cuts("(()(()))")}
    n = 4
    want = {
        (tuple(Series.basis("", n).items()), "(()(()))"),
        (tuple(Series.basis("()", n).items()), "((()))"),
        (tuple(Series.basis("()(())", n).items()), "()"),
        (tuple(Series.basis("()", n).items()), "(()())"),
        (tuple(Series(n, {"()()": 2}).items()), "(())"),
    }
    assert got == {(tuple(Series(4, dict(p)).items()), r) for p, r in want}
    assert len(left_admissible_cuts("(()(()))")) == 5


def test_cuts_of_empty_forest():
    assert [(p.terms, r) for p, r in left_admissible_cuts("", include_full=True)] == [({"": 1}, "")]


def test_full_cuts_sum_to_dn():
    total = TensorSeries(3, [((w, r), c) for p, r in left_admissible_cuts("()(())", include_full=True)
                             for w, c in p.items()])
    assert total == golden.dn_table()["()(())"]


@pytest.mark.parametrize("w", list(golden.dn_table()))
def test_cut_coproduct_reference_table(w):
    assert coproduct_dn_cuts(w) == golden.dn_table()[w]


def test_cut_coproduct_examples():
    assert coproduct_dn_cuts("") == TensorSeries(0, {("", ""): 1})
    assert coproduct_dn_cuts("(())") == coproduct_dn("(())")


@given(forests_up_to(5))
def test_cut_formula_agrees_with_recursion(w):
    assert coproduct_dn_cuts(w) == coproduct_dn(w)


@pytest.mark.parametrize("n", range(1, 7))
def test_admissible_cut_counts_match_brute_force(n):
    for t in fo.trees_of_order(n):
        assert len(admissible_cuts(t)) == cut_count_bruteforce(t), t


def test_remainder_keeps_the_root():
    for t in fo.trees_of_order(5):
        for cut in admissible_cuts(t):
            assert fo.is_tree(cut.remainder)
            assert fo.order(cut.remainder) + sum(fo.order(bl) for bl in cut.blocks) == 5


def test_prune_examples():
    assert prune("()", "(())") == Series.basis("()", 2)
    for w in fo.enumerate_forests(4):
        assert prune("", w) == Series.basis(w, fo.order(w))
    assert prune("()", "(()(()))") == Series(4, {"((()))": 1, "(()())": 1})


@pytest.mark.parametrize("n", range(1, 6))
def test_pruning_dual_to_grafting(n):
    words = fo.enumerate_forests(n)
    for nu in words:
        for u in words:
            if fo.order(nu) + fo.order(u) != n:
                continue
            grafted = graft(Series.basis(nu, n), Series.basis(u, n))
            for w in fo.forests_of_order(n):
                assert grafted[w] == prune(nu, w, n)[u]
