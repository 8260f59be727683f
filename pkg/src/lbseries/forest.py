"""Planar rooted forests as balanced-parentheses words.

A forest is stored as a plain ``str``: the empty forest is ``""``,
``B+(w)`` is ``"(" + w + ")"`` and a forest is the concatenation of the
words of its trees.  With this encoding word concatenation *is* forest
concatenation, and two forests are equal exactly when their words are.

    >>> b_plus("()(())")
    '(()(()))'
    >>> magma_split("()(())")
    ('()', '()')
"""
from __future__ import annotations

from functools import lru_cache

from .errors import EmptyForest, IllegalCharacter, MalformedWord, NotATree

Forest = str
Tree = str

EMPTY: Forest = ""
DOT: Tree = "()"


def parse(text: str) -> Forest:
    """Validate a parentheses literal and return its canonical word.

    Whitespace is ignored.  ``"1"`` is accepted as a spelling of the empty
    forest, since that is how the empty forest is rendered in text output.
    """
    word = "".join(text.split())
    if word == "1":
        return EMPTY
    depth = 0
    for pos, ch in enumerate(word):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise MalformedWord(f"unmatched ')' at position {pos} in {text!r}")
        else:
            raise IllegalCharacter(f"illegal character {ch!r} in forest literal {text!r}")
    if depth != 0:
        raise MalformedWord(f"{depth} unclosed '(' in {text!r}")
    return word


def render(w: Forest) -> str:
    """Text form of a forest; the empty forest prints as ``1``."""
    return w if w else "1"


def order(w: Forest) -> int:
    """Number of vertices."""
    return w.count("(")


@lru_cache(maxsize=None)
def trees(w: Forest) -> tuple[Tree, ...]:
    """Split a forest into its top-level trees, left to right."""
    out = []
    depth = 0
    start = 0
    for i, ch in enumerate(w):
        depth += 1 if ch == "(" else -1
        if depth == 0:
            out.append(w[start:i + 1])
            start = i + 1
    return tuple(out)


def length(w: Forest) -> int:
    """Number of top-level trees."""
    return len(trees(w))


def is_tree(w: Forest) -> bool:
    return len(trees(w)) == 1


def b_plus(w: Forest) -> Tree:
    return "(" + w + ")"


def b_minus(t: Tree) -> Forest:
    if not is_tree(t):
        raise NotATree(f"{render(t)!r} is not a single tree")
    return t[1:-1]


def children(t: Tree) -> tuple[Tree, ...]:
    """Branches of a tree, i.e. the trees of ``b_minus(t)``."""
    return trees(b_minus(t))


def concat(w1: Forest, w2: Forest) -> Forest:
    return w1 + w2


def magma_times(w1: Forest, w2: Forest) -> Forest:
    """``w1 x w2 = w1 B+(w2)``."""
    return w1 + "(" + w2 + ")"


def magma_split(w: Forest) -> tuple[Forest, Forest]:
    """Inverse of :func:`magma_times`: ``(left part, right part)``."""
    if not w:
        raise EmptyForest("the empty forest has no magma decomposition")
    last = trees(w)[-1]
    return w[: len(w) - len(last)], last[1:-1]


def sort_key(w: Forest) -> tuple[int, str]:
    """Graded-lexicographic key; ``'(' < ')'`` already holds in ASCII."""
    return (order(w), w)


@lru_cache(maxsize=None)
def forests_of_order(n: int) -> tuple[Forest, ...]:
    """All forests with exactly ``n`` vertices, in canonical order."""
    if n < 0:
        raise ValueError("order must be non-negative")
    if n == 0:
        return (EMPTY,)
    out = []
    # w = left x right with |left| + |right| = n - 1
    for k in range(n):
        for left in forests_of_order(k):
            for right in forests_of_order(n - 1 - k):
                out.append(magma_times(left, right))
    return tuple(sorted(out))


def enumerate_forests(n: int) -> list[Forest]:
    """All forests of order at most ``n``: graded, then lexicographic."""
    if n < 0:
        raise ValueError("order must be non-negative")
    out: list[Forest] = []
    for k in range(n + 1):
        out.extend(forests_of_order(k))
    return out


def trees_of_order(n: int) -> tuple[Tree, ...]:
    if n < 1:
        return ()
    return tuple(b_plus(w) for w in forests_of_order(n - 1))
