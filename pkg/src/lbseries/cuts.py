"""Left admissible cuts, the cut formula for Delta_N, and pruning.

An elementary left cut removes a leftmost-contiguous run of the child
subtrees of one vertex.  An admissible cut is a set of elementary cuts at
distinct vertices such that no root path crosses two of them.  The pruned
blocks of an admissible cut are word-shuffled together (each block keeps its
internal tree order); the remainder is the tree still holding the root.

Forests are cut through the planted tree ``B+(w)``.  Vertex addresses are
child-index paths from the root of whatever tree is being cut; for a forest
that root is the added one, so the forest's trees sit at ``(0,), (1,), ...``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import forest as fo
from .errors import NotATree
from .forest import Forest, Tree
from .hopf import TensorSeries
from .series import Series, shuffle_basis


@dataclass(frozen=True)
class ElementaryCut:
    vertex: tuple[int, ...]
    prefix_count: int


@dataclass(frozen=True)
class AdmissibleCut:
    cuts: tuple[ElementaryCut, ...]
    blocks: tuple[Forest, ...]   # pruned word of each elementary cut, same order as ``cuts``
    remainder: Tree

    @property
    def pruned(self) -> dict[Forest, Fraction]:
        """Shuffle of the blocks, as forest -> multiplicity."""
        return _shuffle_blocks(self.blocks)


def _shuffle_blocks(blocks: tuple[Forest, ...]) -> dict[Forest, Fraction]:
    acc: dict[Forest, Fraction] = {fo.EMPTY: Fraction(1)}
    for block in blocks:
        nxt: dict[Forest, Fraction] = defaultdict(Fraction)
        for w, c in acc.items():
            for v, d in shuffle_basis(w, block):
                nxt[v] += c * d
        acc = nxt
    return dict(acc)


@lru_cache(maxsize=None)
def _admissible(tree: Tree) -> tuple[tuple[tuple[ElementaryCut, ...], tuple[Forest, ...], Tree], ...]:
    """All admissible cuts of ``tree`` with addresses relative to its root."""
    kids = fo.children(tree)
    out = []
    for k in range(len(kids) + 1):
        here = (ElementaryCut((), k),) if k else ()
        block = ("".join(kids[:k]),) if k else ()
        options = []
        for i, child in enumerate(kids[k:], start=k):
            options.append([
                (tuple(ElementaryCut((i,) + c.vertex, c.prefix_count) for c in cuts), blocks, rem)
                for cuts, blocks, rem in _admissible(child)
            ])
        for combo in product(*options):
            cuts = here + sum((c for c, _, _ in combo), ())
            blocks = block + sum((b for _, b, _ in combo), ())
            rem = fo.b_plus("".join(r for _, _, r in combo))
            out.append((cuts, blocks, rem))
    return tuple(out)


def admissible_cuts(tree: Tree) -> list[AdmissibleCut]:
    """Every admissible cut of a tree (empty cut included, full cut excluded)."""
    if not fo.is_tree(tree):
        raise NotATree(f"{fo.render(tree)!r} is not a single tree")
    return [AdmissibleCut(*entry) for entry in _admissible(tree)]


def elementary_cuts(tree: Tree) -> list[tuple[Forest, Tree]]:
    """``(pruned, remainder)`` for the empty cut and each single elementary cut."""
    cuts = [c for c in admissible_cuts(tree) if len(c.cuts) <= 1]
    cuts.sort(key=lambda c: (len(c.cuts), [(e.vertex, e.prefix_count) for e in c.cuts]))
    return [(c.blocks[0] if c.blocks else fo.EMPTY, c.remainder) for c in cuts]


def forest_cuts(w: Forest, include_full: bool = False) -> list[AdmissibleCut]:
    """Admissible cuts of the planted tree ``B+(w)``.

    Without ``include_full`` the added root keeps all its branches: these are
    the cuts dual to grafting (LAC).  With it, leftmost runs of the forest's
    own trees may be cut off as well, which yields FLAC; removing every tree
    is the full cut.  For a single tree this is exactly LAC plus the full cut.
    """
    out = []
    for cut in admissible_cuts(fo.b_plus(w)):
        at_root = [c for c in cut.cuts if c.vertex == ()]
        if at_root and not include_full:
            continue
        out.append(cut)
    return out


def left_admissible_cuts(w: Forest, include_full: bool = False) -> list[tuple[Series, Forest]]:
    """``(P^c(w), R^c(w))`` per cut; ``P`` is a Series because blocks shuffle."""
    n = fo.order(w)
    return [(Series(n, cut.pruned), cut.remainder[1:-1]) for cut in forest_cuts(w, include_full)]


@lru_cache(maxsize=None)
def _dn_cuts(w: Forest) -> tuple[tuple[tuple[Forest, Forest], Fraction], ...]:
    acc: dict[tuple[Forest, Forest], Fraction] = defaultdict(Fraction)
    for cut in forest_cuts(w, include_full=True):
        rem = cut.remainder[1:-1]
        for p, c in cut.pruned.items():
            acc[(p, rem)] += c
    return tuple((k, c) for k, c in acc.items() if c)


def coproduct_dn_cuts(w: Forest, order: int | None = None) -> TensorSeries:
    """``Delta_N`` as the sum of ``P (x) R`` over FLAC(w)."""
    return TensorSeries(fo.order(w) if order is None else order, _dn_cuts(w))


@lru_cache(maxsize=None)
def lac_terms(w: Forest) -> tuple[tuple[tuple[Forest, Forest], Fraction], ...]:
    """LAC(w) flattened to ``((pruned forest, remainder), multiplicity)``."""
    acc: dict[tuple[Forest, Forest], Fraction] = defaultdict(Fraction)
    for cut in forest_cuts(w):
        rem = cut.remainder[1:-1]
        for p, c in cut.pruned.items():
            acc[(p, rem)] += c
    return tuple((k, c) for k, c in acc.items() if c)


def prune(nu: Series | Forest, w: Forest, order: int | None = None) -> Series:
    """``P_nu(w) = sum over LAC(w) of <nu, P^c(w)> R^c(w)``; dual to grafting by ``nu``."""
    n = fo.order(w) if order is None else order
    if isinstance(nu, str):
        nu = Series(max(n, fo.order(nu)), {nu: 1})
    acc: dict[Forest, Fraction] = defaultdict(Fraction)
    for (p, rem), c in lac_terms(w):
        x = nu[p]
        if x:
            acc[rem] += c * x
    return Series(n, acc)


def cut_count_bruteforce(tree: Tree) -> int:
    """Number of admissible cuts found by filtering all edge subsets.

    Independent of :func:`_admissible`; kept for tests and table dumps.
    """
    edges = []  # (parent address, child index)

    def walk(t: Tree, addr: tuple[int, ...]) -> None:
        for i, child in enumerate(fo.children(t)):
            edges.append((addr, i))
            walk(child, addr + (i,))

    walk(tree, ())
    count = 0
    for mask in range(1 << len(edges)):
        chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        chosen_set = set(chosen)
        ok = True
        for parent, i in chosen:
            # leftmost-prefix rule at each vertex
            if any((parent, j) not in chosen_set for j in range(i)):
                ok = False
                break
            # no cut edge below another cut edge
            child = parent + (i,)
            for p2, j in chosen:
                below = p2 + (j,)
                if below != child and below[: len(child)] == child:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count
