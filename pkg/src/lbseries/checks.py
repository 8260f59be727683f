"""Golden-value and invariant checks behind ``selftest`` and the acceptance suite.

Every check takes a truncation order and a seeded RNG and raises
:class:`CheckFailed` on the first discrepancy.  Checks that have a natural
ceiling (the reference tables stop at order 4 or 5) cap the order themselves.
"""
from __future__ import annotations

import random
import sys
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, TextIO

from . import forest as fo
from . import golden
from .errors import LBError
from .cuts import coproduct_dn_cuts, prune
from .flows import (
    alpha_exact,
    backward_error,
    convert,
    gamma_exact,
    method_euler,
    method_midpoint,
)
from .forest import DOT
from .hopf import (
    HopfStructure,
    coproduct_dn,
    convolve_functionals,
    dn_basis,
    exp_star,
    is_character,
    log_star,
)
from .idempotents import bell, bell_part, compose_functional_endo, dynkin_projection, eulerian, q_operator
from .serialize import random_infinitesimal
from .series import Series, concat_product, exponential, gl_product, graft, shuffle_product
from .substitution import solve_substitution, substitute, substitute_dual

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430)


class CheckFailed(AssertionError):
    pass


def _expect(ok: bool, message: str) -> None:
    if not ok:
        raise CheckFailed(message)


def random_character(order: int, rng: random.Random) -> Series:
    return exp_star(random_infinitesimal(order, rng), HopfStructure.H_N)


def _nonempty_pairs(order: int):
    words = fo.enumerate_forests(order)[1:]
    for u in words:
        for v in words:
            if fo.order(u) + fo.order(v) <= order:
                yield u, v


# ---------------------------------------------------------------------------
# golden values

def check_dn_table(order: int, rng: random.Random) -> None:
    for w, expected in golden.dn_table().items():
        if fo.order(w) > order:
            continue
        _expect(coproduct_dn(w) == expected, f"recursive Delta_N differs on {fo.render(w)}")
        _expect(coproduct_dn_cuts(w) == expected, f"cut-based Delta_N differs on {fo.render(w)}")
    for w in fo.enumerate_forests(min(order, 5)):
        _expect(coproduct_dn(w) == coproduct_dn_cuts(w), f"Delta_N constructions disagree on {fo.render(w)}")


def check_dual_substitution_table(order: int, rng: random.Random, samples: int = 3) -> None:
    n = min(order, 4)
    for _ in range(samples):
        a = random_infinitesimal(n, rng)
        for w in golden.dual_substitution_rows():
            if fo.order(w) <= n:
                _expect(
                    substitute_dual(a, w, strict=True) == golden.dual_substitution_expected(w, a),
                    f"dual substitution differs on {fo.render(w)}",
                )


def check_gamma_exact(order: int, rng: random.Random) -> None:
    n = min(order, 5)
    _expect(gamma_exact(n) == golden.exact_flow_type3().truncate(n), "exact-flow type 3 series differs")


def check_euler_backward_error(order: int, rng: random.Random) -> None:
    n = min(order, 4)
    _expect(backward_error(method_euler(n)) == golden.euler_modified_field().truncate(n),
            "Euler modified field differs")
    _expect(convert(method_euler(n), 1, 3) == Series.basis(DOT, n) if n else True, "Euler type 3 series is not •")
    _expect(method_euler(n) == exponential(Series.basis(DOT, n), "concat"), "Euler character is not exp(•)")


def check_bell(order: int, rng: random.Random) -> None:
    table = golden.bell_table()
    for n in range(5):
        _expect(bell(n) == table[str(n)], f"B_{n} differs")
    _expect(bell_part(4, 3) == table["4,3"], "B_4,3 differs")


# ---------------------------------------------------------------------------
# structural properties

def check_coassociativity(order: int, rng: random.Random) -> None:
    for w in fo.enumerate_forests(min(order, 5)):
        left: dict[tuple, Fraction] = defaultdict(Fraction)
        right: dict[tuple, Fraction] = defaultdict(Fraction)
        for (x, y), c in dn_basis(w):
            for (p, q), d in dn_basis(x):
                left[(p, q, y)] += c * d
            for (p, q), d in dn_basis(y):
                right[(x, p, q)] += c * d
        _expect({k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v},
                f"Delta_N is not coassociative on {fo.render(w)}")


def check_gl_duality(order: int, rng: random.Random) -> None:
    n = min(order, 5)
    words = fo.enumerate_forests(n)
    dn = {w: coproduct_dn(w, n) for w in words}
    for u in words:
        for v in words:
            if fo.order(u) + fo.order(v) > n:
                continue
            prod = gl_product(Series.basis(u, n), Series.basis(v, n))
            for w in words:
                _expect(prod[w] == dn[w][(u, v)], f"<{u}⋄{v}, {w}> disagrees with Delta_N")


def check_pruning_duality(order: int, rng: random.Random) -> None:
    n = min(order, 5)
    words = fo.enumerate_forests(n)
    for nu in words:
        for u in words:
            if fo.order(nu) + fo.order(u) > n:
                continue
            grafted = graft(Series.basis(nu, n), Series.basis(u, n))
            for w in fo.forests_of_order(fo.order(nu) + fo.order(u)):
                _expect(grafted[w] == prune(nu, w, n)[u], f"pruning by {nu} is not dual to grafting on {w}")


def check_substitution_adjoint(order: int, rng: random.Random) -> None:
    n = min(order, 4)
    a = random_infinitesimal(n, rng)
    words = fo.enumerate_forests(n)
    duals = {w: substitute_dual(a, w) for w in words}
    for b in words:
        image = substitute(a, b)
        for w in words:
            _expect(image[w] == duals[w][b], f"<a*{b}, {w}> != <{b}, a*T({w})>")


def check_substitution_homomorphism(order: int, rng: random.Random) -> None:
    n = min(order, 4)
    a = random_infinitesimal(n, rng)
    sub = {w: substitute(a, w) for w in fo.enumerate_forests(n)}
    for name, mul in (("concatenation", concat_product), ("grafting", graft), ("GL product", gl_product)):
        for u, v in _nonempty_pairs(n):
            lhs = substitute(a, mul(Series.basis(u, n), Series.basis(v, n)))
            _expect(lhs == mul(sub[u], sub[v]), f"a* does not preserve {name} on ({u}, {v})")


def check_dual_shuffle_character(order: int, rng: random.Random) -> None:
    n = min(order, 4)
    a = random_infinitesimal(n, rng)
    duals = {w: substitute_dual(a, w) for w in fo.enumerate_forests(n)}
    for u, v in _nonempty_pairs(n):
        lhs = Series.zero(n)
        for w, c in shuffle_product(Series.basis(u, n), Series.basis(v, n)).items():
            lhs = lhs + duals[w] * c
        _expect(lhs == shuffle_product(duals[u], duals[v]), f"a*T is not a shuffle character on ({u}, {v})")


def check_idempotents(order: int, rng: random.Random) -> None:
    n = min(order, 5)
    e = eulerian(n)
    _expect(e.compose(e) == e, "e o e != e")
    p = dynkin_projection(n)
    _expect(p.compose(p) == p, "(Y^-1 D)^2 != Y^-1 D")


def check_log_exp(order: int, rng: random.Random) -> None:
    n = min(order, 5)
    b = random_infinitesimal(n, rng)
    alpha = exp_star(b)
    _expect(log_star(alpha) == b, "log* o exp* is not the identity")
    _expect(exp_star(log_star(alpha)) == alpha, "exp* o log* is not the identity")
    _expect(compose_functional_endo(alpha, eulerian(n)) == log_star(alpha), "alpha o e != log*(alpha)")


def check_character_closure(order: int, rng: random.Random) -> None:
    n = min(order, 5)
    x, y = random_character(n, rng), random_character(n, rng)
    _expect(is_character(x) and is_character(y), "exp* of a Lie series is not a character")
    _expect(is_character(convolve_functionals(x, y, HopfStructure.H_N)), "H_N convolution left the characters")


def check_structure(order: int, rng: random.Random) -> None:
    for sub_check in STRUCTURE_CHECKS.values():
        sub_check(order, rng)


# ---------------------------------------------------------------------------

def check_exact_flow_identity(order: int, rng: random.Random) -> None:
    n = min(order, 5)
    dot = Series.basis(DOT, n)
    via_q = q_operator(gamma_exact(n))
    _expect(via_q == exponential(dot, "gl"), "Q(gamma_exact) != exp_gl(•)")
    _expect(via_q == convert(dot, 2, 1), "Q(gamma_exact) != convert(•, TYPE2, TYPE1)")
    _expect(alpha_exact(n) == via_q, "alpha_exact differs from Q(gamma_exact)")


def check_backward_error_consistency(order: int, rng: random.Random) -> None:
    n = min(order, 4)
    exact = alpha_exact(n)
    for name, method in (("euler", method_euler), ("midpoint", method_midpoint)):
        alpha = method(n)
        beta = backward_error(alpha)
        _expect(substitute(beta, exact, strict=True) == alpha, f"{name}: beta * alpha_exact != alpha")
        _expect(solve_substitution(alpha, exact) == beta, f"{name}: solver and Eulerian route disagree")


def check_enumeration(order: int, rng: random.Random) -> None:
    for n in range(min(max(order, 6), len(CATALAN) - 1) + 1):
        _expect(len(fo.forests_of_order(n)) == CATALAN[n], f"wrong number of forests of order {n}")
    for n in range(1, 5):
        rows = [w for w in golden.dn_table() if fo.order(w) == n]
        _expect(len(rows) == CATALAN[n], f"reference table has {len(rows)} rows of order {n}")


STRUCTURE_CHECKS: dict[str, Callable[[int, random.Random], None]] = {
    "Delta_N coassociativity": check_coassociativity,
    "GL product dual to Delta_N": check_gl_duality,
    "pruning dual to grafting": check_pruning_duality,
    "substitution adjointness": check_substitution_adjoint,
    "substitution homomorphism laws": check_substitution_homomorphism,
    "dual substitution is a shuffle character": check_dual_shuffle_character,
    "Eulerian and Dynkin idempotence": check_idempotents,
    "log*/exp* inversion and alpha o e": check_log_exp,
    "character closure under convolution": check_character_closure,
}

# numbered acceptance criteria
ACCEPTANCE: dict[int, tuple[str, Callable[[int, random.Random], None]]] = {
    1: ("Delta_N reference table", check_dn_table),
    2: ("dual substitution reference table", check_dual_substitution_table),
    3: ("exact-flow type 3 series", check_gamma_exact),
    4: ("Euler backward error", check_euler_backward_error),
    5: ("Bell polynomials", check_bell),
    6: ("duality and structure properties", check_structure),
    7: ("three-way exact-flow identity", check_exact_flow_identity),
    8: ("backward error consistency", check_backward_error_consistency),
    9: ("forest enumeration", check_enumeration),
}


@dataclass
class SelftestConfig:
    order: int = 4
    seed: int = 0
    stream: TextIO = field(default=sys.stdout, repr=False)


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""


def _all_checks() -> list[tuple[str, Callable[[int, random.Random], None]]]:
    out = []
    for number, (name, fn) in ACCEPTANCE.items():
        if fn is check_structure:
            out.extend(STRUCTURE_CHECKS.items())
        else:
            out.append((name, fn))
    return out


def run_selftest(config: SelftestConfig) -> list[CheckResult]:
    """Run every check, printing one timed line each."""
    results = []
    for name, fn in _all_checks():
        rng = random.Random(config.seed)
        start = time.perf_counter()
        try:
            fn(config.order, rng)
            passed, detail = True, ""
        except (CheckFailed, LBError) as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        results.append(CheckResult(name, passed, elapsed, detail))
        status = "PASS" if passed else "FAIL"
        tail = f"  {detail}" if detail else ""
        print(f"{status}  {name:<44} {elapsed:8.3f}s{tail}", file=config.stream)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed at order {config.order}", file=config.stream)
    return results
