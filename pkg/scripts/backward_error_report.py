"""Modified fields of the built-in methods, checked by re-substitution into the exact flow."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from lbseries.flows import METHODS, alpha_exact, backward_error, builtin_method, convert
from lbseries.series import render_series
from lbseries.substitution import solve_substitution, substitute


@dataclass
class ReportConfig:
    order: int = 4
    methods: list[str] = field(default_factory=lambda: ["euler", "midpoint"])


def report(cfg: ReportConfig) -> bool:
    exact = alpha_exact(cfg.order)
    ok = True
    for name in cfg.methods:
        start = time.perf_counter()
        alpha = builtin_method(name, cfg.order)
        beta = backward_error(alpha)
        resub = substitute(beta, exact, strict=True) == alpha
        solver = solve_substitution(alpha, exact) == beta
        ok &= resub and solver
        print(f"[{name}] order {cfg.order}  ({time.perf_counter() - start:.2f}s)")
        print(f"  type 1 : {render_series(alpha)}")
        print(f"  type 3 : {render_series(convert(alpha, 1, 3))}")
        print(f"  field  : {render_series(beta)}")
        print(f"  beta * exact == alpha: {resub};  solver agrees: {solver}")
    return ok


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--order", "-n", type=int, default=ReportConfig.order)
    p.add_argument("--methods", nargs="+", choices=sorted(METHODS), default=["euler", "midpoint"])
    raise SystemExit(0 if report(ReportConfig(**vars(p.parse_args()))) else 1)
