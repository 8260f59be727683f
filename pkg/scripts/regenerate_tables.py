"""Print the Delta_N coproduct of every forest up to an order, cross-checked against the cut formula."""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from lbseries import forest as fo
from lbseries.hopf import coproduct_dn, render_tensor
from lbseries.cuts import coproduct_dn_cuts
from lbseries.serialize import tensor_to_json


@dataclass
class TableConfig:
    order: int = 4
    fmt: str = "text"
    check_cuts: bool = True


def main(cfg: TableConfig) -> int:
    rows = []
    for w in fo.enumerate_forests(cfg.order):
        t = coproduct_dn(w)
        if cfg.check_cuts and coproduct_dn_cuts(w) != t:
            raise SystemExit(f"cut formula disagrees with the recursion on {fo.render(w)}")
        rows.append((w, t))
    if cfg.fmt == "json":
        print(json.dumps({"config": asdict(cfg), "rows": [
            {"forest": fo.render(w), **tensor_to_json(t)} for w, t in rows]}, ensure_ascii=False, indent=1))
    else:
        width = max(len(fo.render(w)) for w, _ in rows)
        for w, t in rows:
            print(f"{fo.render(w):>{width}} | {render_tensor(t)}")
    return 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", "-n", type=int, default=TableConfig.order)
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default=TableConfig.fmt)
    p.add_argument("--no-check", dest="check_cuts", action="store_false")
    raise SystemExit(main(TableConfig(**vars(p.parse_args()))))
