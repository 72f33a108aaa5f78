"""Classifier vs verifier over the catalog matrix.

    python scripts/cross_validation.py
    python scripts/cross_validation.py --depth 8 --json rows.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from coxfold.selftest import cross_validation
from coxfold.verifier import Budget


@dataclass
class Config:
    depth: int = 12
    orbit_depth: int = 16
    truncation: int = 4
    json: str | None = None


def main(cfg: Config) -> int:
    t0 = time.perf_counter()
    rows = cross_validation(Budget(root_depth=cfg.depth, orbit_depth=cfg.orbit_depth, truncation=cfg.truncation))
    width = max(len(r[0]) for r in rows)
    print(f"{'pair':<{width}}  predicts  verifier                 agree")
    for tok, pred, label, ok in rows:
        print(f"{tok:<{width}}  {str(pred).lower():<8}  {label:<23}  {'yes' if ok else 'NO'}")
    bad = sum(not r[3] for r in rows)
    print(f"{len(rows) - bad}/{len(rows)} agree ({time.perf_counter() - t0:.1f}s)")
    if cfg.json:
        with open(cfg.json, "w", encoding="utf-8") as fh:
            json.dump({"config": asdict(cfg), "rows": [dict(zip(("pair", "predicts", "verdict", "agree"), r))
                                                       for r in rows]}, fh, indent=2)
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, v in asdict(Config()).items():
        p.add_argument("--" + f.replace("_", "-"), type=int if isinstance(v, int) else str, default=v)
    raise SystemExit(main(Config(**vars(p.parse_args()))))
