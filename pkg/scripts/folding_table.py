"""Folded graphs for the catalog's listed symmetry groups.

    python scripts/folding_table.py            # the dictionary rows
    python scripts/folding_table.py --matrix   # with folded Coxeter matrices
"""

import argparse
from dataclasses import dataclass

from coxfold import catalog
from coxfold.folding import fold
from coxfold.selftest import folding_dictionary


@dataclass
class Config:
    matrix: bool = False


def main(cfg: Config) -> int:
    bad = 0
    for tok, want in folding_dictionary():
        e = catalog.catalog_graph(tok)
        f = fold(e.graph, e.group())
        ok = f.folded_name == want
        bad += not ok
        print(f"{tok:<10} -> {f.folded_name:<5} expected {want:<5} {'ok' if ok else 'MISMATCH'}")
        if cfg.matrix:
            print("    generators: " + " ".join(f.generator_names()))
            for row in f.to_dict()["folded_matrix"]:
                print("    " + " ".join(f"{x:>3}" for x in row))
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--matrix", action="store_true")
    raise SystemExit(main(Config(**vars(p.parse_args()))))
