#!/usr/bin/env python3
"""Regenerate the Osgood relation-degree table frozen in the test suite.

For each truncation order K, reports the minimal degree of a nonzero
polynomial relation among the jets of (v, v*w, v*w*e^w), searched up to
degree D.  Usage:

    python scripts/osgood_table.py [K_min K_max [D]]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from holoclosure.jets import osgood_probe  # noqa: E402
from holoclosure.poly import polynomial_to_text  # noqa: E402


def main(argv):
    k_min = int(argv[0]) if argv else 3
    k_max = int(argv[1]) if len(argv) > 1 else 8
    max_degree = int(argv[2]) if len(argv) > 2 else 5
    print(f"K range {k_min}..{k_max}, relation degree searched up to {max_degree}")
    print(f"{'K':>3} {'min degree':>11}   witness")
    for res in osgood_probe(range(k_min, k_max + 1), max_degree):
        degree = res.min_relation_degree
        witness = polynomial_to_text(res.witness) if res.witness is not None else "-"
        print(f"{res.jet_order:>3} {str(degree) if degree is not None else 'none':>11}   {witness}")


if __name__ == "__main__":
    main(sys.argv[1:])
