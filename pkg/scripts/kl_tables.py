#!/usr/bin/env python3
"""Print the nontrivial Kazhdan-Lusztig polynomials and left cells of
the even Weyl groups of a few families."""

import argparse

from superweyl.rootdata import build_root_system, family
from superweyl.kl import ONE, kl_table
from superweyl.weyl import weyl_group


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("families", nargs="*", default=["gl:4,1", "osp:1,4", "osp:1,6"])
    args = ap.parse_args()
    for spec in args.families:
        system = build_root_system(family(spec))
        W = weyl_group(system)
        t = kl_table(W)
        print(f"== {spec}: |W| = {len(W)}")
        nontrivial = 0
        for y in W:
            for x in W:
                p = t.kl_polynomial(x, y)
                if p and p != ONE:
                    nontrivial += 1
                    print(f"  P[{list(W.word_of(x))}, {list(W.word_of(y))}] = {p}")
        if not nontrivial:
            print("  all polynomials trivial")
        cells = t.left_cells()
        print(f"  left cells: {len(cells)}")
        for c in cells:
            words = sorted(list(W.word_of(w)) for w in c)
            print(f"    {words}")


if __name__ == "__main__":
    main()
