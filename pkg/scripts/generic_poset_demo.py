#!/usr/bin/env python3
"""Build the primitive-ideal inclusion graph in the generic region for a
few families and print the reduced (Hasse) diagram."""

import argparse
import random

from superweyl.rootdata import build_root_system, family
from superweyl.borel import distinguished_borel
from superweyl.primposet import generic_poset, hasse, transitive_closure
from superweyl.verify import generate_generic_weight


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("families", nargs="*", default=["q:2", "q:3", "osp:3,2", "gl:3,1"])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--nonintegral", action="store_true")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for spec in args.families:
        system = build_root_system(family(spec))
        b = distinguished_borel(system)
        Lam = generate_generic_weight(system, rng, integral=not args.nonintegral)
        g = generic_poset(b, Lam)
        h = hasse(transitive_closure(g))
        classes = g.equality_classes()
        print(f"== {spec} at {Lam}: {len(g.nodes)} weights, {len(classes)} ideals")
        for a, c, _ in sorted(
            h.edges, key=lambda e: (e[0].sort_key(), e[1].sort_key())
        ):
            print(f"   {a}  <  {c}")


if __name__ == "__main__":
    main()
