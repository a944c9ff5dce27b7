#!/usr/bin/env python3
"""Dump star orbits for a handful of instructive weights.

Writes one DOT file per case into the output directory (default
./orbits) and prints a summary line per orbit: vertex count versus the
Weyl group order, and whether the orbit hit the truncation cap.  Wall
weights can produce orbits larger than the group; generic ones never do.
"""

import argparse
import pathlib

from superweyl.rootdata import build_root_system, family, weight
from superweyl.borel import distinguished_borel
from superweyl.generic import is_weakly_generic
from superweyl.star import osp_star_map, star_orbit, trivial_star_map, antidistinguished_star_map
from superweyl.weyl import weyl_group

CASES = [
    ("gl:2,1", "0,0|0", "example71"),
    ("gl:2,1", "40,20|-7", "example71"),
    ("osp:3,2", "10|-10", "osp-star-prime"),
    ("osp:3,2", "39/2|-20", "osp-star-prime"),
    ("q:2", "3,-3", "q"),
    ("q:3", "90,60,20", "q"),
    ("q:3", "1,0,-1", "q"),
]


def map_for(system, name):
    if name == "q":
        return system
    if name == "example71":
        return antidistinguished_star_map(system)
    if name == "osp-star-prime":
        return osp_star_map(system, "star_prime")
    return trivial_star_map(distinguished_borel(system))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="orbits")
    ap.add_argument("--max-vertices", type=int, default=500)
    args = ap.parse_args()
    outdir = pathlib.Path(args.out)
    outdir.mkdir(exist_ok=True)
    for spec, lit, map_name in CASES:
        system = build_root_system(family(spec))
        b = distinguished_borel(system)
        eps, _, dels = lit.partition("|")
        lam = weight(
            [e for e in eps.split(",") if e], [d for d in dels.split(",") if d]
        )
        g = star_orbit(map_for(system, map_name), lam, args.max_vertices)
        W = weyl_group(system)
        tag = "generic" if is_weakly_generic(lam, b) else "wall/atypical"
        name = f"{spec.replace(':', '_').replace(',', '-')}__{lit.replace('/', 'o').replace('|', '_').replace(',', '-')}.dot"
        (outdir / name).write_text(g.to_dot(system) + "\n")
        print(
            f"{spec:9} {lit:12} [{tag:13}] orbit {len(g.vertices):3} / |W| {len(W):3}"
            f"{'  TRUNCATED' if g.truncated else ''}  -> {outdir / name}"
        )


if __name__ == "__main__":
    main()
