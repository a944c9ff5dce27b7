"""Exact weight combinatorics for classical Lie superalgebras.

Supported families: gl(m|n), sl(m|n), osp(m|2n) and q(n).  The package
computes root data, Borel systems and odd reflections, Weyl group
actions, typicality and genericity of weights, star (deformed Weyl)
actions and their orbits, Kazhdan-Lusztig polynomials with the left
order, formal Verma-filtration characters, and primitive-ideal
inclusion graphs in the regimes where they are classified.
"""

from .rootdata import (
    Family,
    FamilyError,
    Root,
    RootSystem,
    Weight,
    build_root_system,
    coroot,
    family,
    form,
    weight,
)
from .borel import (
    BorelSystem,
    distinguished_borel,
    odd_reflection,
    odd_reflection_path,
    track_highest_weight,
)
from .weyl import CoxeterGroup, WeylElt, dot_action, circle_action, weyl_group

__all__ = [
    "Family",
    "FamilyError",
    "Root",
    "RootSystem",
    "Weight",
    "BorelSystem",
    "CoxeterGroup",
    "WeylElt",
    "build_root_system",
    "coroot",
    "distinguished_borel",
    "dot_action",
    "circle_action",
    "family",
    "form",
    "odd_reflection",
    "odd_reflection_path",
    "track_highest_weight",
    "weight",
    "weyl_group",
]

__version__ = "0.1.0"
