"""Property-based checks with hypothesis for the core invariants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superweyl.rootdata import Family, build_root_system, form, weight
from superweyl.borel import (
    distinguished_borel,
    enumerate_borels,
    odd_reflection_path,
    reverse_path,
    track_highest_weight,
)
from superweyl.star import apply_generator
from superweyl.verify import star_maps_for
from superweyl.weyl import dot_action, weyl_group

FAMS = {
    "gl21": Family("gl", 2, 1),
    "osp32": Family("osp", 3, 1),
    "q3": Family("q", 3),
}

rationals = st.builds(
    Fraction,
    st.integers(min_value=-30, max_value=30),
    st.sampled_from([1, 2, 3, 4, 6]),
)


def weights_of(fam: Family):
    return st.builds(
        lambda eps, dels: weight(eps, dels),
        st.tuples(*[rationals] * fam.eps_dim),
        st.tuples(*[rationals] * fam.del_dim),
    )


@pytest.mark.parametrize("key", sorted(FAMS))
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_star_involution_property(key, data):
    fam = FAMS[key]
    system = build_root_system(fam)
    b = distinguished_borel(system)
    lam = data.draw(weights_of(fam))
    for m in star_maps_for(system, b):
        for alpha in system.simple_even:
            assert apply_generator(m, alpha, apply_generator(m, alpha, lam)) == lam


@pytest.mark.parametrize("key", ["gl21", "osp32"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_track_round_trip_property(key, data):
    fam = FAMS[key]
    system = build_root_system(fam)
    b = distinguished_borel(system)
    borels = enumerate_borels(system, cap=100)
    lam = data.draw(weights_of(fam))
    target = data.draw(st.sampled_from(borels))
    path = odd_reflection_path(b, target)
    out = track_highest_weight(lam, b, path)
    assert track_highest_weight(out, target, reverse_path(path)) == lam


@pytest.mark.parametrize("key", sorted(FAMS))
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_dot_action_property(key, data):
    fam = FAMS[key]
    system = build_root_system(fam)
    b = distinguished_borel(system)
    W = weyl_group(system)
    lam = data.draw(weights_of(fam))
    w1 = data.draw(st.sampled_from(W.elements))
    w2 = data.draw(st.sampled_from(W.elements))
    assert dot_action(w1.compose(w2), lam, b) == dot_action(
        w1, dot_action(w2, lam, b), b
    )


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_form_symmetry_property(data):
    fam = FAMS["osp32"]
    x = data.draw(weights_of(fam))
    y = data.draw(weights_of(fam))
    assert form(x, y) == form(y, x)
    assert form(x + y, x + y) == form(x, x) + 2 * form(x, y) + form(y, y)
