from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neutroff import ComponentBounds, DependenceSpec, ValidationError, max_component_sum, off_pair_range, off_sum_range_global, refined_sum_bound
from neutroff.dependence import (
    dependent_pair_off_bound,
    pair_sum_bound,
    triple_sum_bound_global,
    triple_sum_bound_pairwise,
)

import oracles
from strategies import rationals

degrees = rationals(0, 1, 20)


def test_closed_forms():
    assert pair_sum_bound(Fr("0.75")) == Fr("1.25")
    assert pair_sum_bound(0) == 2 and pair_sum_bound(1) == 1
    assert triple_sum_bound_global(0) == 3 and triple_sum_bound_global(1) == 1
    assert triple_sum_bound_pairwise(Fr("0.3"), Fr("0.6"), 1) == Fr("2.7")


def test_exact_optimum_is_tighter_than_closed_form():
    spec = DependenceSpec.of(tf=Fr("0.3"), if_=Fr("0.6"))
    assert max_component_sum(spec) == Fr("2.4")
    assert triple_sum_bound_pairwise(0, Fr("0.6"), Fr("0.3")) == 3


@settings(max_examples=25)
@given(st.dictionaries(st.sampled_from(["ti", "if", "tf"]), degrees, max_size=3))
def test_vertex_enumeration_matches_grid(pairs):
    exact = max_component_sum(DependenceSpec.of(**{k + "_": v for k, v in pairs.items()}))
    caps = {tuple(k): 2 - float(v) for k, v in pairs.items()}
    assert abs(float(exact) - oracles.grid_max_sum(caps)) <= 0.02


@given(degrees)
def test_pair_bound_is_two_channel_optimum(d):
    assert max_component_sum(DependenceSpec.of(tf=d), channels=("t", "f")) == pair_sum_bound(d)


def test_refined_bounds():
    assert refined_sum_bound(6, groups=[3]) == 4
    assert refined_sum_bound(6, pairs=[(2, Fr("0.2"))]) == Fr("5.8")
    assert refined_sum_bound(5, groups=[{"T1", "T2"}], pairs=[({"I1", "F1"}, Fr("0.5"))]) == Fr("3.5")
    with pytest.raises(ValidationError, match="overlap"):
        refined_sum_bound(5, groups=[{"T1", "T2"}], pairs=[({"T2", "F1"}, Fr("0.5"))])
    with pytest.raises(ValidationError):
        refined_sum_bound(3, groups=[4])


@st.composite
def bounds(draw):
    vals = []
    for _ in range(3):
        a, b = sorted((draw(rationals(-1, 2)), draw(rationals(-1, 2))))
        vals += [a, b]
    return ComponentBounds(*vals)


@st.composite
def off_bounds(draw):
    # lows are underlimits, highs are overlimits
    vals = []
    for _ in range(3):
        vals += [draw(rationals(-1, 0)), draw(rationals(1, 2))]
    return ComponentBounds(*vals)


@given(bounds())
def test_sum_range_endpoints(b):
    assert off_sum_range_global(b, 0) == (sum(b.lows), sum(b.highs))
    assert off_sum_range_global(b, 1) == (min(b.lows), max(b.highs))


@given(off_bounds(), degrees, degrees)
def test_sum_range_shrinks_with_dependence(b, d1, d2):
    d1, d2 = sorted((d1, d2))
    lo1, hi1 = off_sum_range_global(b, d1)
    lo2, hi2 = off_sum_range_global(b, d2)
    assert hi2 <= hi1 and lo2 >= lo1


def test_positive_lows_move_down_with_dependence():
    # with every low above 0 the formula heads for min(lows) < sum(lows)
    b = ComponentBounds(Fr("0.2"), 1, Fr("0.3"), 1, Fr("0.1"), 1)
    assert off_sum_range_global(b, 0)[0] == Fr("0.6")
    assert off_sum_range_global(b, 1)[0] == Fr("0.1")


@given(bounds(), degrees)
def test_sum_range_is_affine_in_d(b, d):
    lo0, hi0 = off_sum_range_global(b, 0)
    lo1, hi1 = off_sum_range_global(b, 1)
    assert off_sum_range_global(b, d) == (lo0 + d * (lo1 - lo0), hi0 + d * (hi1 - hi0))


@given(rationals(-1, 0), rationals(1, 2), rationals(-1, 0), rationals(1, 2), degrees)
def test_pair_range(x_lo, x_hi, y_lo, y_hi, d):
    assert off_pair_range(x_lo, x_hi, y_lo, y_hi, 1) == dependent_pair_off_bound(x_lo, x_hi, y_lo, y_hi)
    assert off_pair_range(x_lo, x_hi, y_lo, y_hi, 0) == (x_lo + y_lo, x_hi + y_hi)
    lo, hi = off_pair_range(x_lo, x_hi, y_lo, y_hi, d)
    assert x_lo + y_lo <= lo and hi <= x_hi + y_hi


def test_dependent_pair_with_third():
    assert dependent_pair_off_bound(Fr("-0.2"), Fr("1.1"), 0, Fr("1.3"), (Fr("0.1"), Fr("1.2"))) == (Fr("-0.1"), Fr("2.5"))


def test_degree_validation():
    with pytest.raises(ValidationError):
        pair_sum_bound(Fr("1.1"))
    with pytest.raises(ValidationError):
        DependenceSpec.of(tif=Fr("0.5"))
    with pytest.raises(ValidationError):
        ComponentBounds(1, 0, 0, 1, 0, 1)
