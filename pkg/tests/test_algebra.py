from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from neutroff import (
    Element,
    OffCollection,
    SubsetValue,
    ThresholdFrame,
    ValidationError,
    complement_element,
    off_complement,
    off_intersection,
    off_union,
    offconorm,
    offnorm,
    verify_norm_axioms,
)
from neutroff.algebra import NormFamily, algebraic_product, algebraic_sum

import oracles
from strategies import collections, frames, rationals, value_in

F12 = ThresholdFrame.uniform(Fr(-6, 5), Fr(6, 5))
LAWFUL = ("min_max", "bounded_dual")

NORM_ORACLE = {"min_max": oracles.minmax_norm, "bounded": oracles.bounded_norm, "bounded_dual": oracles.bounded_norm}
CONORM_ORACLE = {
    "min_max": oracles.minmax_conorm,
    "bounded": oracles.bounded_conorm_printed,
    "bounded_dual": oracles.bounded_conorm_dual,
}


@pytest.mark.parametrize("fam", ["min_max", "bounded", "bounded_dual"])
@given(data=st.data(), psi=rationals(-1, 0), omega=rationals(1, 2))
def test_crisp_operators_match_oracle(fam, data, psi, omega):
    a = data.draw(value_in(psi, omega, crisp=True)).crisp
    b = data.draw(value_in(psi, omega, crisp=True)).crisp
    assert offnorm(fam, a, b, psi, omega).crisp == NORM_ORACLE[fam](a, b, psi, omega)
    assert offconorm(fam, a, b, psi, omega).crisp == CONORM_ORACLE[fam](a, b, psi, omega)


@pytest.mark.parametrize("fam", ["min_max", "bounded", "bounded_dual"])
@given(data=st.data(), psi=rationals(-1, 0), omega=rationals(1, 2))
def test_interval_image_contains_pointwise_values(fam, data, psi, omega):
    # the interval result must hold N(x, y) for every x in a, y in b, and its ends must be attained or limits
    a = data.draw(value_in(psi, omega))
    b = data.draw(value_in(psi, omega))
    for op, oracle in ((offnorm, NORM_ORACLE[fam]), (offconorm, CONORM_ORACLE[fam])):
        out = op(fam, a, b, psi, omega)
        ha, hb = a.hull(), b.hull()
        for x in (ha.lo, (ha.lo + ha.hi) / 2, ha.hi):
            for y in (hb.lo, (hb.lo + hb.hi) / 2, hb.hi):
                if a.contains(x) and b.contains(y):
                    assert out.contains(oracle(x, y, psi, omega))
        assert out.inf == oracle(ha.lo, hb.lo, psi, omega)
        assert out.sup == oracle(ha.hi, hb.hi, psi, omega)


def test_hull_before_norm():
    v = SubsetValue.union(SubsetValue.point(0.1), SubsetValue.point(0.9))
    assert offnorm("min_max", v, 0.5, 0, 1) == SubsetValue.closed(Fr(1, 10), Fr(1, 2))


def test_open_ends_survive_min_max():
    a = SubsetValue.open(0.2, 0.6)
    out = offnorm("min_max", a, SubsetValue.closed(0.4, 0.8), 0, 1)
    assert out == SubsetValue.interval(0.2, 0.6, True, True)


# -- axiom verifier ------------------------------------------------------


@pytest.mark.parametrize("fam", LAWFUL)
@pytest.mark.parametrize("role", ["norm", "conorm"])
@pytest.mark.parametrize("frame", [(Fr(-6, 5), Fr(6, 5)), (0, 1), (Fr(-1, 2), Fr(3, 2)), (-1, 2)])
def test_lawful_families_pass_verifier(fam, role, frame):
    rep = verify_norm_axioms(fam, frame, 500, role=role)
    assert rep.passed, rep.lines()


@pytest.mark.parametrize("fam", ["min_max", "bounded", "bounded_dual"])
@pytest.mark.parametrize("role", ["norm", "conorm"])
@pytest.mark.parametrize("frame", [(Fr(-6, 5), Fr(6, 5)), (Fr(-1, 2), Fr(3, 2))])
def test_verifier_agrees_with_exhaustive_oracle(fam, role, frame):
    psi, omega = frame
    op = (NORM_ORACLE if role == "norm" else CONORM_ORACLE)[fam]
    grid = oracles.uniform_grid(psi, omega, 10)
    want = oracles.exhaustive_axioms(op, psi, omega, role, grid)
    got = verify_norm_axioms(fam, frame, 500, role=role)
    # the oracle grid is coarser, so it may miss a failure the verifier finds but not the converse
    for name, ok in want.items():
        if not ok:
            assert not got.results[name].passed, name


def test_printed_bounded_conorm_is_lawful_only_without_underlimit():
    assert verify_norm_axioms("bounded", (0, Fr(6, 5)), 500, role="conorm").passed
    rep = verify_norm_axioms("bounded", (Fr(-6, 5), Fr(6, 5)), 500, role="conorm")
    assert not rep.results["overbounding"].passed
    assert rep.results["overbounding"].counterexample[0] == "N(-6/5, 6/5) = 0"
    # the norm half is lawful either way
    assert verify_norm_axioms("bounded", (Fr(-6, 5), Fr(6, 5)), 500, role="norm").passed


def test_product_candidate_fails_overbounding():
    rep = verify_norm_axioms(algebraic_product, F12, 200, role="norm")
    assert not rep.results["overbounding"].passed
    assert rep.results["overbounding"].counterexample is not None
    # on the unit frame the product is a genuine norm
    assert verify_norm_axioms(algebraic_product, (0, 1), 200, role="norm").passed
    assert verify_norm_axioms(algebraic_sum, (0, 1), 200, role="conorm").passed


def test_verifier_is_deterministic():
    a = verify_norm_axioms("bounded", F12, 300, seed=7, role="conorm").lines()
    b = verify_norm_axioms("bounded", F12, 300, seed=7, role="conorm").lines()
    assert a == b


def test_verifier_rejects_bad_input():
    with pytest.raises(ValidationError):
        verify_norm_axioms("min_max", F12, 0)
    with pytest.raises(ValidationError):
        verify_norm_axioms("min_max", F12, 10, role="both")
    with pytest.raises(ValidationError):
        NormFamily.parse("product")


# -- complements and collection operators --------------------------------


@pytest.mark.parametrize("variant", ["swap_tf", "reflect_tf", "reflect_all"])
@given(frame=frames(), data=st.data())
def test_complement_involution(variant, frame, data):
    A = data.draw(collections(frame))
    assert off_complement(off_complement(A, variant), variant) == A


@given(frame=frames(), data=st.data())
def test_min_max_de_morgan(frame, data):
    A = data.draw(collections(frame))
    B = data.draw(collections(frame))
    c = off_complement
    assert c(off_intersection(A, B)) == off_union(c(A), c(B))
    assert c(off_union(A, B)) == off_intersection(c(A), c(B))


@pytest.mark.parametrize("fam", LAWFUL)
@given(frame=frames(), data=st.data())
def test_results_stay_in_frame(fam, frame, data):
    A = data.draw(collections(frame))
    B = data.draw(collections(frame))
    for out in (off_union(A, B, fam), off_intersection(A, B, fam)):
        for e in out:
            e.validate(frame)


@pytest.mark.parametrize("fam", LAWFUL)
@given(frame=frames(), data=st.data())
def test_union_and_intersection_commute(fam, frame, data):
    A = data.draw(collections(frame, crisp=True))
    B = data.draw(collections(frame, crisp=True))
    assert off_union(A, B, fam) == off_union(B, A, fam)
    assert off_intersection(A, B, fam) == off_intersection(B, A, fam)


def test_swap_tf_needs_matching_ranges():
    frame = ThresholdFrame(-1, 2, 0, 1, 0, 1)
    with pytest.raises(ValidationError):
        complement_element(Element.of("x", 0, 0, 0), frame)
    assert complement_element(Element.of("x", 0, 0, 0), frame, "reflect_tf") == Element.of("x", 1, 0, 1)


def test_operators_need_matching_domains():
    A = OffCollection.of(F12, [Element.of("x", 0, 0, 0)])
    B = OffCollection.of(F12, [Element.of("y", 0, 0, 0)])
    with pytest.raises(ValidationError, match="element ids"):
        off_union(A, B)
    C = OffCollection.of(ThresholdFrame.unit(), [Element.of("x", 0, 0, 0)])
    with pytest.raises(ValidationError, match="frames"):
        off_intersection(A, C)
