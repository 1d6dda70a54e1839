from fractions import Fraction as Fr

import pytest
from hypothesis import given

from neutroff import (
    BipolarElement,
    MultipolarElement,
    Tag,
    TripolarElement,
    ValidationError,
    antagonist_projection,
    classify_bipolar,
    classify_multipolar,
    classify_tripolar,
    tripolar_from_enrollment,
)
from neutroff.polarity import full_antagonist

from strategies import rationals

OMEGA_F = Fr(18, 15)
JOHN = (Fr(6, 15), Fr(3, 15), Fr(9, 15))


def test_projection_of_worked_row():
    assert antagonist_projection(JOHN, Fr("0.8"), OMEGA_F) == (Fr(-8, 25), Fr(-4, 25), Fr(-18, 25))


@given(rationals(0, 1), rationals(0, 1), rationals(0, 1), rationals(0, 1))
def test_full_projection_matches_negation(t, i, f, _):
    proj = antagonist_projection((t, i, f), 1, OMEGA_F)
    neg = tuple(v.crisp for v in full_antagonist((t, i, f)))
    assert proj[:2] == neg[:2]
    # F agrees exactly in the complete-information case
    if f == OMEGA_F - t - i:
        assert proj[2] == neg[2]


@given(rationals(0, 1), rationals(0, 1), rationals(0, 1), rationals(0, 1), rationals(0, 1))
def test_projection_is_affine_in_a(t, i, f, a, b):
    e = (t, i, f)
    p0 = antagonist_projection(e, 0, OMEGA_F)
    p1 = antagonist_projection(e, 1, OMEGA_F)
    pa = antagonist_projection(e, a, OMEGA_F)
    assert pa == tuple(x + a * (y - x) for x, y in zip(p0, p1))
    assert p0 == (0, 0, -OMEGA_F)


def test_projection_rejects_intervals_and_bad_degree():
    with pytest.raises(ValidationError):
        antagonist_projection(((0.1, 0.2), 0, 0), Fr("0.5"), 1)
    with pytest.raises(ValidationError):
        antagonist_projection(JOHN, Fr("1.5"), 1)


def test_baseline_ranges_enforced_unless_off():
    with pytest.raises(ValidationError, match="baseline"):
        TripolarElement("x", (1.2, 0, 0), (0, 0, 0), (0, 0, 0))
    with pytest.raises(ValidationError):
        BipolarElement("x", (0, 0, 0), (0.1, 0, 0))
    e = TripolarElement("x", (1.2, 0, 0), (0, 0, 0), (0, 0, 0), off=True)
    assert classify_tripolar(e).tag is Tag.OVER


def test_polar_thresholds_are_minus_one_and_one():
    # negative values above -1 are not under-evidence on a polar element
    e = BipolarElement("x", (0.5, 0.2, 0.1), (-0.9, -0.5, -1))
    assert classify_bipolar(e).tag is Tag.STANDARD
    e = BipolarElement("x", (0.5, 0.2, 0.1), (-1.1, 0, 0), off=True)
    c = classify_bipolar(e)
    assert c.tag is Tag.UNDER and c.evidence[0].path == "x.T-"


@given(rationals(0, 1), rationals(-1, 1), rationals(-1, 0))
def test_baseline_tripolar_is_standard(p, z, n):
    e = TripolarElement("x", (p, p, p), (z, z, z), (n, n, n))
    assert classify_tripolar(e).tag is Tag.STANDARD


def test_multipolar_validation():
    with pytest.raises(ValidationError, match="increasing"):
        MultipolarElement("x", (Fr("0.8"), Fr("0.3")), ((0, 0, 0),) * 2, ((0, 0, 0),) * 2)
    with pytest.raises(ValidationError):
        MultipolarElement("x", (Fr("0.3"),), ((0, 0, 0),), ())
    e = MultipolarElement("x", (Fr("0.3"), Fr("0.8")), ((0.2, 0, 0),) * 2, ((-0.2, 0, 0), (-1.3, 0, 0)), off=True)
    assert classify_multipolar(e).tag is Tag.UNDER


def test_enrollment_builders():
    trip = tripolar_from_enrollment(JOHN, {"Beta": Fr("0.8")}, OMEGA_F, id="John")
    assert isinstance(trip, TripolarElement)
    assert tuple(v.crisp for v in trip.neg) == (Fr(-8, 25), Fr(-4, 25), Fr(-18, 25))
    assert tuple(v.crisp for v in trip.neu) == (0, 0, OMEGA_F)
    assert classify_tripolar(trip).tag is Tag.OVER
    multi = tripolar_from_enrollment(JOHN, {"Beta": Fr("0.8"), "Gamma": Fr("0.4")}, OMEGA_F)
    assert isinstance(multi, MultipolarElement)
    assert multi.poles == (Fr("0.4"), Fr("0.8"))
    with pytest.raises(ValidationError):
        tripolar_from_enrollment(JOHN, {}, OMEGA_F)
