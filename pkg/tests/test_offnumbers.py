from fractions import Fraction as Fr

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from neutroff import ThresholdFrame, TrapezoidalOffnumber, TriangularOffnumber, ValidationError

import oracles
from strategies import rationals

FRAME = ThresholdFrame(Fr("-0.5"), Fr("1.5"), Fr("-0.3"), Fr("1.4"), Fr("-0.2"), Fr("1.6"))


def outside(frame):
    return (frame.psi_t, frame.omega_i, frame.omega_f)


@st.composite
def triangles(draw):
    a = sorted(draw(st.lists(rationals(-5, 5, 4), min_size=3, max_size=3)))
    w = draw(rationals(FRAME.psi_t, FRAME.omega_t))
    u = draw(rationals(FRAME.psi_i, FRAME.omega_i))
    y = draw(rationals(FRAME.psi_f, FRAME.omega_f))
    return TriangularOffnumber(*a, w, u, y, FRAME)


@st.composite
def trapezoids(draw):
    a = sorted(draw(st.lists(rationals(-5, 5, 4), min_size=4, max_size=4)))
    w = draw(rationals(FRAME.psi_t, FRAME.omega_t))
    u = draw(rationals(FRAME.psi_i, FRAME.omega_i))
    y = draw(rationals(FRAME.psi_f, FRAME.omega_f))
    return TrapezoidalOffnumber(*a, w, u, y, FRAME)


@given(triangles(), rationals(-6, 6, 40))
def test_triangular_matches_interpolation(n, x):
    want = oracles.triangular_profile(n.a1, n.a2, n.a3, n.w, n.u, n.y, *outside(FRAME), x)
    assert n(x) == want


@given(trapezoids(), rationals(-6, 6, 40))
def test_trapezoidal_matches_interpolation(n, x):
    want = oracles.trapezoidal_profile(n.a1, n.a2, n.a3, n.a4, n.w, n.u, n.y, *outside(FRAME), x)
    assert n(x) == want


@given(triangles())
def test_triangular_peak_and_feet(n):
    assert n(n.a2) == (n.w, n.u, n.y)
    if n.a1 < n.a2:
        assert n(n.a1) == (0, 1, 1)
    if n.a2 < n.a3:
        assert n(n.a3) == (0, 1, 1)


@given(trapezoids())
def test_trapezoid_plateau(n):
    assert n(n.a2) == n(n.a3) == n((n.a2 + n.a3) / 2) == (n.w, n.u, n.y)


@given(triangles())
def test_continuity_at_peak(n):
    assume(n.a1 < n.a2 < n.a3)
    eps = Fr(1, 10**9)
    for a, b in zip(n(n.a2 - eps), n(n.a2 + eps)):
        assert abs(a - b) < Fr(1, 10**6)


@given(triangles(), rationals(-6, 6, 40))
def test_t_never_exceeds_peak_inside_support(n, x):
    assume(n.a1 <= x <= n.a3)
    t = n(x)[0]
    assert min(0, n.w) <= t <= max(0, n.w)


def test_outside_support_uses_frame_limits():
    n = TriangularOffnumber(1, 3, 7, Fr("1.2"), Fr("0.3"), Fr("-0.2"), FRAME)
    assert n(0) == n(8) == (Fr("-0.5"), Fr("1.4"), Fr("1.6"))


def test_degenerate_side_takes_peak():
    n = TriangularOffnumber(2, 2, 4, Fr("1.2"), 0, 0, FRAME)
    assert n(2) == (Fr("1.2"), 0, 0)
    assert n(3) == (Fr("0.6"), Fr("0.5"), Fr("0.5"))


@pytest.mark.parametrize("abc", [(0, 2, 5), (1, 1, 4), (-3, 0, 0), (0, 1, 2)])
def test_classical_reduction(abc):
    a, b, c = abc
    n = TriangularOffnumber(a, b, c, 1, 0, 0, ThresholdFrame.unit())
    for k in range(-40, 80):
        x = Fr(k, 10)
        t, i, f = n(x)
        assert t == oracles.textbook_tfn(Fr(a), Fr(b), Fr(c), x)
        assert i == f == 1 - t


def test_validation():
    with pytest.raises(ValidationError):
        TriangularOffnumber(3, 2, 4, 1, 0, 0, FRAME)
    with pytest.raises(ValidationError, match="peak T"):
        TriangularOffnumber(1, 2, 4, 2, 0, 0, FRAME)
    with pytest.raises(ValidationError):
        TrapezoidalOffnumber(0, 2, 1, 3, 1, 0, 0, FRAME)
