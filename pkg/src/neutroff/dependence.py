"""Bounds on component sums under degrees of dependence."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .values import RationalLike, ValidationError, q


def _degree(d: RationalLike) -> Fraction:
    d = q(d)
    if not 0 <= d <= 1:
        raise ValidationError(f"degree of dependence must lie in [0, 1], got {d}")
    return d


@dataclass(frozen=True)
class DependenceSpec:
    """Pairwise degrees keyed by channel pair, an optional global degree, and
    optional blocks of fully dependent subcomponents."""

    pairwise: Mapping[frozenset, Fraction] = field(default_factory=dict)
    global_: Optional[Fraction] = None
    groups: tuple = ()

    def __post_init__(self):
        pw = {}
        for key, d in dict(self.pairwise).items():
            pair = frozenset(key)
            if len(pair) != 2:
                raise ValidationError(f"pairwise key must name two distinct channels, got {key!r}")
            pw[pair] = _degree(d)
        object.__setattr__(self, "pairwise", pw)
        if self.global_ is not None:
            object.__setattr__(self, "global_", _degree(self.global_))
        object.__setattr__(self, "groups", tuple(tuple(g) for g in self.groups))

    @classmethod
    def of(cls, **pairs) -> "DependenceSpec":
        """``DependenceSpec.of(tf=0.3, if_=0.6)``: keys are two channel letters."""
        out = {}
        for key, d in pairs.items():
            key = key.rstrip("_")
            if len(key) != 2:
                raise ValidationError(f"pair name must be two channel letters, got {key!r}")
            out[frozenset(key)] = d
        return cls(out)


@dataclass(frozen=True)
class ComponentBounds:
    t_lo: Fraction
    t_hi: Fraction
    i_lo: Fraction
    i_hi: Fraction
    f_lo: Fraction
    f_hi: Fraction

    def __post_init__(self):
        for c in "tif":
            lo, hi = q(getattr(self, f"{c}_lo")), q(getattr(self, f"{c}_hi"))
            if lo > hi:
                raise ValidationError(f"{c} bounds reversed: {lo} > {hi}")
            object.__setattr__(self, f"{c}_lo", lo)
            object.__setattr__(self, f"{c}_hi", hi)

    @property
    def lows(self):
        return (self.t_lo, self.i_lo, self.f_lo)

    @property
    def highs(self):
        return (self.t_hi, self.i_hi, self.f_hi)


def pair_sum_bound(d: RationalLike) -> Fraction:
    return 2 - _degree(d)


def triple_sum_bound_global(d: RationalLike) -> Fraction:
    return 3 - 2 * _degree(d)


def triple_sum_bound_pairwise(d_ti: RationalLike, d_if: RationalLike, d_ft: RationalLike) -> Fraction:
    """Closed-form bound; looser than :func:`max_component_sum` in general."""
    return 3 - min(_degree(d_ti), _degree(d_if), _degree(d_ft))


def _solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Exact Gauss-Jordan solve; None when the system is singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                k = m[r][col]
                m[r] = [a - k * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def max_component_sum(
    spec: Union[DependenceSpec, Mapping],
    channels: Sequence[str] = ("t", "i", "f"),
) -> Fraction:
    """Exact max of the channel sum over [0, 1]^n with x + y <= 2 - d per constrained pair.

    The feasible region is a polytope, so the optimum sits on a vertex; every
    vertex is the intersection of n active constraint planes and all of them
    are enumerated.
    """
    if not isinstance(spec, DependenceSpec):
        spec = DependenceSpec(spec)
    channels = tuple(channels)
    n = len(channels)
    idx = {c: k for k, c in enumerate(channels)}
    # each constraint is (coefficients, rhs) meaning coeffs . x <= rhs
    cons: list[tuple[list[Fraction], Fraction]] = []
    for k in range(n):
        up = [Fraction(0)] * n
        up[k] = Fraction(1)
        cons.append((up, Fraction(1)))
        down = [Fraction(0)] * n
        down[k] = Fraction(-1)
        cons.append((down, Fraction(0)))
    for pair, d in spec.pairwise.items():
        a, b = sorted(pair)
        if a not in idx or b not in idx:
            raise ValidationError(f"pair {sorted(pair)} names a channel outside {channels}")
        row = [Fraction(0)] * n
        row[idx[a]] = row[idx[b]] = Fraction(1)
        cons.append((row, 2 - d))
    best = None
    for combo in itertools.combinations(cons, n):
        x = _solve([c[0] for c in combo], [c[1] for c in combo])
        if x is None:
            continue
        if all(sum(a * v for a, v in zip(row, x)) <= rhs for row, rhs in cons):
            s = sum(x)
            if best is None or s > best:
                best = s
    assert best is not None  # the origin is always a vertex
    return best


def refined_sum_bound(
    n: int,
    groups: Iterable = (),
    pairs: Iterable = (),
) -> Fraction:
    """Upper bound on the sum of n subcomponents.

    ``groups`` are fully dependent blocks, given either as sizes or as
    collections of subcomponent names; a block of m counts as 1.  ``pairs`` are
    ``(members, d)`` entries for partially dependent pairs, each counting
    ``2 - d`` instead of 2.
    """
    total = Fraction(n)
    used: set = set()
    seen = 0
    for g in groups:
        if isinstance(g, int):
            m = g
        else:
            names = set(g)
            if names & used:
                raise ValidationError(f"dependence blocks overlap on {sorted(names & used)}")
            used |= names
            m = len(names)
        if m < 2:
            raise ValidationError("a dependent block needs at least two members")
        seen += m
        total -= m - 1
    for members, d in pairs:
        d = _degree(d)
        if not isinstance(members, int):
            names = set(members)
            if len(names) != 2:
                raise ValidationError("a dependent pair needs exactly two members")
            if names & used:
                raise ValidationError(f"dependence blocks overlap on {sorted(names & used)}")
            used |= names
        seen += 2
        total -= d
    if seen > n:
        raise ValidationError(f"blocks mention {seen} subcomponents but n = {n}")
    return total


def off_sum_range_global(b: ComponentBounds, d: RationalLike) -> tuple[Fraction, Fraction]:
    """Range of t + i + f for off bounds under a global dependence degree.

    At d = 1 the low end is the min of the three lows, the reading that makes
    the interpolation land on the dependent case.
    """
    d = _degree(d)
    lo_sum, hi_sum = sum(b.lows), sum(b.highs)
    lo = lo_sum - (lo_sum - min(b.lows)) * d
    hi = hi_sum - (hi_sum - max(b.highs)) * d
    return (lo, hi)


def off_pair_range(x_lo, x_hi, y_lo, y_hi, d: RationalLike) -> tuple[Fraction, Fraction]:
    x_lo, x_hi, y_lo, y_hi = map(q, (x_lo, x_hi, y_lo, y_hi))
    if x_lo > x_hi or y_lo > y_hi:
        raise ValidationError("bounds reversed")
    d = _degree(d)
    lo = x_lo + y_lo - (x_lo + y_lo - min(x_lo, y_lo)) * d
    hi = x_hi + y_hi - (x_hi + y_hi - max(x_hi, y_hi)) * d
    return (lo, hi)


def dependent_pair_off_bound(x_lo, x_hi, y_lo, y_hi, third: Optional[tuple] = None) -> tuple[Fraction, Fraction]:
    """Range of x + y for a fully dependent pair, plus an independent third channel if given."""
    x_lo, x_hi, y_lo, y_hi = map(q, (x_lo, x_hi, y_lo, y_hi))
    if x_lo > x_hi or y_lo > y_hi:
        raise ValidationError("bounds reversed")
    lo, hi = min(x_lo, y_lo), max(x_hi, y_hi)
    if third is not None:
        z_lo, z_hi = q(third[0]), q(third[1])
        if z_lo > z_hi:
            raise ValidationError("bounds reversed")
        lo, hi = lo + z_lo, hi + z_hi
    return (lo, hi)
