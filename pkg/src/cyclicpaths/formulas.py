"""Closed-form counts for paths under cyclically shifted boundaries.

Each evaluator enforces the hypothesis under which its formula is valid and
raises :class:`HypothesisError` outside it.  Divisions are done on exact
integers or Fractions and must come out integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .core import (
    LatticePoint,
    as_composition,
    binomial,
    catalan,
    dominated_by_all_shifts,
    exact,
    exact_div,
    max_shifted_boundary_x,
    boundary_x,
    point,
)
from .oracle import CountReport


class HypothesisError(ValueError):
    """A closed form was evaluated outside the hypothesis that makes it true."""


def pair_count_hypothesis(a, t, all_shifts: bool = True) -> bool:
    """Is (k+1, l) weakly right of the boundary (of every shift, by default)?"""
    a = as_composition(a)
    t = point(t)
    if not (0 <= t.x <= a.n and 0 <= t.y <= a.m):
        return False
    edge = max_shifted_boundary_x(a, t.y) if all_shifts else boundary_x(a, t.y)
    return t.x + 1 >= edge


def lpbp_counts_formula(a, t, all_shifts: bool = True) -> CountReport:
    """(all, bad, good) pair counts at terminus t = (k, l).

    ``all_shifts=False`` only checks the hypothesis against the unshifted
    boundary.  That weaker check admits termini where the counts are wrong,
    e.g. a = (0, 2), t = (0, 1).
    """
    a = as_composition(a)
    t = point(t)
    if not pair_count_hypothesis(a, t, all_shifts):
        raise HypothesisError(f"(k+1, l) = ({t.x + 1},{t.y}) is left of a shifted boundary of {a}")
    k, l, m, n = t.x, t.y, a.m, a.n
    total = m * binomial(k + l, l)
    bad = n * binomial(k + l, l - 1)
    good = exact_div((m * (k + 1) - n * l) * binomial(k + l, l), k + 1)
    if good != total - bad:
        raise ArithmeticError(f"good {good} != all - bad = {total - bad}")
    return CountReport(t, total, bad, good)


def total_over_shifts_formula(n: int, m: int) -> int:
    """Sum of D(a^(j), (n, m)) over all shifts, independent of the parts of a."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    return binomial(n + m, m - 1)


def ballot_formula(a: int, k: int, l: int) -> int:
    """Paths to (k, l) staying weakly below the line x = a*y."""
    if k < a * l:
        raise HypothesisError(f"ballot count needs k >= a*l, got k={k}, a*l={a * l}")
    return exact_div((k - a * l + 1) * binomial(k + l, l), k + 1)


def generalized_catalan(a: int, m: int) -> int:
    if a < 0 or m < 1:
        raise ValueError("need a >= 0 and m >= 1")
    size = (a + 1) * m + 1
    return exact_div(binomial(size, m), size)


def _require_all_shifts_dominate(a, t) -> None:
    if not dominated_by_all_shifts(a, t):
        raise HypothesisError(f"terminus {point(t)} is not dominated by every shift of {as_composition(a)}")


def upright_corners_formula(a, t, c: int) -> int:
    """Good pairs ending at t whose path has exactly c up-right corners."""
    a = as_composition(a)
    t = point(t)
    _require_all_shifts_dominate(a, t)
    k, l = t.x, t.y
    return a.m * binomial(k, c) * binomial(l, c) - a.n * binomial(k - 1, c - 1) * binomial(l + 1, c + 1)


def rightup_corners_formula(a, t, c: int) -> int:
    """Good pairs ending at t whose path has c right-up corners (leading U counts).

    At l = 0 the path is R^k with no corners; the closed form needs
    C(-1, -1) = 1 there, so that row is returned directly.
    """
    a = as_composition(a)
    t = point(t)
    _require_all_shifts_dominate(a, t)
    k, l = t.x, t.y
    if l == 0:
        return a.m if c == 0 else 0
    return a.m * binomial(k + 1, c) * binomial(l - 1, c - 1) - a.n * binomial(k, c - 1) * binomial(l, c)


def corners_at_full_terminus(n: int, m: int, c: int) -> int:
    if n < 1 or m < 1 or c < 1:
        raise ValueError("need n, m, c >= 1")
    return binomial(n, c - 1) * binomial(m, c)


def good_at_right_edge_sum(n: int, m: int, l: int) -> int:
    """|G_(n,l)| summed over the height of the final right step."""
    if n == 0:
        # no right step at all: every U^l is good for all m shifts
        return m
    return sum((m - i) * binomial(n + i - 1, i) for i in range(l + 1))


def good_at_right_edge(a, l: int) -> int:
    a = as_composition(a)
    if not 0 <= l <= a.m:
        raise ValueError(f"height {l} outside [0, {a.m}]")
    n, m = a.n, a.m
    closed = m * binomial(n + l, l) - n * binomial(n + l, l - 1)
    summed = good_at_right_edge_sum(n, m, l)
    if closed != summed:
        raise ArithmeticError(f"right-edge forms disagree: {closed} != {summed}")
    return closed


def gstar_count(n: int, m: int, l: int) -> int:
    """Good pairs ending at (n, l) whose path finishes with a right step."""
    if n < 1 or not 0 <= l < m:
        raise ValueError("need n >= 1 and 0 <= l < m")
    return binomial(n + l - 1, l) * (m - l)


# ---------------------------------------------------------------------------
# two-periodic boundaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicSpec:
    """Boundary (a, b, a, b, ...) with 0 <= a < b, plus the index n."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        if not 0 <= self.a < self.b:
            raise ValueError(f"need 0 <= a < b, got a={self.a}, b={self.b}")
        if self.n < 0:
            raise ValueError("need n >= 0")

    @property
    def c(self) -> int:
        return self.a + self.b

    @property
    def p(self) -> LatticePoint:
        return LatticePoint(self.c * self.n + self.b - self.a - 1, 2 * self.n)

    @property
    def q(self) -> LatticePoint:
        return LatticePoint(self.c * self.n + self.b - 1, 2 * self.n + 1)

    def with_n(self, n: int) -> "PeriodicSpec":
        return PeriodicSpec(self.a, self.b, n)


def periodic_MN(spec: PeriodicSpec) -> Tuple[Fraction, Fraction]:
    """(M_n, N_n).  M_n is always an integer; N_n can be a half-integer."""
    a, b, c, n = spec.a, spec.b, spec.c, spec.n
    M = Fraction(b - a, c * n + b) * binomial((c + 2) * n + b, 2 * n + 1)
    N = Fraction(b - a, c * n + b - a) * binomial((c + 2) * n + b - a - 1, 2 * n)
    return M, N


def _half_convolution(spec: PeriodicSpec) -> Fraction:
    Ms = [periodic_MN(spec.with_n(i))[0] for i in range(spec.n)]
    return Fraction(sum(Ms[i] * Ms[spec.n - 1 - i] for i in range(spec.n)), 2)


def periodic_counts(spec: PeriodicSpec) -> Tuple[int, int, int, int]:
    """(Q^{a,b}_n, Q^{b,a}_n, P^{a,b}_n, P^{b,a}_n): paths to q_n and p_n."""
    M, N = periodic_MN(spec)
    half = _half_convolution(spec)
    return exact(M), 0, exact(N + half), exact(N - half)


def half_slope_formula(c: int, n: int) -> int:
    """Paths to (cn, 2n) with 2x >= c*y throughout, for odd c."""
    if c < 1 or c % 2 == 0:
        raise ValueError(f"c must be an odd positive integer, got {c}")
    if n < 0:
        raise ValueError("need n >= 0")
    main = Fraction(binomial((c + 2) * n, 2 * n), c * n + 1)
    Ms = [Fraction(binomial((c + 2) * i + (c + 1) // 2, 2 * i), 2 * i + 1) for i in range(n)]
    conv = sum((Ms[i] * Ms[n - 1 - i] for i in range(n)), Fraction(0))
    return exact(main - conv / 2)


def catalan_staircase_counts(n: int) -> Tuple[int, int, int]:
    """(to_odd, to_even, under_UURR) for the staircase U(R^2U^2)^nR.

    to_odd counts paths to (2n+1, 2n+1); to_even counts paths to (2n, 2n)
    (and equally to (2n, 2n +- 1)); under_UURR counts paths to (2n-1, 2n)
    beneath (U^2R^2)^n and is 0 when n = 0.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    to_odd = 2 * catalan(2 * n + 1)
    to_even = 2 ** (2 * n + 1) * catalan(n) - catalan(2 * n + 1)
    under = to_even if n >= 1 else 0
    return to_odd, to_even, under


def convolution_identity_check(n: int) -> bool:
    if n < 1:
        raise ValueError("need n >= 1")
    lhs = sum(catalan(2 * i + 1) * catalan(2 * n - (2 * i + 1)) for i in range(n))
    return lhs == catalan(2 * n + 1) - 2 ** (2 * n) * catalan(n)


def staircase_theorem_formula(s: int, t: int, n: int) -> int:
    """Paths to (sn-1, tn-1) beneath U^{t-1}(R^s U^t)^{n-1} R^{s-1}."""
    if min(s, t, n) < 1:
        raise ValueError("need s, t, n >= 1")
    return exact_div(binomial((s + t) * n - 2, t * n - 1), n)


def k_catalan_formula(n: int, k: int) -> int:
    if n < 1 or k < 1:
        raise ValueError("need n, k >= 1")
    return k * catalan(n * k - 1)


def staircase_avoidance_count(s: int, t: int, n: int) -> int:
    """Paths to (sn+1, tn) strictly below (R^s U^t)^n raised to start at (0, t)."""
    if min(s, t, n) < 1:
        raise ValueError("need s, t, n >= 1")
    return exact_div(binomial((s + t) * n, t * n - 1), n)


def staircase_avoidance_corners(s: int, t: int, n: int, c: int) -> int:
    """Avoiding paths to (sn+1, tn) refined by corners.

    c is the number of right-then-up corners of the avoiding path, which is
    one more than the up-right corners of the associated dominated path
    to (sn, tn).
    """
    if min(s, t, n) < 1 or c < 1:
        raise ValueError("need s, t, n, c >= 1")
    return t * binomial(s * n, c - 1) * binomial(t * n, c - 1) - s * binomial(s * n - 1, c - 2) * binomial(t * n + 1, c)
