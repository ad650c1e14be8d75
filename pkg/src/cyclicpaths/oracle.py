"""Brute-force ground truth for every closed form in :mod:`cyclicpaths.formulas`.

Counts come from a grid DP (zeroed cells wherever the boundary forbids a
point) or from explicit enumeration.  Nothing in here uses a closed form
other than the trivial ``m * C(k+l, l)`` total.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, List

from .core import (
    ORIGIN,
    RIGHT,
    UP,
    Composition,
    LatticePath,
    LatticePoint,
    as_composition,
    binomial,
    boundary_x,
    dominates,
    first_bad_step,
    lowest_point_above,
    point,
    point_shift,
    rightup_corners,
    shift_composition,
    upright_corners,
)

DEFAULT_CAP = 10**6


class EnumerationCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class LPBP:
    """A path from the origin paired with the shift index of its boundary."""

    path: LatticePath
    composition: Composition
    shift_index: int

    def __post_init__(self):
        if not 0 <= self.shift_index < self.composition.m:
            raise ValueError(f"shift index {self.shift_index} outside [0, {self.composition.m})")
        if self.path.origin != ORIGIN:
            raise ValueError("an LPBP path starts at the origin")

    @property
    def boundary(self) -> Composition:
        return shift_composition(self.composition, self.shift_index)

    @property
    def good(self) -> bool:
        return dominates(self.boundary, self.path)

    def __str__(self) -> str:
        return f"({self.path.steps or 'ε'}, ({','.join(map(str, self.composition))}), {self.shift_index})"


@dataclass(frozen=True)
class CountReport:
    terminus: LatticePoint
    all: int
    bad: int
    good: int

    def __post_init__(self):
        if self.all != self.bad + self.good:
            raise ArithmeticError(f"inconsistent report {self}")

    def as_tuple(self):
        return (self.all, self.bad, self.good)


def _check_terminus(a: Composition, t: LatticePoint) -> None:
    if not (0 <= t.x <= a.n and 0 <= t.y <= a.m):
        raise ValueError(f"terminus {t} outside the grid [0,{a.n}] x [0,{a.m}]")


def count_dominated(a, t) -> int:
    """D(a, t): paths from the origin to t staying at or right of the boundary."""
    a = as_composition(a)
    t = point(t)
    _check_terminus(a, t)
    return _grid_count(t, lambda x, y: x >= boundary_x(a, y))


def _grid_count(t: LatticePoint, allowed: Callable[[int, int], bool]) -> int:
    if not allowed(0, 0):
        return 0
    row = [0] * (t.x + 1)
    for y in range(t.y + 1):
        for x in range(t.x + 1):
            if not allowed(x, y):
                row[x] = 0
            elif x == 0 and y == 0:
                row[x] = 1
            else:
                row[x] = row[x] + (row[x - 1] if x else 0)
    return row[t.x]


def count_lpbp(a, t) -> CountReport:
    a = as_composition(a)
    t = point(t)
    _check_terminus(a, t)
    good = sum(count_dominated(shift_composition(a, j), t) for j in range(a.m))
    total = a.m * binomial(t.x + t.y, t.y)
    return CountReport(t, total, total - good, good)


def all_paths(t, cap: int = DEFAULT_CAP) -> Iterator[str]:
    """Every word from the origin to t, lexicographic with R < U."""
    t = point(t)
    if t.x < 0 or t.y < 0:
        return
    total = binomial(t.x + t.y, t.y)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} paths to {t} exceeds the cap of {cap}")
    length = t.x + t.y
    for rights in combinations(range(length), t.x):
        word = [UP] * length
        for r in rights:
            word[r] = RIGHT
        yield "".join(word)


def enumerate_dominated_paths(a, t, cap: int = DEFAULT_CAP) -> List[LatticePath]:
    a = as_composition(a)
    t = point(t)
    _check_terminus(a, t)
    return [LatticePath(w) for w in all_paths(t, cap) if dominates(a, LatticePath(w))]


def enumerate_pairs(a, t, cap: int = DEFAULT_CAP) -> Iterator[LPBP]:
    a = as_composition(a)
    t = point(t)
    _check_terminus(a, t)
    for j in range(a.m):
        for w in all_paths(t, cap):
            yield LPBP(LatticePath(w), a, j)


def enumerate_good_pairs(a, t, cap: int = DEFAULT_CAP) -> Iterator[LPBP]:
    a = as_composition(a)
    for j in range(a.m):
        for p in enumerate_dominated_paths(shift_composition(a, j), t, cap):
            yield LPBP(p, a, j)


def enumerate_bad_pairs(a, t, cap: int = DEFAULT_CAP) -> Iterator[LPBP]:
    return (L for L in enumerate_pairs(a, t, cap) if not L.good)


def good_corner_distribution(a, t, kind: str = "upright", cap: int = DEFAULT_CAP) -> Counter:
    """Counter mapping corner count -> number of good pairs ending at t."""
    corners = {"upright": upright_corners, "rightup": rightup_corners}[kind]
    return Counter(corners(L.path.steps) for L in enumerate_good_pairs(a, t, cap))


def count_good_by_upright_corners(a, t, c: int, cap: int = DEFAULT_CAP) -> int:
    return good_corner_distribution(a, t, "upright", cap)[c]


def count_good_by_rightup_corners(a, t, c: int, cap: int = DEFAULT_CAP) -> int:
    return good_corner_distribution(a, t, "rightup", cap)[c]


def bucket_of(L: LPBP) -> int:
    """The column i with the first bad step of L landing at sigma^j(p_i).

    Landing points of different buckets are distinct for a fixed shift index;
    the uniqueness is checked rather than assumed.
    """
    a = L.composition
    hit = first_bad_step(L.boundary, L.path)
    if hit is None:
        raise ValueError(f"{L} is a good pair")
    landing = hit[1]
    found = [i for i, q in enumerate(_shifted_columns(a, L.shift_index)) if q == landing]
    if len(found) != 1:
        raise AssertionError(f"landing point {landing} of {L} matched buckets {found}")
    return found[0]


@lru_cache(maxsize=4096)
def _shifted_columns(a: Composition, j: int):
    return tuple(point_shift(a, lowest_point_above(a, i), j) for i in range(a.n))


def bucket_distribution(a, t, cap: int = DEFAULT_CAP) -> Counter:
    return Counter(bucket_of(L) for L in enumerate_bad_pairs(a, t, cap))


def count_bad_by_bucket(a, t, i: int, cap: int = DEFAULT_CAP) -> int:
    a = as_composition(a)
    t = point(t)
    _check_terminus(a, t)
    if a.n == 0:
        return 0
    if not 0 <= i < a.n:
        raise ValueError(f"bucket {i} outside [0, {a.n})")
    return bucket_distribution(a, t, cap)[i]


# ---------------------------------------------------------------------------
# geometric oracles used by the periodic / staircase checks
# ---------------------------------------------------------------------------


def count_below_line(slope: int, t) -> int:
    """Paths to t with x >= slope * y at every point."""
    t = point(t)
    return _grid_count(t, lambda x, y: x >= slope * y)


def staircase_left_edges(word: str) -> List[int]:
    """x-position of the i-th up step of a staircase word, i = 1..#U."""
    edges, x = [], 0
    for s in word:
        if s == RIGHT:
            x += 1
        else:
            edges.append(x)
    return edges


def count_under_staircase(word: str, t) -> int:
    """Paths to t that stay weakly beneath the staircase drawn by ``word``.

    A point (x, y) with y >= 1 is beneath the staircase when x is at least
    the x-position of the staircase's y-th up step.
    """
    t = point(t)
    edges = [0] + staircase_left_edges(word)
    if t.y >= len(edges):
        raise ValueError(f"terminus {t} rises above the staircase {word}")
    return _grid_count(t, lambda x, y: x >= edges[y])


def strictly_below_staircase(s: int, t: int, x: int, y: int) -> bool:
    """Point test for the staircase (R^s U^t)^n raised to start at (0, t)."""
    lowest = t * max(1, -(-x // s))
    return y < lowest


def avoiding_staircase_paths(s: int, t: int, n: int, cap: int = DEFAULT_CAP) -> List[str]:
    """Words to (sn+1, tn) that stay strictly below the raised staircase."""
    end = LatticePoint(s * n + 1, t * n)
    out = []
    for w in all_paths(end, cap):
        if all(strictly_below_staircase(s, t, q.x, q.y) for q in LatticePath(w).points()):
            out.append(w)
    return out
