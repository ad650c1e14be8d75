"""Compositions, cyclic shifts, boundary geometry and exact binomials.

A weak composition ``a = (a_0, ..., a_{m-1})`` of ``n`` defines a monotone
boundary whose x-value at integer height ``y`` is the prefix sum
``a_0 + ... + a_{y-1}``.  A path is *dominated* by ``a`` when every lattice
point it visits satisfies ``x >= boundary_x(a, y)``.

All arithmetic is on Python ints; nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Optional, Tuple

RIGHT = "R"
UP = "U"


# ---------------------------------------------------------------------------
# exact arithmetic
# ---------------------------------------------------------------------------


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 whenever ``k < 0``, ``k > n`` or ``n < 0``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan number undefined for n={n}")
    return math.comb(2 * n, n) // (n + 1)


def exact(value) -> int:
    """Convert a Fraction (or int) to int, refusing anything non-integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return value.numerator


def exact_div(num: int, den: int) -> int:
    if den == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


# ---------------------------------------------------------------------------
# points and paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LatticePoint:
    x: int
    y: int

    def leq(self, other: "LatticePoint") -> bool:
        """Both coordinates weakly increase."""
        return self.x <= other.x and self.y <= other.y

    def lesssim(self, other: "LatticePoint") -> bool:
        """x weakly increases, y strictly increases."""
        return self.x <= other.x and self.y < other.y

    def lt(self, other: "LatticePoint") -> bool:
        """Both coordinates strictly increase."""
        return self.x < other.x and self.y < other.y

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x + other.x, self.y + other.y)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.x, self.y)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


ORIGIN = LatticePoint(0, 0)


def point(xy) -> LatticePoint:
    if isinstance(xy, LatticePoint):
        return xy
    x, y = xy
    return LatticePoint(int(x), int(y))


@dataclass(frozen=True)
class LatticePath:
    """A start point plus a word over ``{"R", "U"}``."""

    steps: str
    origin: LatticePoint = ORIGIN

    def __post_init__(self):
        bad = set(self.steps) - {RIGHT, UP}
        if bad:
            raise ValueError(f"path word may only contain R and U, got {sorted(bad)}")

    @property
    def rights(self) -> int:
        return self.steps.count(RIGHT)

    @property
    def ups(self) -> int:
        return self.steps.count(UP)

    @property
    def terminus(self) -> LatticePoint:
        return LatticePoint(self.origin.x + self.rights, self.origin.y + self.ups)

    def points(self) -> list:
        """Every lattice point visited, origin included."""
        x, y = self.origin.x, self.origin.y
        out = [LatticePoint(x, y)]
        for s in self.steps:
            if s == RIGHT:
                x += 1
            else:
                y += 1
            out.append(LatticePoint(x, y))
        return out

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps if self.origin == ORIGIN else f"{self.steps}@{self.origin}"


def upright_corners(word: str) -> int:
    """Number of points where an up step is followed by a right step."""
    return word.count(UP + RIGHT)


def rightup_corners(word: str, virtual: bool = True) -> int:
    """Right-then-up corners; a leading up step counts once when ``virtual``."""
    c = word.count(RIGHT + UP)
    if virtual and word.startswith(UP):
        c += 1
    return c


# ---------------------------------------------------------------------------
# compositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Composition:
    """Weak m-part composition of n; ``a[j]`` reads ``a_{j mod m}``."""

    parts: Tuple[int, ...]
    _prefix: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(p < 0 for p in parts):
            raise ValueError(f"parts must be nonnegative: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "_prefix", (0,) + tuple(accumulate(parts)))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(int(p) for p in text.replace(" ", "").split(",") if p != "")

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return self._prefix[-1]

    def __getitem__(self, j: int) -> int:
        return self.parts[j % self.m]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return self.m

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def shift(self, j: int) -> "Composition":
        return shift_composition(self, j)

    def boundary_x(self, y: int) -> int:
        return boundary_x(self, y)

    def backward_sum(self, j: int) -> int:
        """a_{-1} + a_{-2} + ... + a_{-j} for j >= 0."""
        if j < 0:
            raise ValueError("backward_sum needs j >= 0")
        q, r = divmod(j, self.m)
        return q * self.n + sum(self[-t] for t in range(1, r + 1))


def as_composition(a) -> Composition:
    return a if isinstance(a, Composition) else Composition(a)


def shift_composition(a, j: int) -> Composition:
    """The j-th cyclic shift ``(a_{-j}, a_{-j+1}, ..., a_{-j+m-1})``."""
    a = as_composition(a)
    return Composition(a[-j + t] for t in range(a.m))


def composition_period(a) -> int:
    a = as_composition(a)
    for d in range(1, a.m + 1):
        if a.m % d == 0 and shift_composition(a, d) == a:
            return d
    raise AssertionError("unreachable: shifting by m is the identity")


def boundary_x(a, y: int) -> int:
    a = as_composition(a)
    if not 0 <= y <= a.m:
        raise ValueError(f"height {y} outside [0, {a.m}]")
    return a._prefix[y]


def max_shifted_boundary_x(a, y: int) -> int:
    """Largest boundary x-value at height y across all cyclic shifts."""
    a = as_composition(a)
    return max(boundary_x(shift_composition(a, j), y) for j in range(a.m))


def weak_compositions(n: int, m: int):
    """All weak m-part compositions of n, in lexicographic order."""
    if m == 1:
        yield Composition((n,))
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, m - 1):
            yield Composition((first,) + rest.parts)


# ---------------------------------------------------------------------------
# dominance
# ---------------------------------------------------------------------------


def _check_origin_path(a: Composition, p: LatticePath) -> None:
    if p.origin != ORIGIN:
        raise ValueError(f"path must start at the origin, starts at {p.origin}")
    if p.ups > a.m:
        raise ValueError(f"path has {p.ups} up steps but the composition has {a.m} parts")


def first_bad_step(a, p: LatticePath) -> Optional[Tuple[int, LatticePoint]]:
    """Index and landing point of the first step that crosses the boundary."""
    a = as_composition(a)
    _check_origin_path(a, p)
    prefix = a._prefix
    x = y = 0
    for idx, s in enumerate(p.steps):
        if s == RIGHT:
            x += 1
            continue
        y += 1
        if x < prefix[y]:
            return idx, LatticePoint(x, y)
    return None


def dominates(a, p: LatticePath) -> bool:
    """True when every point of ``p`` satisfies ``x >= boundary_x(a, y)``."""
    return first_bad_step(a, p) is None


def point_dominated(a, t) -> bool:
    a = as_composition(a)
    t = point(t)
    return 0 <= t.y <= a.m and t.x >= boundary_x(a, t.y)


def dominated_by_all_shifts(a, t) -> bool:
    a = as_composition(a)
    t = point(t)
    return 0 <= t.y <= a.m and t.x >= max_shifted_boundary_x(a, t.y)


# ---------------------------------------------------------------------------
# point shifts
# ---------------------------------------------------------------------------


def reduce_x(x: int, n: int) -> int:
    """Representative of x mod n in {0, ..., n-1}."""
    return x % n


def reduce_y(y: int, m: int) -> int:
    """Representative of y mod m in {1, ..., m}."""
    return (y - 1) % m + 1


def point_shift(a, p, j: int) -> LatticePoint:
    """Move p to the same position relative to the j-th shifted boundary."""
    a = as_composition(a)
    p = point(p)
    if a.n == 0:
        raise ValueError("point shifts need n >= 1")
    if not (0 <= p.x < a.n and 1 <= p.y <= a.m):
        raise ValueError(f"point {p} outside [0,{a.n}) x [1,{a.m}]")
    j %= a.m
    return LatticePoint(reduce_x(p.x + a.backward_sum(j), a.n), reduce_y(p.y + j, a.m))


def lowest_point_above(a, i: int) -> LatticePoint:
    """p_i = (i, y_i), with y_i the least height where the boundary passes x = i."""
    a = as_composition(a)
    if not 0 <= i < a.n:
        raise ValueError(f"column {i} outside [0, {a.n})")
    for y in range(1, a.m + 1):
        if a._prefix[y] > i:
            return LatticePoint(i, y)
    raise AssertionError("unreachable: boundary_x(a, m) = n > i")


def parse_point(text: str) -> LatticePoint:
    x, y = (int(v) for v in text.replace("(", "").replace(")", "").split(","))
    return LatticePoint(x, y)


def paths_in_grid_count(t) -> int:
    t = point(t)
    return binomial(t.x + t.y, t.y)

