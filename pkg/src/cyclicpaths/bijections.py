"""Constructive bijections behind the counting theorems.

* :func:`psi` / :func:`phi`: the reflection map between bad pairs whose first
  bad step lands in B_i and paths from (-1, 1).
* :func:`corner_data_to_bad_lpbp`: corner-refined version, built from a pair
  of strictly increasing integer sequences.
* :func:`omega` / :func:`omega_inverse`: the cycle-lemma map from
  (word, rank) pairs onto good pairs ending at (n, l) with a right step.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .core import (
    RIGHT,
    UP,
    Composition,
    LatticePath,
    LatticePoint,
    as_composition,
    first_bad_step,
    lowest_point_above,
    point,
    point_shift,
    reduce_x,
    shift_composition,
)
from .oracle import LPBP

REFLECTION_ORIGIN = LatticePoint(-1, 1)


# ---------------------------------------------------------------------------
# B_i sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BadStepContext:
    """p_i, s_i and the ordered points b_i^0 .. b_i^{m-1} of the set B_i."""

    composition: Composition
    i: int
    p: LatticePoint
    s: int
    b: Tuple[LatticePoint, ...]
    b_minus1: LatticePoint

    def index_of(self, q: LatticePoint) -> Optional[int]:
        """j with b_i^j == q, or None."""
        if 1 <= q.y <= len(self.b) and self.b[q.y - 1] == q:
            return q.y - 1
        return None

    def shift_for(self, j: int) -> int:
        """Shift index of the boundary whose first bad step lands at b_i^j."""
        return (self.s + j) % self.composition.m


def bad_step_context(a, i: int) -> BadStepContext:
    return _bad_step_context(as_composition(a), i)


@lru_cache(maxsize=4096)
def _bad_step_context(a: Composition, i: int) -> BadStepContext:
    if a.n < 1:
        raise ValueError("B_i sets need n >= 1")
    if not 0 <= i < a.n:
        raise ValueError(f"column {i} outside [0, {a.n})")
    p = lowest_point_above(a, i)
    s = a.m + 1 - p.y
    b = tuple(point_shift(a, p, s + j) for j in range(a.m))
    bm1 = LatticePoint(-a[-s] + reduce_x(i + a.backward_sum(s), a.n), 0)
    for j, q in enumerate(b):
        if q.y != j + 1:
            raise AssertionError(f"b_{i}^{j} = {q} is not at height {j + 1}")
        if j and not b[j - 1].lesssim(q):
            raise AssertionError(f"b_{i}^{j - 1} = {b[j - 1]} does not precede {q}")
    return BadStepContext(a, i, p, s, b, bm1)


def is_complete(ctx: BadStepContext, t) -> bool:
    t = point(t)
    if t.y == 0:
        return True
    return ctx.b[t.y - 1].x <= t.x


def is_strongly_complete(ctx: BadStepContext, t) -> bool:
    t = point(t)
    if t.y == 0:
        return True
    return ctx.b[t.y - 1].x < t.x


# ---------------------------------------------------------------------------
# reflection map
# ---------------------------------------------------------------------------


def locate_bad_step(L: LPBP) -> Tuple[BadStepContext, int, int]:
    """(context of the bucket i, j, index of the bad step) for a bad pair."""
    hit = first_bad_step(L.boundary, L.path)
    if hit is None:
        raise ValueError(f"{L} is a good pair")
    idx, landing = hit
    a = L.composition
    for i in range(a.n):
        ctx = bad_step_context(a, i)
        j = ctx.index_of(landing)
        if j is not None and ctx.shift_for(j) == L.shift_index:
            return ctx, j, idx
    raise AssertionError(f"landing point {landing} of {L} lies in no B_i")


def psi(L: LPBP, t) -> LatticePath:
    """Reflect the part before the first bad step; the result starts at (-1, 1)."""
    t = point(t)
    if L.path.terminus != t:
        raise ValueError(f"{L} ends at {L.path.terminus}, not {t}")
    ctx, j, idx = locate_bad_step(L)
    word = L.path.steps
    head, tail = word[:idx], word[idx + 1:]
    return LatticePath(head[::-1] + RIGHT + tail, REFLECTION_ORIGIN)


def phi(p: LatticePath, a, i: int, j: int, t) -> LPBP:
    """Inverse of :func:`psi` on paths whose first hit among b_i^0..b_i^j is b_i^j."""
    a = as_composition(a)
    t = point(t)
    if p.origin != REFLECTION_ORIGIN:
        raise ValueError(f"path must start at {REFLECTION_ORIGIN}, starts at {p.origin}")
    if p.terminus != t:
        raise ValueError(f"path ends at {p.terminus}, not {t}")
    ctx = bad_step_context(a, i)
    if not 0 <= j < a.m:
        raise ValueError(f"j={j} outside [0, {a.m})")
    targets = set(ctx.b[: j + 1])
    pts = p.points()
    hit = next((n for n, q in enumerate(pts) if q in targets), None)
    if hit is None or pts[hit] != ctx.b[j]:
        what = "misses" if hit is None else f"meets {pts[hit]} before"
        raise ValueError(f"path {p} {what} b_{i}^{j} = {ctx.b[j]}")
    if hit == 0 or p.steps[hit - 1] != RIGHT:
        raise ValueError(f"path {p} enters b_{i}^{j} vertically")
    head, tail = p.steps[: hit - 1], p.steps[hit:]
    L = LPBP(LatticePath(head[::-1] + UP + tail), a, ctx.shift_for(j))
    check = first_bad_step(L.boundary, L.path)
    if check is None or check[1] != ctx.b[j]:
        raise AssertionError(f"phi produced {L}, whose first bad step is {check}")
    return L


def reflection_targets(ctx: BadStepContext, t) -> List[Tuple[int, LatticePath]]:
    """All paths (-1, 1) -> t tagged with the first b_i^j they meet (j < l)."""
    from .oracle import all_paths

    t = point(t)
    shift = LatticePoint(t.x + 1, t.y - 1)
    out = []
    targets = {q: j for j, q in enumerate(ctx.b[: t.y])}
    for w in all_paths(shift):
        path = LatticePath(w, REFLECTION_ORIGIN)
        j = next((targets[q] for q in path.points() if q in targets), None)
        if j is not None:
            out.append((j, path))
    return out


# ---------------------------------------------------------------------------
# corner refinement
# ---------------------------------------------------------------------------


def _run(step: str, length: int) -> str:
    if length < 0:
        raise AssertionError(f"corner data leads to a backwards {step} run of length {length}")
    return step * length


def corner_data_to_bad_lpbp(a, i: int, t, X: Sequence[int], Y: Sequence[int]) -> LPBP:
    """Bad pair in bucket i whose path has exactly ``len(X)`` up-right corners.

    X must satisfy 0 <= X_1 < ... < X_c = k-1 and Y must satisfy
    1 <= Y_1 < ... < Y_{c+1} <= l+1.  The intermediate path from (-1, 1) has
    right-up corners at (X_s, Y_s) for s < r, runs horizontally into b_i^j
    (j = Y_r - 1) and out of (x(b_i^j), Y_{r+1} - 1), and has up-right
    corners at (X_s + 1, Y_{s+2} - 1) for r <= s < c.  :func:`phi` then
    turns it into the bad pair.
    """
    a = as_composition(a)
    t = point(t)
    k, l = t.x, t.y
    X, Y = list(X), list(Y)
    c = len(X)
    if c < 1:
        raise ValueError("need at least one corner (c >= 1)")
    if len(Y) != c + 1:
        raise ValueError(f"Y must have {c + 1} entries, got {len(Y)}")
    if X[0] < 0 or X[-1] != k - 1 or any(u >= v for u, v in zip(X, X[1:])):
        raise ValueError(f"X must satisfy 0 <= X_1 < ... < X_c = {k - 1}: {X}")
    if Y[0] < 1 or Y[-1] > l + 1 or any(u >= v for u, v in zip(Y, Y[1:])):
        raise ValueError(f"Y must satisfy 1 <= Y_1 < ... < Y_c+1 <= {l + 1}: {Y}")
    ctx = bad_step_context(a, i)
    if not is_strongly_complete(ctx, t):
        raise ValueError(f"B_{i} is not strongly complete with respect to {t}")

    # X[s - 1], Y[s - 1] hold X_s, Y_s
    r = next(r for r in range(1, c + 1) if ctx.b[Y[r - 1] - 1].x <= X[r - 1])
    j = Y[r - 1] - 1
    bx = ctx.b[j].x
    word, x, y = [], REFLECTION_ORIGIN.x, REFLECTION_ORIGIN.y
    for s in range(1, r):
        word += [_run(UP, Y[s - 1] - y), _run(RIGHT, X[s - 1] - x)]
        x, y = X[s - 1], Y[s - 1]
    word += [_run(UP, j + 1 - y), _run(RIGHT, bx - x)]
    x, y = bx, j + 1
    word.append(_run(UP, Y[r] - 1 - y))
    y = Y[r] - 1
    for s in range(r, c):
        word += [_run(RIGHT, X[s - 1] + 1 - x), _run(UP, Y[s + 1] - 1 - y)]
        x, y = X[s - 1] + 1, Y[s + 1] - 1
    word += [_run(RIGHT, k - x), _run(UP, l - y)]
    path = LatticePath("".join(word), REFLECTION_ORIGIN)
    return phi(path, a, i, j, t)


def corner_sequences(k: int, l: int, c: int):
    """Every valid (X, Y) pair for c corners and terminus (k, l)."""
    if c < 1 or k < 1:
        return
    for xs in combinations(range(k - 1), c - 1):
        for ys in combinations(range(1, l + 2), c + 1):
            yield list(xs) + [k - 1], list(ys)


# ---------------------------------------------------------------------------
# cycle lemma
# ---------------------------------------------------------------------------


def positive_shifts(u: Sequence[int]) -> List[int]:
    """Rotation offsets o (left rotations) after which every prefix sum is >= 1.

    For entries <= 1 with positive total k there are exactly k of them.
    """
    u = list(u)
    if any(v > 1 for v in u):
        raise ValueError("entries must be <= 1")
    total = sum(u)
    if total <= 0:
        raise ValueError(f"sequence sum must be positive, got {total}")
    out = []
    for o in range(len(u)):
        run = 0
        for v in u[o:] + u[:o]:
            run += v
            if run < 1:
                break
        else:
            out.append(o)
    if len(out) != total:
        raise AssertionError(f"{len(out)} positive rotations for a sequence of sum {total}")
    return out


def parse_blocks(a, word: str) -> List[str]:
    """Split word into w_0 .. w_{m-1}: w_i is empty if a_i = 0, else ends at its a_i-th R."""
    a = as_composition(a)
    if word.count(RIGHT) != a.n:
        raise ValueError(f"word {word!r} needs exactly {a.n} right steps")
    blocks, pos = [], 0
    for part in a:
        if part == 0:
            blocks.append("")
            continue
        seen, end = 0, pos
        while seen < part:
            if word[end] == RIGHT:
                seen += 1
            end += 1
        blocks.append(word[pos:end])
        pos = end
    if pos != len(word):
        raise ValueError(f"word {word!r} has trailing up steps after its last R")
    return blocks


def block_sequence(blocks: Sequence[str]) -> List[int]:
    """(1, -u_0, 1, -u_1, ...), u_i the number of U's in block i."""
    out = []
    for w in blocks:
        out += [1, -w.count(UP)]
    return out


def _positive_block_starts(blocks: Sequence[str]) -> List[int]:
    offsets = positive_shifts(block_sequence(blocks))
    if any(o % 2 for o in offsets):
        raise AssertionError(f"odd rotation among {offsets}")
    return [o // 2 for o in offsets]


def omega(a, l: int, w: str, k: int) -> LPBP:
    """Good pair ending at (n, l) with a right step, indexed by (w, k)."""
    a = as_composition(a)
    if not 0 <= l < a.m:
        raise ValueError(f"need 0 <= l < m, got l={l}")
    if len(w) != a.n + l or w.count(UP) != l:
        raise ValueError(f"word {w!r} must have {a.n} R's and {l} U's")
    if not w.endswith(RIGHT):
        raise ValueError(f"word {w!r} must end with R")
    if not 1 <= k <= a.m - l:
        raise ValueError(f"k={k} outside [1, {a.m - l}]")
    blocks = parse_blocks(a, w)
    j = _positive_block_starts(blocks)[k - 1]
    rotated = "".join(blocks[(j + t) % a.m] for t in range(a.m))
    return LPBP(LatticePath(rotated), a, (-j) % a.m)


def omega_inverse(L: LPBP) -> Tuple[str, int]:
    a = L.composition
    word = L.path.steps
    if not L.good:
        raise ValueError(f"{L} is a bad pair")
    if L.path.terminus.x != a.n or L.path.terminus.y >= a.m:
        raise ValueError(f"{L} does not end at (n, l) with l < m")
    if not word.endswith(RIGHT):
        raise ValueError(f"{L} does not end with a right step")
    j = (-L.shift_index) % a.m
    rotated = parse_blocks(shift_composition(a, -j), word)
    blocks = [rotated[(t - j) % a.m] for t in range(a.m)]
    starts = _positive_block_starts(blocks)
    return "".join(blocks), starts.index(j) + 1


def omega_domain(a, l: int):
    """Every (w, k) in the domain of :func:`omega`."""
    a = as_composition(a)
    if a.n < 1:
        return
    for ups in combinations(range(a.n + l - 1), l):
        w = [RIGHT] * (a.n + l)
        for u in ups:
            w[u] = UP
        for k in range(1, a.m - l + 1):
            yield "".join(w), k
