"""Oracle-versus-formula sweeps shared by the ``verify`` and ``sweep`` commands."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from . import bijections as bij
from . import formulas as F
from . import oracle as O
from .core import (
    Composition,
    LatticePoint,
    binomial,
    dominated_by_all_shifts,
    rightup_corners,
    weak_compositions,
)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, what: str) -> None:
        self.cases += 1
        if not cond and len(self.failures) < 20:
            self.failures.append(what)


def compositions_up_to(max_n: int, max_m: int):
    for m in range(1, max_m + 1):
        for n in range(max_n + 1):
            yield from weak_compositions(n, m)


def termini(a: Composition):
    for k in range(a.n + 1):
        for l in range(a.m + 1):
            yield LatticePoint(k, l)


def check_composition(a: Composition) -> Dict[str, Tuple[int, List[str]]]:
    """Every per-composition identity; returns name -> (cases, failures)."""
    results = {name: CheckResult(name) for name in ("pair_counts", "total", "recursion", "corners", "buckets", "reflection")}
    good = {t: O.count_lpbp(a, t).good for t in termini(a)}
    results["total"].expect(
        good[LatticePoint(a.n, a.m)] == F.total_over_shifts_formula(a.n, a.m), f"{a}: total over shifts"
    )
    ctxs = [bij.bad_step_context(a, i) for i in range(a.n)]
    for t in termini(a):
        k, l = t.x, t.y
        if F.pair_count_hypothesis(a, t):
            rep = O.count_lpbp(a, t)
            results["pair_counts"].expect(rep == F.lpbp_counts_formula(a, t), f"{a} at {t}: {rep}")
        if l >= 1 and k + 1 <= a.n and F.pair_count_hypothesis(a, t):
            results["recursion"].expect(
                good[LatticePoint(k + 1, l)] == good[t] + good[LatticePoint(k + 1, l - 1)],
                f"{a}: recursion at {LatticePoint(k + 1, l)}",
            )
        if dominated_by_all_shifts(a, t):
            up = O.good_corner_distribution(a, t, "upright")
            ru = O.good_corner_distribution(a, t, "rightup")
            for c in range(0, min(k, l) + 2):
                results["corners"].expect(up[c] == F.upright_corners_formula(a, t, c), f"{a} at {t}: up-right c={c}")
                results["corners"].expect(ru[c] == F.rightup_corners_formula(a, t, c), f"{a} at {t}: right-up c={c}")
        if a.n and F.pair_count_hypothesis(a, t):
            dist = O.bucket_distribution(a, t)
            for i, ctx in enumerate(ctxs):
                if bij.is_complete(ctx, t):
                    results["buckets"].expect(dist[i] == binomial(k + l, l - 1), f"{a} at {t}: |B_{i}|={dist[i]}")
            for L in O.enumerate_bad_pairs(a, t):
                ctx, j, _ = bij.locate_bad_step(L)
                results["reflection"].expect(bij.phi(bij.psi(L, t), a, ctx.i, j, t) == L, f"{L}: psi/phi round trip")
    return {name: (r.cases, r.failures) for name, r in results.items()}


def _merge(into: Dict[str, CheckResult], part: Dict[str, Tuple[int, List[str]]]) -> None:
    for name, (cases, failures) in part.items():
        r = into.setdefault(name, CheckResult(name))
        r.cases += cases
        r.failures.extend(failures[: max(0, 20 - len(r.failures))])


def sweep(max_n: int, max_m: int, workers: int = 1) -> List[CheckResult]:
    """Run :func:`check_composition` over every composition in range."""
    return sweep_compositions(list(compositions_up_to(max_n, max_m)), workers)


def _pool_map(fn, items, workers: int) -> list:
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items, chunksize=8))
    return [fn(x) for x in items]


def sweep_compositions(comps: List[Composition], workers: int = 1) -> List[CheckResult]:
    """Results are merged in input order, so they do not depend on ``workers``."""
    parts = _pool_map(check_composition, comps, workers)
    merged: Dict[str, CheckResult] = {}
    for part in parts:
        _merge(merged, part)
    return [merged[name] for name in sorted(merged)]


def _pair_count_rows(a: Composition) -> List[dict]:
    rows = []
    for t in termini(a):
        if not F.pair_count_hypothesis(a, t):
            continue
        rep = O.count_lpbp(a, t)
        rows.append({
            "comp": str(a),
            "to": str(t),
            "all": rep.all,
            "bad": rep.bad,
            "good": rep.good,
            "match": rep == F.lpbp_counts_formula(a, t),
        })
    return rows


def pair_count_table(comps: List[Composition], workers: int = 1) -> List[dict]:
    """Oracle (all, bad, good) next to the closed form, one row per terminus."""
    return [row for rows in _pool_map(_pair_count_rows, comps, workers) for row in rows]


def global_checks(max_n: int, max_m: int) -> List[CheckResult]:
    """Identities that are not tied to one composition."""
    out = []

    r = CheckResult("ballot")
    for slope in range(0, 4):
        for l in range(0, max_m + 1):
            for k in range(slope * l, max(slope * l, max_n) + 1):
                r.expect(F.ballot_formula(slope, k, l) == O.count_below_line(slope, (k, l)), f"ballot a={slope} ({k},{l})")
    out.append(r)

    r = CheckResult("gencat")
    for slope in range(0, 4):
        for m in range(1, max_m + 1):
            a = Composition([slope] * m)
            r.expect(F.generalized_catalan(slope, m) == O.count_dominated(a, (slope * m, m)), f"gencat a={slope} m={m}")
    out.append(r)

    r = CheckResult("omega")
    for a in compositions_up_to(min(max_n, 5), max_m):
        if a.n == 0:
            continue
        for l in range(a.m):
            images = set()
            for w, k in bij.omega_domain(a, l):
                L = bij.omega(a, l, w, k)
                r.expect(L.good and bij.omega_inverse(L) == (w, k), f"omega round trip {a} {w} {k}")
                images.add(L)
            r.expect(len(images) == F.gstar_count(a.n, a.m, l), f"|G*| for {a}, l={l}")
    out.append(r)

    r = CheckResult("periodic")
    for ab in [(0, 1), (0, 2), (1, 2), (1, 3), (2, 5)]:
        for n in range(0, 3):
            spec = F.PeriodicSpec(ab[0], ab[1], n)
            A = Composition(ab * (n + 1))
            B = Composition(ab[::-1] * (n + 1))
            got = (O.count_dominated(A, spec.q), O.count_dominated(B, spec.q), O.count_dominated(A, spec.p), O.count_dominated(B, spec.p))
            r.expect(got == F.periodic_counts(spec), f"periodic {ab} n={n}: {got}")
    out.append(r)

    r = CheckResult("staircase")
    for s in range(1, 4):
        for t in range(1, 4):
            for n in range(1, 3):
                word = "U" * (t - 1) + ("R" * s + "U" * t) * (n - 1) + "R" * (s - 1)
                r.expect(
                    F.staircase_theorem_formula(s, t, n) == O.count_under_staircase(word, (s * n - 1, t * n - 1)),
                    f"staircase s={s} t={t} n={n}",
                )
                paths = O.avoiding_staircase_paths(s, t, n)
                r.expect(len(paths) == F.staircase_avoidance_count(s, t, n), f"avoid s={s} t={t} n={n}")
                for c in range(1, s * n + 2):
                    got = sum(1 for w in paths if rightup_corners(w, virtual=False) == c)
                    r.expect(got == F.staircase_avoidance_corners(s, t, n, c), f"avoid corners s={s} t={t} n={n} c={c}")
    out.append(r)

    r = CheckResult("convolution")
    for n in range(1, 51):
        r.expect(F.convolution_identity_check(n), f"convolution n={n}")
    out.append(r)
    return out

