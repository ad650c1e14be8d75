"""Command-line front end.

    cyclicpaths count --comp 1,2,3 --to 6,3 --all-shifts
    cyclicpaths formula theorem1 --comp 1,2,3 --to 6,3
    cyclicpaths verify --max-n 7 --max-m 4
    cyclicpaths bijection psi --comp 1,1 --path UURR --shift 0 --trace
    cyclicpaths render --comp 1,2,3,2 --out boundary.svg

Exit status is 0 on success, 1 when an input violates a precondition or
hypothesis (or the output file cannot be written) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from . import bijections as bij
from . import checks
from . import formulas as F
from . import oracle as O
from .core import (
    Composition,
    LatticePath,
    LatticePoint,
    first_bad_step,
    parse_point,
    shift_composition,
)
from .render import render_svg

FORMULAS = (
    "theorem1",
    "ballot",
    "gencat",
    "corners",
    "corners2",
    "periodic",
    "halfslope",
    "cat-staircase",
    "staircase",
    "kcat",
    "avoid",
    "avoid-corners",
)

# counts travel as decimal strings; nothing numeric is left as a JSON number
# except elapsed_ms
SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "input", "result", "elapsed_ms"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["count", "formula", "verify", "sweep", "bijection", "render"]},
        "input": {"type": "object", "additionalProperties": {"$ref": "#/$defs/value"}},
        "result": {"type": "object", "additionalProperties": {"$ref": "#/$defs/value"}},
        "elapsed_ms": {"type": "number", "minimum": 0},
    },
    "$defs": {
        "value": {
            "anyOf": [
                {"type": "string"},
                {"type": "boolean"},
                {"type": "null"},
                {"type": "array", "items": {"$ref": "#/$defs/value"}},
                {"type": "object", "additionalProperties": {"$ref": "#/$defs/value"}},
            ]
        }
    },
}


class UsageError(Exception):
    pass


def jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, (LatticePoint, Composition, LatticePath)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(doc: Dict[str, Any]) -> str:
    """Canonical serialization: sorted keys, two-space indent."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _composition(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}: {exc}")


def _point(text: str) -> LatticePoint:
    try:
        return parse_point(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad point {text!r}; expected x,y")


def _word(text: str) -> str:
    if any(ch not in "RU" for ch in text):
        raise argparse.ArgumentTypeError(f"bad path word {text!r}; use R and U only")
    return text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document instead of text")

    parser = argparse.ArgumentParser(
        prog="cyclicpaths",
        description="Lattice paths under cyclically shifted boundaries.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], allow_abbrev=False, help="oracle counts of dominated paths")
    p.add_argument("--comp", type=_composition, required=True)
    p.add_argument("--to", type=_point, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--shift", type=int, metavar="j")
    g.add_argument("--all-shifts", action="store_true")
    p.add_argument("--corners", type=int, metavar="c", help="good pairs with c corners (enumerated)")
    p.add_argument("--cap", type=int, default=O.DEFAULT_CAP)

    p = sub.add_parser("formula", parents=[common], allow_abbrev=False, help="evaluate a closed form")
    p.add_argument("name", choices=FORMULAS)
    p.add_argument("--comp", type=_composition)
    p.add_argument("--to", type=_point)
    p.add_argument("--corners", type=int, metavar="c")
    p.add_argument("--weak", action="store_true", help="theorem1: check the hypothesis on the unshifted boundary only")
    p.add_argument("--slope", type=int, help="ballot/gencat: the slope a")
    p.add_argument("--m", type=int, help="gencat: number of parts")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int, help="halfslope: the odd slope numerator")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)

    for name, helptext in (("verify", "oracle-versus-formula sweep of every identity"), ("sweep", "table of all/bad/good pair counts")):
        p = sub.add_parser(name, parents=[common], allow_abbrev=False, help=helptext)
        p.add_argument("--max-n", type=int, default=5)
        p.add_argument("--max-m", type=int, default=3)
        p.add_argument("--workers", type=int, default=1)
        if name == "verify":
            p.add_argument("--seed", type=int, help="with --sample, which random compositions to check")
            p.add_argument("--sample", type=int, help="check only this many randomly chosen compositions")

    p = sub.add_parser("bijection", parents=[common], allow_abbrev=False, help="run psi, phi, omega or its inverse")
    p.add_argument("map", choices=("psi", "phi", "omega", "omega-inv"))
    p.add_argument("--comp", type=_composition, required=True)
    p.add_argument("--path", type=_word, help="path word (psi, phi, omega-inv)")
    p.add_argument("--shift", type=int, metavar="j", help="shift index of the pair (psi, omega-inv)")
    p.add_argument("--bucket", type=int, metavar="i", help="phi: bucket index i")
    p.add_argument("--index", type=int, metavar="j", help="phi: which b_i^j the path must meet")
    p.add_argument("--word", type=_word, help="omega: the word w")
    p.add_argument("--k", type=int, help="omega: rank k of the positive shift")
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("render", parents=[common], allow_abbrev=False, help="draw boundaries and paths as SVG")
    p.add_argument("--comp", type=_composition, required=True)
    p.add_argument("--all-shifts", action="store_true")
    p.add_argument("--path", type=_word, action="append", default=[], help="path word from the origin (repeatable)")
    p.add_argument("--out", metavar="FILE", help="output file (default: standard output)")
    return parser


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        flags = ", ".join("--" + n for n in missing)
        raise UsageError(f"{args.command} {getattr(args, 'name', '') or getattr(args, 'map', '')} needs {flags}")


# ---------------------------------------------------------------------------
# subcommands: each returns (input, result, text lines)
# ---------------------------------------------------------------------------


def cmd_count(args):
    a, t = args.comp, args.to
    inp = {"comp": a, "to": t, "shift": args.shift, "all_shifts": args.all_shifts, "corners": args.corners}
    if args.corners is not None:
        up = O.count_good_by_upright_corners(a, t, args.corners, args.cap)
        ru = O.count_good_by_rightup_corners(a, t, args.corners, args.cap)
        result = {"upright": up, "rightup": ru}
        text = [
            f"good pairs ending at {t} with {args.corners} up-right corners: {up}",
            f"good pairs ending at {t} with {args.corners} right-up corners: {ru}",
        ]
        return inp, result, text
    if args.all_shifts:
        per = [O.count_dominated(shift_composition(a, j), t) for j in range(a.m)]
        report = O.count_lpbp(a, t)
        result = {
            "per_shift": per,
            "total": sum(per),
            "all": report.all,
            "bad": report.bad,
            "good": report.good,
        }
        text = [f"D({shift_composition(a, j)}, {t}) = {d}   shift {j}" for j, d in enumerate(per)]
        text.append(f"total = {sum(per)}")
        text.append(f"all/bad/good = {report.all}/{report.bad}/{report.good}")
        return inp, result, text
    j = args.shift or 0
    b = shift_composition(a, j)
    d = O.count_dominated(b, t)
    return inp, {"shift": j, "D": d}, [f"D({b}, {t}) = {d}"]


def cmd_formula(args):
    name = args.name
    inp: Dict[str, Any] = {"name": name}
    if name == "theorem1":
        _need(args, "comp", "to")
        inp.update(comp=args.comp, to=args.to, weak=args.weak)
        rep = F.lpbp_counts_formula(args.comp, args.to, all_shifts=not args.weak)
        result = {"all": rep.all, "bad": rep.bad, "good": rep.good}
        return inp, result, [f"all/bad/good = {rep.all}/{rep.bad}/{rep.good}"]
    if name == "ballot":
        _need(args, "slope", "to")
        inp.update(slope=args.slope, to=args.to)
        v = F.ballot_formula(args.slope, args.to.x, args.to.y)
        return inp, {"count": v}, [f"paths to {args.to} with x >= {args.slope}y: {v}"]
    if name == "gencat":
        _need(args, "slope", "m")
        inp.update(slope=args.slope, m=args.m)
        v = F.generalized_catalan(args.slope, args.m)
        return inp, {"count": v}, [f"generalized Catalan (a={args.slope}, m={args.m}): {v}"]
    if name in ("corners", "corners2"):
        _need(args, "comp", "to", "corners")
        inp.update(comp=args.comp, to=args.to, corners=args.corners)
        fn = F.upright_corners_formula if name == "corners" else F.rightup_corners_formula
        kind = "up-right" if name == "corners" else "right-up"
        v = fn(args.comp, args.to, args.corners)
        return inp, {"count": v}, [f"good pairs ending at {args.to} with {args.corners} {kind} corners: {v}"]
    if name == "periodic":
        _need(args, "a", "b", "n")
        spec = F.PeriodicSpec(args.a, args.b, args.n)
        inp.update(a=args.a, b=args.b, n=args.n)
        qab, qba, pab, pba = F.periodic_counts(spec)
        M, N = F.periodic_MN(spec)
        result = {"p": spec.p, "q": spec.q, "Qab": qab, "Qba": qba, "Pab": pab, "Pba": pba, "M": M, "N": N}
        text = [
            f"q_n = {spec.q}: Q^(a,b) = {qab}, Q^(b,a) = {qba}",
            f"p_n = {spec.p}: P^(a,b) = {pab}, P^(b,a) = {pba}",
            f"M_n = {M}, N_n = {N}",
        ]
        return inp, result, text
    if name == "halfslope":
        _need(args, "c", "n")
        inp.update(c=args.c, n=args.n)
        v = F.half_slope_formula(args.c, args.n)
        return inp, {"count": v}, [f"paths to ({args.c * args.n},{2 * args.n}) with 2x >= {args.c}y: {v}"]
    if name == "cat-staircase":
        _need(args, "n")
        inp.update(n=args.n)
        odd, even, under = F.catalan_staircase_counts(args.n)
        return inp, {"to_odd": odd, "to_even": even, "under": under}, [f"to_odd = {odd}", f"to_even = {even}", f"under = {under}"]
    if name == "staircase":
        _need(args, "s", "t", "n")
        inp.update(s=args.s, t=args.t, n=args.n)
        v = F.staircase_theorem_formula(args.s, args.t, args.n)
        return inp, {"count": v}, [f"paths beneath the (s,t)=({args.s},{args.t}) staircase, n={args.n}: {v}"]
    if name == "kcat":
        _need(args, "n", "k")
        inp.update(n=args.n, k=args.k)
        v = F.k_catalan_formula(args.n, args.k)
        return inp, {"count": v}, [f"k * C(nk-1) for n={args.n}, k={args.k}: {v}"]
    if name == "avoid":
        _need(args, "s", "t", "n")
        inp.update(s=args.s, t=args.t, n=args.n)
        v = F.staircase_avoidance_count(args.s, args.t, args.n)
        return inp, {"count": v}, [f"paths to ({args.s * args.n + 1},{args.t * args.n}) avoiding the staircase: {v}"]
    _need(args, "s", "t", "n", "corners")
    inp.update(s=args.s, t=args.t, n=args.n, corners=args.corners)
    v = F.staircase_avoidance_corners(args.s, args.t, args.n, args.corners)
    return inp, {"count": v}, [f"avoiding paths with {args.corners} right-up corners: {v}"]


def _verify_compositions(args) -> List[Composition]:
    comps = list(checks.compositions_up_to(args.max_n, args.max_m))
    if args.sample is not None:
        rng = random.Random(args.seed)
        comps = sorted(rng.sample(comps, min(args.sample, len(comps))), key=lambda a: (a.m, a.n, a.parts))
    return comps


def cmd_verify(args):
    if args.sample is not None and args.sample < 1:
        raise ValueError("--sample must be positive")
    comps = _verify_compositions(args)
    results = checks.sweep_compositions(comps, args.workers) + checks.global_checks(args.max_n, args.max_m)
    inp = {"max_n": args.max_n, "max_m": args.max_m, "seed": args.seed, "sample": args.sample}
    ok = all(r.ok for r in results)
    result = {
        "ok": ok,
        "compositions": len(comps),
        "checks": {r.name: {"cases": r.cases, "failures": r.failures} for r in results},
    }
    text = []
    for r in results:
        text.append(f"{'PASS' if r.ok else 'FAIL'}  {r.name:<12} {r.cases} cases")
        text.extend(f"      {f}" for f in r.failures)
    total = sum(r.cases for r in results)
    text.append(f"all identities hold ({total} cases)" if ok else "some identities FAILED")
    return inp, result, text, (0 if ok else 1)


def cmd_sweep(args):
    comps = list(checks.compositions_up_to(args.max_n, args.max_m))
    rows = checks.pair_count_table(comps, args.workers)
    inp = {"max_n": args.max_n, "max_m": args.max_m}
    mismatches = sum(1 for r in rows if not r["match"])
    result = {"rows": rows, "mismatches": mismatches}
    text = ["composition  terminus  all  bad  good  formula"]
    for r in rows:
        text.append(f"{r['comp']}  {r['to']}  {r['all']}  {r['bad']}  {r['good']}  {'ok' if r['match'] else 'MISMATCH'}")
    text.append(f"{len(rows)} termini, {mismatches} mismatches")
    return inp, result, text, (0 if mismatches == 0 else 1)


def cmd_bijection(args):
    a = args.comp
    inp: Dict[str, Any] = {"map": args.map, "comp": a}
    trace: List[str] = []
    if args.map == "psi":
        _need(args, "path", "shift")
        inp.update(path=args.path, shift=args.shift)
        L = O.LPBP(LatticePath(args.path), a, args.shift)
        t = L.path.terminus
        ctx, j, idx = bij.locate_bad_step(L)
        out = bij.psi(L, t)
        result = {"path": out.steps, "origin": out.origin, "terminus": t, "bucket": ctx.i, "j": j}
        trace += [
            f"first bad step: step {idx}, landing at {ctx.b[j]}",
            f"bucket i = {ctx.i}, p_i = {ctx.p}, s_i = {ctx.s}, j = {j}",
            "B_i = " + " ".join(str(q) for q in ctx.b),
        ]
        text = [f"psi{L} = {out.steps} from {out.origin}"]
    elif args.map == "phi":
        _need(args, "path", "bucket", "index")
        inp.update(path=args.path, bucket=args.bucket, index=args.index)
        p = LatticePath(args.path, bij.REFLECTION_ORIGIN)
        L = bij.phi(p, a, args.bucket, args.index, p.terminus)
        ctx = bij.bad_step_context(a, args.bucket)
        result = {"path": L.path.steps, "shift": L.shift_index}
        trace += [
            f"b_{args.bucket}^{args.index} = {ctx.b[args.index]}",
            f"first bad step of the result: {first_bad_step(L.boundary, L.path)}",
        ]
        text = [f"phi({p.steps} from {p.origin}) = {L}"]
    elif args.map == "omega":
        _need(args, "word", "k")
        l = args.word.count("U")
        inp.update(word=args.word, k=args.k)
        L = bij.omega(a, l, args.word, args.k)
        blocks = bij.parse_blocks(a, args.word)
        u = bij.block_sequence(blocks)
        starts = [o // 2 for o in bij.positive_shifts(u)]
        result = {"path": L.path.steps, "shift": L.shift_index, "boundary": L.boundary}
        trace += [
            "blocks = " + " ".join(b or "-" for b in blocks),
            "u = (" + ",".join(map(str, u)) + ")",
            "positive s = " + ",".join(map(str, starts)),
            f"j = s_{args.k} = {starts[args.k - 1]}",
        ]
        text = [f"omega({args.word}, {args.k}) = {L}", f"boundary {L.boundary}"]
    else:
        _need(args, "path", "shift")
        inp.update(path=args.path, shift=args.shift)
        L = O.LPBP(LatticePath(args.path), a, args.shift)
        w, k = bij.omega_inverse(L)
        result = {"word": w, "k": k}
        trace.append("blocks = " + " ".join(b or "-" for b in bij.parse_blocks(a, w)))
        text = [f"omega^-1{L} = ({w}, {k})"]
    if args.trace:
        result["trace"] = trace
        text += ["  " + line for line in trace]
    return inp, result, text


def cmd_render(args):
    paths = [LatticePath(w) for w in args.path]
    svg = render_svg(args.comp, all_shifts=args.all_shifts, paths=paths)
    inp = {"comp": args.comp, "all_shifts": args.all_shifts, "paths": args.path, "out": args.out}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
        return inp, {"out": args.out, "bytes": len(svg.encode())}, [f"wrote {args.out}"]
    return inp, {"svg": svg}, [svg.rstrip("\n")]


COMMANDS: Dict[str, Callable] = {
    "count": cmd_count,
    "formula": cmd_formula,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "bijection": cmd_bijection,
    "render": cmd_render,
}


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"cyclicpaths: error: {exc}", file=stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"cyclicpaths: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    inp, result, text = out[:3]
    status = out[3] if len(out) > 3 else 0
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    if args.json:
        if args.command == "render" and not args.out:
            result = {"svg": result["svg"]}
        doc = {"command": args.command, "input": jsonable(inp), "result": jsonable(result), "elapsed_ms": elapsed}
        print(dumps(doc), file=stdout)
    else:
        print("\n".join(text), file=stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
