"""Trace the reflection map and the cycle-lemma map on small examples."""

from cyclicpaths import bijections as B
from cyclicpaths.core import Composition, LatticePath
from cyclicpaths.oracle import LPBP, enumerate_bad_pairs


def reflection(a=(1, 1), t=(2, 2)):
    a = Composition(a)
    print(f"reflection map for a = {a}, t = {t}")
    for i in range(a.n):
        ctx = B.bad_step_context(a, i)
        print(f"  B_{i}: p = {ctx.p}, s = {ctx.s}, b = {' '.join(map(str, ctx.b))}")
    for L in enumerate_bad_pairs(a, t):
        ctx, j, idx = B.locate_bad_step(L)
        p = B.psi(L, t)
        back = B.phi(p, a, ctx.i, j, t)
        print(f"  {L}  bad step {idx} -> b_{ctx.i}^{j} = {ctx.b[j]}  psi = {p.steps} from {p.origin}  round trip {back == L}")


def cycle_lemma():
    a = Composition((1, 3, 0, 2, 4, 0, 2))
    w, l = "RRRURRRRRURRUURR", 4
    blocks = B.parse_blocks(a, w)
    u = B.block_sequence(blocks)
    starts = [o // 2 for o in B.positive_shifts(u)]
    print(f"cycle-lemma map for a = {a}, w = {w}")
    print("  blocks", " | ".join(b or "-" for b in blocks))
    print("  u =", u)
    print("  positive s =", starts)
    for k in range(1, len(starts) + 1):
        L = B.omega(a, l, w, k)
        print(f"  k = {k}: j = {starts[k - 1]}, path {L.path.steps}, boundary {L.boundary}, inverse {B.omega_inverse(L)}")


def main():
    reflection()
    print()
    cycle_lemma()
    print()
    L = LPBP(LatticePath("UURR"), Composition((1, 1)), 0)
    print("psi(UURR, (1,1), 0) =", B.psi(L, (2, 2)).steps)


if __name__ == "__main__":
    main()
