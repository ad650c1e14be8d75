"""Per-shift dominated-path counts for every 3-part composition of 6.

Each row sums to C(9, 2) = 36 however the six right steps are distributed.
"""

import argparse
from dataclasses import dataclass

from cyclicpaths.core import weak_compositions
from cyclicpaths.formulas import total_over_shifts_formula
from cyclicpaths.oracle import count_dominated


@dataclass
class TableConfig:
    n: int = 6
    m: int = 3


def rows(cfg: TableConfig):
    for a in weak_compositions(cfg.n, cfg.m):
        per = [count_dominated(a.shift(j), (cfg.n, cfg.m)) for j in range(cfg.m)]
        yield a, per


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=TableConfig.n)
    parser.add_argument("--m", type=int, default=TableConfig.m)
    args = parser.parse_args()
    cfg = TableConfig(args.n, args.m)
    expected = total_over_shifts_formula(cfg.n, cfg.m)
    print(f"{'a':<16}" + "".join(f"D(a^({j}))".rjust(10) for j in range(cfg.m)) + "     total")
    bad = 0
    for a, per in rows(cfg):
        total = sum(per)
        bad += total != expected
        print(f"{str(a):<16}" + "".join(f"{d:>10}" for d in per) + f"{total:>10}")
    print(f"closed form C(n+m, m-1) = {expected}; {bad} rows disagree")


if __name__ == "__main__":
    main()
