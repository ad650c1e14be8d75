"""Write schematic SVG pictures of a few boundaries and paths."""

import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Tuple

from cyclicpaths import bijections as B
from cyclicpaths.core import Composition, LatticePath
from cyclicpaths.oracle import LPBP
from cyclicpaths.render import render_svg


@dataclass
class Figure:
    name: str
    composition: Tuple[int, ...]
    all_shifts: bool = False
    paths: List[LatticePath] = field(default_factory=list)


def figures() -> List[Figure]:
    a = Composition((1, 1))
    bad = LPBP(LatticePath("UURR"), a, 0)
    return [
        Figure("boundary_1232", (1, 2, 3, 2)),
        Figure("shifts_123", (1, 2, 3), all_shifts=True),
        Figure("dominated_path_11", (1, 1), paths=[LatticePath("RURU")]),
        Figure("reflection_11", (1, 1), paths=[bad.path, B.psi(bad, (2, 2))]),
        Figure("periodic_12", (1, 2, 1, 2), all_shifts=True),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    args = parser.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for fig in figures():
        path = out / f"{fig.name}.svg"
        path.write_text(render_svg(fig.composition, all_shifts=fig.all_shifts, paths=fig.paths))
        print("wrote", path)


if __name__ == "__main__":
    main()
