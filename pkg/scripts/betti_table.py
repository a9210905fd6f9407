"""Betti numbers, h-vectors and timings for every bundled corpus fan.

    python scripts/betti_table.py [--json]
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from toric_basic.corpus import load_corpus
from toric_basic.facering import basic_betti, graded_dimension_oracle, linear_ideal
from toric_basic.realize import real_quotient_data
from toric_basic.simplicial import h_vector


@dataclass
class Row:
    name: str
    n: int
    m: int
    facets: int
    betti: tuple[int, ...]
    h_vector: tuple[int, ...]
    oracle_agrees: bool
    rational: bool
    seconds: float


def run() -> list[Row]:
    rows = []
    for name, F in load_corpus().items():
        t = time.perf_counter()
        b = basic_betti(F)
        dt = time.perf_counter() - t
        L = linear_ideal(F)
        oracle = tuple(graded_dimension_oracle(F.K, L, k) for k in range(F.n + 1))
        rows.append(Row(name, F.n, F.m, len(F.K.facets), b, h_vector(F.K, F.n),
                        oracle == b, real_quotient_data(F).rational, round(dt, 4)))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = run()
    if args.json:
        print(json.dumps([asdict(r) for r in rows], indent=2))
        return
    print(f"{'fan':<20} {'n':>2} {'m':>3} {'facets':>6}  {'betti':<18} oracle rational  seconds")
    for r in rows:
        print(f"{r.name:<20} {r.n:>2} {r.m:>3} {r.facets:>6}  {str(r.betti):<18} "
              f"{'yes' if r.oracle_agrees else 'NO':>6} {str(r.rational):>8}  {r.seconds:.3f}")


if __name__ == "__main__":
    main()
