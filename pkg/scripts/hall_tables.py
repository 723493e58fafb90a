"""Gaussian binomials against subspace counts, and Green convolution tables.

The first table compares ``[n choose k]_q`` with a brute-force count of
``k``-dimensional subspaces of ``F_q^n``; the second prints the convolution
of constant class functions ``1_{GL_a} • 1_{GL_b}`` on ``GL_{a+b}(F_q)``.
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from catkit.finitefield import FqField
from catkit.hall import (CapExceeded, GLClassFunction, conj_classes, enumerate_subspaces,
                         gaussian_binomial, green_convolution)


@dataclass
class Config:
    fields: tuple[int, ...] = (2, 3, 4, 5)
    max_n: int = 4
    green: tuple[tuple[int, int, int], ...] = ((1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 2, 2))


def main(cfg: Config) -> int:
    bad = 0
    print("q  n  k  gaussian  enumerated")
    for q in cfg.fields:
        F = FqField(q)
        for n in range(cfg.max_n + 1):
            for k in range(n + 1):
                try:
                    count = len(enumerate_subspaces(n, k, F))
                except CapExceeded:
                    count = None
                g = gaussian_binomial(n, k, q)
                bad += count is not None and count != g
                print(f"{q}  {n}  {k}  {g:8d}  {'-' if count is None else count}")
    for a, b, q in cfg.green:
        t0 = time.perf_counter()
        f, g = GLClassFunction.constant(a, q), GLClassFunction.constant(b, q)
        fg, gf = green_convolution(f, g), green_convolution(g, f)
        table = conj_classes(a + b, FqField(q))
        print(f"\n1_GL{a} • 1_GL{b} over F_{q}: {len(table)} classes, "
              f"commutative={fg == gf}, {time.perf_counter() - t0:.2f}s")
        for cid, val in fg.values.items():
            print(f"  class {cid:2d} order {table.orders[cid]:2d} size {table.sizes[cid]:4d}: {val}")
        bad += fg != gf
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    a = ap.parse_args()
    raise SystemExit(main(Config(max_n=a.max_n)))
