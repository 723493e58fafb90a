"""Survey of Mackey and Green functors over the small groups.

For every group of order at most ``max_order``: subgroup and class counts,
the Mackey decomposition check, Green axioms for fixed-point functors of all
transitive G-sets and for the Burnside functor, and (for small groups) the
box-product unit law.
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from catkit import groups, mackey


@dataclass
class Config:
    max_order: int = 8
    box_max_order: int = 4


def main(cfg: Config) -> int:
    bad = 0
    print(f"{'group':10s} |G| subs classes mackey  fixed  burnside  box-unit  time")
    for G in groups.small_groups(cfg.max_order):
        t0 = time.perf_counter()
        subs = G.subgroups
        ident = all(groups.mackey_identity_check(G, H, K, groups.permutation_character(G, H, L))
                    for H in subs for K in subs for L in subs)
        reps = mackey.class_reps(G)
        fixed = all(mackey.mackey_axioms_validate(
            mackey.fixed_point_mackey(groups.coset_space(G, H))).ok for H in reps)
        burn = mackey.mackey_axioms_validate(mackey.burnside_mackey(G)).ok
        box = "-"
        if G.order <= cfg.box_max_order:
            M = mackey.fixed_point_mackey(groups.regular(G))
            same = mackey.box_product(mackey.burnside_mackey(G), M).dims_by_class() == M.dims_by_class()
            box = "ok" if same else "FAIL"
            bad += not same
        bad += not (ident and fixed and burn)
        print(f"{G.name or '?':10s} {G.order:3d} {len(subs):4d} {len(reps):7d} "
              f"{'ok' if ident else 'FAIL':7s} {'ok' if fixed else 'FAIL':6s} "
              f"{'ok' if burn else 'FAIL':9s} {box:9s} {time.perf_counter() - t0:.2f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=Config.max_order)
    ap.add_argument("--box-max-order", type=int, default=Config.box_max_order)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.max_order, a.box_max_order)))
