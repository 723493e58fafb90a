"""Jones polynomials of small braid closures, computed two ways.

Prints each closure's invariant from the Markov trace of the builtin operator
next to the Kauffman bracket state sum, and flags any disagreement.
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from catkit.braids import BraidWord, jones_from_braid, markov_closure
from catkit.laurent import format_poly
from catkit.ybrep import builtin_jones, eyb_invariant


@dataclass
class Config:
    links: dict[str, tuple[int, tuple[int, ...]]] = field(default_factory=lambda: {
        "unknot": (1, ()),
        "unlink(2)": (2, ()),
        "Hopf": (2, (1, 1)),
        "trefoil+": (2, (1, 1, 1)),
        "trefoil-": (2, (-1, -1, -1)),
        "figure-eight": (3, (1, -2, 1, -2)),
        "cinquefoil": (2, (1, 1, 1, 1, 1)),
        "Whitehead": (3, (1, 1, -2, 1, -2)),
        "Borromean": (3, (1, -2, 1, -2, 1, -2)),
    })


def main(cfg: Config) -> int:
    E = builtin_jones()
    bad = 0
    for name, (n, word) in cfg.links.items():
        b = BraidWord(n, word)
        t0 = time.perf_counter()
        via_trace = eyb_invariant(b, E)
        t1 = time.perf_counter()
        via_bracket = jones_from_braid(b)
        t2 = time.perf_counter()
        ok = via_trace == via_bracket
        bad += not ok
        comps = markov_closure(b).num_components()
        print(f"{name:14s} c={comps}  {format_poly(via_trace):40s} "
              f"{'ok ' if ok else 'MISMATCH'} trace {1e3 * (t1 - t0):6.1f}ms  "
              f"bracket {1e3 * (t2 - t1):6.1f}ms")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.parse_args()
    raise SystemExit(main(Config()))
