"""Random sweep of Markov moves on the Markov-trace invariant.

For random braids, checks invariance under conjugation and both
stabilizations, and agreement with the bracket oracle.
"""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from catkit.braids import BraidWord, conjugate, jones_from_braid, stabilize
from catkit.ybrep import builtin_jones, eyb_invariant


@dataclass
class Config:
    trials: int = 200
    max_strands: int = 4
    max_length: int = 10
    seed: int = 0


def random_braid(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def main(cfg: Config) -> int:
    rng = random.Random(cfg.seed)
    E = builtin_jones()
    counts = {"conjugation": 0, "stabilize+": 0, "stabilize-": 0, "oracle": 0}
    t0 = time.perf_counter()
    for _ in range(cfg.trials):
        n = rng.randint(2, cfg.max_strands)
        b = random_braid(rng, n, rng.randint(0, cfg.max_length))
        c = random_braid(rng, n, rng.randint(0, 4))
        base = eyb_invariant(b, E)
        counts["conjugation"] += eyb_invariant(conjugate(b, c), E) == base
        counts["stabilize+"] += eyb_invariant(stabilize(b, 1), E) == base
        counts["stabilize-"] += eyb_invariant(stabilize(b, -1), E) == base
        counts["oracle"] += jones_from_braid(b) == base
    dt = time.perf_counter() - t0
    for k, v in counts.items():
        print(f"{k:12s} {v}/{cfg.trials}")
    print(f"{cfg.trials} braids in {dt:.2f}s")
    return 0 if all(v == cfg.trials for v in counts.values()) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--max-strands", type=int, default=Config.max_strands)
    ap.add_argument("--max-length", type=int, default=Config.max_length)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.trials, a.max_strands, a.max_length, a.seed)))
