"""Search for nested pairs L1 < L2 with delta(L1) = delta(L2).

Draws random nested pairs in algebras with an involution and tallies how often
delta drops, stays equal with L1 = L2, or stays equal with L1 != L2.  Any pair
of the last kind is printed in full.

    python scripts/delta_equality_survey.py --pairs 400 --seed 7
"""

import argparse
import collections

import numpy as np

from soclelab.fredholm import delta
from soclelab.suites import INVOLUTIVE, _nested_pair, build_family, dump_ideal


def survey(pairs: int, seed: int) -> dict:
    rng = np.random.default_rng(seed)
    tally = collections.Counter()
    witnesses = []
    for i in range(pairs):
        key = INVOLUTIVE[i % len(INVOLUTIVE)]
        alg = build_family(key)
        l1, l2 = _nested_pair(alg, rng)
        d1, d2 = delta(l1), delta(l2)
        same = l1.space == l2.space
        if d1 != d2:
            tally["delta drops"] += 1
        elif same:
            tally["equal ideals"] += 1
        else:
            tally["equal delta, distinct ideals"] += 1
            witnesses.append({"L1": dump_ideal(key, l1), "L2": dump_ideal(key, l2), "delta": d1})
    return {"tally": dict(tally), "witnesses": witnesses}


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=400)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    res = survey(args.pairs, args.seed)
    for k, v in sorted(res["tally"].items()):
        print(f"{k:32s} {v}")
    for w in res["witnesses"]:
        print(w)
