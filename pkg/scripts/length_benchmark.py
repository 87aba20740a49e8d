"""Time order() against composition_length() on random left ideals."""

import argparse
import time

import numpy as np

from soclelab.decompose import order
from soclelab.modules import composition_length, ideal_as_module
from soclelab.suites import SEMIPRIME, build_family, random_left_ideal


def bench(per_family: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    print(f"{'family':28s} {'dim':>4s} {'order ms':>9s} {'chop ms':>9s}")
    for key in SEMIPRIME:
        alg = build_family(key)
        t_ord = t_len = 0.0
        for _ in range(per_family):
            ideal = random_left_ideal(alg, rng)
            t0 = time.perf_counter()
            n = order(ideal)
            t1 = time.perf_counter()
            m = composition_length(ideal_as_module(ideal))
            t2 = time.perf_counter()
            assert n == m, (key, n, m)
            t_ord += t1 - t0
            t_len += t2 - t1
        print(f"{key:28s} {alg.dim:4d} {1e3 * t_ord / per_family:9.2f} {1e3 * t_len / per_family:9.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--per-family", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bench(args.per_family, args.seed)
