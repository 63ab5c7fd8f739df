#!/usr/bin/env python3
"""Benchmark the two exact-rational implementations.

The hot path of this package is arbitrary-precision rational arithmetic
inside polynomial recurrences, so the interesting comparison is the
compiled GMP backend (gmpy2.mpq) against the pure-Python fallback
(fractions.Fraction), selected at import in ``opchain.scalars``.

Run both in one go (re-executes itself with OPCHAIN_PURE_RATIONAL=1):

    python benchmarks/bench_backends.py

Workloads: the even/odd split check at depth 15 (dominated by polynomial
products with fast-growing numerators), moments via exact matrix powers,
and 80-step backward iteration for maximal parameters.
"""

import json
import os
import subprocess
import sys
import time


def bench() -> dict:
    import random

    from opchain import (
        Rat,
        chain_at,
        laguerre_system,
        maximal_parameters,
        moments,
        swap_split_check,
    )
    from opchain.scalars import RAT_BACKEND
    from opchain.verify import random_gamma

    rng = random.Random(12345)
    gammas = [random_gamma(rng, 40) for _ in range(8)]
    results = {"backend": RAT_BACKEND}

    t0 = time.perf_counter()
    for gamma in gammas:
        assert swap_split_check(gamma, 15).ok
    results["split_check_depth15_x8"] = time.perf_counter() - t0

    sys_ = laguerre_system(Rat(1, 3))
    t0 = time.perf_counter()
    vals = [moments(sys_, k) for k in range(36)]
    assert vals[0] == 1
    results["moments_k_le_35"] = time.perf_counter() - t0

    d = chain_at(laguerre_system(Rat(-1, 2)), Rat(0), 100)
    t0 = time.perf_counter()
    M = maximal_parameters(d, 10, 80)
    assert 0 < M.g[0] < 1
    results["maximal_params_horizon80"] = time.perf_counter() - t0

    return results


def main() -> int:
    if os.environ.get("OPCHAIN_BENCH_CHILD"):
        print(json.dumps(bench()))
        return 0

    rows = []
    for pure in ("0", "1"):
        env = dict(os.environ,
                   OPCHAIN_BENCH_CHILD="1",
                   OPCHAIN_PURE_RATIONAL=pure)
        out = subprocess.run([sys.executable, __file__], env=env,
                             capture_output=True, text=True, check=True)
        rows.append(json.loads(out.stdout))

    keys = [k for k in rows[0] if k != "backend"]
    width = max(len(k) for k in keys)
    print(f"{'workload':<{width}}  " + "  ".join(f"{r['backend']:>12}" for r in rows))
    for k in keys:
        print(f"{k:<{width}}  " + "  ".join(f"{r[k]:>11.4f}s" for r in rows))
    if rows[0]["backend"] != rows[1]["backend"]:
        base, pure = rows
        print(f"\nspeedup ({base['backend']} over {pure['backend']}): "
              + ", ".join(f"{k}: {pure[k] / base[k]:.1f}x" for k in keys))
    return 0


if __name__ == "__main__":
    sys.exit(main())
