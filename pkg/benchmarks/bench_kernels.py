"""Compare the numba kernels with the pure Python / numpy fallback.

Each mode runs in its own interpreter because the kernel choice is fixed at
import time by PROBEIEP_DISABLE_NUMBA.

    python benchmarks/bench_kernels.py [--n 7] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def workloads(n_max: int):
    from probeiep import _kernels
    from probeiep.graph import enumerate_graphs, independent_sets

    graphs = [g for n in range(1, n_max + 1) for g in enumerate_graphs(n, connected_only=True)]
    probe_cases = [(g, sum(1 << v for v in s)) for g in graphs if g.n <= n_max - 1
                   for s in independent_sets(g)]

    def forcing():
        for g, np_mask in probe_cases:
            full = (1 << g.n) - 1
            for size in range(g.n + 1):
                if _kernels.min_forcing_of_size(g.adj_array, full & ~np_mask, np_mask, size) >= 0:
                    break

    def two_paths():
        for g in graphs:
            _kernels.two_paths_search(g.adj_array)

    def closure():
        for g, np_mask in probe_cases:
            full = (1 << g.n) - 1
            for blue in range(0, 1 << g.n, 3):
                _kernels.closure(g.adj_array, blue, full & ~np_mask, np_mask)

    return {"min_forcing": forcing, "two_paths_search": two_paths, "closure": closure}, len(graphs), len(probe_cases)


def worker(n_max: int, repeat: int) -> dict:
    from probeiep import _kernels

    jobs, ngraphs, ncases = workloads(n_max)
    out = {"numba": _kernels.NUMBA_ENABLED, "graphs": ngraphs, "probe_cases": ncases, "times": {}}
    for name, fn in jobs.items():
        fn()  # warm-up (and JIT compile)
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        out["times"][name] = best
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7, help="largest vertex count")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        print(json.dumps(worker(args.n, args.repeat)))
        return

    results = {}
    for label, flag in (("numba", "0"), ("fallback", "1")):
        env = dict(os.environ, PROBEIEP_DISABLE_NUMBA=flag)
        proc = subprocess.run([sys.executable, __file__, "--worker", "--n", str(args.n), "--repeat", str(args.repeat)],
                              env=env, capture_output=True, text=True, check=True)
        results[label] = json.loads(proc.stdout.strip().splitlines()[-1])
        print(f"{label}: done", file=sys.stderr)

    nb, py = results["numba"], results["fallback"]
    print(f"connected graphs n<={args.n}: {nb['graphs']}, probe cases: {nb['probe_cases']}")
    print(f"{'kernel':<18}{'numba [s]':>12}{'fallback [s]':>14}{'speedup':>10}")
    for name in nb["times"]:
        a, b = nb["times"][name], py["times"][name]
        print(f"{name:<18}{a:>12.4f}{b:>14.4f}{b / a if a else float('inf'):>9.1f}x")
    if not nb["numba"]:
        print("note: numba was not importable, both columns ran the fallback")


if __name__ == "__main__":
    main()
