#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy twins.

Runs every kernel pair on representative workloads from the actual
pipeline (Cayley tables and CN matrices of real family groups) and
prints a timing table.  First numba calls are warmed up separately so
JIT compilation does not pollute the numbers.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from ccgspec import accel
from ccgspec.families import instance
from ccgspec.graphs import ccc_graph
from ccgspec.groups import build_family_group, noncentral_classes
from ccgspec.spectral import cn_matrix


def median_time(fn, args_factory, repeat):
    times = []
    for _ in range(repeat):
        args = args_factory()
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return sorted(times)[len(times) // 2]


def workloads():
    big = build_family_group(instance("gpmn", p=2, m=5, n=4))  # order 1024
    mid = build_family_group(instance("semidihedral", n=50))  # order 400
    graph = ccc_graph(big)  # 768 vertices in three 256-cliques
    M = cn_matrix(graph).astype(np.float64)
    tol = 1e-12 * np.linalg.norm(M)
    inv32 = mid.inverse.astype(np.int32)
    big_inv32 = big.inverse.astype(np.int32)

    classes = noncentral_classes(mid)
    class_of = np.full(mid.order, -1, np.int64)
    for i, c in enumerate(classes):
        class_of[list(c.members)] = i
    reps = np.asarray([c.representative for c in classes], np.int64)

    return [
        (
            "jacobi_eigenvalues",
            f"CN matrix of {graph.group_label} ({graph.vertex_count}^2)",
            lambda: (M.copy(), tol, 100),
        ),
        (
            "conjugacy_partition",
            f"{big.label} Cayley table ({big.order}^2)",
            lambda: (big.table, big_inv32),
        ),
        (
            "assoc_witness",
            f"{mid.label} associativity scan ({mid.order}^3)",
            lambda: (mid.table,),
        ),
        (
            "commuting_adjacency",
            f"{mid.label} class pairs ({len(reps)} classes)",
            lambda: (mid.table, class_of, reps),
        ),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    try:
        nb = accel.numba_kernels()
    except ImportError:
        nb = None
        print("numba unavailable; timing the numpy path only\n")

    rows = []
    for name, desc, factory in workloads():
        np_fn = accel._NUMPY_KERNELS[name]
        t_np = median_time(np_fn, factory, args.repeat)
        if nb is not None:
            t_compile0 = time.perf_counter()
            nb[name](*factory())  # warm-up (includes compilation on first call)
            t_compile = time.perf_counter() - t_compile0
            t_nb = median_time(nb[name], factory, args.repeat)
            rows.append((name, desc, t_np, t_nb, t_compile))
        else:
            rows.append((name, desc, t_np, None, None))

    print(f"{'kernel':22s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}  workload")
    for name, desc, t_np, t_nb, t_compile in rows:
        if t_nb is None:
            print(f"{name:22s} {t_np * 1e3:8.1f}ms {'-':>10s} {'-':>8s}  {desc}")
        else:
            print(
                f"{name:22s} {t_np * 1e3:8.1f}ms {t_nb * 1e3:8.1f}ms "
                f"{t_np / t_nb:7.1f}x  {desc}"
            )
    if nb is not None:
        print("\n(first-call warm-up, including any JIT compilation, excluded from timings)")
        print(f"active path for the package: {'numba' if accel.USING_NUMBA else 'numpy'}")
        print(f"set {accel.ENV_FLAG}=1 to force the numpy path")


if __name__ == "__main__":
    main()
