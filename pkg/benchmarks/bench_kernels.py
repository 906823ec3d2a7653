"""Benchmark the numba and numpy twins of the hot kernels.

Usage: python benchmarks/bench_kernels.py [--n-cells N] [--times NT]
                                          [--members M]

Reports wall time for the coherent pair reduction and the ensemble
position kernel under both backends (selected via QMSD_BACKEND), plus
the maximum relative difference between backend results.
"""

import argparse
import os
import time

import numpy as np

from qmsd import CONST, PhysicalSystem, build_basis, derive_scales, partition_function
from qmsd.kernels import antisym_coupling_matrix, ensemble_positions, msd_reduce, pair_arrays
from qmsd.montecarlo import sample_phases


def timed(fn, repeats=3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def with_backend(name, fn):
    old = os.environ.get("QMSD_BACKEND")
    os.environ["QMSD_BACKEND"] = name
    try:
        return timed(fn)
    finally:
        if old is None:
            os.environ.pop("QMSD_BACKEND", None)
        else:
            os.environ["QMSD_BACKEND"] = old


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-cells", type=int, default=20)
    ap.add_argument("--times", type=int, default=100)
    ap.add_argument("--members", type=int, default=2000)
    args = ap.parse_args()

    sys_ = PhysicalSystem.from_user_units(28, 190, 256, args.n_cells)
    s = derive_scales(sys_)
    basis = build_basis(sys_, 100)
    Q = partition_function(basis)
    wprod, half_omega = pair_arrays(basis)
    times = np.linspace(0.0, 30.0, args.times) * s.t_b

    print(f"system: CO-like, L = {args.n_cells}a, K = {basis.K}, "
          f"{wprod.size} pairs, {args.times} time points")
    # warm up the jit cache before timing
    with_backend("numba", lambda: msd_reduce(wprod, half_omega, times[:2]))
    results = {}
    for backend in ("numba", "numpy"):
        out, dt = with_backend(
            backend, lambda: msd_reduce(wprod, half_omega, times))
        results[backend] = out
        print(f"msd_reduce[{backend:5s}]: {dt:8.3f} s")
    dev = np.max(np.abs(results["numba"] - results["numpy"])
                 / np.maximum(np.abs(results["numpy"]), 1e-300))
    print(f"msd_reduce backend max rel diff: {dev:.2e}")

    mc_basis = build_basis(
        PhysicalSystem.from_user_units(28, 190, 256, 10), 20,
        edge_weight_cutoff=1.0)
    mc_Q = partition_function(mc_basis)
    wt = np.sqrt(mc_basis.w)
    eom = mc_basis.E / CONST.hbar
    A = antisym_coupling_matrix(mc_basis.K)
    thetas = sample_phases(mc_basis, args.members, seed=0)
    tgrid = np.linspace(0.0, 20.0, 21) * s.t_b
    pref = -mc_basis.L / (np.pi * mc_Q)

    print(f"ensemble: K = {mc_basis.K}, {args.members} members, "
          f"{tgrid.size} time points")
    with_backend("numba", lambda: ensemble_positions(
        wt, thetas[:2], eom, tgrid[:2], A, pref))
    results = {}
    for backend in ("numba", "numpy"):
        out, dt = with_backend(backend, lambda: ensemble_positions(
            wt, thetas, eom, tgrid, A, pref))
        results[backend] = out
        print(f"ensemble_positions[{backend:5s}]: {dt:8.3f} s")
    scale = np.max(np.abs(results["numpy"]))
    dev = np.max(np.abs(results["numba"] - results["numpy"])) / scale
    print(f"ensemble_positions backend max diff / max |x|: {dev:.2e}")


if __name__ == "__main__":
    main()
