"""Kernel twins: the numba and numpy flavours must agree with each other
and with independent references (numpy.linalg for eigenvalues, naive loops
for the table kernels)."""

import os
import subprocess
import sys

import numpy as np
import pytest

from ccgspec import accel
from ccgspec.families import Family, FamilyInstance
from ccgspec.groups import build_family_group

RNG = np.random.default_rng(20240811)


def random_symmetric(n, lo=-5, hi=9):
    m = RNG.integers(lo, hi, size=(n, n))
    m = m + m.T
    np.fill_diagonal(m, 0)
    return m.astype(np.float64)


def run_both(name, *args_builders):
    out = []
    for fn in (accel._LOOP_KERNELS[name], accel._NUMPY_KERNELS[name]):
        out.append(fn(*[b() for b in args_builders]))
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 8, 25, 60])
def test_jacobi_matches_lapack(n):
    m = random_symmetric(n)
    expected = np.linalg.eigvalsh(m)
    for flavour in (accel._jacobi_numpy, accel.jacobi_eigenvalues):
        eigs, sweeps, off = flavour(m.copy(), 1e-12 * max(1.0, np.linalg.norm(m)), 100)
        assert off <= 1e-12 * max(1.0, np.linalg.norm(m))
        assert np.allclose(eigs, expected, atol=1e-9)


def test_jacobi_flavours_agree():
    m = random_symmetric(40)
    tol = 1e-12 * np.linalg.norm(m)
    e1, *_ = accel._jacobi_loops(m.copy(), tol, 100)
    e2, *_ = accel._jacobi_numpy(m.copy(), tol, 100)
    assert np.allclose(e1, e2, atol=1e-9)


def test_jacobi_zero_matrix():
    m = np.zeros((5, 5))
    eigs, sweeps, off = accel.jacobi_eigenvalues(m, 1e-12, 100)
    assert sweeps == 0 and off == 0.0
    assert np.array_equal(eigs, np.zeros(5))


def test_jacobi_sweep_cap_reports_residual():
    m = random_symmetric(12)
    eigs, sweeps, off = accel.jacobi_eigenvalues(m.copy(), 1e-12, 0)
    assert sweeps == 0 and off > 0


def naive_classes(table, inv):
    n = table.shape[0]
    cid = [-1] * n
    k = 0
    for a in range(n):
        if cid[a] >= 0:
            continue
        orbit = {int(table[table[g, a], inv[g]]) for g in range(n)}
        for x in orbit:
            cid[x] = k
        k += 1
    return cid, k


@pytest.mark.parametrize(
    "spec",
    [
        FamilyInstance(Family.DIHEDRAL, (7,)),
        FamilyInstance(Family.DICYCLIC, (3,)),
        FamilyInstance(Family.UNM, (2, 6)),
        FamilyInstance(Family.GPMN, (2, 2, 1)),
    ],
)
def test_conjugacy_partition_flavours_match_naive(spec):
    G = build_family_group(spec)
    inv = G.inverse.astype(np.int32)
    want_cid, want_k = naive_classes(G.table, inv)
    for fn in (accel._LOOP_KERNELS["conjugacy_partition"], accel._NUMPY_KERNELS["conjugacy_partition"]):
        cid, k = fn(G.table, inv)
        assert k == want_k
        assert list(cid) == want_cid


def test_assoc_witness_flavours():
    G = build_family_group(FamilyInstance(Family.SEMIDIHEDRAL, (3,)))
    for fn in (accel._LOOP_KERNELS["assoc_witness"], accel._NUMPY_KERNELS["assoc_witness"]):
        assert fn(G.table) == -1
    bad = np.array(G.table, dtype=np.int32)
    bad[1, 2] = (bad[1, 2] + 1) % G.order
    hits = [fn(bad) for fn in (accel._LOOP_KERNELS["assoc_witness"], accel._NUMPY_KERNELS["assoc_witness"])]
    assert all(h >= 0 for h in hits)


def test_commuting_adjacency_flavours_agree():
    G = build_family_group(FamilyInstance(Family.V8N, (3,)))
    from ccgspec.groups import noncentral_classes

    classes = noncentral_classes(G)
    class_of = np.full(G.order, -1, np.int64)
    for i, c in enumerate(classes):
        class_of[list(c.members)] = i
    reps = np.asarray([c.representative for c in classes], np.int64)
    a1 = accel._LOOP_KERNELS["commuting_adjacency"](G.table, class_of, reps)
    a2 = accel._NUMPY_KERNELS["commuting_adjacency"](G.table, class_of, reps)
    assert np.array_equal(a1, a2)
    assert np.array_equal(a1, a1.T)


def test_env_flag_forces_numpy_path():
    code = "from ccgspec import accel; print(accel.USING_NUMBA)"
    env = dict(os.environ, CCGSPEC_PURE_NUMPY="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "False"


def test_pure_numpy_pipeline_end_to_end():
    # the numpy fallback must run the whole observed pipeline too
    code = (
        "from ccgspec import accel; assert not accel.USING_NUMBA; "
        "from ccgspec.verify import SweepConfig, verify_family; "
        "recs, _ = verify_family(SweepConfig(family='dihedral', ranges={'n': (3, 12)})); "
        "assert all(r.verdict == 'Match' for r in recs), [r.label for r in recs]; "
        "print(len(recs))"
    )
    env = dict(os.environ, CCGSPEC_PURE_NUMPY="yes")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "10"
