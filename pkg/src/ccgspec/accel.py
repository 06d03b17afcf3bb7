"""Hot numeric kernels, in two flavours.

Every kernel here exists twice: a loop version that numba compiles to
native code, and a vectorized pure-numpy twin.  The numba path is the
default whenever numba is importable; set ``CCGSPEC_PURE_NUMPY=1`` in the
environment to force the numpy path (it is also the automatic fallback
when numba is missing).  Both flavours are deterministic and agree to
well below the tolerances used by callers; ``benchmarks/bench_kernels.py``
times them against each other.

Kernels operate on plain arrays so they stay compilable:
``table`` is an (N, N) int32 Cayley table over element indices with the
identity at index 0, ``inv`` the int32 inverse table.
"""

from __future__ import annotations

import math
import os

import numpy as np

ENV_FLAG = "CCGSPEC_PURE_NUMPY"


def _pure_numpy_requested() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USING_NUMBA = not _pure_numpy_requested() and _numba_available()


# ---------------------------------------------------------------------------
# loop flavour (numba target)


def _jacobi_loops(a, tol, max_sweeps):
    """Cyclic Jacobi diagonalization of the symmetric matrix ``a``, in place.

    Sweeps row-major over the strict upper triangle until the off-diagonal
    Frobenius norm is at most ``tol`` or ``max_sweeps`` is hit.  Returns
    (sorted eigenvalues, sweeps used, final off-diagonal norm); the caller
    decides whether a leftover norm above ``tol`` is an error.
    """
    n = a.shape[0]
    off = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            off += 2.0 * a[i, j] * a[i, j]
    off = math.sqrt(off)
    sweeps = 0
    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k != p and k != q:
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[k, q] = s * akp + c * akq
                        a[p, k] = a[k, p]
                        a[q, k] = a[k, q]
        sweeps += 1
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += 2.0 * a[i, j] * a[i, j]
        off = math.sqrt(off)
    eigs = np.empty(n, np.float64)
    for i in range(n):
        eigs[i] = a[i, i]
    eigs.sort()
    return eigs, sweeps, off


def _conjugacy_loops(table, inv):
    """Partition element indices into conjugacy classes.

    Returns (class_id, count) where classes are numbered in order of their
    smallest member; all downstream canonical orderings derive from this.
    """
    n = table.shape[0]
    class_id = np.full(n, -1, np.int64)
    count = 0
    for a in range(n):
        if class_id[a] >= 0:
            continue
        for g in range(n):
            class_id[table[table[g, a], inv[g]]] = count
        count += 1
    return class_id, count


def _assoc_witness_loops(table):
    """First associativity violation encoded as (a*n + b)*n + c, or -1."""
    n = table.shape[0]
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            for c in range(n):
                if table[ab, c] != table[a, table[b, c]]:
                    return (a * n + b) * n + c
    return -1


def _commuting_adjacency_loops(table, class_of, reps):
    """Class adjacency: scan each class representative against all elements.

    ``class_of[b]`` is the dense non-central class index of element b, or -1
    for central elements.  Fixing one side to the representative is enough:
    if g·a·g^-1 commutes with b then a commutes with g^-1·b·g, which lies in
    the same class as b.
    """
    k = reps.shape[0]
    n = table.shape[0]
    adj = np.zeros((k, k), np.bool_)
    for i in range(k):
        a = reps[i]
        for b in range(n):
            j = class_of[b]
            if j < 0 or j == i or adj[i, j]:
                continue
            if table[a, b] == table[b, a]:
                adj[i, j] = True
    return adj


# ---------------------------------------------------------------------------
# numpy flavour


def _off_norm(a):
    # norm of the off-diagonal part; subtracting diagonal squares from the
    # total would cancel catastrophically near convergence
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return float(np.linalg.norm(b))


def _jacobi_numpy(a, tol, max_sweeps):
    """Vectorized twin of :func:`_jacobi_loops` (whole-row rotations)."""
    n = a.shape[0]
    off = _off_norm(a)
    sweeps = 0
    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off = _off_norm(a)
    return np.sort(np.diagonal(a).copy()), sweeps, off


def _conjugacy_numpy(table, inv):
    n = table.shape[0]
    # conj[g, a] = (g a) g^-1, built by one fancy-indexing pass
    conj = table[table, inv[:, None]]
    class_id = np.full(n, -1, np.int64)
    count = 0
    for a in range(n):
        if class_id[a] >= 0:
            continue
        class_id[np.unique(conj[:, a])] = count
        count += 1
    return class_id, count


def _assoc_witness_numpy(table):
    n = table.shape[0]
    for a in range(n):
        lhs = table[table[a], :]  # lhs[b, c] = (a b) c
        rhs = table[a][table]  # rhs[b, c] = a (b c)
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            return (a * n + int(b)) * n + int(c)
    return -1


def _commuting_adjacency_numpy(table, class_of, reps):
    k = reps.shape[0]
    adj = np.zeros((k, k), np.bool_)
    for i in range(k):
        a = reps[i]
        hit = np.unique(class_of[table[a, :] == table[:, a]])
        hit = hit[hit >= 0]
        adj[i, hit] = True
        adj[i, i] = False
    return adj


# ---------------------------------------------------------------------------
# flavour selection

_LOOP_KERNELS = {
    "jacobi_eigenvalues": _jacobi_loops,
    "conjugacy_partition": _conjugacy_loops,
    "assoc_witness": _assoc_witness_loops,
    "commuting_adjacency": _commuting_adjacency_loops,
}

_NUMPY_KERNELS = {
    "jacobi_eigenvalues": _jacobi_numpy,
    "conjugacy_partition": _conjugacy_numpy,
    "assoc_witness": _assoc_witness_numpy,
    "commuting_adjacency": _commuting_adjacency_numpy,
}


def numba_kernels():
    """Compile and return the numba flavour of every kernel.

    Used by the benchmark to compare both paths in one process; raises
    ImportError when numba is unavailable.
    """
    from numba import njit

    return {name: njit(cache=True)(fn) for name, fn in _LOOP_KERNELS.items()}


if USING_NUMBA:
    _ACTIVE = numba_kernels()
else:
    _ACTIVE = _NUMPY_KERNELS

jacobi_eigenvalues = _ACTIVE["jacobi_eigenvalues"]
conjugacy_partition = _ACTIVE["conjugacy_partition"]
assoc_witness = _ACTIVE["assoc_witness"]
commuting_adjacency = _ACTIVE["commuting_adjacency"]
