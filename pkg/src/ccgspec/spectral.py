"""Common-neighbourhood matrix, spectrum, and energy.

Numeric route: CN matrix -> cyclic Jacobi -> clustered spectrum.  Closed
form route: clique-union shapes evaluated exactly in integer arithmetic.
The two never share code; their agreement is what the verify module and
the test suite certify.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import accel
from .errors import InvalidParams, NoConvergence, SameVertex
from .graphs import CCCGraph, CompleteUnionShape

JACOBI_REL_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
CLUSTER_TOL = 1e-6
INTEGRALITY_TOL = 1e-6
BORDER_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """(value, multiplicity) pairs, ascending by value, equal values merged."""

    pairs: tuple[tuple[float, int], ...]

    @property
    def size(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list[float]:
        out = []
        for v, m in self.pairs:
            out.extend([v] * m)
        return out

    def __str__(self):
        def fmt(v):
            if isinstance(v, int) or float(v).is_integer():
                return str(int(v))
            return f"{v:.12g}"

        inner = ", ".join(f"({fmt(v)})^{m}" for v, m in self.pairs)
        return "{" + inner + "}"

    def to_json(self) -> list[dict]:
        out = []
        for v, m in self.pairs:
            out.append(
                {
                    "value": float(f"{float(v):.12g}"),
                    "multiplicity": int(m),
                    "rounded": int(round(float(v))),
                }
            )
        return out


def spectrum_from_values(values, tol: float = CLUSTER_TOL) -> Spectrum:
    """Cluster a sorted-or-not list of eigenvalues into multiplicities."""
    vals = sorted(float(v) for v in values)
    pairs: list[list] = []
    for v in vals:
        if pairs and v - pairs[-1][0] <= tol * max(1.0, abs(v), abs(pairs[-1][0])):
            # running mean keeps the cluster representative stable
            old, mult = pairs[-1]
            pairs[-1] = [(old * mult + v) / (mult + 1), mult + 1]
        else:
            pairs.append([v, 1])
    return Spectrum(tuple((v, m) for v, m in pairs))


@dataclass(frozen=True)
class EnergyReport:
    energy: float
    vertex_count: int
    complete_graph_energy: int
    gap: float
    classification: str  # Hyperenergetic | Borderenergetic | Subenergetic
    integral: bool
    rounded_spectrum: Spectrum | None
    max_integrality_dev: float


def common_neighbourhood(g: CCCGraph, i: int, j: int) -> int:
    """Number of vertices adjacent to both i and j (excluding i, j)."""
    if i == j:
        raise SameVertex(f"common neighbourhood of vertex {i} with itself")
    return int(np.sum(g.adjacency[i] & g.adjacency[j]))


def cn_matrix(g: CCCGraph) -> np.ndarray:
    """The symmetric integer matrix of pairwise common-neighbour counts.

    Entry (i, j) counts common neighbours for every pair i != j, adjacent
    or not; the diagonal is zero.
    """
    a = g.adjacency.astype(np.float64)  # BLAS matmul; counts are exact in float64
    m = (a @ a).round().astype(np.int64)
    np.fill_diagonal(m, 0)
    return m


def eigenvalues_symmetric(
    M: np.ndarray,
    rel_tol: float = JACOBI_REL_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidParams("matrix must be square")
    if not np.array_equal(M, M.T):
        raise InvalidParams("matrix must be symmetric")
    a = M.astype(np.float64)
    tol = rel_tol * max(1.0, float(np.linalg.norm(M.astype(np.float64))))
    eigs, _, off = accel.jacobi_eigenvalues(a, tol, max_sweeps)
    if off > tol:
        raise NoConvergence(
            f"Jacobi did not converge in {max_sweeps} sweeps (residual {off:.3e})",
            residual=off,
        )
    return eigs


def spectrum(g: CCCGraph, per_component: bool = True) -> Spectrum:
    """Numeric CN-spectrum of a graph.

    Vertices in different components share no neighbours, so the CN matrix
    is exactly block-diagonal under the component partition; by default
    each block is diagonalized separately (verified, not assumed).  Pass
    ``per_component=False`` to force one global solve.
    """
    from .graphs import components  # local import keeps module layering acyclic

    M = cn_matrix(g)
    comps = components(g)
    if not per_component or len(comps) <= 1:
        return spectrum_from_values(eigenvalues_symmetric(M))
    block_of = np.empty(g.vertex_count, np.int64)
    for ci, comp in enumerate(comps):
        block_of[comp] = ci
    cross = M[block_of[:, None] != block_of[None, :]]
    if cross.size and cross.any():
        return spectrum_from_values(eigenvalues_symmetric(M))
    values: list[float] = []
    for comp in comps:
        idx = np.asarray(comp)
        values.extend(eigenvalues_symmetric(M[np.ix_(idx, idx)]).tolist())
    return spectrum_from_values(values)


def cn_energy(s: Spectrum):
    """Sum of |eigenvalue| * multiplicity; exact int for integer spectra."""
    if all(isinstance(v, int) for v, _ in s.pairs):
        return sum(m * abs(v) for v, m in s.pairs)
    return float(sum(m * abs(v) for v, m in s.pairs))


def complete_union_spectrum(shape: CompleteUnionShape) -> Spectrum:
    """Exact spectrum of a clique union.

    Each part of l copies of the m-clique contributes eigenvalue -(m-2)
    with multiplicity l(m-1) and eigenvalue (m-1)(m-2) with multiplicity l.
    """
    acc: dict[int, int] = {}
    for l, m in shape.parts:
        for value, mult in ((-(m - 2), l * (m - 1)), ((m - 1) * (m - 2), l)):
            if mult > 0:
                acc[value] = acc.get(value, 0) + mult
    return Spectrum(tuple((v, acc[v]) for v in sorted(acc)))


def complete_union_energy(shape: CompleteUnionShape) -> int:
    return sum(2 * l * (m - 1) * (m - 2) for l, m in shape.parts)


def complete_graph_energy(n: int) -> int:
    """CN-energy of the complete graph on n vertices: 2(n-1)(n-2)."""
    if n < 1:
        raise InvalidParams("complete graph needs n >= 1")
    return 2 * (n - 1) * (n - 2)


def classify(s: Spectrum, vertex_count: int) -> EnergyReport:
    """Energy report: gap against the complete graph and integrality."""
    if s.size != vertex_count:
        raise InvalidParams(
            f"spectrum has {s.size} eigenvalues for {vertex_count} vertices"
        )
    energy = cn_energy(s)
    kn = complete_graph_energy(vertex_count) if vertex_count >= 1 else 0
    gap = kn - energy
    if abs(gap) <= BORDER_TOL:
        cls = "Borderenergetic"
    elif gap < 0:
        cls = "Hyperenergetic"
    else:
        cls = "Subenergetic"
    max_dev = 0.0
    for v, _ in s.pairs:
        max_dev = max(max_dev, abs(float(v) - round(float(v))) / max(1.0, abs(float(v))))
    integral = max_dev <= INTEGRALITY_TOL
    rounded = None
    if integral:
        acc: dict[int, int] = {}
        for v, m in s.pairs:
            r = int(round(float(v)))
            acc[r] = acc.get(r, 0) + m
        rounded = Spectrum(tuple((v, acc[v]) for v in sorted(acc)))
    return EnergyReport(
        energy=energy,
        vertex_count=vertex_count,
        complete_graph_energy=kn,
        gap=gap,
        classification=cls,
        integral=integral,
        rounded_spectrum=rounded,
        max_integrality_dev=max_dev,
    )


def check_spectrum_identities(M: np.ndarray, s: Spectrum) -> dict:
    """Trace and second-moment consistency of a computed spectrum.

    Trace of a CN matrix is 0, so eigenvalues must sum to ~0 relative to
    the Frobenius norm; the eigenvalue square sum must match the matrix
    square sum.
    """
    fro = float(np.linalg.norm(M.astype(np.float64)))
    lam1 = float(sum(m * v for v, m in s.pairs))
    lam2 = float(sum(m * v * v for v, m in s.pairs))
    sq = float(np.sum(M.astype(np.float64) ** 2))
    trace_ok = abs(lam1) <= 1e-8 * max(1.0, fro)
    moment_ok = abs(lam2 - sq) <= 1e-6 * max(1.0, sq)
    return {
        "trace_sum": lam1,
        "trace_ok": trace_ok,
        "moment_rel_err": abs(lam2 - sq) / max(1.0, sq),
        "moment_ok": moment_ok,
        "frobenius": fro,
    }


def spectrum_to_json_str(s: Spectrum) -> str:
    return json.dumps(s.to_json())


def eigenvalue_bounds_ok(s: Spectrum, size: int) -> bool:
    """Gershgorin-style sanity bounds for CN matrices of simple graphs."""
    if size < 2:
        return all(v == 0 for v, _ in s.pairs)
    lo = -(size - 2) * size
    hi = (size - 1) * (size - 2)
    eps = 1e-9 * max(1, size * size)
    return all(lo - eps <= float(v) <= hi + eps for v, _ in s.pairs)
