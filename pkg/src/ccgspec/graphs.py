"""Commuting conjugacy class graphs and their clique-union structure.

The graph of a non-abelian group has one vertex per non-central conjugacy
class; two classes are adjacent when some members commute.  Every graph
produced by the supported families decomposes into a disjoint union of
complete graphs, captured by ``CompleteUnionShape``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import accel
from .errors import AbelianGroup, InvalidParams, NotCompleteUnion
from .families import Family, FamilyInstance
from .groups import ConjClass, FiniteGroup, noncentral_classes


@dataclass(frozen=True, eq=False)
class CCCGraph:
    adjacency: np.ndarray  # symmetric bool (k, k), false diagonal
    classes: tuple[ConjClass, ...]  # empty for synthetic graphs
    group_label: str

    def __post_init__(self):
        self.adjacency.setflags(write=False)

    @property
    def vertex_count(self) -> int:
        return self.adjacency.shape[0]

    def vertex_label(self, i: int) -> str:
        if self.classes:
            c = self.classes[i]
            return f"{c.rep_name} ({c.size})"
        return f"v{i}"


@dataclass(frozen=True)
class CompleteUnionShape:
    """Multiset of (copies, size) parts, canonicalized: sizes strictly
    descending, equal sizes merged."""

    parts: tuple[tuple[int, int], ...]

    @classmethod
    def from_parts(cls, pairs) -> "CompleteUnionShape":
        merged: Counter = Counter()
        for copies, size in pairs:
            if copies < 0 or size < 1:
                raise InvalidParams(f"bad shape part ({copies}, {size})")
            if copies:
                merged[int(size)] += int(copies)
        return cls(tuple((merged[s], s) for s in sorted(merged, reverse=True)))

    @classmethod
    def from_component_sizes(cls, sizes) -> "CompleteUnionShape":
        return cls.from_parts((1, s) for s in sizes)

    @property
    def total_vertices(self) -> int:
        return sum(l * m for l, m in self.parts)

    def __str__(self):
        if not self.parts:
            return "(empty)"
        return " u ".join(
            (f"K{m}" if l == 1 else f"{l}K{m}") for l, m in self.parts
        )


def classes_commute(A: ConjClass, B: ConjClass, G: FiniteGroup) -> bool:
    """True when some member of A commutes with some member of B.

    Scans members of B against A's representative only; conjugation
    invariance makes this equivalent to the full product scan.
    """
    if A.representative == B.representative:
        raise ValueError("classes_commute requires two distinct classes")
    mem = np.asarray(B.members)
    a = A.representative
    return bool((G.table[a, mem] == G.table[mem, a]).any())


def ccc_graph(G: FiniteGroup) -> CCCGraph:
    """Build the commuting conjugacy class graph of a non-abelian group."""
    classes = noncentral_classes(G)
    if not classes:
        raise AbelianGroup(f"{G.label} is abelian; the graph is undefined")
    class_of = np.full(G.order, -1, np.int64)
    for i, c in enumerate(classes):
        class_of[list(c.members)] = i
    reps = np.asarray([c.representative for c in classes], np.int64)
    adj = accel.commuting_adjacency(G.table, class_of, reps)
    assert np.array_equal(adj, adj.T)
    return CCCGraph(adj, tuple(classes), G.label)


def from_adjacency(adj: np.ndarray, label: str = "graph") -> CCCGraph:
    """Wrap a symmetric boolean adjacency matrix as a synthetic graph."""
    adj = np.asarray(adj, dtype=bool).copy()
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise InvalidParams("adjacency must be square")
    if not np.array_equal(adj, adj.T) or adj.diagonal().any():
        raise InvalidParams("adjacency must be symmetric with false diagonal")
    return CCCGraph(adj, (), label)


def materialize(shape: CompleteUnionShape, label: str | None = None) -> CCCGraph:
    """Block-diagonal realization of a clique union, one block per copy."""
    n = shape.total_vertices
    adj = np.zeros((n, n), dtype=bool)
    pos = 0
    for copies, size in shape.parts:
        for _ in range(copies):
            adj[pos : pos + size, pos : pos + size] = True
            pos += size
    np.fill_diagonal(adj, False)
    return CCCGraph(adj, (), label or str(shape))


def components(g: CCCGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by first vertex."""
    n = g.vertex_count
    seen = np.zeros(n, dtype=bool)
    out = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in np.flatnonzero(g.adjacency[v]):
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
        out.append(sorted(comp))
    return out


def recognize_complete_union(g: CCCGraph) -> CompleteUnionShape:
    """Certify that every component is a clique and return the size multiset."""
    sizes = []
    for comp in components(g):
        idx = np.asarray(comp)
        block = g.adjacency[np.ix_(idx, idx)]
        expect = ~np.eye(len(comp), dtype=bool)
        if not np.array_equal(block, expect):
            bad = np.argwhere(expect & ~block)[0]
            u, v = int(idx[bad[0]]), int(idx[bad[1]])
            raise NotCompleteUnion(
                f"component of {g.group_label} is missing edge ({u}, {v})",
                witness=(u, v),
            )
        sizes.append(len(comp))
    return CompleteUnionShape.from_component_sizes(sizes)


def predicted_structure(spec: FamilyInstance) -> CompleteUnionShape:
    """The closed-form clique-union structure catalogued for a family.

    This is the prediction side only; whether a built group's graph agrees
    is exactly what the verification harness tests.
    """
    fam = spec.family
    if fam == Family.DIHEDRAL:
        (n,) = spec.params
        if n % 2:
            parts = [(1, (n - 1) // 2), (1, 1)]
        elif (n // 2) % 2 == 0:
            parts = [(1, n // 2 - 1), (2, 1)]
        else:
            parts = [(1, n // 2 - 1), (1, 2)]
    elif fam == Family.DICYCLIC:
        (n,) = spec.params
        parts = [(1, n - 1), (2, 1)] if n % 2 == 0 else [(1, n - 1), (1, 2)]
    elif fam == Family.SEMIDIHEDRAL:
        (n,) = spec.params
        parts = [(1, 2 * n - 1), (2, 1)] if n % 2 == 0 else [(1, 2 * n - 2), (1, 4)]
    elif fam in (Family.UNM, Family.U6N):
        n, m = spec.params if fam == Family.UNM else (spec.params[0], 3)
        if m % 2 == 0:
            parts = [(2, n), (1, n * (m // 2 - 1))]
        else:
            parts = [(1, n), (1, n * (m - 1) // 2)]
    elif fam == Family.V8N:
        (n,) = spec.params
        parts = [(1, 2 * n - 2), (2, 2)] if n % 2 == 0 else [(1, 2 * n - 1), (2, 1)]
    elif fam == Family.GPMN:
        p, m, n = spec.params
        big = p ** (m + n - 1) - p ** (m + n - 2)
        parts = [(2, big), (p**n - p ** (n - 1), p**m - p ** (m - 1))]
    else:  # pragma: no cover
        raise InvalidParams(f"unknown family {fam}")
    return CompleteUnionShape.from_parts(parts)


def to_dot(g: CCCGraph) -> str:
    """Graphviz rendering, one subgraph per component."""
    lines = [f'graph "{g.group_label}" {{']
    for ci, comp in enumerate(components(g)):
        lines.append(f"  subgraph cluster_{ci} {{")
        for v in comp:
            lines.append(f'    n{v} [label="{g.vertex_label(v)}"];')
        for i, u in enumerate(comp):
            for v in comp[i + 1 :]:
                if g.adjacency[u, v]:
                    lines.append(f"    n{u} -- n{v};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
