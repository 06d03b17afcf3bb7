"""Finite groups as explicit Cayley tables: construction, centers, classes.

Every group is a ``FiniteGroup``: an indexed element list plus an (N, N)
int32 multiplication table with the identity at index 0.  Family groups
are built from normal forms enumerated in lexicographic order, so element
indexing (and everything derived from it) is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import accel
from .errors import InvalidParams, NotAGroup, ParseError
from .families import Family, FamilyInstance, is_prime


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    label: str
    element_names: tuple[str, ...]
    table: np.ndarray  # (N, N) int32, table[i, j] = index of i*j
    inverse: np.ndarray = field(default=None)  # (N,) int32
    identity: int = 0

    def __post_init__(self):
        if self.inverse is None:
            rows, cols = np.nonzero(self.table == self.identity)
            inv = np.empty(self.order, np.int32)
            inv[rows] = cols
            object.__setattr__(self, "inverse", inv)
        self.table.setflags(write=False)
        self.inverse.setflags(write=False)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def multiply(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = int(self.table[x, i])
            k += 1
        return k

    def __repr__(self):
        return f"FiniteGroup({self.label!r}, order={self.order})"


@dataclass(frozen=True)
class ConjClass:
    representative: int  # smallest member index
    rep_name: str
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


# ---------------------------------------------------------------------------
# family constructors
#
# Each builder decodes row/column indices into normal-form components,
# applies the family's rewriting rule with numpy broadcasting, and
# re-encodes.  Index encoding is lexicographic over the normal form, so
# index 0 is always the identity.


def _name_xy(a, b, xa="x", yb="y"):
    parts = []
    if a:
        parts.append(xa if a == 1 else f"{xa}^{a}")
    if b:
        parts.append(yb if b == 1 else f"{yb}^{b}")
    return " ".join(parts) if parts else "e"


def _dihedral_table(n):
    # x^a y^j with y x y^-1 = x^-1; index = 2a + j
    idx = np.arange(2 * n, dtype=np.int64)
    a, j = idx // 2, idx % 2
    A, J = a[:, None], j[:, None]
    B, K = a[None, :], j[None, :]
    sign = 1 - 2 * J
    ra = (A + sign * B) % n
    table = 2 * ra + (J ^ K)
    names = tuple(_name_xy(int(ai), int(ji)) for ai, ji in zip(a, j))
    return table.astype(np.int32), names


def _dicyclic_table(n):
    # x^a y^j, a mod 2n, with x^n = y^2 and y^-1 x y = x^-1; index = 2a + j
    idx = np.arange(4 * n, dtype=np.int64)
    a, j = idx // 2, idx % 2
    A, J = a[:, None], j[:, None]
    B, K = a[None, :], j[None, :]
    sign = 1 - 2 * J
    ra = (A + sign * B + n * (J & K)) % (2 * n)
    table = 2 * ra + (J ^ K)
    names = tuple(_name_xy(int(ai), int(ji)) for ai, ji in zip(a, j))
    return table.astype(np.int32), names


def _semidihedral_table(n):
    # x^a y^j, a mod 4n, with y x y = x^(2n-1); index = 2a + j
    idx = np.arange(8 * n, dtype=np.int64)
    a, j = idx // 2, idx % 2
    A, J = a[:, None], j[:, None]
    B, K = a[None, :], j[None, :]
    twist = np.where(J == 1, 2 * n - 1, 1)
    ra = (A + twist * B) % (4 * n)
    table = 2 * ra + (J ^ K)
    names = tuple(_name_xy(int(ai), int(ji)) for ai, ji in zip(a, j))
    return table.astype(np.int32), names


def _unm_table(n, m):
    # x^a y^b, a mod 2n, b mod m, with x^-1 y x = y^-1; index = m*a + b.
    # Moving y^b through x^c flips b's sign when c is odd.
    idx = np.arange(2 * n * m, dtype=np.int64)
    a, b = idx // m, idx % m
    A, Bv = a[:, None], b[:, None]
    C, D = a[None, :], b[None, :]
    sign = 1 - 2 * (C % 2)
    table = m * ((A + C) % (2 * n)) + (sign * Bv + D) % m
    names = tuple(_name_xy(int(ai), int(bi)) for ai, bi in zip(a, b))
    return table.astype(np.int32), names


def _v8n_table(n):
    # x^k y^j, k mod 2n, j mod 4, with y x = x^-1 y^-1 and y^-1 x = x^-1 y.
    # Those relations reduce to y^j x^k = x^((-1)^j k) y^((-1)^k j).
    idx = np.arange(8 * n, dtype=np.int64)
    k, j = idx // 4, idx % 4
    K1, J1 = k[:, None], j[:, None]
    K2, J2 = k[None, :], j[None, :]
    sk = 1 - 2 * (J1 % 2)
    sj = 1 - 2 * (K2 % 2)
    table = 4 * ((K1 + sk * K2) % (2 * n)) + (sj * J1 + J2) % 4
    names = tuple(_name_xy(int(ki), int(ji)) for ki, ji in zip(k, j))
    return table.astype(np.int32), names


def _gpmn_table(p, m, n):
    # x^a y^b z^c with z = [x,y] central of order p:
    # (a,b,c)(a',b',c') = (a+a', b+b', c+c'-b*a'); index = (a*p^n + b)*p + c
    pm, pn = p**m, p**n
    N = pm * pn * p
    idx = np.arange(N, dtype=np.int64)
    c = idx % p
    b = (idx // p) % pn
    a = idx // (p * pn)
    A, Bv, Cv = a[:, None], b[:, None], c[:, None]
    A2, B2, C2 = a[None, :], b[None, :], c[None, :]
    ra = (A + A2) % pm
    rb = (Bv + B2) % pn
    rc = (Cv + C2 - Bv * A2) % p
    table = (ra * pn + rb) * p + rc
    names = []
    for ai, bi, ci in zip(a, b, c):
        s = _name_xy(int(ai), int(bi))
        if ci:
            zs = "z" if ci == 1 else f"z^{ci}"
            s = zs if s == "e" else f"{s} {zs}"
        names.append(s)
    return table.astype(np.int32), tuple(names)


def build_family_group(spec: FamilyInstance) -> FiniteGroup:
    """Construct the explicit group for a family instance."""
    fam, p = spec.family, spec.params
    if fam == Family.DIHEDRAL:
        table, names = _dihedral_table(p[0])
    elif fam == Family.DICYCLIC:
        table, names = _dicyclic_table(p[0])
    elif fam == Family.SEMIDIHEDRAL:
        table, names = _semidihedral_table(p[0])
    elif fam == Family.UNM:
        table, names = _unm_table(p[0], p[1])
    elif fam == Family.U6N:
        table, names = _unm_table(p[0], 3)
    elif fam == Family.V8N:
        table, names = _v8n_table(p[0])
    elif fam == Family.GPMN:
        table, names = _gpmn_table(p[0], p[1], p[2])
    else:  # pragma: no cover
        raise InvalidParams(f"unknown family {fam}")
    group = FiniteGroup(spec.label, names, table)
    assert group.order == spec.order
    return group


def cyclic_group(k: int) -> FiniteGroup:
    if k < 1:
        raise InvalidParams("cyclic group order must be >= 1")
    idx = np.arange(k, dtype=np.int64)
    table = ((idx[:, None] + idx[None, :]) % k).astype(np.int32)
    names = tuple("e" if i == 0 else ("g" if i == 1 else f"g^{i}") for i in range(k))
    return FiniteGroup(f"Z_{k}", names, table)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Componentwise product on index pairs, encoded as i*|H| + j."""
    nh = H.order
    rg = np.repeat(np.arange(G.order), nh)
    rh = np.tile(np.arange(nh), G.order)
    table = (
        G.table[rg[:, None], rg[None, :]].astype(np.int64) * nh
        + H.table[rh[:, None], rh[None, :]]
    ).astype(np.int32)
    names = tuple(
        f"({G.element_names[i]}, {H.element_names[j]})" for i, j in zip(rg, rh)
    )
    return FiniteGroup(f"{G.label} x {H.label}", names, table)


# ---------------------------------------------------------------------------
# Cayley-table files


def verify_group_table(table: np.ndarray) -> None:
    """Check the group axioms exhaustively; raise NotAGroup with a witness."""
    n = table.shape[0]
    for g in range(n):
        if table[0, g] != g or table[g, 0] != g:
            raise NotAGroup(f"index 0 is not an identity at element {g}", witness=(g,))
    for g in range(n):
        if 0 not in table[g]:
            raise NotAGroup(f"element {g} has no inverse", witness=(g,))
    enc = accel.assoc_witness(np.ascontiguousarray(table))
    if enc >= 0:
        c = int(enc % n)
        b = int((enc // n) % n)
        a = int(enc // (n * n))
        raise NotAGroup(
            f"associativity fails: ({a}*{b})*{c} != {a}*({b}*{c})", witness=(a, b, c)
        )


def load_cayley_table(source, max_order: int = 2048, label: str | None = None) -> FiniteGroup:
    """Load a group from a plain-text Cayley table.

    Format: first non-comment line is N; the next N lines hold N indices
    each, row g listing g*h for h = 0..N-1.  Index 0 must be the identity.
    Lines starting with '#' are comments.  ``source`` is a path or a string
    containing the table text.
    """
    text = source
    name = label or "cayley"
    if hasattr(source, "read"):
        text = source.read()
    elif "\n" not in str(source):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
        name = label or str(source)
    lines = [ln.strip() for ln in str(text).splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty Cayley table file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"bad group order line: {lines[0]!r}") from exc
    if n < 1:
        raise ParseError(f"group order must be positive, got {n}")
    if n > max_order:
        raise ParseError(f"table order {n} exceeds cap {max_order}")
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for g, ln in enumerate(lines[1:]):
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise ParseError(f"row {g}: non-integer entry") from exc
        if len(row) != n:
            raise ParseError(f"row {g}: expected {n} entries, found {len(row)}")
        if any(v < 0 or v >= n for v in row):
            raise ParseError(f"row {g}: entry out of range 0..{n - 1}")
        rows.append(row)
    table = np.asarray(rows, dtype=np.int32)
    verify_group_table(table)
    names = tuple("e" if i == 0 else f"g{i}" for i in range(n))
    return FiniteGroup(name, names, table)


# ---------------------------------------------------------------------------
# centers, classes, central quotients


def center(G: FiniteGroup) -> np.ndarray:
    """Indices of elements commuting with everything, ascending."""
    return np.flatnonzero((G.table == G.table.T).all(axis=1))


def conjugacy_classes(G: FiniteGroup) -> list[ConjClass]:
    """All conjugacy classes, ordered by smallest member index."""
    class_id, count = accel.conjugacy_partition(G.table, G.inverse.astype(np.int32))
    out = []
    for c in range(count):
        members = np.flatnonzero(class_id == c)
        rep = int(members[0])
        out.append(ConjClass(rep, G.element_names[rep], tuple(int(x) for x in members)))
    return out


def noncentral_classes(G: FiniteGroup) -> list[ConjClass]:
    """Non-singleton classes in canonical order (singletons are central)."""
    return [c for c in conjugacy_classes(G) if c.size > 1]


def central_quotient(G: FiniteGroup) -> FiniteGroup:
    """G / Z(G), with cosets indexed by their smallest member."""
    z = center(G)
    rep_of = np.min(G.table[:, z], axis=1)  # smallest member of g's coset
    reps = np.unique(rep_of)
    prod = G.table[reps[:, None], reps[None, :]]
    table = np.searchsorted(reps, rep_of[prod]).astype(np.int32)
    names = tuple(f"[{G.element_names[int(r)]}]" for r in reps)
    return FiniteGroup(f"{G.label}/Z", names, table)


@dataclass(frozen=True)
class QuotientShape:
    kind: str  # "zp_x_zp" | "dihedral" | "order_p_cubed" | "other"
    p: int | None = None
    n: int | None = None


def _prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            return (p, e) if q == 1 and is_prime(p) else None
    return None


def detect_central_quotient(G: FiniteGroup) -> QuotientShape:
    """Classify G/Z(G) among the shapes the quotient theorems cover.

    Order: Z_p x Z_p (order p^2), then dihedral of order 2n with n >= 3
    (found by brute-force generator search), then any group of order p^3,
    else "other".
    """
    Q = central_quotient(G)
    q = Q.order
    pp = _prime_power(q)
    if pp is not None and pp[1] == 2:
        p = pp[0]
        if Q.is_abelian() and all(Q.element_order(g) <= p for g in range(q)):
            return QuotientShape("zp_x_zp", p=p)
    if q % 2 == 0 and q // 2 >= 3:
        n = q // 2
        inv = Q.inverse
        candidates = [g for g in range(q) if Q.element_order(g) == n]
        involutions = [g for g in range(1, q) if Q.table[g, g] == 0]
        for r in candidates:
            powers = {0}
            x = r
            while x != 0:
                powers.add(x)
                x = int(Q.table[x, r])
            for s in involutions:
                if s in powers:
                    continue
                if Q.table[Q.table[s, r], inv[s]] == inv[r]:
                    return QuotientShape("dihedral", n=n)
    if pp is not None and pp[1] == 3:
        return QuotientShape("order_p_cubed", p=pp[0])
    return QuotientShape("other")
