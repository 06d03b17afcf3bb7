"""Parameter records for the supported group families.

Seven two-generated families are supported; a family instance pins the
family plus its integer parameters and knows its theoretical group order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidParams


class Family(str, Enum):
    DIHEDRAL = "dihedral"  # D_2n,  n >= 3
    DICYCLIC = "dicyclic"  # T_4n,  n >= 2
    SEMIDIHEDRAL = "semidihedral"  # SD_8n, n >= 2
    UNM = "unm"  # U_(n,m), n >= 2, m >= 3
    U6N = "u6n"  # U_6n = U_(n,3), n >= 2
    V8N = "v8n"  # V_8n,  n >= 2
    GPMN = "gpmn"  # G(p,m,n), p prime, m >= n >= 1


PARAM_NAMES: dict[Family, tuple[str, ...]] = {
    Family.DIHEDRAL: ("n",),
    Family.DICYCLIC: ("n",),
    Family.SEMIDIHEDRAL: ("n",),
    Family.UNM: ("n", "m"),
    Family.U6N: ("n",),
    Family.V8N: ("n",),
    Family.GPMN: ("p", "m", "n"),
}


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FamilyInstance:
    family: Family
    params: tuple[int, ...]

    def __post_init__(self):
        fam = self.family
        names = PARAM_NAMES[fam]
        if len(self.params) != len(names):
            raise InvalidParams(
                f"{fam.value} takes parameters {names}, got {self.params}"
            )
        if any(int(v) != v or v < 1 for v in self.params):
            raise InvalidParams(f"parameters must be positive integers: {self.params}")
        if fam == Family.DIHEDRAL and self.params[0] < 3:
            raise InvalidParams("dihedral requires n >= 3")
        if fam in (Family.DICYCLIC, Family.SEMIDIHEDRAL, Family.U6N, Family.V8N):
            if self.params[0] < 2:
                raise InvalidParams(f"{fam.value} requires n >= 2")
        if fam == Family.UNM:
            n, m = self.params
            if n < 2 or m < 3:
                raise InvalidParams("unm requires n >= 2 and m >= 3")
        if fam == Family.GPMN:
            p, m, n = self.params
            if not is_prime(p):
                raise InvalidParams(f"gpmn requires prime p, got {p}")
            if not m >= n >= 1:
                raise InvalidParams("gpmn requires m >= n >= 1")

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(zip(PARAM_NAMES[self.family], self.params))

    @property
    def order(self) -> int:
        """Theoretical group order."""
        fam, p = self.family, self.params
        if fam == Family.DIHEDRAL:
            return 2 * p[0]
        if fam == Family.DICYCLIC:
            return 4 * p[0]
        if fam == Family.SEMIDIHEDRAL:
            return 8 * p[0]
        if fam == Family.UNM:
            return 2 * p[0] * p[1]
        if fam == Family.U6N:
            return 6 * p[0]
        if fam == Family.V8N:
            return 8 * p[0]
        return p[0] ** (p[1] + p[2] + 1)  # GPMN

    @property
    def label(self) -> str:
        fam, p = self.family, self.params
        if fam == Family.DIHEDRAL:
            return f"D_{2 * p[0]}"
        if fam == Family.DICYCLIC:
            return f"T_{4 * p[0]}"
        if fam == Family.SEMIDIHEDRAL:
            return f"SD_{8 * p[0]}"
        if fam == Family.UNM:
            return f"U_({p[0]},{p[1]})"
        if fam == Family.U6N:
            return f"U_{6 * p[0]}"
        if fam == Family.V8N:
            return f"V_{8 * p[0]}"
        return f"G({p[0]},{p[1]},{p[2]})"


def instance(family: Family | str, **params: int) -> FamilyInstance:
    """Convenience constructor: ``instance("dihedral", n=7)``."""
    fam = Family(family)
    names = PARAM_NAMES[fam]
    missing = [k for k in names if k not in params]
    extra = [k for k in params if k not in names]
    if missing or extra:
        raise InvalidParams(
            f"{fam.value} takes parameters {names}; missing {missing}, extra {extra}"
        )
    return FamilyInstance(fam, tuple(int(params[k]) for k in names))
