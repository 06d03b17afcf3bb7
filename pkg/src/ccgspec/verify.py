"""Brute force versus closed forms: sweeps, witnesses, and suite reports.

The observed side of every record is computed entirely from the group
pipeline (build -> classes -> graph -> numeric spectrum); the predicted
side entirely from the formulas module.  The two sides share no code, so
a Match is genuine two-sided evidence and a mismatch is a counterexample
to the catalogued closed form.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .errors import (
    ConfigError,
    HypothesisMismatch,
    InvalidParams,
    KOutOfRange,
    MissingCase,
    NonIntegralParameter,
    UnknownTheorem,
)
from .families import Family, FamilyInstance, is_prime
from .formulas import (
    _P3_CASES,
    TheoremPrediction,
    canonical_theorem_id,
    gap_expression,
    predict,
)
from .graphs import ccc_graph, materialize, recognize_complete_union
from .groups import (
    FiniteGroup,
    build_family_group,
    center,
    cyclic_group,
    detect_central_quotient,
    direct_product,
)
from .spectral import (
    check_spectrum_identities,
    classify,
    cn_matrix,
    eigenvalue_bounds_ok,
    spectrum,
)

DEFAULT_CAP = 4000


@dataclass
class SweepConfig:
    family: str | None = None
    theorem: str | None = None
    ranges: dict = field(default_factory=dict)
    cap: int = DEFAULT_CAP
    extra: dict = field(default_factory=dict)  # fixed values, e.g. a case label

    def __post_init__(self):
        if (self.family is None) == (self.theorem is None):
            raise ConfigError("exactly one of family/theorem must be set")
        if self.cap < 1:
            raise ConfigError("cap must be positive")
        for k, v in self.ranges.items():
            lo, hi = v
            if lo > hi:
                raise ConfigError(f"empty range for {k}: {v}")


@dataclass
class Observed:
    shape: object
    spectrum: object  # rounded integer Spectrum
    energy: int
    vertex_count: int
    gap: int
    integral: bool
    max_integrality_dev: float
    trace_ok: bool
    moment_ok: bool
    bounds_ok: bool


@dataclass
class VerificationRecord:
    suite: str
    label: str
    params: dict
    predicted: TheoremPrediction
    observed: Observed
    verdict: str  # Match | ShapeMismatch | SpectrumMismatch | EnergyMismatch | GapSignViolation
    gap_formula: int | None  # catalogued closed gap form, when one exists
    millis: float  # in-memory diagnostics only; never serialized

    @property
    def gap_formula_match(self) -> bool | None:
        if self.gap_formula is None:
            return None
        return self.gap_formula == self.observed.gap


def observe_group(G: FiniteGroup) -> Observed:
    """Full brute-force pipeline on one group."""
    graph = ccc_graph(G)
    shape = recognize_complete_union(graph)
    M = cn_matrix(graph)
    spec = spectrum(graph)
    idents = check_spectrum_identities(M, spec)
    report = classify(spec, graph.vertex_count)
    # a non-integral spectrum cannot Match any integer prediction; keep the
    # raw clustered spectrum so the record shows what was actually seen
    rounded = report.rounded_spectrum if report.integral else spec
    energy = int(round(float(sum(m * abs(v) for v, m in rounded.pairs))))
    gap = report.complete_graph_energy - energy
    return Observed(
        shape=shape,
        spectrum=rounded,
        energy=energy,
        vertex_count=graph.vertex_count,
        gap=int(gap),
        integral=report.integral,
        max_integrality_dev=report.max_integrality_dev,
        trace_ok=idents["trace_ok"],
        moment_ok=idents["moment_ok"],
        bounds_ok=eigenvalue_bounds_ok(spec, graph.vertex_count),
    )


def _verdict(predicted: TheoremPrediction, observed: Observed) -> str:
    if predicted.shape != observed.shape:
        return "ShapeMismatch"
    if tuple(predicted.spectrum.pairs) != tuple(observed.spectrum.pairs):
        return "SpectrumMismatch"
    if predicted.energy != observed.energy:
        return "EnergyMismatch"
    if observed.gap < 0:
        return "GapSignViolation"
    return "Match"


# gap forms applicable to family sweeps; dihedral/dicyclic/u6n route through
# the dihedral-quotient form with (n_d, z) given by their central quotients
def _family_gap_formula(fam: Family, params: dict) -> int | None:
    n = params.get("n")
    if fam == Family.SEMIDIHEDRAL:
        return gap_expression("semidihedral", params)
    if fam == Family.UNM:
        return gap_expression("unm", params)
    if fam == Family.V8N:
        return gap_expression("v8n", params)
    if fam == Family.GPMN:
        return gap_expression("gpmn", params)
    if fam == Family.DICYCLIC:
        if n >= 3:
            return gap_expression("quotient-d2n", {"n": n, "z": 2})
        return gap_expression("quotient-pp", {"p": 2, "z": 2})  # n=2: quaternion
    if fam == Family.U6N:
        return gap_expression("quotient-d2n", {"n": 3, "z": n})
    if fam == Family.DIHEDRAL:
        if n % 2:
            return gap_expression("quotient-d2n", {"n": n, "z": 1})
        if n // 2 >= 3:
            return gap_expression("quotient-d2n", {"n": n // 2, "z": 2})
        return gap_expression("quotient-pp", {"p": 2, "z": 2})  # n=4: Klein quotient
    return None


def _family_theorem(fam: Family) -> str:
    return fam.value


def verify_instance(spec: FamilyInstance, suite: str = "") -> VerificationRecord:
    start = time.perf_counter()
    predicted = predict(_family_theorem(spec.family), spec.param_dict)
    observed = observe_group(build_family_group(spec))
    verdict = _verdict(predicted, observed)
    gap_formula = _family_gap_formula(spec.family, spec.param_dict)
    return VerificationRecord(
        suite=suite or spec.family.value,
        label=spec.label,
        params=spec.param_dict,
        predicted=predicted,
        observed=observed,
        verdict=verdict,
        gap_formula=gap_formula,
        millis=(time.perf_counter() - start) * 1000.0,
    )


def _grid(config: SweepConfig):
    """Parameter grid for a family sweep, in canonical ascending order.

    Explicit ranges are enumerated in full (over-cap points surface as
    skips); defaulted ranges enumerate only what the order cap admits.
    """
    fam = Family(config.family)
    r = config.ranges

    if fam in (Family.DIHEDRAL, Family.DICYCLIC, Family.SEMIDIHEDRAL, Family.U6N, Family.V8N):
        lo = 3 if fam == Family.DIHEDRAL else 2
        per = {
            Family.DIHEDRAL: 2,
            Family.DICYCLIC: 4,
            Family.SEMIDIHEDRAL: 8,
            Family.U6N: 6,
            Family.V8N: 8,
        }[fam]
        nlo, nhi = r.get("n", (lo, max(lo, config.cap // per)))
        for n in range(nlo, nhi + 1):
            yield FamilyInstance(fam, (n,))
    elif fam == Family.UNM:
        nlo, nhi = r.get("n", (2, max(2, config.cap // 6)))
        for n in range(nlo, nhi + 1):
            mlo, mhi = r.get("m", (3, max(3, config.cap // (2 * n))))
            for m in range(mlo, mhi + 1):
                yield FamilyInstance(fam, (n, m))
    elif fam == Family.GPMN:
        explicit = bool(r)
        plo, phi = r.get("p", (2, 13))
        mlo, mhi = r.get("m", (1, 12))
        nlo, nhi = r.get("n", (1, 12))
        for p in range(plo, phi + 1):
            if not is_prime(p):
                continue
            for m in range(mlo, mhi + 1):
                for n in range(nlo, min(m, nhi) + 1):
                    if explicit or p ** (m + n + 1) <= config.cap:
                        yield FamilyInstance(fam, (p, m, n))
    else:  # pragma: no cover
        raise ConfigError(f"unknown family {config.family!r}")


def verify_family(config: SweepConfig) -> tuple[list[VerificationRecord], list[str]]:
    """One record per in-cap grid point; labels of skipped points."""
    if config.family is None:
        raise ConfigError("verify_family needs a family config")
    records, skipped = [], []
    for spec in _grid(config):
        if spec.order > config.cap:
            skipped.append(spec.label)
            continue
        records.append(verify_instance(spec, suite=config.family))
    return records, skipped


# ---------------------------------------------------------------------------
# theorem sweeps: closed form against the materialized-graph numeric oracle


def _observe_graph(graph) -> Observed:
    """Numeric pipeline on an already-built graph (no group involved)."""
    shape = recognize_complete_union(graph)
    M = cn_matrix(graph)
    spec = spectrum(graph)
    idents = check_spectrum_identities(M, spec)
    report = classify(spec, graph.vertex_count)
    rounded = report.rounded_spectrum if report.integral else spec
    energy = int(round(float(sum(m * abs(v) for v, m in rounded.pairs))))
    return Observed(
        shape=shape,
        spectrum=rounded,
        energy=energy,
        vertex_count=graph.vertex_count,
        gap=int(report.complete_graph_energy - energy),
        integral=report.integral,
        max_integrality_dev=report.max_integrality_dev,
        trace_ok=idents["trace_ok"],
        moment_ok=idents["moment_ok"],
        bounds_ok=eigenvalue_bounds_ok(spec, graph.vertex_count),
    )


def _gap_formula_for(tid: str, params: dict) -> int | None:
    try:
        if tid == "pgroup-p4":
            p, z = params["p"], params["z"]
            return gap_expression("pgroup-p4", {"p": p, "zexp": 1 if z == p else 2})
        if tid in (
            "semidihedral",
            "unm",
            "v8n",
            "quotient-d2n",
            "quotient-pp",
            "gpmn",
            "pgroup-center-pn3",
        ):
            return gap_expression(tid, params)
        if tid == "pgroup-center-pn2":
            p, n = params["p"], params["n"]
            return gap_expression("quotient-pp", {"p": p, "z": p ** (n - 2)})
    except UnknownTheorem:
        return None
    return None


_THEOREM_GRID_DEFAULTS = {
    "quotient-pp": {"p": (2, 7), "z": (1, 20)},
    "quotient-d2n": {"n": (3, 12), "z": (1, 8)},
    "pgroup-center-pn2": {"p": (2, 5), "n": (3, 5)},
    "pgroup-p4": {"p": (2, 7)},
    "quotient-p3": {"p": (2, 3), "z": (1, 18)},
    "pgroup-center-pn3": {"p": (2, 3), "n": (4, 6)},
    "dihedral": {"n": (3, 30)},
    "dicyclic": {"n": (2, 30)},
    "semidihedral": {"n": (2, 30)},
    "unm": {"n": (2, 8), "m": (3, 10)},
    "u6n": {"n": (2, 20)},
    "v8n": {"n": (2, 30)},
    "gpmn": {"p": (2, 5), "m": (1, 4), "n": (1, 4)},
}


def _theorem_points(tid: str, config: SweepConfig):
    """All parameter dicts for a theorem sweep, canonical order."""
    defaults = _THEOREM_GRID_DEFAULTS.get(tid)
    if defaults is None:
        raise ConfigError(f"no sweepable grid for theorem {tid!r}")
    ranges = {k: config.ranges.get(k, v) for k, v in defaults.items()}

    def axis(key):
        lo, hi = ranges[key]
        return range(lo, hi + 1)

    def primes(key):
        return [p for p in axis(key) if is_prime(p)]

    fixed_case = config.extra.get("case")
    cases = [fixed_case] if fixed_case else list(_P3_CASES)
    klo, khi = config.ranges.get("k", (1, 13))

    if tid in ("dihedral", "dicyclic", "semidihedral", "u6n", "v8n"):
        for n in axis("n"):
            yield {"n": n}
    elif tid == "unm":
        for n in axis("n"):
            for m in axis("m"):
                yield {"n": n, "m": m}
    elif tid == "gpmn":
        for p in primes("p"):
            for m in axis("m"):
                for n in axis("n"):
                    if n <= m:
                        yield {"p": p, "m": m, "n": n}
    elif tid == "quotient-pp":
        for p in primes("p"):
            for z in axis("z"):
                yield {"p": p, "z": z}
    elif tid == "quotient-d2n":
        for n in axis("n"):
            for z in axis("z"):
                yield {"n": n, "z": z}
    elif tid == "pgroup-center-pn2":
        for p in primes("p"):
            for n in axis("n"):
                yield {"p": p, "n": n}
    elif tid == "pgroup-p4":
        for p in primes("p"):
            for zexp in (1, 2):
                yield {"p": p, "z": p**zexp}
    elif tid in ("quotient-p3", "pgroup-center-pn3"):
        key = "z" if tid == "quotient-p3" else "n"
        for p in primes("p"):
            for v in axis(key):
                for case in cases:
                    ks = range(max(1, klo), min(p, khi) + 1) if case in ("B1", "B2") else [None]
                    for k in ks:
                        pt = {"p": p, key: v, "case": case}
                        if k is not None:
                            pt["k"] = k
                        yield pt
    else:  # pragma: no cover
        raise ConfigError(f"no grid builder for {tid!r}")


def verify_theorem(config: SweepConfig) -> tuple[list[VerificationRecord], list[str]]:
    """Check a closed form against the numeric spectrum of its own shape.

    This exercises the clique-union spectrum identity and the gap form on
    a parameter grid; parameter points whose derived sizes are not
    integers are skipped (they are outside the theorem's domain).
    """
    if config.theorem is None:
        raise ConfigError("verify_theorem needs a theorem config")
    tid = canonical_theorem_id(config.theorem)
    records, skipped = [], []
    for params in _theorem_points(tid, config):
        label = f"{tid}[" + ",".join(f"{k}={v}" for k, v in params.items()) + "]"
        try:
            predicted = predict(tid, params)
        except (NonIntegralParameter, InvalidParams, KOutOfRange, MissingCase):
            skipped.append(label)
            continue
        if predicted.vertex_count > config.cap or predicted.vertex_count == 0:
            skipped.append(label)
            continue
        start = time.perf_counter()
        observed = _observe_graph(materialize(predicted.shape))
        records.append(
            VerificationRecord(
                suite=f"theorem:{tid}",
                label=label,
                params=params,
                predicted=predicted,
                observed=observed,
                verdict=_verdict(predicted, observed),
                gap_formula=_gap_formula_for(tid, params),
                millis=(time.perf_counter() - start) * 1000.0,
            )
        )
    return records, skipped


# ---------------------------------------------------------------------------
# witness groups for the central-quotient theorems


def _witness_builders() -> dict:
    return {
        "D8": lambda: build_family_group(FamilyInstance(Family.DIHEDRAL, (4,))),
        "Q8": lambda: build_family_group(FamilyInstance(Family.DICYCLIC, (2,))),
        "D16": lambda: build_family_group(FamilyInstance(Family.DIHEDRAL, (8,))),
        "SD16": lambda: build_family_group(FamilyInstance(Family.SEMIDIHEDRAL, (2,))),
        "Q16": lambda: build_family_group(FamilyInstance(Family.DICYCLIC, (4,))),
        "T16": lambda: build_family_group(FamilyInstance(Family.DICYCLIC, (4,))),
        "Z3xD8": lambda: direct_product(
            cyclic_group(3), build_family_group(FamilyInstance(Family.DIHEDRAL, (4,)))
        ),
        "G311": lambda: build_family_group(FamilyInstance(Family.GPMN, (3, 1, 1))),
        "U12": lambda: build_family_group(FamilyInstance(Family.U6N, (2,))),
    }


def build_witness(name: str) -> FiniteGroup:
    builders = _witness_builders()
    if name not in builders:
        raise ConfigError(f"unknown witness {name!r}; known: {sorted(builders)}")
    return builders[name]()


# witness name -> list of (theorem, params) pairings exercised by the suite
WITNESS_THEOREMS = {
    "D8": [("quotient-pp", {"p": 2, "z": 2})],
    "Q8": [("quotient-pp", {"p": 2, "z": 2})],
    "D16": [
        ("pgroup-p4", {"p": 2, "z": 2}),
        ("quotient-d2n", {"n": 4, "z": 2}),
        ("quotient-p3", {"p": 2, "z": 2, "case": "B3"}),
    ],
    "SD16": [("pgroup-p4", {"p": 2, "z": 2})],
    "Q16": [("pgroup-p4", {"p": 2, "z": 2})],
    "T16": [
        ("dicyclic", {"n": 4}),
        ("quotient-d2n", {"n": 4, "z": 2}),
    ],
    "Z3xD8": [("quotient-pp", {"p": 2, "z": 6})],
    "G311": [("quotient-pp", {"p": 3, "z": 3})],
    "U12": [("quotient-d2n", {"n": 3, "z": 2})],
}


def _check_hypothesis(G: FiniteGroup, theorem: str, params: dict) -> None:
    tid = theorem
    z = len(center(G))
    if tid == "quotient-pp":
        shape = detect_central_quotient(G)
        if shape.kind != "zp_x_zp" or shape.p != params["p"]:
            raise HypothesisMismatch(
                f"{G.label}: central quotient is not Z_{params['p']} x Z_{params['p']}"
            )
        if z != params["z"]:
            raise HypothesisMismatch(f"{G.label}: |Z| = {z}, expected {params['z']}")
    elif tid == "quotient-d2n":
        shape = detect_central_quotient(G)
        if shape.kind != "dihedral" or shape.n != params["n"]:
            raise HypothesisMismatch(
                f"{G.label}: central quotient is not dihedral of order {2 * params['n']}"
            )
        if z != params["z"]:
            raise HypothesisMismatch(f"{G.label}: |Z| = {z}, expected {params['z']}")
    elif tid == "quotient-p3":
        p = params["p"]
        if G.order // z != p**3:
            raise HypothesisMismatch(f"{G.label}: |G/Z| = {G.order // z}, expected p^3")
        if z != params["z"]:
            raise HypothesisMismatch(f"{G.label}: |Z| = {z}, expected {params['z']}")
    elif tid == "pgroup-p4":
        p = params["p"]
        if G.order != p**4:
            raise HypothesisMismatch(f"{G.label}: order {G.order}, expected {p**4}")
        if z != params["z"]:
            raise HypothesisMismatch(f"{G.label}: |Z| = {z}, expected {params['z']}")
    elif tid == "pgroup-center-pn2":
        p, n = params["p"], params["n"]
        if G.order != p**n or z != p ** (n - 2):
            raise HypothesisMismatch(f"{G.label}: not order p^{n} with |Z| = p^{n - 2}")
    elif tid in ("dihedral", "dicyclic", "semidihedral", "unm", "u6n", "v8n", "gpmn"):
        pass  # family theorems carry their hypothesis in the construction
    else:
        raise UnknownTheorem(f"no hypothesis check for {theorem!r}")


def verify_witness(G: FiniteGroup, theorem: str, params: dict) -> VerificationRecord:
    """Compare brute force on a concrete group against a quotient theorem."""
    start = time.perf_counter()
    tid = canonical_theorem_id(theorem)
    _check_hypothesis(G, tid, params)
    predicted = predict(tid, params)
    observed = observe_group(G)
    return VerificationRecord(
        suite=f"witness:{tid}",
        label=G.label,
        params=dict(params),
        predicted=predicted,
        observed=observed,
        verdict=_verdict(predicted, observed),
        gap_formula=_gap_formula_for(tid, params),
        millis=(time.perf_counter() - start) * 1000.0,
    )


def verify_witness_suite() -> list[VerificationRecord]:
    records = []
    for name in sorted(WITNESS_THEOREMS):
        G = build_witness(name)
        for theorem, params in WITNESS_THEOREMS[name]:
            records.append(verify_witness(G, theorem, params))
    return records


# ---------------------------------------------------------------------------
# summaries


def verify_integrality(records) -> dict:
    violations = [r.label for r in records if not r.observed.integral]
    max_dev = max((r.observed.max_integrality_dev for r in records), default=0.0)
    return {
        "checked": len(records),
        "violations": violations,
        "max_deviation": max_dev,
    }


def verify_hyperenergetic(records) -> dict:
    negative = [r.label for r in records if r.observed.gap < 0]
    border = [r.label for r in records if r.observed.gap == 0]
    formula_mismatch = [
        f"{r.label}: observed {r.observed.gap} formula {r.gap_formula}"
        for r in records
        if r.gap_formula is not None and r.gap_formula != r.observed.gap
    ]
    return {
        "checked": len(records),
        "min_gap": min((r.observed.gap for r in records), default=0),
        "negative_gaps": negative,
        "borderenergetic": border,
        "gap_formula_mismatches": formula_mismatch,
    }


# ---------------------------------------------------------------------------
# suite runner

DEFAULT_SUITE = {
    "suites": [
        {"family": "dihedral", "ranges": {"n": [3, 200]}, "cap": 4000},
        {"family": "dicyclic", "ranges": {"n": [2, 100]}, "cap": 4000},
        {"family": "semidihedral", "ranges": {"n": [2, 50]}, "cap": 4000},
        {"family": "unm", "ranges": {"n": [2, 10], "m": [3, 10]}, "cap": 4000},
        {"family": "u6n", "ranges": {"n": [2, 33]}, "cap": 4000},
        {"family": "v8n", "ranges": {"n": [2, 50]}, "cap": 4000},
        {"family": "gpmn", "cap": 4000},
        {"witnesses": True},
        {"theorem": "quotient-pp", "ranges": {"p": [2, 7], "z": [1, 20]}},
        {"theorem": "quotient-d2n", "ranges": {"n": [3, 12], "z": [1, 8]}},
        {"theorem": "pgroup-center-pn2", "ranges": {"p": [2, 5], "n": [3, 5]}},
        {"theorem": "pgroup-p4", "ranges": {"p": [2, 7]}},
        {"theorem": "quotient-p3", "ranges": {"p": [2, 3], "z": [1, 18]}},
        {"theorem": "pgroup-center-pn3", "ranges": {"p": [2, 3], "n": [4, 6]}},
    ]
}


@dataclass
class SuiteReport:
    config: dict
    records: list[VerificationRecord]
    skipped: list[str]
    generated_at: str

    @property
    def counts(self) -> dict:
        out = {"total": len(self.records), "skipped": len(self.skipped)}
        for r in self.records:
            out[r.verdict] = out.get(r.verdict, 0) + 1
        return out

    @property
    def all_match(self) -> bool:
        return all(r.verdict == "Match" for r in self.records)

    def to_dict(self) -> dict:
        recs = []
        for r in self.records:
            recs.append(
                {
                    "suite": r.suite,
                    "label": r.label,
                    "params": r.params,
                    "verdict": r.verdict,
                    "predicted": {
                        "shape": str(r.predicted.shape),
                        "spectrum": r.predicted.spectrum.to_json(),
                        "energy": r.predicted.energy,
                        "vertex_count": r.predicted.vertex_count,
                    },
                    "observed": {
                        "shape": str(r.observed.shape),
                        "spectrum": r.observed.spectrum.to_json(),
                        "energy": r.observed.energy,
                        "vertex_count": r.observed.vertex_count,
                        "gap": r.observed.gap,
                        "integral": r.observed.integral,
                    },
                    "gap_formula": r.gap_formula,
                    "gap_formula_match": r.gap_formula_match,
                }
            )
        return {
            "generated_at": self.generated_at,
            "config": self.config,
            "summary": {
                "counts": self.counts,
                "integrality": verify_integrality(self.records),
                "hyperenergetic": verify_hyperenergetic(self.records),
            },
            "skipped": self.skipped,
            "records": recs,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(
            [
                "suite",
                "label",
                "verdict",
                "predicted_shape",
                "observed_shape",
                "predicted_energy",
                "observed_energy",
                "gap",
                "gap_formula",
                "integral",
            ]
        )
        for r in self.records:
            w.writerow(
                [
                    r.suite,
                    r.label,
                    r.verdict,
                    str(r.predicted.shape),
                    str(r.observed.shape),
                    r.predicted.energy,
                    r.observed.energy,
                    r.observed.gap,
                    "" if r.gap_formula is None else r.gap_formula,
                    r.observed.integral,
                ]
            )
        return buf.getvalue()


def _parse_suite_entry(entry: dict) -> tuple[str, object]:
    if not isinstance(entry, dict):
        raise ConfigError(f"suite entry must be an object, got {entry!r}")
    if entry.get("witnesses"):
        return ("witnesses", None)
    ranges = {k: tuple(v) for k, v in entry.get("ranges", {}).items()}
    cap = entry.get("cap", DEFAULT_CAP)
    if "family" in entry:
        try:
            Family(entry["family"])
        except ValueError as exc:
            raise ConfigError(f"unknown family {entry['family']!r}") from exc
        return ("family", SweepConfig(family=entry["family"], ranges=ranges, cap=cap))
    if "theorem" in entry:
        tid = canonical_theorem_id(entry["theorem"])
        if tid not in _THEOREM_GRID_DEFAULTS:
            raise ConfigError(f"unknown theorem {entry['theorem']!r}")
        extra = {k: entry[k] for k in ("case",) if k in entry}
        return (
            "theorem",
            SweepConfig(theorem=tid, ranges=ranges, cap=cap, extra=extra),
        )
    raise ConfigError(f"suite entry needs 'family', 'theorem', or 'witnesses': {entry!r}")


def run_suite(config: dict | str | None = None) -> SuiteReport:
    """Run a suite config (dict, path to JSON, or None for the default)."""
    if config is None:
        config = DEFAULT_SUITE
    elif isinstance(config, str):
        try:
            with open(config, "r", encoding="utf-8") as fh:
                config = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(config, dict) or "suites" not in config:
        raise ConfigError("config must be an object with a 'suites' list")
    records: list[VerificationRecord] = []
    skipped: list[str] = []
    for entry in config["suites"]:
        kind, parsed = _parse_suite_entry(entry)
        if kind == "witnesses":
            records.extend(verify_witness_suite())
        elif kind == "family":
            recs, skips = verify_family(parsed)
            records.extend(recs)
            skipped.extend(skips)
        else:
            recs, skips = verify_theorem(parsed)
            records.extend(recs)
            skipped.extend(skips)
    return SuiteReport(
        config=config,
        records=records,
        skipped=skipped,
        generated_at=datetime.now(timezone.utc).isoformat(),
    )
