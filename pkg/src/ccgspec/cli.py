"""Command-line front end.

Subcommands: group, graph, spectrum, predict, verify, suite.  Exit status
is 0 on success with all verifications matching, 1 when any verification
record is not a Match, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CcgError
from .families import Family, PARAM_NAMES, FamilyInstance
from .formulas import canonical_theorem_id, predict
from .graphs import ccc_graph, recognize_complete_union, to_dot
from .groups import (
    build_family_group,
    center,
    conjugacy_classes,
    load_cayley_table,
    noncentral_classes,
)
from .verify import (
    DEFAULT_CAP,
    SweepConfig,
    observe_group,
    run_suite,
    verify_family,
    verify_theorem,
)

_FAMILIES = sorted(f.value for f in Family)


def _add_param_flags(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--z", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--case", choices=["A1", "A2", "B1", "B2", "B3", "B4", "B5"])


def _add_io_flags(p: argparse.ArgumentParser, formats):
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ccgspec",
        description=(
            "Commuting conjugacy class graphs of finite group families: "
            "construction, CN spectra/energies, closed-form predictions, "
            "and brute-force verification."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="order, center size, and class census")
    g.add_argument("--family", choices=_FAMILIES)
    g.add_argument("--cayley", help="load a Cayley-table file instead of a family")
    g.add_argument("--cap", type=int, default=2048, help="Cayley table size cap")
    _add_param_flags(g)
    _add_io_flags(g, ["json", "text"])

    gr = sub.add_parser("graph", help="clique-union shape of the class graph")
    gr.add_argument("--family", choices=_FAMILIES)
    gr.add_argument("--cayley")
    gr.add_argument("--cap", type=int, default=2048)
    _add_param_flags(gr)
    _add_io_flags(gr, ["json", "text", "dot"])

    sp = sub.add_parser("spectrum", help="brute-force spectrum, energy, classification")
    sp.add_argument("--family", choices=_FAMILIES)
    sp.add_argument("--cayley")
    sp.add_argument("--cap", type=int, default=2048)
    _add_param_flags(sp)
    _add_io_flags(sp, ["json", "text"])

    pr = sub.add_parser("predict", help="closed-form spectrum and energy")
    pr.add_argument("--theorem", required=True, help="theorem identifier or alias")
    _add_param_flags(pr)
    _add_io_flags(pr, ["json", "text"])

    ve = sub.add_parser("verify", help="sweep one family or theorem")
    ve.add_argument("--family", choices=_FAMILIES)
    ve.add_argument("--theorem")
    ve.add_argument("--n-range", help="A..B inclusive")
    ve.add_argument("--m-range")
    ve.add_argument("--p-range")
    ve.add_argument("--z-range")
    ve.add_argument("--case", choices=["A1", "A2", "B1", "B2", "B3", "B4", "B5"])
    ve.add_argument("--cap", type=int, default=DEFAULT_CAP)
    _add_io_flags(ve, ["text", "json", "csv"])

    su = sub.add_parser("suite", help="run a verification suite config")
    su.add_argument("--config", help="suite config JSON (default: built-in suite)")
    _add_io_flags(su, ["json", "csv", "text"])
    return ap


def _family_instance(args) -> FamilyInstance:
    fam = Family(args.family)
    params = {}
    for name in PARAM_NAMES[fam]:
        value = getattr(args, name)
        if value is None:
            raise CcgError(f"family {fam.value} requires --{name}")
        params[name] = value
    return FamilyInstance(fam, tuple(params[k] for k in PARAM_NAMES[fam]))


def _load_group(args):
    if args.cayley:
        return load_cayley_table(args.cayley, max_order=args.cap)
    if not args.family:
        raise CcgError("give either --family or --cayley")
    return build_family_group(_family_instance(args))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_group(args) -> int:
    G = _load_group(args)
    classes = conjugacy_classes(G)
    sizes = sorted(c.size for c in classes)
    info = {
        "label": G.label,
        "order": G.order,
        "center_size": int(len(center(G))),
        "num_classes": len(classes),
        "num_noncentral_classes": sum(1 for c in classes if c.size > 1),
        "class_sizes": sizes,
    }
    if args.format == "text":
        lines = [f"{k}: {v}" for k, v in info.items()]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(json.dumps(info, indent=2) + "\n", args.out)
    return 0


def _cmd_graph(args) -> int:
    G = _load_group(args)
    graph = ccc_graph(G)
    shape = recognize_complete_union(graph)
    if args.format == "dot":
        _emit(to_dot(graph), args.out)
        return 0
    info = {
        "label": G.label,
        "vertex_count": graph.vertex_count,
        "shape": str(shape),
        "parts": [[l, m] for l, m in shape.parts],
    }
    if args.format == "text":
        _emit(f"{G.label}: {shape} ({graph.vertex_count} vertices)\n", args.out)
    else:
        _emit(json.dumps(info, indent=2) + "\n", args.out)
    return 0


def _cmd_spectrum(args) -> int:
    G = _load_group(args)
    obs = observe_group(G)
    info = {
        "label": G.label,
        "vertex_count": obs.vertex_count,
        "shape": str(obs.shape),
        "spectrum": obs.spectrum.to_json(),
        "energy": obs.energy,
        "complete_graph_energy": obs.energy + obs.gap,
        "gap": obs.gap,
        "classification": (
            "Borderenergetic"
            if obs.gap == 0
            else ("Hyperenergetic" if obs.gap < 0 else "Subenergetic")
        ),
        "integral": obs.integral,
    }
    if args.format == "text":
        _emit(
            f"{G.label}: cnspec = {obs.spectrum}, energy = {obs.energy}, "
            f"gap = {obs.gap}, {info['classification']}\n",
            args.out,
        )
    else:
        _emit(json.dumps(info, indent=2) + "\n", args.out)
    return 0


def _cmd_predict(args) -> int:
    params = {
        k: getattr(args, k) for k in ("n", "m", "p", "z", "k") if getattr(args, k) is not None
    }
    if args.case:
        params["case"] = args.case
    pred = predict(args.theorem, params)
    info = {
        "theorem": pred.theorem_id,
        "params": params,
        "shape": str(pred.shape),
        "parts": [[l, m] for l, m in pred.shape.parts],
        "spectrum": pred.spectrum.to_json(),
        "energy": pred.energy,
        "vertex_count": pred.vertex_count,
        "gap": pred.gap,
    }
    if args.format == "text":
        _emit(
            f"{pred.theorem_id}: {pred.shape} -> cnspec = {pred.spectrum}, "
            f"energy = {pred.energy}\n",
            args.out,
        )
    else:
        _emit(json.dumps(info, indent=2) + "\n", args.out)
    return 0


def _parse_range(text: str | None):
    if text is None:
        return None
    try:
        lo, hi = text.split("..")
        return (int(lo), int(hi))
    except ValueError as exc:
        raise CcgError(f"bad range {text!r}, expected A..B") from exc


def _cmd_verify(args) -> int:
    if bool(args.family) == bool(args.theorem):
        raise CcgError("give exactly one of --family or --theorem")
    ranges = {}
    for key, flag in (("n", args.n_range), ("m", args.m_range), ("p", args.p_range), ("z", args.z_range)):
        r = _parse_range(flag)
        if r:
            ranges[key] = r
    extra = {"case": args.case} if args.case else {}
    if args.family:
        cfg = SweepConfig(family=args.family, ranges=ranges, cap=args.cap)
        records, skipped = verify_family(cfg)
    else:
        cfg = SweepConfig(
            theorem=canonical_theorem_id(args.theorem),
            ranges=ranges,
            cap=args.cap,
            extra=extra,
        )
        records, skipped = verify_theorem(cfg)
    ok = all(r.verdict == "Match" for r in records)
    if args.format == "json":
        payload = [
            {
                "label": r.label,
                "verdict": r.verdict,
                "predicted_energy": r.predicted.energy,
                "observed_energy": r.observed.energy,
                "predicted_shape": str(r.predicted.shape),
                "observed_shape": str(r.observed.shape),
                "gap": r.observed.gap,
                "gap_formula": r.gap_formula,
            }
            for r in records
        ]
        _emit(json.dumps({"records": payload, "skipped": skipped}, indent=2) + "\n", args.out)
    elif args.format == "csv":
        lines = ["label,verdict,predicted_energy,observed_energy,gap"]
        for r in records:
            lines.append(
                f"{r.label},{r.verdict},{r.predicted.energy},{r.observed.energy},{r.observed.gap}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = []
        for r in records:
            lines.append(
                f"{r.verdict:16s} {r.label:18s} predicted {str(r.predicted.shape):24s}"
                f" observed {str(r.observed.shape):24s} energy {r.observed.energy}"
            )
        if skipped:
            lines.append(f"skipped: {len(skipped)}")
        lines.append(f"{'ALL MATCH' if ok else 'MISMATCHES PRESENT'} ({len(records)} records)")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def _cmd_suite(args) -> int:
    report = run_suite(args.config)
    if args.format == "csv":
        _emit(report.to_csv(), args.out)
    elif args.format == "text":
        c = report.counts
        lines = [f"{k}: {v}" for k, v in sorted(c.items())]
        hyper = report.to_dict()["summary"]["hyperenergetic"]
        lines.append(f"min_gap: {hyper['min_gap']}")
        lines.append(f"borderenergetic: {hyper['borderenergetic']}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(report.to_json(), args.out)
    return 0 if report.all_match else 1


_DISPATCH = {
    "group": _cmd_group,
    "graph": _cmd_graph,
    "spectrum": _cmd_spectrum,
    "predict": _cmd_predict,
    "verify": _cmd_verify,
    "suite": _cmd_suite,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except CcgError as exc:
        print(f"ccgspec: error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"ccgspec: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
