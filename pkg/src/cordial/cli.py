"""Command line front end.

Four subcommands: compute (values for one graph, by formula, by exhaustive
search, or both with a match verdict), construct (emit a certificate),
verify (check a certificate file), table (cross-validate families over a
size range). Exit codes: 0 success, 1 semantic failure such as a rejected
certificate or a formula/search mismatch, 2 usage or structural errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import families as fam
from .certify import (
    Certificate,
    check_certificate,
    cross_validate,
    parse_certificate,
    serialize_certificate,
)
from .errors import CordialError, MalformedCertificate
from .graph_core import FAMILIES, MIN_SIZE, FamilySpec, MultiGraph, parse_edge_list
from .oracle import (
    DEFAULT_MAX_VERTICES,
    DeficiencyValue,
    ced_oracle,
    cvd_oracle,
    decide_cordial,
)

MEASURES = ("cordial", "ced", "cvd")


@dataclass(frozen=True)
class ComputeConfig:
    measures: tuple[str, ...]
    method: str
    workers: int
    max_vertices: int
    fmt: str


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cordial",
        description="Exact cordiality and deficiency computations with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="values for one graph")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int, help="family size parameter")
    p.add_argument("--graph", metavar="PATH", help="edge list file instead of a family")
    p.add_argument("--measure", choices=MEASURES + ("all",), default="all")
    p.add_argument("--method", choices=("oracle", "formula", "both"), default="both")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("construct", help="emit a certificate for a family member")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", choices=MEASURES, required=True)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("certificate", metavar="PATH")

    p = sub.add_parser("table", help="cross-validate families over a size range")
    p.add_argument(
        "--families",
        default="complete,cycle,mobius,wheel",
        help="comma-separated family names",
    )
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    return parser


def _formula_value(family: str, size: int, measure: str):
    """Closed-form value, or None when the family has no formula for it."""
    if family == "complete":
        if measure == "cordial":
            return fam.is_cordial_complete(size)
        if measure == "ced":
            return fam.ced_complete(size) if size >= 2 else None
        return fam.cvd_complete(size)
    if family == "cycle":
        return fam.is_cordial_cycle(size) if measure == "cordial" else None
    if family == "mobius":
        cordial = fam.is_cordial_mobius(size)
        if measure == "cordial":
            return cordial
        return DeficiencyValue.finite(0 if cordial else 1)
    if family == "wheel":
        cordial = fam.is_cordial_wheel(size)
        if measure == "cordial":
            return cordial
        return DeficiencyValue.finite(0 if cordial else 1)
    return None


def _render(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, DeficiencyValue):
        return value.describe()
    return str(value)


def _json_value(value):
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, DeficiencyValue):
        return "infinity" if value.is_infinite else value.value
    return value


def _cmd_compute(args) -> int:
    cfg = ComputeConfig(
        measures=MEASURES if args.measure == "all" else (args.measure,),
        method=args.method,
        workers=args.workers,
        max_vertices=args.max_vertices,
        fmt=args.format,
    )
    family = None
    if args.graph is not None:
        if args.family is not None or args.n is not None:
            print("error: --graph excludes --family/--n", file=sys.stderr)
            return 2
        if cfg.method != "oracle":
            print(
                "error: closed forms need a named family; use --method oracle",
                file=sys.stderr,
            )
            return 2
        g = parse_edge_list(Path(args.graph).read_text())
        ident = f"graph from {args.graph}"
    else:
        if args.family is None or args.n is None:
            print("error: need --family with --n, or --graph", file=sys.stderr)
            return 2
        family = args.family
        g = FamilySpec(family, args.n).build()
        ident = f"{family} n={args.n}"

    results: dict[str, dict] = {}
    for meas in cfg.measures:
        entry: dict = {"formula": None, "oracle": None, "witness": None,
                       "match": None, "notes": []}
        if family is not None and cfg.method in ("formula", "both"):
            entry["formula"] = _formula_value(family, args.n, meas)
            if family == "complete" and meas == "cvd" and entry["formula"] is not None:
                literal = fam.cvd_complete_literal(args.n)
                if literal != entry["formula"]:
                    entry["notes"].append(
                        f"square-rule form gives {literal.render()};"
                        f" operational minimum is {entry['formula'].render()}"
                    )
        if cfg.method in ("oracle", "both"):
            if meas == "cordial":
                ok, witness = decide_cordial(
                    g, max_vertices=cfg.max_vertices, workers=cfg.workers
                )
                entry["oracle"] = ok
                entry["witness"] = witness.to_string() if witness else None
            elif meas == "ced":
                entry["oracle"] = ced_oracle(
                    g, max_vertices=cfg.max_vertices, workers=cfg.workers
                ).value
            else:
                entry["oracle"] = cvd_oracle(
                    g, max_vertices=cfg.max_vertices, workers=cfg.workers
                ).value
        if entry["formula"] is not None and entry["oracle"] is not None:
            entry["match"] = entry["formula"] == entry["oracle"]
        results[meas] = entry

    if cfg.method == "formula" and all(
        results[m]["formula"] is None for m in cfg.measures
    ):
        print(f"error: no closed form for {ident}", file=sys.stderr)
        return 2

    exit_code = 0
    if any(results[m]["match"] is False for m in cfg.measures):
        exit_code = 1

    if cfg.fmt == "json":
        payload = {
            "graph": ident,
            "n": g.n,
            "m": g.m,
            "method": cfg.method,
            "results": {},
        }
        for meas in cfg.measures:
            e = results[meas]
            out = {
                "formula": _json_value(e["formula"]),
                "oracle": _json_value(e["oracle"]),
                "match": e["match"],
            }
            if e["witness"] is not None:
                out["witness"] = e["witness"]
            if e["notes"]:
                out["notes"] = e["notes"]
            payload["results"][meas] = out
        print(json.dumps(payload, indent=2))
        return exit_code

    print(f"{ident}: {g.n} vertices, {g.m} edges")
    for meas in cfg.measures:
        e = results[meas]
        if cfg.method in ("formula", "both") and family is not None:
            rendered = "unavailable" if e["formula"] is None else _render(e["formula"])
            print(f"{meas} formula = {rendered}")
        if e["oracle"] is not None:
            suffix = f" (witness {e['witness']})" if e["witness"] else ""
            print(f"{meas} oracle = {_render(e['oracle'])}{suffix}")
        if e["match"] is not None:
            if e["match"]:
                print(f"{meas} MATCH")
            else:
                print(
                    f"{meas} MISMATCH (formula {_render(e['formula'])},"
                    f" oracle {_render(e['oracle'])})"
                )
        for note in e["notes"]:
            print(f"note: {note}")
    return exit_code


def _construct(family: str, size: int, target: str) -> Certificate:
    if family == "complete":
        if target == "cordial":
            return fam.instance_certificate(fam.complete_cordial_labeling(size))
        if target == "ced":
            return fam.complete_ced_witness(size)
        return fam.complete_cvd_witness(size)
    if family == "cycle":
        if target == "cordial":
            return fam.instance_certificate(fam.cycle_cordial_labeling(size))
        raise CordialError(f"no {target} construction for cycles")
    if family == "mobius":
        if target == "cordial":
            return fam.instance_certificate(fam.construct_mobius_labeling(size))
        if target == "ced":
            return fam.mobius_ced_witness(size)
        return fam.mobius_cvd_witness(size)
    if family == "wheel":
        if target == "cordial":
            return fam.instance_certificate(fam.wheel_cordial_labeling(size))
        if target == "ced":
            return fam.wheel_ced_witness(size)
        return fam.wheel_cvd_witness(size)
    raise CordialError(f"no constructions for family {family!r}")


def _cmd_construct(args) -> int:
    cert = _construct(args.family, args.n, args.target)
    text = serialize_certificate(cert)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}: kind={cert.kind} claimed_value={cert.claimed_value}")
    else:
        sys.stdout.write(text)
    return 0


def _describe_graph(cert: Certificate) -> str:
    if cert.family is not None:
        return f"{cert.family} n={cert.param}"
    return f"explicit graph with {cert.n} vertices"


def _cmd_verify(args) -> int:
    text = Path(args.certificate).read_text()
    cert = parse_certificate(text)
    verdict = check_certificate(cert)
    if verdict.accepted:
        print(
            f"Accepted: {cert.kind} certificate for {_describe_graph(cert)}"
            f" (claimed_value {cert.claimed_value})"
        )
        return 0
    print(f"Rejected: {verdict.reason}")
    return 1


def _cmd_table(args) -> int:
    names = tuple(s.strip() for s in args.families.split(",") if s.strip())
    for name in names:
        if name not in FAMILIES:
            print(f"error: unknown family {name!r}", file=sys.stderr)
            return 2
    specs = []
    for name in names:
        sizes = range(MIN_SIZE[name], args.max_n + 1)
        specs.extend(FamilySpec(name, s) for s in sizes)
    if not specs:
        print("error: empty size range", file=sys.stderr)
        return 2
    report = cross_validate(
        specs, max_vertices=args.max_vertices, workers=args.workers
    )

    def cell_bool(b):
        dash = "" if args.format == "csv" else "-"
        return dash if b is None else ("yes" if b else "no")

    def cell_dv(d):
        dash = "" if args.format == "csv" else "-"
        return dash if d is None else d.render()

    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["family", "size", "cordial", "ced", "cvd", "source", "match"])
        for r in report.rows:
            writer.writerow(
                [r.family, r.size, cell_bool(r.cordial), cell_dv(r.ced),
                 cell_dv(r.cvd), r.source, cell_bool(r.match)]
            )
    elif args.format == "json":
        rows = []
        for r in report.rows:
            rows.append(
                {
                    "family": r.family,
                    "size": r.size,
                    "cordial": r.cordial,
                    "ced": _json_value(r.ced),
                    "cvd": _json_value(r.cvd),
                    "source": r.source,
                    "match": r.match,
                    "witnesses": [
                        {"kind": k, "accepted": ok} for k, ok in r.witnesses
                    ],
                    "notes": list(r.notes),
                }
            )
        print(json.dumps({"rows": rows, "all_match": report.all_match}, indent=2))
    else:
        header = f"{'family':<9} {'size':>4} {'cordial':<7} {'ced':<9} {'cvd':<9} {'source':<8} {'match':<5} notes"
        print(header)
        for r in report.rows:
            notes = "; ".join(r.notes)
            print(
                f"{r.family:<9} {r.size:>4} {cell_bool(r.cordial):<7}"
                f" {cell_dv(r.ced):<9} {cell_dv(r.cvd):<9} {r.source:<8}"
                f" {cell_bool(r.match):<5} {notes}"
            )
    return 0 if report.all_match else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_table(args)
    except MalformedCertificate as exc:
        print(f"Malformed: {exc}", file=sys.stderr)
        return 2
    except AssertionError:
        print("internal self-check failed", file=sys.stderr)
        return 1
    except CordialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
