"""Command-line entry point: one JSON document on stdout, a short human summary on stderr."""

from __future__ import annotations

import argparse
import json
import os
import shlex
import sys
from typing import Sequence

from .bounds import RandomSpec, audit_corpus, bound_report, edge_case_probes
from .constructions import (
    ConstructionError,
    FpqCertificates,
    fpq_certificates,
    fpq_oitrdf_repaired,
    oitrdf_circulant,
    oitrdf_closed_family,
    oitrdf_product_kk,
    oitrdf_sierpinski,
)
from .generators import generate
from .graph import DomainError, InputError
from .io import family_from_args, graph_json, read_graph, write_edge_list
from .labeling import Variant, make_labeling, validate
from .solvers import PARAMETERS, full_record

EXIT_OK, EXIT_INPUT, EXIT_VIOLATIONS, EXIT_TIMEOUT = 0, 1, 2, 3

_PARAM_ALIASES = {
    "alpha": "alpha", "beta": "beta", "gamma": "gamma", "gamma_t": "gamma_t", "t": "gamma_t",
    "gamma_toi": "gamma_toi", "toi": "gamma_toi", "R": "gamma_R", "tR": "gamma_tR",
    "oiR": "gamma_oiR", "oitR": "gamma_oitR",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise InputError(message)


class Result:
    def __init__(self, code: int, document: dict, summary: str = ""):
        self.code, self.document, self.summary = code, document, summary


def parse_params(text: str) -> list[str]:
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if item == "all":
            out.extend(PARAMETERS)
            continue
        key = item if item in PARAMETERS else _PARAM_ALIASES.get(item.removeprefix("gamma_"), _PARAM_ALIASES.get(item))
        if key is None:
            raise InputError(f"unknown parameter {item!r}; expected names from {', '.join(PARAMETERS)}")
        out.append(key)
    return list(dict.fromkeys(out))


def _budget(flag_ms: int | None) -> float | None:
    if flag_ms is not None:
        return flag_ms / 1000
    env = os.environ.get("OITRD_TIMEOUT_MS")
    if env:
        try:
            return int(env) / 1000
        except ValueError:
            raise InputError(f"OITRD_TIMEOUT_MS must be an integer, got {env!r}") from None
    return None


def _load(args) -> tuple:
    if args.family:
        spec = family_from_args(args.family[0], args.family[1:])
        lg = generate(spec)
        return lg.graph, lg
    if not args.graph:
        raise InputError("give a graph file or --family KIND PARAMS...")
    return read_graph(args.graph), None


def cmd_generate(args) -> Result:
    lg = generate(family_from_args(args.kind, args.params))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(write_edge_list(lg.graph, comment=str(lg.family)))
    doc = {"graph": graph_json(lg.graph, lg)}
    if args.output:
        doc["written"] = args.output
    return Result(EXIT_OK, doc, f"{lg.family}: {lg.graph.n} vertices, {lg.graph.m} edges")


def cmd_solve(args) -> Result:
    G, lg = _load(args)
    which = parse_params(args.params)
    record = full_record(G, which, _budget(args.timeout_ms))
    report = bound_report(G, record, family=lg.family if lg else None)
    doc = {
        "graph": graph_json(G, lg),
        "parameters": record.to_json(),
        "labelings": {k: f.digits() for k, f in record.labelings.items()},
        "timeouts": sorted(record.timeouts),
        "bounds": [b.to_json() for b in report.instances if b.applicable],
        "probes": {},
    }
    summary = ", ".join(f"{k}={v}" for k, v in record.values.items())
    if record.timeouts:
        return Result(EXIT_TIMEOUT, doc, f"{summary}; timed out: {', '.join(sorted(record.timeouts))}")
    return Result(EXIT_OK, doc, summary)


def _fpq_doc(bundle: FpqCertificates) -> dict:
    return {name: o.to_json() for name, o in bundle.items()}


def cmd_construct(args) -> Result:
    spec = family_from_args(args.kind, args.params)
    k = spec.kind.removesuffix("_kk")
    p = spec.params
    try:
        if k in ("complete", "complete_bipartite", "wheel"):
            out = oitrdf_closed_family(k, *p)
        elif k == "circulant":
            out = oitrdf_circulant(*p)
        elif k == "sierpinski":
            out = oitrdf_sierpinski(*p)
        elif k in ("cartesian", "direct", "strong", "lexicographic"):
            out = oitrdf_product_kk(k, *p)
        elif k == "fpq":
            if args.repaired:
                out = fpq_oitrdf_repaired(*p)
            else:
                bundle = fpq_certificates(*p)
                doc = {"graph": graph_json(bundle.graph.graph, bundle.graph), "certificates": _fpq_doc(bundle)}
                return Result(EXIT_OK, doc, "all five certificates validate")
        else:
            raise InputError(f"no certificate builder for family {spec.kind!r}")
    except ConstructionError as exc:
        doc: dict = {"error": str(exc)}
        if isinstance(exc.outcome, FpqCertificates):
            doc["graph"] = graph_json(exc.outcome.graph.graph, exc.outcome.graph)
            doc["certificates"] = _fpq_doc(exc.outcome)
        elif exc.outcome is not None:
            doc.update(exc.outcome.to_json())
        return Result(EXIT_INPUT, doc, f"construction rejected by its checker: {exc}")
    doc = {"graph": graph_json(out.graph.graph, out.graph), **out.to_json()}
    return Result(EXIT_OK, doc, f"weight {out.weight} (claimed {out.claimed_weight}), valid")


def cmd_verify(args) -> Result:
    G, _ = _load(args)
    f = make_labeling(G, args.labeling)
    res = validate(G, f, Variant.parse(args.variant))
    doc = {**res.to_json(), "weight": f.weight}
    if res.valid:
        return Result(EXIT_OK, doc, f"valid {res.variant.value}, weight {f.weight}")
    return Result(EXIT_INPUT, doc, f"invalid {res.variant.value}: {res.violation}")


def cmd_audit(args) -> Result:
    corpus: list = [family_from_args(f[0], f[1:]) for f in args.family or []]
    if args.random or not corpus:
        corpus.append(RandomSpec(args.count, args.max_n, args.edge_prob, args.seed))
    summary = audit_corpus(corpus, _budget(args.timeout_ms))
    doc = summary.to_json()
    text = (
        f"{doc['graphs']} graphs, {doc['instances_checked']} instances, {doc['tight']} tight, "
        f"{len(doc['violations'])} violations, {len(doc['skipped'])} skipped"
    )
    if summary.violations:
        return Result(EXIT_VIOLATIONS, doc, text)
    if summary.skipped:
        return Result(EXIT_TIMEOUT, doc, text)
    return Result(EXIT_OK, doc, text)


def cmd_probe(args) -> Result:
    return Result(EXIT_OK, {"probes": edge_case_probes(_budget(args.timeout_ms))}, "probes done")


def cmd_batch(args) -> Result:
    try:
        with open(args.manifest, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {args.manifest}: {exc.strerror}") from None
    entries, worst = [], EXIT_OK
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        argv = shlex.split(line)
        if argv and argv[0] == "batch":
            raise InputError("batch manifests cannot nest batch")
        res = run(argv)
        entries.append({"argv": argv, "exit": res.code, "output": res.document})
        worst = max(worst, res.code)
    return Result(worst, {"entries": entries}, f"{len(entries)} entries, worst exit {worst}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oitrd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="build a family member")
    g.add_argument("kind")
    g.add_argument("params", nargs="*")
    g.add_argument("-o", "--output", help="also write the edge list here")
    g.set_defaults(func=cmd_generate)

    def graph_source(p):
        p.add_argument("graph", nargs="?", help="edge-list file")
        p.add_argument("--family", nargs="+", metavar="ARG", help="family kind followed by its parameters")

    s = sub.add_parser("solve", help="exact parameter values with certificates")
    graph_source(s)
    s.add_argument("--params", default="all", help="comma list, e.g. oitR,alpha or all")
    s.add_argument("--timeout-ms", type=int)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("construct", help="build and check a family certificate")
    c.add_argument("kind")
    c.add_argument("params", nargs="*")
    c.add_argument("--repaired", action="store_true", help="fpq only: the corrected OITRDF")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a labeling")
    graph_source(v)
    v.add_argument("--labeling", required=True)
    v.add_argument("--variant", default="oitrdf")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("audit", help="check every bound on a corpus")
    a.add_argument("--family", nargs="+", action="append", metavar="ARG")
    a.add_argument("--random", action="store_true")
    a.add_argument("--count", type=int, default=50)
    a.add_argument("--max-n", type=int, default=8)
    a.add_argument("--edge-prob", type=float)
    a.add_argument("--seed", type=int, default=1)
    a.add_argument("--timeout-ms", type=int)
    a.set_defaults(func=cmd_audit)

    pr = sub.add_parser("probe", help="exact values at the doubtful product points")
    pr.add_argument("--timeout-ms", type=int)
    pr.set_defaults(func=cmd_probe)

    b = sub.add_parser("batch", help="run one command per manifest line")
    b.add_argument("manifest")
    b.set_defaults(func=cmd_batch)
    return parser


def run(argv: Sequence[str]) -> Result:
    try:
        args = build_parser().parse_args(list(argv))
        return args.func(args)
    except (InputError, DomainError) as exc:
        return Result(EXIT_INPUT, {"error": str(exc)}, f"error: {exc}")


def main(argv: Sequence[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    json.dump(res.document, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")
    if res.summary:
        print(res.summary, file=sys.stderr)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
