"""Command-line surface: parses input documents, runs the computations,
and emits deterministic human-readable or JSON reports.

Exit codes: 0 success, 2 parse error, 3 resource-limit abort, 4 semantic
precondition failure (empty set, point off the set, non-smooth point, ...).
Errors are also echoed in the report diagnostics.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from holoclosure.arith import gq_to_text
from holoclosure.closure import (
    gabrielov_r1,
    hc_dimension_parametrized,
    holomorphic_closure,
    pullback_kernel,
)
from holoclosure.complexify import System, real_dimension
from holoclosure.crgeom import cr_dimension_at, cr_strata_ideal, verify_d_minus_m
from holoclosure.errors import (
    EmptySetError,
    NonSmoothPointError,
    PointNotOnSetError,
    ResourceLimitError,
    SamplingError,
)
from holoclosure.groebner import (
    DEFAULT_CONFIG,
    GroebnerConfig,
    Ideal,
    buchberger,
    eliminate as eliminate_ideal,
)
from holoclosure.jets import jet_from_symbolic, osgood_probe, relation_probe
from holoclosure.poly import Block, GREVLEX, LEX, polynomial_to_text
from holoclosure.syntax import (
    KIND_JETS,
    KIND_MAP,
    KIND_PARAMETRIZATION,
    InputDocument,
    ParseError,
    parse,
    parse_point,
)

EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_SEMANTIC = 4

GERM_NOTE = (
    "ideal-level (Zariski-global) semantics: at points of the exceptional set, "
    "supply generators of the local germ"
)


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    def to_payload(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "diagnostics": self.diagnostics,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for key, value in self.inputs.items():
            lines.append(f"input {key}: {_render(value)}")
        for key, value in self.results.items():
            if isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"{key}:")
                for row in value:
                    lines.append("  " + ", ".join(f"{k}={_render(v)}" for k, v in row.items()))
            else:
                lines.append(f"{key}: {_render(value)}")
        for note in self.diagnostics:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"


def _render(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "(" + (", ".join(_render(v) for v in value) if value else "0") + ")"
    return str(value)


def _ideal_strings(ideal: Ideal) -> list:
    return [polynomial_to_text(g) for g in ideal.generators]


def _point_strings(point) -> list:
    return [gq_to_text(c) for c in point]


def _dimension_value(d):
    return "empty" if d is None else d


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _echo_inputs(doc: InputDocument) -> dict:
    return {
        "kind": doc.kind,
        "variables": list(doc.declared),
        "statements": [f"{kw} {polynomial_to_text(p)}" for kw, p in doc.statements],
    }


def _require_system(doc: InputDocument) -> System:
    return System.from_document(doc)


def _require_kind(doc: InputDocument, kind: str):
    if doc.kind != kind:
        raise ValueError(f"this command needs a {kind} document, got {doc.kind}")


def _config_from_args(args) -> GroebnerConfig:
    max_pairs = args.max_pairs if args.max_pairs is not None else DEFAULT_CONFIG.max_pairs
    max_degree = args.max_degree if args.max_degree is not None else DEFAULT_CONFIG.max_degree
    return GroebnerConfig(max_pairs=max_pairs, max_degree=max_degree)


def _parse_jet_orders(text: str) -> list:
    try:
        orders = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"--jets expects a comma-separated integer list, got {text!r}")
    if not orders:
        raise ValueError("--jets list is empty")
    return orders


def _probe_table(results) -> list:
    table = []
    for res in results:
        table.append({
            "jet_order": res.jet_order,
            "min_relation_degree": res.min_relation_degree,
            "witness": polynomial_to_text(res.witness) if res.witness is not None else None,
        })
    return table


def _cmd_hcdim(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    system = _require_system(doc)
    hc = holomorphic_closure(system, config)
    report.results = {
        "real_dimension": hc.real_dimension,
        "hc_dimension": hc.hc_dimension,
        "hc_ideal": _ideal_strings(hc.hc_ideal),
    }
    report.diagnostics.append(GERM_NOTE)


def _cmd_realdim(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    system = _require_system(doc)
    d = real_dimension(system, config)
    report.results = {"real_dimension": _dimension_value(d)}
    if d is None:
        report.diagnostics.append("the equations define the empty set")


def _cmd_param_hcdim(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    _require_kind(doc, KIND_PARAMETRIZATION)
    hc = hc_dimension_parametrized(doc.map_components, config)
    report.results = {
        "real_dimension": hc.real_dimension,
        "hc_dimension": hc.hc_dimension,
        "hc_ideal": _ideal_strings(hc.hc_ideal),
    }


def _cmd_ranks(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    _require_kind(doc, KIND_MAP)
    source = None
    if doc.equations:
        source = Ideal.from_polys(doc.context, doc.equations)
    ranks = gabrielov_r1(doc.map_components, source, seed=args.seed, config=config)
    kernel = pullback_kernel(doc.map_components, source, config)
    report.results = {
        "r1": ranks.r1,
        "r3": ranks.r3,
        "lambda": ranks.lam,
        "regular": ranks.regular,
        "fibre_witness": _point_strings(ranks.fibre_witness),
        "kernel": _ideal_strings(kernel),
    }


def _cmd_crdim(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    system = _require_system(doc)
    point = parse_point(args.point, system.n)
    cr = cr_dimension_at(system, point, config)
    report.results = {
        "d": cr.d,
        "m": cr.m,
        "smooth": cr.smooth,
        "rank_df": cr.rank_df,
        "rank_stacked": cr.rank_stacked,
    }


def _cmd_strata(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    system = _require_system(doc)
    ideal = cr_strata_ideal(system, args.k, config)
    report.results = {
        "k": args.k,
        "variables": list(ideal.context.names),
        "generators": _ideal_strings(ideal),
    }


def _cmd_verify_dm(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    system = _require_system(doc)
    points = [parse_point(p, system.n) for p in args.point]
    dm = verify_d_minus_m(system, points, config)
    entries = []
    for e in dm.entries:
        entries.append({
            "point": _point_strings(e.point),
            "m": e.m,
            "agrees": e.agrees,
            "error": e.error,
        })
    report.results = {
        "hc_dimension": dm.h,
        "real_dimension": dm.d,
        "entries": entries,
        "all_agree": dm.all_agree,
    }
    if not dm.all_agree:
        report.diagnostics.append(
            "disagreement indicates an exceptional point or germ/global divergence"
        )


def _cmd_groebner(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    system = _require_system(doc)
    order = LEX if args.order == "lex" else GREVLEX
    gb = buchberger(system.ideal(), order, config)
    report.results = {
        "order": args.order,
        "variables": list(system.context.names),
        "basis": [polynomial_to_text(g, order) for g in gb.basis],
    }


def _cmd_eliminate(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    if doc.kind == KIND_MAP:
        source = Ideal.from_polys(doc.context, doc.equations) if doc.equations else None
        result = pullback_kernel(doc.map_components, source, config)
        block = "param"
    else:
        system = _require_system(doc)
        if system.form != "zeta":
            raise ValueError("eliminate works on zeta-form systems or maps")
        result = eliminate_ideal(system.ideal(), Block.ZETABAR, config)
        block = "zetabar"
    report.results = {
        "block": block,
        "variables": list(result.context.names),
        "generators": _ideal_strings(result),
    }


def _cmd_probe_osgood(args, config, report):
    orders = _parse_jet_orders(args.jets)
    report.inputs = {"jet_orders": orders, "max_degree": args.maxdeg}
    results = osgood_probe(orders, args.maxdeg)
    report.results = {"table": _probe_table(results)}
    report.diagnostics.append("non-regularity evidence only: truncation cannot prove ker = 0")


def _cmd_probe(args, config, report):
    doc = parse(_read_input(args.input))
    report.inputs = _echo_inputs(doc)
    _require_kind(doc, KIND_JETS)
    orders = _parse_jet_orders(args.jets)
    table = []
    for order in orders:
        components = [jet_from_symbolic(f, order) for f in doc.jet_components]
        table.extend(_probe_table([relation_probe(components, order, args.maxdeg)]))
    report.results = {"table": table}
    report.diagnostics.append("non-regularity evidence only: truncation cannot prove ker = 0")


_HANDLERS = {
    "hcdim": _cmd_hcdim,
    "realdim": _cmd_realdim,
    "param-hcdim": _cmd_param_hcdim,
    "ranks": _cmd_ranks,
    "crdim": _cmd_crdim,
    "strata": _cmd_strata,
    "verify-dm": _cmd_verify_dm,
    "groebner": _cmd_groebner,
    "eliminate": _cmd_eliminate,
    "probe-osgood": _cmd_probe_osgood,
    "probe": _cmd_probe,
}


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holoclosure",
        description="holomorphic closure dimension, CR strata, and Gabrielov ranks "
                    "for real algebraic subsets of C^n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", help="input file path, or - for stdin")
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.add_argument("--seed", type=int, default=0, help="seed for random sampling")
        sp.add_argument("--max-pairs", type=int, default=None,
                        help="override the Groebner S-pair budget")
        sp.add_argument("--max-degree", type=int, default=None,
                        help="override the Groebner degree budget")

    common(sub.add_parser("hcdim", help="holomorphic closure dimension of a system"))
    common(sub.add_parser("realdim", help="real dimension of a system"))
    common(sub.add_parser("param-hcdim", help="closure dimension of a parametrized image"))
    common(sub.add_parser("ranks", help="Gabrielov ranks r1, r3 of a polynomial map"))

    crdim = sub.add_parser("crdim", help="CR dimension at a point")
    common(crdim)
    crdim.add_argument("--point", required=True, help='point as "a/b+c/d*i, ..."')

    strata = sub.add_parser("strata", help="ideal of the CR stratum {m >= k}")
    common(strata)
    strata.add_argument("--k", required=True, type=int)

    verify = sub.add_parser("verify-dm", help="check h = d - m at sampled points")
    common(verify)
    verify.add_argument("--point", required=True, action="append",
                        help="repeatable; one point per flag")

    groebner = sub.add_parser("groebner", help="reduced Groebner basis of a system's ideal")
    common(groebner)
    groebner.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")

    common(sub.add_parser("eliminate",
                          help="elimination ideal (zetabar block, or map source block)"))

    osgood = sub.add_parser("probe-osgood", help="relation probe on the Osgood map")
    common(osgood, with_input=False)
    osgood.add_argument("--jets", required=True, help="comma-separated truncation orders")
    osgood.add_argument("--maxdeg", required=True, type=int)

    probe = sub.add_parser("probe", help="relation probe on user jet components")
    common(probe)
    probe.add_argument("--jets", required=True, help="comma-separated truncation orders")
    probe.add_argument("--maxdeg", required=True, type=int)

    return parser


def run(argv, stdout=None) -> int:
    """Execute one command; writes the report and returns the exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    args = build_arg_parser().parse_args(argv)
    config = _config_from_args(args)
    report = Report(command=args.command)
    code = EXIT_OK
    try:
        _HANDLERS[args.command](args, config, report)
    except ParseError as exc:
        report.diagnostics.append(f"parse error: {exc}")
        code = EXIT_PARSE_ERROR
    except ResourceLimitError as exc:
        report.diagnostics.append(f"resource limit: {exc}")
        code = EXIT_RESOURCE_LIMIT
    except (EmptySetError, PointNotOnSetError, NonSmoothPointError,
            SamplingError, ValueError) as exc:
        report.diagnostics.append(f"error: {exc}")
        code = EXIT_SEMANTIC
    stdout.write(report.to_json() if args.json else report.to_text())
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
