"""Command line entry point: ``dihedral-mip <subcommand> ...``.

Exit codes: 0 success, 1 a verification ran and failed, 2 usage or guard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .base import base_lemma_checks, crossed_base, hom_rank, verify_relations
from .gf import FieldSpec
from .groups import GroupParams, family_label, make_group, parse_family, reduce_theta
from .recognition import brute_force_isomorphic, max_order_guard, parse_presentation
from .report import (
    check_guard,
    distinguish_pair,
    fingerprint,
    kernel_table,
    quotient_graph,
    quotient_table,
    render,
)
from .subgroups import centralizer, conjugacy_classes, derived_subgroup, exponent, named_subgroups

DEFAULT_KERNEL_TRIPLES = [(4, 3, 2), (4, 3, 3), (4, 2, 3)]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _add_params(p: argparse.ArgumentParser, *, family: bool = True, required: bool = True) -> None:
    if family:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--family", help="D1..D6 or 1..6")
        g.add_argument("--theta", help="r,s,t")
    p.add_argument("--n", type=int, required=required)
    p.add_argument("--m", type=int, required=required)
    p.add_argument("--l", type=int, required=required)


def _add_common(p: argparse.ArgumentParser, fmt: str = "json", choices=("md", "csv", "json")) -> None:
    p.add_argument("--field-deg", type=int, default=1, help="k for GF(2^k), default 1")
    p.add_argument("--format", default=fmt, choices=choices)
    p.add_argument("--output", help="write the document here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dihedral-mip", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("group", help="element counts and subgroup landmarks")
    _add_params(p)
    _add_common(p)
    p = sub.add_parser("invariants", help="invariant fingerprint")
    _add_params(p)
    _add_common(p)
    p = sub.add_parser("verify-counterexample", help="crossed base, rank and group non-isomorphism")
    _add_params(p, family=False)
    _add_common(p, choices=("json",))
    p = sub.add_parser("kernel-table", help="kernel sizes of the power map")
    _add_params(p, family=False, required=False)
    _add_common(p, fmt="md")
    p = sub.add_parser("quotients", help="maximal quotient table at one triple")
    _add_params(p, family=False)
    _add_common(p, fmt="md")
    p = sub.add_parser("quotient-graph", help="maximal quotient graph in DOT")
    p.add_argument("--max-order", type=int, default=128)
    _add_common(p, fmt="dot", choices=("dot",))
    p = sub.add_parser("classify-pair", help="verdict for a pair of groups")
    p.add_argument("--a", required=True, help="family,n,m,l")
    p.add_argument("--b", required=True, help="family,n,m,l")
    _add_common(p)
    p = sub.add_parser("brute-iso", help="isomorphism test by generator search")
    p.add_argument("--a", required=True, help="family,n,m,l")
    p.add_argument("--b", required=True, help="family,n,m,l or d16/sd16/q16")
    _add_common(p, choices=("json",))
    p = sub.add_parser("base-lemmas", help="congruence checks on the crossed base")
    _add_params(p, family=False)
    p.add_argument("--perturbations", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p, choices=("json",))
    return parser


def _field(args) -> FieldSpec:
    try:
        return FieldSpec(args.field_deg)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"unsupported field degree {args.field_deg}") from exc


def _params(args) -> GroupParams:
    n, m, l = args.n, args.m, args.l
    try:
        if getattr(args, "theta", None):
            theta = tuple(int(v) for v in args.theta.split(","))
            params = GroupParams(n, m, l, theta=theta, degenerate=l < 2, strict=False)
        else:
            params = GroupParams.of(parse_family(args.family or 1), n, m, l, degenerate=l < 2, strict=False)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    check_guard(params.order)
    return params


def _parse_spec(text: str) -> GroupParams:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError(f"expected family,n,m,l but got {text!r}")
    try:
        fam, n, m, l = (int(v) for v in parts)
        return GroupParams.of(fam, n, m, l, degenerate=l < 2, strict=False)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _kv_render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(doc)
    rows = [[k, json.dumps(v, sort_keys=True)] for k, v in sorted(doc.items())]
    if fmt == "md":
        return "| key | value |\n|---|---|\n" + "".join(f"| {k} | {v} |\n" for k, v in rows)
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["key", "value"])
    w.writerows(rows)
    return buf.getvalue()


def cmd_group(args) -> tuple[str, int]:
    G = make_group(_params(args), validate=args.l >= 2)
    orders: dict[str, int] = {}
    for o in G.orders.tolist():
        orders[str(o)] = orders.get(str(o), 0) + 1
    subs = named_subgroups(G) if args.l >= 2 or G.order <= 4096 else {}
    p = G.params
    fam = p.family or reduce_theta(p.theta, p.n, p.m, p.l, degenerate=p.degenerate)[0]
    doc = {
        "group": p.label,
        "isomorphic_family": family_label(fam),
        "order": G.order,
        "element_orders": dict(sorted(orders.items(), key=lambda kv: int(kv[0]))),
        "conjugacy_classes": len(conjugacy_classes(G)),
        "subgroups": {
            name: {"order": S.order, "type": list(S.invariants) if S.invariants is not None else None}
            for name, S in subs.items()
        },
    }
    return _kv_render(doc, args.format), 0


def cmd_invariants(args) -> tuple[str, int]:
    report = fingerprint(_params(args), _field(args))
    return _kv_render(report.to_dict(), args.format), 0


def cmd_verify(args) -> tuple[str, int]:
    n, m, l = args.n, args.m, args.l
    if not (n >= m > l >= 2):
        raise UsageError("the counterexample needs n >= m > l >= 2")
    p1 = GroupParams.of(1, n, m, l, strict=False)
    p2 = GroupParams.of(2, n, m, l, strict=False)
    check_guard(p1.order)
    base = crossed_base(n, m, l, _field(args))
    relations = verify_relations(base)
    ok = all(relations.values())
    rank = hom_rank(base) if ok else None
    exps = []
    for p in (p1, p2):
        G = make_group(p)
        exps.append(exponent(G, centralizer(G, derived_subgroup(G).elements)))
    iso = brute_force_isomorphic(make_group(p1), p2) if p1.order <= max_order_guard() else None
    doc = {
        "params": [n, m, l],
        "field": str(base.field),
        "relations": relations,
        "rank": rank,
        "order": p1.order,
        "centralizer_exponents": exps,
        "groups_isomorphic": iso,
    }
    success = ok and rank == p1.order and iso is not True and exps[0] != exps[1]
    return _dump(doc), 0 if success else 1


def cmd_kernel_table(args) -> tuple[str, int]:
    given = (args.n, args.m, args.l)
    if all(v is None for v in given):
        triples = DEFAULT_KERNEL_TRIPLES
    elif any(v is None for v in given):
        raise UsageError("give all of --n --m --l or none")
    else:
        if not (args.n >= args.m >= 1 and args.l >= 2):
            raise UsageError("kernel table needs n >= m >= 1 and l >= 2")
        triples = [given]
    return render(kernel_table(triples, _field(args)), args.format), 0


def cmd_quotients(args) -> tuple[str, int]:
    if not (args.n >= 2 and args.n >= args.m >= 1 and args.l >= 2):
        raise UsageError("quotient table needs n >= 2, n >= m >= 1, l >= 2")
    return render(quotient_table((args.n, args.m, args.l)), args.format), 0


def cmd_quotient_graph(args) -> tuple[str, int]:
    return quotient_graph(args.max_order), 0


def cmd_classify(args) -> tuple[str, int]:
    pa, pb = _parse_spec(args.a), _parse_spec(args.b)
    if pa.triple != pb.triple:
        raise UsageError("both groups must share n, m, l")
    if pa.l < 2:
        raise UsageError("classification needs l >= 2")
    check_guard(pa.order)
    verdict = distinguish_pair(pa, pb, _field(args))
    return _kv_render(verdict.to_dict(), args.format), 0


def cmd_brute_iso(args) -> tuple[str, int]:
    pa = _parse_spec(args.a)
    check_guard(pa.order)
    try:
        pres = parse_presentation(args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if pres.order != pa.order:
        raise UsageError(f"orders differ: {pa.order} vs {pres.order}")
    iso = brute_force_isomorphic(make_group(pa, validate=pa.l >= 2), pres)
    return _dump({"a": pa.label, "b": pres.name, "isomorphic": iso}), 0


def cmd_base_lemmas(args) -> tuple[str, int]:
    n, m, l = args.n, args.m, args.l
    if not (n >= m >= 2 and l >= 2):
        raise UsageError("base checks need n >= m >= 2 and l >= 2")
    check_guard(1 << (n + m + l))
    base = crossed_base(n, m, l, _field(args))
    report = base_lemma_checks(base, perturbations=args.perturbations, seed=args.seed)
    prof = report.profile
    doc = {
        "params": [n, m, l],
        "field": str(base.field),
        "checks": report.checks,
        "profile": {
            "A": [prof.A.alpha, prof.A.beta, prof.A.gamma, prof.A.delta, prof.A.xi, prof.A.eta],
            "B": [prof.B.alpha, prof.B.beta, prof.B.gamma, prof.B.delta, prof.B.xi, prof.B.eta],
            "lambda": prof.lam,
            "mu": prof.mu,
            "nu": prof.nu,
        },
        "perturbations": report.perturbations,
    }
    return _dump(doc), 0 if report.passed else 1


COMMANDS = {
    "group": cmd_group,
    "invariants": cmd_invariants,
    "verify-counterexample": cmd_verify,
    "kernel-table": cmd_kernel_table,
    "quotients": cmd_quotients,
    "quotient-graph": cmd_quotient_graph,
    "classify-pair": cmd_classify,
    "brute-iso": cmd_brute_iso,
    "base-lemmas": cmd_base_lemmas,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"dihedral-mip: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # guard and parameter violations surface as ValueError
        print(f"dihedral-mip: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
