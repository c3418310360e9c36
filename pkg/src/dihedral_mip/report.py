"""Invariant fingerprints, pairwise verdicts and table/graph documents."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .base import base_lemma_checks, crossed_base, hom_rank, verify_relations
from .gf import GF2, FieldSpec
from .groups import GroupParams, family_label, make_group
from .jennings import agemo_center_equality, phi_kernel_size
from .recognition import (
    DEFAULT_SEARCH_BOUND,
    brute_force_isomorphic,
    canonical_families,
    canonical_label,
    maximal_quotient_table,
    max_order_guard,
    quotient_triples,
)
from .subgroups import (
    abelianization_type,
    center,
    centralizer,
    coclass,
    derived_subgroup,
    elementary_abelian_rank,
    exponent,
    socle,
    squares_class_count,
)

INVARIANT_ORDER = ("center", "kulshammer", "quillen", "kernel")
INVARIANT_LETTERS = {"center": "C", "kulshammer": "K", "quillen": "Q", "kernel": "P"}


def check_guard(order: int) -> None:
    bound = max_order_guard()
    if order > bound:
        raise ValueError(f"group order {order} exceeds MIP_MAX_ORDER={bound}")


@dataclass
class InvariantReport:
    label: str
    params: tuple[int, int, int, int]  # family, n, m, l
    order: int
    coclass: int
    abelianization: tuple[int, ...]
    center: tuple[int, ...]
    socle: tuple[int, ...]
    kulshammer: int
    quillen: int
    centralizer_exponent: int
    kernel_sizes: dict[int, int]
    quotient_rows: dict[str, list[str]] | None = None

    def value(self, name: str, field_deg: int = 1):
        if name == "kernel":
            return self.kernel_sizes.get(field_deg)
        return getattr(self, name)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["params"] = list(self.params)
        out["kernel_sizes"] = {str(k): v for k, v in sorted(self.kernel_sizes.items())}
        return out


def fingerprint(params: GroupParams, field: FieldSpec = GF2, *, with_quotients: bool = True) -> InvariantReport:
    check_guard(params.order)
    G = make_group(params)
    kernels = {field.k: phi_kernel_size(G, field)} if params.l >= 2 else {}
    rows = None
    if with_quotients and params.n >= 2 and params.order // 2 <= DEFAULT_SEARCH_BOUND:
        rows = _quotient_cells(maximal_quotient_table(G).rows)
    D = derived_subgroup(G)
    return InvariantReport(
        label=params.label,
        params=(params.family, *params.triple),
        order=G.order,
        coclass=coclass(G),
        abelianization=abelianization_type(G),
        center=center(G).invariants,
        socle=socle(G).invariants,
        kulshammer=squares_class_count(G),
        quillen=elementary_abelian_rank(G),
        centralizer_exponent=exponent(G, centralizer(G, D.elements)),
        kernel_sizes=kernels,
        quotient_rows=rows,
    )


@lru_cache(maxsize=256)
def _pair_fingerprint(params: GroupParams, field: FieldSpec) -> InvariantReport:
    return fingerprint(params, field, with_quotients=False)


def _quotient_cells(rows: dict) -> dict[str, list[str]]:
    out = {}
    for (n, m, l), fams in rows.items():
        labels = sorted({canonical_label(f, n, m) for f in fams})
        out[f"({n},{m},{l})"] = [family_label(f) for f in labels]
    return out


@dataclass
class Verdict:
    pair: tuple[str, str]
    outcome: str  # distinguished | isomorphic-algebras-verified | cited-distinct | undecided
    invariant: str | None = None
    values: tuple | None = None
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "outcome": self.outcome,
            "invariant": self.invariant,
            "values": list(self.values) if self.values is not None else None,
            "evidence": self.evidence,
        }


def _claim_for(fams: tuple[int, int], n: int, m: int, l: int) -> str | None:
    if fams == (3, 4) and n > m > l:
        return "F D3 and F D4 are not isomorphic when n > m > l"
    if fams == (5, 6):
        if n > m > l:
            return "F D5 and F D6 are not isomorphic when m > l"
        if n == m >= 2:
            if m > l:
                return "F D5 and F D6 are not isomorphic when m > l"
            if m == l:
                return "F D5 and F D6 are not isomorphic when n = m = l"
            return "F D5 and F D6 are not isomorphic when n = m < l"
    return None


def distinguish_pair(pa: GroupParams, pb: GroupParams, field: FieldSpec = GF2) -> Verdict:
    if pa.triple != pb.triple:
        raise ValueError("pair must share (n, m, l)")
    check_guard(pa.order)
    n, m, l = pa.triple
    pair = (pa.label, pb.label)
    fa, fb = _pair_fingerprint(pa, field), _pair_fingerprint(pb, field)
    for name in INVARIANT_ORDER:
        if name == "kernel" and n == m:
            # the zero set of the power map is not a subspace when n = m; not used
            continue
        va, vb = fa.value(name, field.k), fb.value(name, field.k)
        if va is not None and vb is not None and va != vb:
            return Verdict(pair, "distinguished", name, (va, vb))

    fams = tuple(sorted((pa.family, pb.family)))
    if fams == (1, 2) and n > m > l >= 2:
        base = crossed_base(n, m, l, field)
        relations = verify_relations(base)
        evidence: dict = {"relations": relations}
        if all(relations.values()):
            rank = hom_rank(base)
            evidence["rank"] = rank
            evidence["centralizer_exponents"] = [fa.centralizer_exponent, fb.centralizer_exponent]
            if pa.order <= max_order_guard():
                evidence["groups_isomorphic"] = brute_force_isomorphic(make_group(pa), pb)
            if rank == pa.order:
                return Verdict(pair, "isomorphic-algebras-verified", evidence=evidence)
        return Verdict(pair, "undecided", evidence=evidence)

    claim = _claim_for(fams, n, m, l)
    if claim is not None:
        evidence = {"claim": claim, "checks": _instance_checks(fams, pa, field)}
        return Verdict(pair, "cited-distinct", evidence=evidence)
    return Verdict(pair, "undecided", evidence={"note": "all compared invariants agree"})


def _instance_checks(fams: tuple[int, int], p: GroupParams, field: FieldSpec) -> dict[str, bool]:
    """Finite checks supporting a cited non-isomorphism, run on the first family of the pair."""
    n, m, l = p.triple
    G = make_group(GroupParams.of(fams[0], n, m, l, strict=False))
    r = m - 1 if fams == (3, 4) else n - 1
    checks = {}
    if r >= l:
        checks[f"agemo-center equality at r={r}"] = agemo_center_equality(G, field, r).equal
    return checks


# Documents -----------------------------------------------------------------

def regime(m: int, l: int) -> str:
    return "m > l" if m > l else ("m = l" if m == l else "m < l")


def kernel_table(triples: list[tuple[int, int, int]], field: FieldSpec = GF2) -> dict:
    columns, rows = [], {family_label(f): [] for f in range(1, 7)}
    for n, m, l in triples:
        check_guard(1 << (n + m + l))
        columns.append({"triple": [n, m, l], "regime": regime(m, l)})
        for f in range(1, 7):
            G = make_group(GroupParams.of(f, n, m, l, strict=False))
            rows[family_label(f)].append(phi_kernel_size(G, field))
    return {"kind": "kernel-sizes", "field": str(field), "columns": columns,
            "rows": [{"family": k, "sizes": v} for k, v in rows.items()]}


def quotient_regime(n: int, m: int) -> str:
    if n == m:
        return "n = m"
    step = "n = m + 1" if n == m + 1 else "n > m + 1"
    return f"{step}, m = 1" if m == 1 else f"{step}, m >= 2"


def quotient_table(triple: tuple[int, int, int]) -> dict:
    n, m, l = triple
    if n < 2:
        raise ValueError("maximal quotients need n >= 2")
    check_guard(1 << (n + m + l))
    cols = [list(t) for t in quotient_triples(n, m, l)]
    rows = []
    for f in range(1, 7):
        G = make_group(GroupParams.of(f, n, m, l, strict=False))
        cells = _quotient_cells(maximal_quotient_table(G).rows)
        rows.append({"family": family_label(f), "cells": [cells[f"({a},{b},{c})"] for a, b, c in cols]})
    return {"kind": "maximal-quotients", "triple": [n, m, l], "regime": quotient_regime(n, m),
            "columns": cols, "rows": rows}


def quotient_graph(max_order: int) -> str:
    """DOT graph: an edge G -> H whenever H is a maximal quotient of G."""
    check_guard(max_order)
    nodes: set[str] = set()
    edges: set[tuple[str, str]] = set()
    total = max_order.bit_length() - 1
    for n in range(2, total):
        for m in range(1, n + 1):
            for l in range(2, total - n - m + 1):
                for f in canonical_families(n, m):
                    p = GroupParams.of(f, n, m, l)
                    nodes.add(p.label)
                    for _, tr, fams in maximal_quotient_table(make_group(p)).quotients:
                        if tr is None:
                            continue
                        target = min(canonical_label(g, tr[0], tr[1]) for g in fams)
                        label = f"{family_label(target)}({tr[0]},{tr[1]},{tr[2]})"
                        nodes.add(label)
                        edges.add((p.label, label))
    lines = ["digraph maximal_quotients {"]
    lines += [f'  "{v}";' for v in sorted(nodes)]
    lines += [f'  "{a}" -> "{b}";' for a, b in sorted(edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _md(header: list[str], body: list[list[str]]) -> str:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(row) + " |" for row in body]
    return "\n".join(out) + "\n"


def _csv(header: list[str], body: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(body)
    return buf.getvalue()


def _grid(doc: dict) -> tuple[list[str], list[list[str]]]:
    if doc["kind"] == "kernel-sizes":
        header = ["family"] + [f"({a},{b},{c}) {col['regime']}" for col, (a, b, c) in
                               zip(doc["columns"], (c["triple"] for c in doc["columns"]))]
        body = [[r["family"]] + [str(v) for v in r["sizes"]] for r in doc["rows"]]
    elif doc["kind"] == "maximal-quotients":
        header = ["family"] + [f"({a},{b},{c})" for a, b, c in doc["columns"]]
        body = [[r["family"]] + [" ".join(cell) if cell else "-" for cell in r["cells"]]
                for r in doc["rows"]]
    else:
        raise ValueError(f"no tabular form for {doc['kind']!r}")
    return header, body


def render(doc: dict, fmt: str) -> str:
    """Render a document payload; JSON is canonical, md/csv are projections."""
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt in ("md", "csv"):
        header, body = _grid(doc)
        return _md(header, body) if fmt == "md" else _csv(header, body)
    raise ValueError(f"unsupported format {fmt!r} for this document")
