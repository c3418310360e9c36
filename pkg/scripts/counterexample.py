"""Crossed base in F D2 at several triples: relations, rank, group isomorphism and timing."""

import argparse
import json
import time

from dihedral_mip.base import base_lemma_checks, crossed_base, hom_rank, verify_relations
from dihedral_mip.gf import FieldSpec
from dihedral_mip.groups import GroupParams, group
from dihedral_mip.recognition import brute_force_isomorphic
from dihedral_mip.subgroups import centralizer, derived_subgroup, exponent


def run(n, m, l, k, brute):
    start = time.perf_counter()
    base = crossed_base(n, m, l, FieldSpec(k))
    relations = verify_relations(base)
    rank = hom_rank(base) if all(relations.values()) else None
    exps = []
    for f in (1, 2):
        G = group(f, n, m, l, strict=False)
        exps.append(exponent(G, centralizer(G, derived_subgroup(G).elements)))
    iso = None
    if brute:
        iso = brute_force_isomorphic(group(1, n, m, l), GroupParams.of(2, n, m, l, strict=False), max_order=1 << (n + m + l))
    checks = base_lemma_checks(base).checks if m >= 2 and rank is not None else {}
    return {
        "triple": [n, m, l], "field": str(base.field), "relations_hold": all(relations.values()),
        "rank": rank, "order": 1 << (n + m + l), "centralizer_exponents": exps,
        "groups_isomorphic": iso, "base_checks_pass": all(checks.values()) if checks else None,
        "seconds": round(time.perf_counter() - start, 2),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("triples", nargs="*", default=["3,3,2", "4,3,2", "5,3,2", "5,4,3"])
    ap.add_argument("--field-deg", type=int, default=1)
    ap.add_argument("--no-brute", action="store_true", help="skip the group isomorphism search")
    args = ap.parse_args()
    for text in args.triples:
        n, m, l = (int(v) for v in text.split(","))
        print(json.dumps(run(n, m, l, args.field_deg, not args.no_brute), sort_keys=True))


if __name__ == "__main__":
    main()
