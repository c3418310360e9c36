"""Maximal quotient tables: each quotient by a central involution is recognized explicitly."""

import argparse
import time

from dihedral_mip.report import quotient_table, render

DEFAULT = ["5,3,2", "4,3,2", "3,3,2", "3,1,2", "2,1,2", "4,2,3", "3,2,3", "2,2,3", "3,1,3", "2,1,3"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("triples", nargs="*", default=DEFAULT)
    ap.add_argument("--format", default="md", choices=["md", "csv", "json"])
    args = ap.parse_args()
    for text in args.triples:
        triple = tuple(int(v) for v in text.split(","))
        start = time.perf_counter()
        doc = quotient_table(triple)
        print(f"{triple} ({doc['regime']}), {time.perf_counter() - start:.1f}s")
        print(render(doc, args.format))


if __name__ == "__main__":
    main()
