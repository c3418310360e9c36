"""Kernel sizes of the 2^m-power map for the six families, one column per triple."""

import argparse

from dihedral_mip.gf import FieldSpec
from dihedral_mip.report import kernel_table, render


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("triples", nargs="*", default=["4,3,2", "4,3,3", "4,2,3"])
    ap.add_argument("--field-deg", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--format", default="md", choices=["md", "csv", "json"])
    args = ap.parse_args()
    triples = [tuple(int(v) for v in t.split(",")) for t in args.triples]
    for k in args.field_deg:
        field = FieldSpec(k)
        print(f"{field}:")
        print(render(kernel_table(triples, field), args.format))


if __name__ == "__main__":
    main()
