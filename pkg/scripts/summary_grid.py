"""Print the distinguishing letter for every family pair at a list of triples.

Letters: C center, K squares class count, Q elementary abelian rank,
P kernel size of the power map, X algebras isomorphic via the crossed base,
A distinct by a cited argument, ? undecided.
"""

import argparse
import itertools
import time

from dihedral_mip.gf import FieldSpec
from dihedral_mip.groups import GroupParams
from dihedral_mip.report import INVARIANT_LETTERS, distinguish_pair

OUTCOME_LETTERS = {"isomorphic-algebras-verified": "X", "cited-distinct": "A", "undecided": "?"}


def letter(verdict):
    if verdict.outcome == "distinguished":
        return INVARIANT_LETTERS[verdict.invariant]
    return OUTCOME_LETTERS[verdict.outcome]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("triples", nargs="*", default=["4,3,2", "3,2,2", "4,2,3", "3,1,2", "4,1,2"])
    ap.add_argument("--field-deg", type=int, default=1)
    args = ap.parse_args()
    field = FieldSpec(args.field_deg)
    pairs = list(itertools.combinations(range(1, 7), 2))
    print("triple    " + " ".join(f"{a}{b}" for a, b in pairs))
    for text in args.triples:
        n, m, l = (int(v) for v in text.split(","))
        start = time.perf_counter()
        cells = []
        for a, b in pairs:
            if n == m and (a in (2, 4) or b in (2, 4)):
                cells.append(" =")
                continue
            v = distinguish_pair(GroupParams.of(a, n, m, l, strict=False),
                                 GroupParams.of(b, n, m, l, strict=False), field)
            cells.append(f" {letter(v)}")
        print(f"({n},{m},{l})   " + " ".join(cells) + f"   [{time.perf_counter() - start:.1f}s]")


if __name__ == "__main__":
    main()
