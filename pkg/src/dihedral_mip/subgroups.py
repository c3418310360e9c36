"""Subgroups, centralizers, conjugacy classes and elementary abelian rank.

Everything here works on a ``TableGroup`` (element ids with a Cayley table);
subgroups are explicit element sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .groups import ConcreteGroup, Group, TableGroup


@dataclass(frozen=True)
class SubgroupData:
    generators: tuple[int, ...]
    elements: frozenset[int]
    invariants: tuple[int, ...] | None  # cyclic factor orders, descending; None if non-abelian

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_abelian(self) -> bool:
        return self.invariants is not None

    def mask(self, order: int) -> np.ndarray:
        out = np.zeros(order, dtype=bool)
        out[list(self.elements)] = True
        return out


def closure(G: TableGroup, gens: Iterable[int]) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``gens``."""
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    frontier = np.array([G.identity])
    if gens.size == 0:
        return mask
    while frontier.size:
        new = np.unique(G.table[frontier][:, gens].ravel())
        new = new[~mask[new]]
        mask[new] = True
        frontier = new
    return mask


def is_abelian(G: TableGroup, elems: np.ndarray) -> bool:
    sub = G.table[np.ix_(elems, elems)]
    return bool(np.array_equal(sub, sub.T))


def abelian_invariants(G: TableGroup, elems: Iterable[int]) -> tuple[int, ...]:
    """Cyclic factor orders of an abelian 2-subgroup by maximal-order peeling.

    At each step an element of maximal order modulo the part already split
    off generates a direct factor of the quotient.
    """
    elems = np.asarray(sorted(elems), dtype=np.int64)
    factors = []
    kernel = closure(G, [])
    taken: list[int] = []
    while kernel.sum() < elems.size:
        rel_order = np.ones(elems.size, dtype=np.int64)
        cur = elems.copy()
        outside = ~kernel[cur]
        while outside.any():
            rel_order[outside] *= 2
            cur = G.squares[cur]
            outside = ~kernel[cur]
        pick = int(np.argmax(rel_order))
        factors.append(int(rel_order[pick]))
        taken.append(int(elems[pick]))
        kernel = closure(G, taken)
    return tuple(sorted(factors, reverse=True))


def subgroup(G: TableGroup, gens: Iterable[int] = (), *, mask: np.ndarray | None = None) -> SubgroupData:
    gens = tuple(int(g) for g in gens)
    if mask is None:
        mask = closure(G, gens)
    elems = np.flatnonzero(mask)
    inv = abelian_invariants(G, elems) if is_abelian(G, elems) else None
    return SubgroupData(gens, frozenset(int(e) for e in elems), inv)


def center(G: TableGroup) -> SubgroupData:
    return subgroup(G, np.flatnonzero(G.center_mask), mask=G.center_mask)


def derived_subgroup(G: TableGroup) -> SubgroupData:
    idx = np.arange(G.order)
    comms = np.unique(G.commutator_array(idx[:, None], idx[None, :]))
    return subgroup(G, comms)


def frattini(G: TableGroup) -> SubgroupData:
    # for 2-groups the Frattini subgroup is generated by squares
    return subgroup(G, np.unique(G.squares))


def socle(G: TableGroup) -> SubgroupData:
    """Subgroup generated by central involutions."""
    invol = np.flatnonzero(G.center_mask & (G.orders == 2))
    return subgroup(G, invol)


def agemo(G: TableGroup, S: SubgroupData, r: int) -> SubgroupData:
    """Subgroup generated by the 2^r-th powers of elements of an abelian ``S``."""
    if not S.is_abelian:
        raise ValueError("agemo is only supported on abelian subgroups")
    elems = np.asarray(sorted(S.elements))
    return subgroup(G, np.unique(G.pow2_array(elems, r)))


def named_subgroups(G: TableGroup, r: int = 1) -> dict[str, SubgroupData]:
    Z = center(G)
    return {
        "center": Z,
        "derived": derived_subgroup(G),
        "frattini": frattini(G),
        "socle": socle(G),
        "agemo": agemo(G, Z, r),
    }


def centralizer(G: TableGroup, S: Iterable[int]) -> SubgroupData:
    S = np.asarray(sorted(set(int(s) for s in S)), dtype=np.int64)
    if S.size == 0:
        return subgroup(G, mask=np.ones(G.order, dtype=bool))
    t = G.table
    mask = np.all(t[:, S] == t[S, :].T, axis=1)
    return subgroup(G, np.flatnonzero(mask), mask=mask)


def exponent(G: TableGroup, S: SubgroupData) -> int:
    return int(G.orders[list(S.elements)].max())


def conjugacy_classes(G: TableGroup) -> list[frozenset[int]]:
    """Classes as orbits under conjugation by all elements, ordered by least member."""
    t, inv = G.table, G.inverses
    seen = np.zeros(G.order, dtype=bool)
    idx = np.arange(G.order)
    classes = []
    for g in range(G.order):
        if seen[g]:
            continue
        orbit = np.unique(t[t[inv[idx], g], idx])
        seen[orbit] = True
        classes.append(frozenset(int(e) for e in orbit))
    return classes


def squares_class_count(G: TableGroup) -> int:
    """Number of conjugacy classes consisting of squares."""
    is_square = np.zeros(G.order, dtype=bool)
    is_square[G.squares] = True
    return sum(1 for cls in conjugacy_classes(G) if is_square[next(iter(cls))])


def elementary_abelian_rank(G: TableGroup) -> int:
    """Largest rank of an elementary abelian subgroup.

    Backtracking over pairwise commuting involutions, growing the subgroup
    one independent generator at a time.
    """
    invol = np.flatnonzero(G.orders == 2)
    if invol.size == 0:
        return 0
    t = G.table
    sub = t[np.ix_(invol, invol)]
    commute = sub == sub.T
    best = 1
    seen: set[frozenset[int]] = set()

    def extend(elems: frozenset[int], candidates: np.ndarray, rank: int) -> None:
        nonlocal best
        best = max(best, rank)
        if rank + _log2_bound(candidates.size) <= best:
            return
        for i in candidates:
            g = int(invol[i])
            if g in elems:
                continue
            grown = frozenset(elems | {int(t[e, g]) for e in elems})
            if grown in seen:
                continue
            seen.add(grown)
            keep = candidates[commute[i, candidates]]
            keep = keep[[int(invol[j]) not in grown for j in keep]] if keep.size else keep
            extend(grown, keep, rank + 1)

    extend(frozenset([G.identity]), np.arange(invol.size), 0)
    return best


def _log2_bound(count: int) -> int:
    # an elementary abelian group of rank k has 2^k - 1 involutions
    return (count + 1).bit_length() - 1


def lower_central_series(G: TableGroup) -> list[SubgroupData]:
    idx = np.arange(G.order)
    series = [subgroup(G, mask=np.ones(G.order, dtype=bool))]
    while series[-1].order > 1:
        prev = np.asarray(sorted(series[-1].elements))
        comms = np.unique(G.commutator_array(prev[:, None], idx[None, :]))
        # [N, G] is normal whenever N is, so no normal closure is needed
        series.append(subgroup(G, comms))
        if series[-1].order == series[-2].order:
            raise ValueError("group is not nilpotent")
    return series


def nilpotency_class(G: TableGroup) -> int:
    return len(lower_central_series(G)) - 1


def coclass(G: Group) -> int:
    return (G.order.bit_length() - 1) - nilpotency_class(G)


def elements_of(G: Group, S: SubgroupData) -> list:
    """Normal forms of a subgroup of a parametrized group, sorted."""
    return [G.element(i) for i in sorted(S.elements)]


def quotient_group(G: TableGroup, normal: SubgroupData) -> ConcreteGroup:
    """G/N as a coset table (N must be normal; cosets labelled by least member)."""
    members = np.fromiter(sorted(normal.elements), dtype=np.int64)
    labels = G.table[:, members].min(axis=1)
    reps = np.unique(labels)
    new_id = np.full(G.order, -1, dtype=np.int64)
    new_id[reps] = np.arange(reps.size)
    table = new_id[labels[G.table[np.ix_(reps, reps)]]]
    return ConcreteGroup(table.astype(np.int32), (), "", int(new_id[labels[G.identity]]))


def abelianization_type(G: TableGroup) -> tuple[int, ...]:
    Q = quotient_group(G, derived_subgroup(G))
    return abelian_invariants(Q, range(Q.order))
