"""Quotients by central involutions and presentation-based isomorphism tests.

A two-generated group Q of order |P| is isomorphic to the group presented
by P iff some generating pair of Q satisfies the relations of P: the
relations give an epimorphism from the presented group onto Q and the
orders agree.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .groups import ConcreteGroup, Group, GroupParams, TableGroup, make_group
from .subgroups import closure, conjugacy_classes

DEFAULT_SEARCH_BOUND = 1 << 10


def max_order_guard() -> int:
    return int(os.environ.get("MIP_MAX_ORDER", 4096))


RelationCheck = Callable[[TableGroup, np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Presentation:
    """Two-generator presentation: ``check(Q, g, h)`` masks pairs satisfying it."""

    name: str
    order: int
    check: RelationCheck = field(repr=False, compare=False)
    params: GroupParams | None = None
    # orders of the two generators in the presented group
    generator_orders: tuple[int, int] | None = None


def family_presentation(p: GroupParams) -> Presentation:
    n, m, l = p.n, p.m, p.l
    r, s, t = p.theta

    def check(Q: TableGroup, g, h):
        tab, inv, e = Q.table, Q.inverses, Q.identity
        c = Q.commutator_array(h, g)
        c_inv_sq = inv[Q.squares[c]]
        w = Q.pow2_array(c, l - 1)
        ok = Q.pow2_array(c, l) == e
        ok &= Q.commutator_array(c, g) == c_inv_sq
        ok &= Q.commutator_array(c, h) == c_inv_sq
        ok &= Q.pow2_array(g, n) == (w if r else e)
        rhs = Q.power_array(g, s << m) if s else np.full_like(c, e)
        if t:
            rhs = tab[rhs, w]
        ok &= Q.pow2_array(h, m) == rhs
        return ok

    model = make_group(p, validate=False)
    orders = (int(model.orders[model.index(model.x)]), int(model.orders[model.index(model.y)]))
    return Presentation(p.label, p.order, check, p, orders)


def maximal_class_presentation(kind: str, order: int) -> Presentation:
    """Dihedral ``d``, semidihedral ``sd`` or generalized quaternion ``q`` group.

    Generators (a, b) with b of order order/2 and the usual action of a.
    """
    k = order.bit_length() - 2  # order = 2^(k+1)
    if order != 1 << (k + 1) or k < 2 or (kind == "sd" and k < 3):
        raise ValueError(f"no {kind} group of order {order}")
    if kind not in ("d", "sd", "q"):
        raise ValueError(f"unknown maximal class kind {kind!r}")
    target = {"d": -1, "q": -1, "sd": (1 << (k - 1)) - 1}[kind]

    def check(Q: TableGroup, a, b):
        tab, inv, e = Q.table, Q.inverses, Q.identity
        a, b = np.broadcast_arrays(a, b)
        a_sq = Q.squares[a]
        ok = a_sq == (Q.pow2_array(b, k - 1) if kind == "q" else e)
        ok &= Q.pow2_array(b, k) == e
        ok &= tab[tab[inv[a], b], a] == Q.power_array(b, target)
        return ok

    a_order = 4 if kind == "q" else 2
    return Presentation(f"{kind.upper()}{order}", order, check, None, (a_order, 1 << k))


def parse_presentation(spec: str) -> Presentation:
    """Parse ``d16``, ``sd16``, ``q16`` or ``family,n,m,l`` (e.g. ``6,1,1,2``)."""
    text = spec.strip().lower()
    for kind in ("sd", "d", "q"):
        if text.startswith(kind) and text[len(kind):].isdigit():
            return maximal_class_presentation(kind, int(text[len(kind):]))
    parts = [int(v) for v in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"cannot parse group spec {spec!r}")
    fam, n, m, l = parts
    return family_presentation(GroupParams.of(fam, n, m, l, degenerate=True, strict=False))


def _frattini_labels(Q: TableGroup) -> tuple[np.ndarray, int]:
    phi = np.flatnonzero(closure(Q, np.unique(Q.squares)))
    labels = Q.table[:, phi].min(axis=1)
    rank = len(np.unique(labels)).bit_length() - 1
    return labels, rank


def generating_pairs_mask(Q: TableGroup, g, h) -> np.ndarray:
    """Mask of pairs (g, h) generating Q (tested modulo the Frattini subgroup)."""
    labels, rank = _frattini_labels(Q)
    g, h = np.broadcast_arrays(np.asarray(g), np.asarray(h))
    e = labels[Q.identity]
    lg, lh = labels[g], labels[h]
    if rank == 0:
        return np.ones(g.shape, dtype=bool)
    if rank == 1:
        return (lg != e) | (lh != e)
    if rank == 2:
        return (lg != e) & (lh != e) & (lg != lh)
    return np.zeros(g.shape, dtype=bool)


def find_generating_pair(Q: TableGroup, pres: Presentation) -> tuple[int, int] | None:
    """A generating pair of Q satisfying ``pres``, or None.

    The first generator runs over conjugacy class representatives (an inner
    automorphism moves any solution there) and both are filtered by the
    generator orders of the presented group. The pair returned is the
    lexicographically least one under these restrictions.
    """
    if Q.order != pres.order:
        raise ValueError(f"order mismatch: |Q| = {Q.order}, {pres.name} has {pres.order}")
    labels, rank = _frattini_labels(Q)
    if rank > 2:
        return None
    every = np.arange(Q.order)
    g_ok = np.zeros(Q.order, dtype=bool)
    g_ok[[min(cls) for cls in conjugacy_classes(Q)]] = True
    h_ok = np.ones(Q.order, dtype=bool)
    if pres.generator_orders is not None:
        g_ok &= Q.orders == pres.generator_orders[0]
        h_ok &= Q.orders == pres.generator_orders[1]
    candidates_h = every[h_ok]
    for g in np.flatnonzero(g_ok).tolist():
        if rank == 2 and labels[g] == labels[Q.identity]:
            continue
        ok = generating_pairs_mask(Q, g, candidates_h)
        hs = candidates_h[ok]
        if hs.size == 0:
            continue
        ok = pres.check(Q, np.full(hs.shape, g), hs)
        if ok.any():
            return g, int(hs[np.argmax(ok)])
    return None


def _as_presentation(B) -> Presentation:
    if isinstance(B, Presentation):
        return B
    if isinstance(B, Group):
        return family_presentation(B.params)
    if isinstance(B, GroupParams):
        return family_presentation(B)
    raise TypeError(f"cannot interpret {B!r} as a presentation")


def brute_force_isomorphic(A: TableGroup, B, *, max_order: int | None = None) -> bool:
    """Whether A is isomorphic to the group B (a Group, GroupParams or Presentation)."""
    pres = _as_presentation(B)
    bound = max_order_guard() if max_order is None else max_order
    if A.order != pres.order:
        raise ValueError(f"order mismatch: {A.order} vs {pres.order}")
    if A.order > bound:
        raise ValueError(f"order {A.order} exceeds the search bound {bound}")
    return find_generating_pair(A, pres) is not None


def quotient_by(G: TableGroup, w: int) -> ConcreteGroup:
    """G / <w> for a central involution w, as an explicit coset table."""
    w = int(w)
    if w == G.identity or not G.center_mask[w] or G.squares[w] != G.identity:
        raise ValueError(f"element {w} is not a central involution")
    idx = np.arange(G.order)
    partner = G.table[idx, w]
    reps = np.minimum(idx, partner)
    uniq = np.unique(reps)
    new_id = np.full(G.order, -1, dtype=np.int64)
    new_id[uniq] = np.arange(uniq.size)
    coset = new_id[reps]
    table = coset[G.table[np.ix_(uniq, uniq)]]
    dtype = np.int16 if uniq.size <= np.iinfo(np.int16).max else np.int32
    table = table.astype(dtype)
    table.setflags(write=False)
    identity = int(coset[G.identity])
    gens: tuple[int, ...] = ()
    name = f"Q/<{w}>"
    if isinstance(G, Group):
        gens = (int(coset[G.index(G.x)]), int(coset[G.index(G.y)]))
        name = f"{G.params.label}/<{tuple(G.element(w))}>"
    return ConcreteGroup(table, gens, name, identity)


def order_profile(G: TableGroup) -> tuple:
    """Cheap isomorphism invariant: element order counts and center order."""
    vals, counts = np.unique(G.orders, return_counts=True)
    return tuple(zip(vals.tolist(), counts.tolist())), int(G.center_mask.sum())


def recognize(Q: TableGroup, candidates, *, max_order: int = DEFAULT_SEARCH_BOUND) -> list:
    """Candidates (GroupParams or Presentation) whose presentation Q satisfies.

    Family candidates with a different order profile are discarded before
    the pair search; the presentation test alone decides the rest.
    """
    if Q.order > max_order:
        raise ValueError(f"|Q| = {Q.order} exceeds the search budget {max_order}")
    out = []
    profile = None
    for cand in candidates:
        pres = _as_presentation(cand)
        if pres.order != Q.order:
            raise ValueError(f"order mismatch: |Q| = {Q.order}, {pres.name} has {pres.order}")
        if pres.params is not None:
            profile = profile or order_profile(Q)
            if order_profile(make_group(pres.params, validate=False)) != profile:
                continue
        if find_generating_pair(Q, pres) is not None:
            out.append(cand)
    return out


def canonical_families(n: int, m: int) -> tuple[int, ...]:
    """Family labels that are pairwise distinct representatives at (n, m)."""
    return (1, 2, 3, 4, 5, 6) if n > m else (1, 5, 6)


def canonical_label(family: int, n: int, m: int) -> int:
    """Canonical name of D<family>(n, m, l) (D2 = D1 and D3 = D4 = D5 when n = m)."""
    if n > m:
        return family
    return {1: 1, 2: 1, 3: 5, 4: 5, 5: 5, 6: 6}[family]


def quotient_triples(n: int, m: int, l: int) -> list[tuple[int, int, int]]:
    return [(n - 1, m, l), (n, m - 1, l), (n, m, l - 1)]


@dataclass
class QuotientTable:
    params: GroupParams
    rows: dict[tuple[int, int, int], tuple[int, ...]]
    # (central involution, triple, matching families) per maximal quotient
    quotients: list[tuple[int, tuple[int, int, int] | None, tuple[int, ...]]]


def maximal_quotient_table(G: Group, *, max_order: int = DEFAULT_SEARCH_BOUND) -> QuotientTable:
    """Recognize every maximal quotient G/<w> against the families at the three triples."""
    p = G.params
    if p.n < 2:
        raise ValueError("maximal quotient table requires n >= 2")
    socle_invol = np.flatnonzero(G.center_mask & (G.orders == 2))
    triples = [tr for tr in quotient_triples(*p.triple) if tr[0] >= tr[1] >= 1 and tr[2] >= 1]
    rows: dict[tuple[int, int, int], set[int]] = {tr: set() for tr in quotient_triples(*p.triple)}
    found = []
    for w in socle_invol:
        Q = quotient_by(G, int(w))
        hit_triple, hits = None, ()
        for tr in triples:
            cands = [GroupParams.of(f, *tr, degenerate=True) for f in canonical_families(tr[0], tr[1])]
            matched = recognize(Q, cands, max_order=max_order)
            if matched:
                hit_triple, hits = tr, tuple(c.family for c in matched)
                break
        if hit_triple is not None:
            rows[hit_triple].update(hits)
        found.append((int(w), hit_triple, hits))
    return QuotientTable(p, {tr: tuple(sorted(v)) for tr, v in rows.items()}, found)
