"""Weighted monomial basis of F G and the filtrations built on it.

Monomials are X^r Y^s Z^t W^u with X = x + 1, Y = y + 1, Z = z + 1 and
W = w + 1 for w = z^(2^(l-1)); their weights r + s + 2t + q u make the
weight >= k monomials a basis of the k-th power of the augmentation ideal.
Since Z^t W^u = Z^(t + u 2^(l-1)), monomial (r, s, t, u) is stored at the
same index as the group element x^r y^s z^(t + u 2^(l-1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .algebra import AlgebraElement, GroupAlgebra, center_decomposition, group_algebra
from .gf import GF2, FieldSpec
from .groups import Group, GroupParams
from .linalg import BinarySpan, gf2_inverse, pack, unpack
from .subgroups import closure

INFINITE_WEIGHT = math.inf


def weight_of_w(p: GroupParams) -> int:
    """q: the weight of W."""
    fam = p.family
    if fam in (1, 2):
        e = p.l
    elif fam in (3, 4):
        e = max(p.m, p.l)
    else:
        e = max(p.n, p.l)
    return 1 << e


@dataclass(frozen=True, order=True)
class JenningsMonomial:
    weight: int
    r: int
    s: int
    t: int
    u: int

    def __str__(self) -> str:
        parts = []
        for sym, e in (("X", self.r), ("Y", self.s), ("Z", self.t), ("W", self.u)):
            if e == 1:
                parts.append(sym)
            elif e > 1:
                parts.append(f"{sym}^{e}")
        return "".join(parts) or "1"


class JenningsBasis:
    """Change of basis between group elements and weighted monomials."""

    def __init__(self, G: Group, field: FieldSpec = GF2):
        p = G.params
        if p.l < 2:
            raise ValueError("the weighted basis needs l >= 2")
        self.group = G
        self.field = field
        self.algebra: GroupAlgebra = group_algebra(G, field)
        self.q = weight_of_w(p)
        self.d = 1 + (1 << (p.l - 1)) + self.q
        idx = np.arange(G.order)
        a, b, c = G.decode(idx)
        half = 1 << (p.l - 1)
        self.exponents = np.stack([a, b, c % half, c // half], axis=1)
        self.weights = a + b + 2 * (c % half) + self.q * (c // half)
        self.monomials = sorted(
            JenningsMonomial(int(w), *map(int, e)) for w, e in zip(self.weights, self.exponents)
        )

    def index(self, r: int, s: int, t: int = 0, u: int = 0) -> int:
        p = self.group.params
        return self.group.index((r, s, t + (u << (p.l - 1))))

    @cached_property
    def matrix(self) -> np.ndarray:
        """M: column j holds the group-basis coefficients of monomial j.

        Built by algebra products X^r Y^s Z^c, each from a neighbour by one
        multiplication with a two-term factor.
        """
        G = self.group
        p = G.params
        A = group_algebra(G, GF2)
        X = A.embed(G.index(G.x)) + 1
        Y = A.embed(G.index(G.y)) + 1
        Z = A.embed(G.index(G.z)) + 1
        M = np.zeros((G.order, G.order), dtype=np.uint8)
        xr = A.one()
        for r in range(1 << p.n):
            xy = xr
            for s in range(1 << p.m):
                cur = xy
                for c in range(1 << p.l):
                    M[:, G.index((r, s, c))] = cur.coeffs
                    cur = cur * Z
                xy = xy * Y
            xr = xr * X
        M.setflags(write=False)
        return M

    @cached_property
    def inverse_matrix(self) -> np.ndarray:
        inv = gf2_inverse(self.matrix)
        inv.setflags(write=False)
        return inv

    def monomial(self, r: int, s: int, t: int = 0, u: int = 0) -> AlgebraElement:
        col = self.matrix[:, self.index(r, s, t, u)]
        return AlgebraElement(self.algebra, col.copy())

    def from_coords(self, coords: np.ndarray) -> AlgebraElement:
        coords = np.asarray(coords, dtype=np.uint8)
        out = np.zeros(self.group.order, dtype=np.uint8)
        for b in range(self.field.k):
            plane = ((coords >> b) & 1).astype(np.float64)
            out |= ((self.matrix @ plane).astype(np.int64) & 1).astype(np.uint8) << b
        return AlgebraElement(self.algebra, out)

    def coords(self, u: AlgebraElement) -> np.ndarray:
        """Monomial coefficients of u, indexed like group elements."""
        out = np.zeros(self.group.order, dtype=np.uint8)
        inv = self.inverse_matrix.astype(np.float64)
        for b in range(self.field.k):
            plane = ((u.coeffs >> b) & 1).astype(np.float64)
            if plane.any():
                out |= ((inv @ plane).astype(np.int64) & 1).astype(np.uint8) << b
        return out

    def weight(self, u: AlgebraElement) -> float:
        """Least weight in the monomial support; infinite for 0."""
        c = self.coords(u)
        nz = np.flatnonzero(c)
        return INFINITE_WEIGHT if nz.size == 0 else int(self.weights[nz].min())

    def in_ideal_power(self, u: AlgebraElement, k: int) -> bool:
        return self.weight(u) >= k

    def truncate(self, u: AlgebraElement, k: int) -> np.ndarray:
        """Coordinates of u modulo the k-th power of the augmentation ideal."""
        c = self.coords(u).copy()
        c[self.weights >= k] = 0
        return c

    def layer(self, u: AlgebraElement, k: int) -> dict[JenningsMonomial, int]:
        """Nonzero weight-k coordinates of u."""
        c = self.coords(u)
        sel = np.flatnonzero((self.weights == k) & (c != 0))
        return {self._monomial_at(int(i)): int(c[i]) for i in sel}

    def _monomial_at(self, i: int) -> JenningsMonomial:
        return JenningsMonomial(int(self.weights[i]), *map(int, self.exponents[i]))

    def layer_dimensions(self) -> dict[int, int]:
        vals, counts = np.unique(self.weights, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def ideal_power_span(self, k: int) -> BinarySpan:
        """Span of the weight >= k monomials (defined over GF(2))."""
        cols = np.flatnonzero(self.weights >= k)
        return BinarySpan(self.group.order, (pack(self.matrix[:, j]) for j in cols))

    def gamma_basis(self) -> list[JenningsMonomial]:
        """Monomials with 2t + qu >= 1: a basis of the ideal generated by Z."""
        return [mono for mono in self.monomials if mono.t or mono.u]

    @cached_property
    def gamma_span(self) -> BinarySpan:
        half = 1 << (self.group.params.l - 1)
        cols = np.flatnonzero(self.exponents[:, 2] + half * self.exponents[:, 3] > 0)
        return BinarySpan(self.group.order, (pack(self.matrix[:, j]) for j in cols))

    @cached_property
    def _gamma_powers(self) -> list[BinarySpan]:
        order = self.group.order
        return [BinarySpan(order, (1 << g for g in range(order))), self.gamma_span]

    def gamma_power_span(self, j: int) -> BinarySpan:
        """j-th power of the ideal generated by Z, as a span of products.

        Each power is the previous one times Z: for b in it and g in G,
        b Z g = (b g)(g^-1 Z g) and g^-1 Z g is Z up to the unit z^-1.
        """
        powers = self._gamma_powers
        G = self.group
        shift = G.table[:, G.inverses[G.index(G.z)]]  # (v z)_k = v[k z^-1]
        while len(powers) <= j:
            prev = powers[-1]
            nxt = BinarySpan(G.order)
            for vec in prev.basis():
                arr = unpack(vec, G.order)
                nxt.add(pack(arr[shift] ^ arr))
            powers.append(nxt)
        return powers[j]


@lru_cache(maxsize=32)
def jennings_basis(G: Group, field: FieldSpec = GF2) -> JenningsBasis:
    return JenningsBasis(G, field)


def jennings_coords(u: AlgebraElement) -> np.ndarray:
    return jennings_basis(u.algebra.group, u.field).coords(u)


def weight(u: AlgebraElement) -> float:
    return jennings_basis(u.algebra.group, u.field).weight(u)


def in_ideal_power(u: AlgebraElement, k: int) -> bool:
    return jennings_basis(u.algebra.group, u.field).in_ideal_power(u, k)


def ideal_powers_by_products(G: Group, k_max: int) -> list[BinarySpan]:
    """Augmentation ideal powers 1..k_max computed from products alone.

    The augmentation ideal is the left ideal generated by X and Y, so its
    k-th power is spanned by the (k-1)-th power times X and times Y.
    """
    right = G.table[:, G.inverses]  # (v g)_k = v[k g^-1] for the column g
    gx, gy = G.index(G.x), G.index(G.y)
    shifts = (right[:, gx], right[:, gy])
    level = BinarySpan(G.order)
    for g in range(G.order):
        if g != G.identity:
            level.add((1 << g) | (1 << G.identity))
    spans = [level]
    for _ in range(1, k_max):
        nxt = BinarySpan(G.order)
        for vec in spans[-1].basis():
            arr = unpack(vec, G.order)
            for sh in shifts:
                nxt.add(pack(arr[sh] ^ arr))
        spans.append(nxt)
    return spans


def generators(J: JenningsBasis) -> tuple[AlgebraElement, ...]:
    """(X, Y, Z, W) in the algebra of J."""
    G, A = J.group, J.algebra
    return (A.embed(G.index(G.x)) + 1, A.embed(G.index(G.y)) + 1,
            A.embed(G.index(G.z)) + 1, A.embed(G.index(G.w)) + 1)


def phi_eval(G: Group, field: FieldSpec, alpha: int, beta: int) -> dict[JenningsMonomial, int]:
    """Image of alpha X + beta Y under the 2^m-power map, as weight-2^m coordinates.

    The power is computed in the algebra; lower weights must vanish.
    """
    J = jennings_basis(G, field)
    X, Y, _, _ = generators(J)
    u = X.scale(alpha) + Y.scale(beta)
    for _ in range(G.params.m):
        u = u * u
    k = 1 << G.params.m
    if not J.in_ideal_power(u, k):
        raise ArithmeticError("2^m-th power left the expected ideal power")
    return J.layer(u, k)


def phi_kernel_size(G: Group, field: FieldSpec = GF2) -> int:
    """Number of (alpha, beta) in F^2 mapped to zero."""
    return sum(
        1 for a in field.elements() for b in field.elements() if not phi_eval(G, field, a, b)
    )


def psi_modulus(J: JenningsBasis) -> BinarySpan:
    """Gamma^(1 + 2^(l-1)) + Delta^d."""
    l = J.group.params.l
    return J.gamma_power_span(1 + (1 << (l - 1))) + J.ideal_power_span(J.d)


def psi_eval(u: AlgebraElement) -> AlgebraElement:
    """Canonical representative of u^(2^(l-1)) modulo Gamma^(1+2^(l-1)) + Delta^d."""
    J = jennings_basis(u.algebra.group, u.field)
    if not J.gamma_span.contains_vector(u.coeffs, u.field):
        raise ValueError("argument does not lie in the ideal generated by Z")
    p = u
    for _ in range(J.group.params.l - 1):
        p = p * p
    return reduce_modulo(p, _psi_modulus_cached(J))


@lru_cache(maxsize=32)
def _psi_modulus_cached(J: JenningsBasis) -> BinarySpan:
    return psi_modulus(J)


def reduce_modulo(u: AlgebraElement, span: BinarySpan) -> AlgebraElement:
    return AlgebraElement(u.algebra, span.reduce_vector(u.coeffs, u.field))


@dataclass
class AgemoCenterResult:
    r: int
    equal: bool
    algebra_side: BinarySpan = field(repr=False)
    group_side: BinarySpan = field(repr=False)


def agemo_center_equality(G: Group, field: FieldSpec, r: int) -> AgemoCenterResult:
    """Compare the subalgebra generated by 2^r-th powers of Z(FG) with F applied to that of Z(G).

    Over a field of characteristic 2 the 2^r-power map on the commutative
    algebra Z(FG) is additive, so the powers of a basis span all powers.
    """
    if r < G.params.l:
        raise ValueError("the comparison is only established for r >= l")
    A = group_algebra(G, field)
    dec = center_decomposition(G, field)
    powers = []
    for u in dec.group_part + dec.commutator_part:
        v = u
        for _ in range(r):
            v = v * v
        powers.append(v)
    alg = _subalgebra_span(A, powers)
    center = np.flatnonzero(G.center_mask)
    gens = G.pow2_array(center, r)
    sub = np.flatnonzero(closure(G, np.unique(gens)))
    grp = BinarySpan(G.order, (1 << int(g) for g in sub))
    return AgemoCenterResult(r, alg == grp, alg, grp)


def _subalgebra_span(A: GroupAlgebra, gens: list[AlgebraElement]) -> BinarySpan:
    """GF(2)-span of the unital subalgebra generated by 0/1-valued elements."""
    span = BinarySpan(A.dim, [1 << A.group.identity])
    gen_vecs = []
    for g in gens:
        if g.coeffs.max() > 1:
            raise ValueError("generator is not defined over GF(2)")
        gen_vecs.append(g.coeffs.copy())
        span.add(pack(g.coeffs))
    frontier = [unpack(v, A.dim) for v in span.basis()]
    B = group_algebra(A.group, GF2)
    while frontier:
        new = []
        for v in frontier:
            for g in gen_vecs:
                prod = B.multiply(v, g)
                if span.add(pack(prod)):
                    new.append(prod)
        frontier = new
    return span
