"""Exact arithmetic in the group algebra F G for F = GF(2^k).

An element is a dense coefficient vector indexed by group element ids.
Products are convolutions driven by the Cayley table: for each group
element g in the support of one factor, the other factor is permuted
by a fixed row of a precomputed index table and accumulated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .gf import GF2, FieldSpec
from .groups import TableGroup
from .linalg import BinarySpan, pack
from .subgroups import conjugacy_classes

_CHUNK = 256


class GroupAlgebra:
    """F G with product tables for left and right accumulation."""

    def __init__(self, G: TableGroup, field: FieldSpec = GF2):
        self.group = G
        self.field = field
        self.dim = G.order

    @cached_property
    def _left_index(self) -> np.ndarray:
        # (g * v)_k = v[g^-1 k]
        return self.group.table[self.group.inverses]

    @cached_property
    def _right_index(self) -> np.ndarray:
        # (v * h)_k = v[k h^-1], stored row-wise per h
        return np.ascontiguousarray(self.group.table[:, self.group.inverses].T)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, np.zeros(self.dim, dtype=np.uint8))

    def one(self) -> "AlgebraElement":
        return self.embed(self.group.identity)

    def embed(self, g: int) -> "AlgebraElement":
        coeffs = np.zeros(self.dim, dtype=np.uint8)
        coeffs[int(g)] = 1
        return AlgebraElement(self, coeffs)

    def element(self, terms: dict[int, int] | np.ndarray) -> "AlgebraElement":
        """Element from ``{group id: coefficient}`` or a full coefficient vector."""
        if isinstance(terms, dict):
            coeffs = np.zeros(self.dim, dtype=np.uint8)
            for g, c in terms.items():
                coeffs[int(g)] ^= c
        else:
            coeffs = np.array(terms, dtype=np.uint8)
        return AlgebraElement(self, coeffs)

    def sum_of(self, elements) -> "AlgebraElement":
        coeffs = np.zeros(self.dim, dtype=np.uint8)
        coeffs[np.fromiter(elements, dtype=np.int64)] ^= 1
        return AlgebraElement(self, coeffs)

    def _accumulate(self, index: np.ndarray, weights: np.ndarray, vec: np.ndarray) -> np.ndarray:
        support = np.flatnonzero(weights)
        out = np.zeros(self.dim, dtype=np.uint8)
        binary = self.field.k == 1
        mul = self.field.mul_table
        for start in range(0, support.size, _CHUNK):
            rows = support[start:start + _CHUNK]
            block = vec[index[rows]]
            if not binary:
                block = mul[weights[rows][:, None], block]
            out ^= np.bitwise_xor.reduce(block, axis=0)
        return out

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        nu, nv = np.count_nonzero(u), np.count_nonzero(v)
        if nu == 0 or nv == 0:
            return np.zeros(self.dim, dtype=np.uint8)
        if nu <= nv:
            return self._accumulate(self._left_index, u, v)
        return self._accumulate(self._right_index, v, u)

    def __repr__(self) -> str:
        return f"GroupAlgebra({self.field}, order={self.dim})"


@lru_cache(maxsize=32)
def group_algebra(G: TableGroup, field: FieldSpec = GF2) -> GroupAlgebra:
    """Shared algebra handle per (group, field)."""
    return GroupAlgebra(G, field)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: GroupAlgebra
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.coeffs.shape != (self.algebra.dim,):
            raise ValueError("coefficient vector has the wrong length")
        self.coeffs.setflags(write=False)

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def _check(self, other: "AlgebraElement") -> None:
        if other.algebra is not self.algebra:
            if other.algebra.group is not self.algebra.group:
                raise ValueError("elements live in different group algebras")
            if other.algebra.field != self.algebra.field:
                raise ValueError("elements live over different fields")

    def __add__(self, other: "AlgebraElement | int") -> "AlgebraElement":
        if isinstance(other, int):
            other = self.algebra.one().scale(other)
        self._check(other)
        return AlgebraElement(self.algebra, self.coeffs ^ other.coeffs)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other: "AlgebraElement | int") -> "AlgebraElement":
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        self._check(other)
        return AlgebraElement(self.algebra, self.algebra.multiply(self.coeffs, other.coeffs))

    def __rmul__(self, other: int) -> "AlgebraElement":
        return self.scale(int(other))

    def scale(self, c: int) -> "AlgebraElement":
        return AlgebraElement(self.algebra, self.field.mul_table[c, self.coeffs])

    def __pow__(self, e: int) -> "AlgebraElement":
        return self.power(e)

    def power(self, e: int) -> "AlgebraElement":
        if e < 0:
            return unit_inverse(self).power(-e)
        result = self.algebra.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.algebra.one().scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def support(self) -> list[int]:
        return np.flatnonzero(self.coeffs).tolist()

    def augmentation(self) -> int:
        return int(np.bitwise_xor.reduce(self.coeffs))

    def planes(self) -> list[int]:
        return [pack((self.coeffs >> b) & 1) for b in range(self.field.k)]

    def __repr__(self) -> str:
        terms = [f"{c}*g{g}" if c != 1 else f"g{g}" for g, c in
                 zip(np.flatnonzero(self.coeffs).tolist(), self.coeffs[self.coeffs != 0].tolist())]
        return " + ".join(terms[:8]) + (" + ..." if len(terms) > 8 else "") if terms else "0"


def embed(G: TableGroup, g: int, field: FieldSpec = GF2) -> AlgebraElement:
    return group_algebra(G, field).embed(g)


def augmentation(u: AlgebraElement) -> int:
    return u.augmentation()


def is_unit(u: AlgebraElement) -> bool:
    """Units of F G are exactly the elements of nonzero augmentation."""
    return u.augmentation() != 0


def unit_inverse(u: AlgebraElement) -> AlgebraElement:
    """Inverse of u = a(1 + R) with R nilpotent.

    (1 + R)^-1 = 1 + R + R^2 + ... is evaluated as (1 + R)(1 + R^2)(1 + R^4)...,
    which needs only logarithmically many products.
    """
    a = u.augmentation()
    if a == 0:
        raise ValueError("element has augmentation 0 and is not a unit")
    a_inv = u.field.inv(a)
    one = u.algebra.one()
    R = u.scale(a_inv) + one
    inv = one
    while not R.is_zero():
        inv = inv * (one + R)
        R = R * R
    return inv.scale(a_inv)


def lie_commutator(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """[u, v] = uv + vu."""
    return u * v + v * u


def class_sum(G: TableGroup, g: int, field: FieldSpec = GF2) -> AlgebraElement:
    idx = np.arange(G.order)
    t, inv = G.table, G.inverses
    orbit = np.unique(t[t[inv[idx], g], idx])
    return group_algebra(G, field).sum_of(orbit)


@dataclass
class CenterDecomposition:
    """Z(FG) = F Z(G) + (Z(FG) n [FG, FG]), each part given by a basis."""

    group_part: list[AlgebraElement]
    commutator_part: list[AlgebraElement]

    @property
    def dim(self) -> int:
        return len(self.group_part) + len(self.commutator_part)


def center_decomposition(G: TableGroup, field: FieldSpec = GF2) -> CenterDecomposition:
    """Central group elements and the class sums of non-central classes."""
    A = group_algebra(G, field)
    central = [A.embed(int(g)) for g in np.flatnonzero(G.center_mask)]
    others = [A.sum_of(cls) for cls in conjugacy_classes(G) if len(cls) > 1]
    return CenterDecomposition(central, others)


def commutator_space(G: TableGroup) -> BinarySpan:
    """[FG, FG] as the GF(2)-span of g + h^-1 g h."""
    span = BinarySpan(G.order)
    t, inv = G.table, G.inverses
    for g in range(G.order):
        for h in range(G.order):
            c = int(t[t[inv[h], g], h])
            if c != g:
                span.add((1 << g) | (1 << c))
    return span


def binary_span_of(elements) -> BinarySpan:
    """GF(2)-span of the bit planes of algebra elements (their F-span, plane-wise)."""
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one element")
    span = BinarySpan(elements[0].algebra.dim)
    for u in elements:
        span.extend(u.planes())
    return span
