"""Exact linear algebra over GF(2) and GF(2^k).

Binary vectors are packed into Python ints (bit ``j`` is coordinate ``j``).
Most subspaces met in the group algebra are spanned by vectors with 0/1
coefficients; their span over GF(2^k) is handled plane by plane, since a
GF(2)-echelon basis stays an echelon basis after extension of scalars.
"""

from __future__ import annotations

import bisect
from typing import Iterable

import numpy as np

from .gf import FieldSpec


def pack(bits: np.ndarray) -> int:
    """Pack a 0/1 vector into an int, coordinate ``j`` at bit ``j``."""
    packed = np.packbits(np.asarray(bits, dtype=np.uint8) & 1, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def unpack(value: int, dim: int) -> np.ndarray:
    raw = value.to_bytes((dim + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:dim].copy()


def planes(vec: np.ndarray, k: int) -> list[int]:
    """Split a GF(2^k) coefficient vector into ``k`` packed bit planes."""
    vec = np.asarray(vec, dtype=np.uint8)
    return [pack((vec >> b) & 1) for b in range(k)]


def from_planes(parts: list[int], dim: int) -> np.ndarray:
    out = np.zeros(dim, dtype=np.uint8)
    for b, part in enumerate(parts):
        if part:
            out |= unpack(part, dim) << b
    return out


class BinarySpan:
    """Row space over GF(2), stored in echelon form keyed by leading bit."""

    def __init__(self, dim: int, vectors: Iterable[int] = ()):
        self.dim = dim
        self._rows: dict[int, int] = {}
        self._pivots: list[int] = []
        self.extend(vectors)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, v: int) -> bool:
        """Insert ``v``; return True if the rank grew."""
        rows = self._rows
        while v:
            lead = v.bit_length() - 1
            row = rows.get(lead)
            if row is None:
                rows[lead] = v
                bisect.insort(self._pivots, lead)
                return True
            v ^= row
        return False

    def extend(self, vectors: Iterable[int]) -> int:
        grown = 0
        for v in vectors:
            grown += self.add(v)
        return grown

    def reduce(self, v: int) -> int:
        """Canonical representative of ``v`` modulo the span (no pivot bits set)."""
        rows = self._rows
        for lead in reversed(self._pivots):
            if v >> lead & 1:
                v ^= rows[lead]
        return v

    def __contains__(self, v: int) -> bool:
        rows = self._rows
        while v:
            row = rows.get(v.bit_length() - 1)
            if row is None:
                return False
            v ^= row
        return True

    def basis(self) -> list[int]:
        return [self._rows[p] for p in self._pivots]

    def contains_span(self, other: "BinarySpan") -> bool:
        return all(v in self for v in other.basis())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinarySpan):
            return NotImplemented
        return self.rank == other.rank and self.contains_span(other)

    def __add__(self, other: "BinarySpan") -> "BinarySpan":
        out = BinarySpan(self.dim, self.basis())
        out.extend(other.basis())
        return out

    # Coefficient vectors over GF(2^k), acted on plane by plane.

    def reduce_vector(self, vec: np.ndarray, field: FieldSpec) -> np.ndarray:
        return from_planes([self.reduce(p) for p in planes(vec, field.k)], self.dim)

    def contains_vector(self, vec: np.ndarray, field: FieldSpec) -> bool:
        return all(p in self for p in planes(vec, field.k))

    def __repr__(self) -> str:
        return f"BinarySpan(dim={self.dim}, rank={self.rank})"


def binary_rank(vectors: Iterable[int], dim: int) -> int:
    return BinarySpan(dim, vectors).rank


def field_rank(rows: np.ndarray, field: FieldSpec) -> int:
    """Rank of a matrix with entries in GF(2^k) (rows are vectors)."""
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.size == 0:
        return 0
    if int(rows.max()) <= 1:
        return binary_rank((pack(r) for r in rows), rows.shape[1])
    mul, inv = field.mul_table, field.inv_table
    work = rows.copy()
    rank = 0
    n_rows, n_cols = work.shape
    for col in range(n_cols):
        if rank == n_rows:
            break
        nz = np.flatnonzero(work[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            work[[rank, piv]] = work[[piv, rank]]
        work[rank] = mul[inv[work[rank, col]], work[rank]]
        below = rank + 1 + np.flatnonzero(work[rank + 1:, col])
        if below.size:
            factors = work[below, col]
            work[below] ^= mul[factors[:, None], work[rank][None, :]]
        rank += 1
    return rank


def gf2_inverse(matrix: np.ndarray) -> np.ndarray:
    """Inverse of a square 0/1 matrix over GF(2) by Gauss-Jordan on packed rows."""
    matrix = np.asarray(matrix, dtype=np.uint8)
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise ValueError("matrix must be square")
    rows = [pack(r) | (1 << (n + i)) for i, r in enumerate(matrix)]
    for col in range(n):
        bit = 1 << col
        piv = next((i for i in range(col, n) if rows[i] & bit), None)
        if piv is None:
            raise ValueError("matrix is singular over GF(2)")
        rows[col], rows[piv] = rows[piv], rows[col]
        prow = rows[col]
        for i in range(n):
            if i != col and rows[i] & bit:
                rows[i] ^= prow
    return np.stack([unpack(r >> n, n) for r in rows])
