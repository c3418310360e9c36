"""Table-driven arithmetic in GF(2^k), 1 <= k <= 8.

Elements are the integers ``0 .. 2^k - 1`` read as polynomials over GF(2)
in a root of the fixed reduction polynomial for that degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Fixed per degree so coordinates are reproducible across runs.
REDUCTION_POLYNOMIALS = {
    1: 0b11,          # x + 1
    2: 0b111,         # x^2 + x + 1
    3: 0b1011,        # x^3 + x + 1
    4: 0b10011,       # x^4 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    6: 0b1000011,     # x^6 + x + 1
    7: 0b10000011,    # x^7 + x + 1
    8: 0b100011011,   # x^8 + x^4 + x^3 + x + 1
}


def clmul_reduce(a: int, b: int, poly: int, k: int) -> int:
    """Carry-less product of ``a`` and ``b`` reduced modulo ``poly``."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a >> k & 1:
            a ^= poly
    return acc


@lru_cache(maxsize=None)
def _tables(k: int) -> tuple[np.ndarray, np.ndarray]:
    size = 1 << k
    poly = REDUCTION_POLYNOMIALS[k]
    mul = np.zeros((size, size), dtype=np.uint8)
    for a in range(size):
        for b in range(a, size):
            mul[a, b] = mul[b, a] = clmul_reduce(a, b, poly, k)
    inv = np.zeros(size, dtype=np.uint8)
    for a in range(1, size):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
    mul.setflags(write=False)
    inv.setflags(write=False)
    return mul, inv


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(2^k)."""

    k: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or not 1 <= self.k <= 8:
            raise ValueError(f"field degree must be in 1..8, got {self.k!r}")

    @property
    def size(self) -> int:
        return 1 << self.k

    @property
    def poly(self) -> int:
        return REDUCTION_POLYNOMIALS[self.k]

    @property
    def mul_table(self) -> np.ndarray:
        return _tables(self.k)[0]

    @property
    def inv_table(self) -> np.ndarray:
        return _tables(self.k)[1]

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in GF(2^k)")
        return int(self.inv_table[a])

    def power(self, a: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(a), -e)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def __str__(self) -> str:
        return f"GF({self.size})"


GF2 = FieldSpec(1)
