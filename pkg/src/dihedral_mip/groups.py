"""The groups G_theta(n, m, l) with normal forms x^a y^b z^c.

Relations::

    x^(2^n) = z^(r 2^(l-1)),  y^(2^m) = x^(s 2^m) z^(t 2^(l-1)),  z^(2^l) = 1,
    [y, x] = z,  [z, x] = z^-2,  [z, y] = z^-2

The six families D1..D6 are the canonical parameters theta = (r, s, t)
listed in ``FAMILY_THETA``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

FAMILY_THETA = {
    1: (0, 0, 0),
    2: (0, 1, 0),
    3: (0, 0, 1),
    4: (0, 1, 1),
    5: (1, 0, 0),
    6: (1, 1, 0),
}
THETA_FAMILY = {theta: fam for fam, theta in FAMILY_THETA.items()}


def family_label(family: int) -> str:
    return f"D{family}"


def parse_family(label: str | int) -> int:
    if isinstance(label, int):
        fam = label
    else:
        text = label.strip().upper().lstrip("DƋ")
        fam = int(text)
    if fam not in FAMILY_THETA:
        raise ValueError(f"unknown family {label!r}; expected D1..D6")
    return fam


class GroupElement(NamedTuple):
    """Normal form x^a y^b z^c."""

    a: int
    b: int
    c: int


@dataclass(frozen=True)
class GroupParams:
    """Parameters of one group of order 2^(n+m+l).

    ``degenerate`` admits l = 1 (needed for quotients at (n, m, l-1)).
    ``strict=False`` admits s = 1 when n = m, i.e. the literal presentations
    of D2 and D4 for homocyclic abelianization, which are not canonical
    (D6 at n = m always has s = 1).
    """

    n: int
    m: int
    l: int
    theta: tuple[int, int, int] = (0, 0, 0)
    family: int | None = None
    degenerate: bool = False
    strict: bool = True

    def __post_init__(self) -> None:
        n, m, l = self.n, self.m, self.l
        if not all(isinstance(v, int) for v in (n, m, l)):
            raise TypeError("n, m, l must be integers")
        if not n >= m >= 1:
            raise ValueError(f"need n >= m >= 1, got n={n}, m={m}")
        if l < 1 or (l == 1 and not self.degenerate):
            raise ValueError(f"l = {l} requires l >= 2 (l = 1 only in degenerate mode)")
        theta = tuple(int(v) for v in self.theta)
        object.__setattr__(self, "theta", theta)
        r, s, t = theta
        if r not in (0, 1) or t not in (0, 1):
            raise ValueError(f"r and t must be 0 or 1, got theta={theta}")
        s_max = (1 << (n - m)) - 1
        # D6 at n = m is y^(2^m) = x^(2^m), i.e. s = 1 outside the usual range.
        if not self.strict or (n == m and theta == (1, 1, 0)):
            s_max = max(s_max, 1)
        if not 0 <= s <= s_max:
            raise ValueError(f"s must lie in 0..{s_max}, got theta={theta}")
        if self.family is not None:
            if self.family not in FAMILY_THETA:
                raise ValueError(f"unknown family {self.family!r}")
            if theta != FAMILY_THETA[self.family]:
                raise ValueError(
                    f"theta {theta} is not the representative of D{self.family}"
                )

    @classmethod
    def of(cls, family: int | str, n: int, m: int, l: int, *,
           degenerate: bool = False, strict: bool = True) -> "GroupParams":
        fam = parse_family(family)
        theta = FAMILY_THETA[fam]
        if strict and n == m and fam in (2, 4):
            raise ValueError(
                f"D{fam}({n},{m},{l}) is non-canonical: s must be 0 when n = m"
            )
        return cls(n, m, l, theta, fam, degenerate=degenerate, strict=strict)

    @property
    def order(self) -> int:
        return 1 << (self.n + self.m + self.l)

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.n, self.m, self.l)

    @property
    def label(self) -> str:
        head = family_label(self.family) if self.family else "G%s" % (self.theta,)
        return f"{head}({self.n},{self.m},{self.l})"

    def __str__(self) -> str:
        return self.label


def theta_cell(theta: tuple[int, int, int], n: int, m: int) -> int:
    """Family whose cell of the parameter space contains ``theta``."""
    r, s, t = theta
    if n == m and tuple(theta) == (1, 0, 1):
        return 6
    if r == 0:
        return 1 + (s & 1) + 2 * t
    return 5 + (s & 1)


def reduce_theta(theta: tuple[int, int, int], n: int, m: int, l: int, *,
                 degenerate: bool = False) -> tuple[int, GroupParams]:
    """Canonical family and parameters isomorphic to G_theta(n, m, l)."""
    raw = GroupParams(n, m, l, tuple(theta), degenerate=degenerate)
    r, s, t = raw.theta
    if n == m and raw.theta == (1, 0, 1):
        canon = (1, 1, 0)
    else:
        canon = (r, s & 1, (1 - r) * t)
    fam = THETA_FAMILY[canon]
    assert fam == theta_cell(raw.theta, n, m)
    return fam, GroupParams(n, m, l, canon, fam, degenerate=degenerate)


def _combine(p: GroupParams, a1, b1, c1, a2, b2, c2):
    """Closed-form normal form of (x^a1 y^b1 z^c1)(x^a2 y^b2 z^c2).

    Works elementwise on ints or numpy integer arrays.
    """
    n, m, l = p.n, p.m, p.l
    r, s, t = p.theta
    half = 1 << (l - 1)
    sign_a = 1 - 2 * (a2 & 1)
    sign_b = 1 - 2 * (b2 & 1)
    c = ((b1 & a2 & 1) + c1 * sign_a) * sign_b + c2
    a = a1 + a2
    b = b1 + b2
    carry_b = b >> m
    b = b & ((1 << m) - 1)
    a = a + carry_b * (s << m)
    c = c + carry_b * t * half
    carry_a = a >> n
    a = a & ((1 << n) - 1)
    c = c + carry_a * r * half
    return a, b, c % (1 << l)


class TableGroup:
    """Finite group given by a Cayley table on ids ``0 .. order-1``."""

    table: np.ndarray
    identity: int

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @cached_property
    def inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self.table == self.identity)
        inv = np.empty(self.order, dtype=self.table.dtype)
        inv[rows] = cols
        return inv

    @cached_property
    def squares(self) -> np.ndarray:
        idx = np.arange(self.order)
        return self.table[idx, idx]

    @cached_property
    def orders(self) -> np.ndarray:
        """Element orders (powers of 2)."""
        out = np.ones(self.order, dtype=np.int64)
        cur = np.arange(self.order)
        while True:
            pending = cur != self.identity
            if not pending.any():
                return out
            out[pending] *= 2
            cur = self.squares[cur]

    def power_array(self, elems: np.ndarray, e: int) -> np.ndarray:
        elems = np.asarray(elems)
        if e < 0:
            elems = self.inverses[elems]
            e = -e
        result = np.full(elems.shape, self.identity, dtype=self.table.dtype)
        base = elems
        while e:
            if e & 1:
                result = self.table[result, base]
            e >>= 1
            if e:
                base = self.table[base, base]
        return result

    def pow2_array(self, elems: np.ndarray, e: int) -> np.ndarray:
        """g^(2^e) elementwise."""
        out = np.asarray(elems)
        for _ in range(e):
            out = self.squares[out]
        return out

    def commutator_array(self, g, h):
        """[g, h] = g^-1 h^-1 g h elementwise."""
        t, inv = self.table, self.inverses
        return t[t[inv[g], inv[h]], t[g, h]]

    @cached_property
    def center_mask(self) -> np.ndarray:
        return np.all(self.table == self.table.T, axis=1)


@dataclass(frozen=True)
class ConcreteGroup(TableGroup):
    """A group carried by an explicit multiplication table."""

    table: np.ndarray = field(repr=False, compare=False)
    generators: tuple[int, ...] = ()
    name: str = ""
    identity: int = 0

    def __hash__(self) -> int:
        return id(self)


@dataclass(frozen=True)
class Group(TableGroup):
    """G_theta(n, m, l) with elements indexed by their normal form."""

    params: GroupParams

    identity = 0

    @property
    def order(self) -> int:
        return self.params.order

    def index(self, g: GroupElement | tuple[int, int, int]) -> int:
        a, b, c = g
        p = self.params
        return (a << (p.m + p.l)) | (b << p.l) | c

    def element(self, idx: int) -> GroupElement:
        p = self.params
        return GroupElement(idx >> (p.m + p.l), (idx >> p.l) & ((1 << p.m) - 1),
                            idx & ((1 << p.l) - 1))

    def decode(self, idx: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        p = self.params
        return idx >> (p.m + p.l), (idx >> p.l) & ((1 << p.m) - 1), idx & ((1 << p.l) - 1)

    def elements(self) -> list[GroupElement]:
        return [self.element(i) for i in range(self.order)]

    def check_element(self, g: GroupElement | tuple[int, int, int]) -> GroupElement:
        a, b, c = g
        p = self.params
        if not (0 <= a < 1 << p.n and 0 <= b < 1 << p.m and 0 <= c < 1 << p.l):
            raise ValueError(f"{tuple(g)} is not a normal form of {p.label}")
        return GroupElement(a, b, c)

    # generators
    @property
    def x(self) -> GroupElement:
        return GroupElement(1, 0, 0)

    @property
    def y(self) -> GroupElement:
        return GroupElement(0, 1, 0)

    @property
    def z(self) -> GroupElement:
        return GroupElement(0, 0, 1)

    @property
    def w(self) -> GroupElement:
        return GroupElement(0, 0, 1 << (self.params.l - 1))

    @property
    def one(self) -> GroupElement:
        return GroupElement(0, 0, 0)

    # element arithmetic on normal forms
    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        a, b, c = _combine(self.params, *self.check_element(g), *self.check_element(h))
        return GroupElement(int(a), int(b), int(c))

    def power(self, g: GroupElement, k: int) -> GroupElement:
        if k < 0:
            return self.power(self.inverse(g), -k)
        result, base = self.one, self.check_element(g)
        while k:
            if k & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            k >>= 1
        return result

    def element_order(self, g: GroupElement) -> int:
        order, cur = 1, self.check_element(g)
        while cur != self.one:
            cur = self.multiply(cur, cur)
            order *= 2
        return order

    def inverse(self, g: GroupElement) -> GroupElement:
        return self.power(g, self.element_order(g) - 1)

    def commutator(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """[g, h] = g^-1 h^-1 g h."""
        gi, hi = self.inverse(g), self.inverse(h)
        return self.multiply(self.multiply(gi, hi), self.multiply(g, h))

    def conjugate(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """g^h = h^-1 g h."""
        return self.multiply(self.multiply(self.inverse(h), g), h)

    def word(self, *letters: tuple[GroupElement, int]) -> GroupElement:
        """Evaluate a product of powers, e.g. ``G.word((G.x, 2), (G.y, -1))``."""
        out = self.one
        for g, e in letters:
            out = self.multiply(out, self.power(g, e))
        return out

    # Cayley table
    @cached_property
    def table(self) -> np.ndarray:
        n_el = self.order
        dtype = np.int16 if n_el <= np.iinfo(np.int16).max else np.int32
        out = np.empty((n_el, n_el), dtype=dtype)
        idx = np.arange(n_el, dtype=np.int64)
        a2, b2, c2 = self.decode(idx)
        chunk = max(1, (1 << 20) // n_el)
        for start in range(0, n_el, chunk):
            rows = idx[start:start + chunk, None]
            a1, b1, c1 = self.decode(rows)
            a, b, c = _combine(self.params, a1, b1, c1, a2[None, :], b2[None, :], c2[None, :])
            out[start:start + chunk] = self.index((a, b, c))
        out.setflags(write=False)
        return out

    def concrete(self) -> ConcreteGroup:
        return ConcreteGroup(self.table, (self.index(self.x), self.index(self.y)),
                             self.params.label)

    def __str__(self) -> str:
        return self.params.label


def make_group(params: GroupParams, *, validate: bool = True) -> Group:
    """Build G_theta(n, m, l); with ``validate`` check |G : Z(G)| = 2^(l+1)."""
    G = Group(params)
    if validate and params.l >= 2 and params.order <= 1 << 14:
        center_order = int(G.center_mask.sum())
        if params.order // center_order != 1 << (params.l + 1):
            raise AssertionError(
                f"{params.label}: |G/Z(G)| = {params.order // center_order}, "
                f"expected {1 << (params.l + 1)}"
            )
    return G


def group(family: int | str, n: int, m: int, l: int, **kwargs) -> Group:
    """Shorthand: ``group(1, 4, 3, 2)`` is D1(4,3,2)."""
    validate = kwargs.pop("validate", True)
    return make_group(GroupParams.of(family, n, m, l, **kwargs), validate=validate)
