"""The crossed generators inside F D2 and the checks performed on them.

In F D2(n, m, l) with generators a, b the units

    x = a,   y = b + a + 1,   z = y^-1 x^-1 y x

satisfy the defining relations of D1(n, m, l) whenever n >= m > l >= 2, and
the induced linear map F D1 -> F D2 is bijective.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraElement, center_decomposition, group_algebra, unit_inverse
from .gf import GF2, FieldSpec
from .groups import Group, GroupParams, make_group
from .jennings import JenningsBasis, generators, jennings_basis, phi_eval
from .linalg import BinarySpan, field_rank, pack

RELATION_NAMES = (
    "x^(2^n) = 1",
    "y^(2^m) = 1",
    "z^(2^l) = 1",
    "[y, x] = z",
    "[z, x] = z^-2",
    "[z, y] = z^-2",
)


@dataclass
class CrossedBase:
    params: GroupParams
    field: FieldSpec
    group: Group = field(repr=False)
    x: AlgebraElement = field(repr=False)
    y: AlgebraElement = field(repr=False)
    z: AlgebraElement = field(repr=False)
    relations: dict[str, bool] = field(default_factory=dict)


def crossed_base(n: int, m: int, l: int, field: FieldSpec = GF2) -> CrossedBase:
    params = GroupParams.of(2, n, m, l, strict=False)
    G = make_group(params)
    A = group_algebra(G, field)
    a = A.embed(G.index(G.x))
    b = A.embed(G.index(G.y))
    x = a
    y = b + a + 1
    if not (x.augmentation() and y.augmentation()):
        raise ArithmeticError("crossed generators are not units")
    z = unit_inverse(y) * unit_inverse(x) * y * x
    if not z.augmentation():
        raise ArithmeticError("commutator of units is not a unit")
    return CrossedBase(params, field, G, x, y, z)


def identity_base(n: int, m: int, l: int, field: FieldSpec = GF2) -> CrossedBase:
    """The standard generators of F D1 itself (hom matrix is the identity)."""
    params = GroupParams.of(1, n, m, l)
    G = make_group(params)
    A = group_algebra(G, field)
    return CrossedBase(params, field, G, A.embed(G.index(G.x)),
                       A.embed(G.index(G.y)), A.embed(G.index(G.z)))


def _pow2(u: AlgebraElement, e: int) -> AlgebraElement:
    for _ in range(e):
        u = u * u
    return u


def _comm(g: AlgebraElement, h: AlgebraElement) -> AlgebraElement:
    return unit_inverse(g) * unit_inverse(h) * g * h


def verify_relations(base: CrossedBase) -> dict[str, bool]:
    """Check the six D1 relations on (x, y, z) by exact arithmetic."""
    n, m, l = base.params.triple
    x, y, z = base.x, base.y, base.z
    one = x.algebra.one()
    z_inv_sq = unit_inverse(z * z)
    results = (
        _pow2(x, n) == one,
        _pow2(y, m) == one,
        _pow2(z, l) == one,
        _comm(y, x) == z,
        _comm(z, x) == z_inv_sq,
        _comm(z, y) == z_inv_sq,
    )
    base.relations = dict(zip(RELATION_NAMES, map(bool, results)))
    return base.relations


def hom_columns(base: CrossedBase) -> np.ndarray:
    """Matrix whose column for x^a y^b z^c (D1 normal form index) is x^a y^b z^c in the base."""
    G = base.group
    n, m, l = base.params.triple
    order = G.order
    cols = np.zeros((order, order), dtype=np.uint8)
    left = G.table[G.inverses]  # (g v)_k = v[g^-1 k]
    z_pows = [base.x.algebra.one()]
    for _ in range(1, 1 << l):
        z_pows.append(z_pows[-1] * base.z)
    x_elems = []
    g, gx = G.identity, G.index(G.x)
    x_is_group = np.count_nonzero(base.x.coeffs) == 1 and base.x.coeffs[gx] == 1
    for _ in range(1 << n):
        x_elems.append(g)
        g = int(G.table[g, gx])
    x_pows = None if x_is_group else [base.x.power(a) for a in range(1 << n)]
    for c in range(1 << l):
        cur = z_pows[c]
        for b in range(1 << m):
            for a in range(1 << n):
                j = (a << (m + l)) | (b << l) | c
                if x_pows is None:
                    cols[:, j] = cur.coeffs[left[x_elems[a]]]
                else:
                    cols[:, j] = (x_pows[a] * cur).coeffs
            cur = base.y * cur
    return cols


def hom_rank(base: CrossedBase) -> int:
    """Rank of F D1 -> F G sending x^a y^b z^c to the corresponding product in the base."""
    if not base.relations:
        verify_relations(base)
    if not all(base.relations.values()):
        raise ValueError("relations of the base do not hold")
    return field_rank(hom_columns(base).T, base.field)


@dataclass(frozen=True)
class Coefficients:
    """Low-weight coordinates of an element of the augmentation ideal."""

    alpha: int
    beta: int
    gamma: int
    delta: int
    xi: int
    eta: int
    residual: AlgebraElement = field(repr=False, compare=False)


@dataclass(frozen=True)
class BaseProfile:
    A: Coefficients
    B: Coefficients
    lam: int
    mu: int
    nu: int


def _low_terms(J: JenningsBasis) -> list[AlgebraElement]:
    return [J.monomial(1, 0), J.monomial(0, 1), J.monomial(1, 1),
            J.monomial(0, 0, 1), J.monomial(2, 0), J.monomial(0, 2)]


def coefficients(u: AlgebraElement, J: JenningsBasis) -> Coefficients:
    c = J.coords(u)
    if c[J.index(0, 0)]:
        raise ValueError("element is not in the augmentation ideal")
    keys = [(1, 0), (0, 1), (1, 1), (0, 0, 1), (2, 0), (0, 2)]
    vals = [int(c[J.index(*k)]) for k in keys]
    residual = u
    for v, mono in zip(vals, _low_terms(J)):
        residual = residual + mono.scale(v)
    if not J.in_ideal_power(residual, 3):
        raise ArithmeticError("residual is not in the cube of the augmentation ideal")
    return Coefficients(*vals, residual)


def base_profile(A: AlgebraElement, B: AlgebraElement, J: JenningsBasis) -> BaseProfile:
    p = J.group.params
    if p.n < 2 or p.m < 2:
        raise ValueError("profile needs n >= m >= 2")
    F = J.field
    ca, cb = coefficients(A, J), coefficients(B, J)
    lam = F.mul(ca.alpha, cb.beta) ^ F.mul(cb.alpha, ca.beta)
    mu = F.mul(lam, 1 ^ ca.alpha ^ cb.alpha)
    nu = F.mul(lam, 1 ^ ca.beta ^ cb.beta)
    return BaseProfile(ca, cb, lam, mu, nu)


def c_modulo_expected(profile: BaseProfile, J: JenningsBasis) -> AlgebraElement:
    """lambda Z + mu XZ + nu YZ."""
    return (J.monomial(0, 0, 1).scale(profile.lam) + J.monomial(1, 0, 1).scale(profile.mu)
            + J.monomial(0, 1, 1).scale(profile.nu))


def c_modulo_holds(a: AlgebraElement, b: AlgebraElement, J: JenningsBasis) -> bool:
    """Whether C = 1 + [b, a] agrees with lambda Z + mu XZ + nu YZ modulo the fourth power."""
    one = a.algebra.one()
    profile = base_profile(a + one, b + one, J)
    C = _comm(b, a) + one
    return J.in_ideal_power(C + c_modulo_expected(profile, J), 4)


@dataclass
class BaseCheckReport:
    checks: dict[str, bool]
    profile: BaseProfile
    perturbations: int

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _commutator_center_span(G: Group) -> BinarySpan:
    dec = center_decomposition(G, GF2)
    return BinarySpan(G.order, (pack(u.coeffs) for u in dec.commutator_part))


def base_lemma_checks(base: CrossedBase, *, perturbations: int = 20, seed: int = 0) -> BaseCheckReport:
    """Instance checks of the group-base congruences on the crossed base."""
    G, F = base.group, base.field
    n, m, l = base.params.triple
    J = jennings_basis(G, F)
    X, Y, _, _ = generators(J)
    one = base.x.algebra.one()
    A, B = base.x + one, base.y + one
    prof = base_profile(A, B, J)
    checks: dict[str, bool] = {}
    checks["gamma_A = gamma_B = 0"] = prof.A.gamma == 0 and prof.B.gamma == 0
    checks["determinant nonzero"] = prof.lam != 0
    C = base.z + one
    checks["C congruence mod Delta^4"] = J.in_ideal_power(C + c_modulo_expected(prof, J), 4)

    zc = _commutator_center_span(G)
    X2n, Y2n = _pow2(X, n), _pow2(Y, n)
    for name, elem, coef in (("A", A, prof.A), ("B", B, prof.B)):
        lhs = _pow2(elem, n)
        rhs = X2n.scale(F.power(coef.alpha, 1 << n)) + Y2n.scale(F.power(coef.beta, 1 << n))
        checks[f"{name}^(2^n) congruence"] = zc.contains_vector((lhs + rhs).coeffs, F)

    k = 1 << m
    for name, elem, coef in (("A", A, prof.A), ("B", B, prof.B)):
        power = _pow2(elem, m)
        checks[f"phi({name}) matches power map"] = (
            J.in_ideal_power(power, k) and J.layer(power, k) == phi_eval(G, F, coef.alpha, coef.beta)
        )
    # y^(2^m) = 1 in the base forces the image of B to vanish
    checks["phi(B) = 0"] = J.in_ideal_power(_pow2(B, m), k + 1)

    rng = np.random.default_rng(seed)
    high = J.weights >= 3
    stable = True
    for _ in range(perturbations):
        coords = np.where(high, rng.integers(0, F.size, G.order), 0).astype(np.uint8)
        a2 = base.x + J.from_coords(coords)
        stable &= c_modulo_holds(a2, base.y, J)
    checks["C congruence stable under Delta^3 perturbation"] = bool(stable)
    return BaseCheckReport(checks, prof, perturbations)
