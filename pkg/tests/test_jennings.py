import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dihedral_mip.algebra import group_algebra, lie_commutator
from dihedral_mip.gf import FieldSpec
from dihedral_mip.groups import group
from dihedral_mip.jennings import (
    JenningsMonomial,
    agemo_center_equality,
    generators,
    ideal_powers_by_products,
    jennings_basis,
    phi_eval,
    phi_kernel_size,
    psi_eval,
    psi_modulus,
    reduce_modulo,
    weight,
    weight_of_w,
)
from dihedral_mip.linalg import pack

from oracles import subset_matrix


def mono_names(J, k):
    return sorted(str(mu) for mu in J.monomials if mu.weight == k)


@pytest.mark.parametrize("f, q", [(1, 4), (2, 4), (3, 8), (4, 8), (5, 16), (6, 16)])
def test_weight_of_w(f, q):
    assert weight_of_w(group(f, 4, 3, 2).params) == q


def test_low_layers():
    J = jennings_basis(group(1, 2, 2, 2))
    dims = J.layer_dimensions()
    assert [dims[k] for k in (1, 2, 3)] == [2, 4, 6]
    assert mono_names(J, 1) == sorted(["X", "Y"])
    assert mono_names(J, 2) == sorted(["X^2", "XY", "Y^2", "Z"])
    assert mono_names(J, 3) == sorted(["X^3", "X^2Y", "XY^2", "XZ", "Y^3", "YZ"])


@pytest.mark.parametrize("f", range(1, 7))
def test_weight_spans_equal_product_powers(f):
    G = group(f, 3, 2, 2, strict=False)
    J = jennings_basis(G)
    top = int(J.weights.max())
    spans = ideal_powers_by_products(G, top + 1)
    for k in range(1, top + 2):
        assert spans[k - 1] == J.ideal_power_span(k), k
    dims = J.layer_dimensions()
    assert sum(v for w, v in dims.items() if w >= 1) == G.order - 1


@pytest.mark.parametrize("spec", [(1, 2, 2, 2), (4, 3, 1, 2), (5, 2, 1, 3)])
def test_change_of_basis_is_subset_matrix(spec):
    J = jennings_basis(group(*spec))
    S = subset_matrix(J.group.order)
    assert np.array_equal(J.matrix, S)
    assert np.array_equal(J.inverse_matrix, S)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from([1, 2]))
def test_coords_roundtrip(seed, k):
    F = FieldSpec(k)
    J = jennings_basis(group(3, 3, 1, 2), F)
    rng = np.random.default_rng(seed)
    c = rng.integers(0, F.size, J.group.order).astype(np.uint8)
    assert np.array_equal(J.coords(J.from_coords(c)), c)


def test_weights_of_basic_elements():
    J = jennings_basis(group(3, 4, 3, 2))
    X, Y, Z, W = generators(J)
    assert weight(X + Y) == 1
    assert weight(X * Y + Y * X) == 2
    assert weight(Z) == 2
    assert J.in_ideal_power(W, J.q) and not J.in_ideal_power(W, J.q + 1)
    assert weight(X + X) == float("inf")


def test_commutator_identity_modulo_cube():
    J = jennings_basis(group(1, 3, 2, 2))
    X, Y, Z, _ = generators(J)
    one = J.algebra.one()
    assert lie_commutator(X, Y) == Z + X * Z + Y * Z + X * Y * Z
    assert J.in_ideal_power(lie_commutator(X, Y) + Z, 3)
    assert lie_commutator(X * X, Y).is_zero() and lie_commutator(Y * Y, X).is_zero()
    assert one + one == J.algebra.zero()


def closed_form_layer(J, alpha, beta):
    F = J.field
    G = J.group
    m = G.params.m
    A = J.algebra
    one = A.one()
    e = 1 << m
    xe = A.embed(G.index(G.power(G.x, e))) + one
    ye = A.embed(G.index(G.power(G.y, e))) + one
    ze = A.embed(G.index(G.power(G.z, e >> 1))) + one
    expr = xe.scale(F.power(alpha, e)) + ye.scale(F.power(beta, e)) + ze.scale(F.power(F.mul(alpha, beta), e >> 1))
    assert J.in_ideal_power(expr, e)
    return J.layer(expr, e)


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("f", range(1, 7))
def test_phi_closed_form(f, k):
    F = FieldSpec(k)
    G = group(f, 3, 2, 2)
    J = jennings_basis(G, F)
    for a, b in itertools.product(F.elements(), repeat=2):
        assert phi_eval(G, F, a, b) == closed_form_layer(J, a, b)


def test_phi_well_defined_modulo_square():
    F = FieldSpec(2)
    G = group(4, 3, 2, 2)
    J = jennings_basis(G, F)
    X, Y, _, _ = generators(J)
    rng = np.random.default_rng(3)
    high = J.weights >= 2
    k = 1 << G.params.m
    for _ in range(100):
        a, b = (int(v) for v in rng.integers(0, 4, 2))
        T = J.from_coords(np.where(high, rng.integers(0, 4, G.order), 0))
        u = X.scale(a) + Y.scale(b) + T
        p = u
        for _ in range(G.params.m):
            p = p * p
        assert J.in_ideal_power(p, k)
        assert J.layer(p, k) == phi_eval(G, F, a, b)


def test_kernel_sizes_small():
    # n > m > l = 2 fails at this order, so use the m = l column at (3, 2, 2)
    sizes = [phi_kernel_size(group(f, 3, 2, 2)) for f in range(1, 7)]
    assert sizes == [2, 1, 1, 2, 2, 2]


def test_gamma_is_two_sided_and_has_expected_basis():
    G = group(5, 3, 2, 2)
    J = jennings_basis(G)
    A = J.algebra
    gamma = J.gamma_span
    assert gamma.rank == len(J.gamma_basis())
    assert gamma.rank == G.order - (1 << (G.params.n + G.params.m))
    gens = [A.embed(G.index(v)) for v in (G.x, G.y)]
    for vec in gamma.basis()[::5]:
        u = A.element(np.unpackbits(np.frombuffer(vec.to_bytes((G.order + 7) // 8, "little"), dtype=np.uint8),
                                    bitorder="little")[:G.order])
        for g in gens:
            assert pack((u * g).coeffs) in gamma and pack((g * u).coeffs) in gamma


def test_gamma_powers_descend():
    J = jennings_basis(group(1, 2, 2, 3))
    ranks = [J.gamma_power_span(j).rank for j in range(0, 10)]  # Z^8 = 0
    assert ranks[0] == J.group.order
    assert all(a > b for a, b in zip(ranks, ranks[1:]) if a)
    assert ranks[-1] == 0


@pytest.mark.parametrize("f", [3, 5])
@pytest.mark.parametrize("k", [1, 2])
def test_psi_image(f, k):
    F = FieldSpec(k)
    G = group(f, 4, 3, 2)
    J = jennings_basis(G, F)
    X, Y, Z, W = generators(J)
    mod = psi_modulus(J)
    h = 1 << (G.params.l - 1)
    Xh, Yh = X ** h, Y ** h
    rng = np.random.default_rng(k)
    high = J.weights >= 2
    for trial in range(40):
        lam, mu, nu = (int(v) for v in rng.integers(0, F.size, 3))
        T = J.from_coords(np.where(high, rng.integers(0, F.size, G.order), 0)) if trial else J.algebra.zero()
        arg = Z.scale(lam) + (X * Z).scale(mu) + (Y * Z).scale(nu) + T * Z
        expected = W.scale(F.power(lam, h)) + (Xh * W).scale(F.power(mu, h)) + (Yh * W).scale(F.power(nu, h))
        assert psi_eval(arg) == reduce_modulo(expected, mod)


def test_psi_image_terms_independent():
    J = jennings_basis(group(5, 4, 3, 2))
    X, Y, _, W = generators(J)
    mod = psi_modulus(J)
    h = 1 << (J.group.params.l - 1)
    terms = [W, X ** h * W, Y ** h * W]
    for mask in range(1, 8):
        s = J.algebra.zero()
        for i in range(3):
            if mask >> i & 1:
                s = s + terms[i]
        assert not reduce_modulo(s, mod).is_zero()


def test_psi_requires_gamma():
    J = jennings_basis(group(5, 3, 2, 2))
    X, _, _, _ = generators(J)
    with pytest.raises(ValueError):
        psi_eval(X)


@pytest.mark.parametrize("spec, r", [((1, 2, 2, 2), 2), ((5, 3, 2, 2), 2), ((5, 3, 2, 2), 3), ((3, 3, 2, 2), 2)])
def test_agemo_center_equality(spec, r):
    assert agemo_center_equality(group(*spec), FieldSpec(1), r).equal


def test_agemo_center_requires_r_at_least_l():
    with pytest.raises(ValueError):
        agemo_center_equality(group(1, 2, 2, 2), FieldSpec(1), 1)


def test_monomial_string():
    assert str(JenningsMonomial(5, 2, 1, 1, 0)) == "X^2YZ"
    assert str(JenningsMonomial(0, 0, 0, 0, 0)) == "1"


def test_basis_requires_l_at_least_two():
    with pytest.raises(ValueError):
        jennings_basis(group(1, 2, 1, 1, degenerate=True))


@pytest.mark.parametrize("triple", [(3, 2, 2), (4, 3, 3)])
def test_power_map_kernel_at_m_equals_l_by_products(triple):
    # augmentation ideal powers from products alone, no weighted basis involved
    n, m, l = triple
    k = 1 << m
    for f, in_next in ((6, True), (2, False)):
        G = group(f, *triple)
        spans = ideal_powers_by_products(G, k + 1)
        A = group_algebra(G)
        X = A.embed(G.index(G.x)) + 1
        Y = A.embed(G.index(G.y)) + 1
        p = X + Y
        for _ in range(m):
            p = p * p
        assert pack(p.coeffs) in spans[k - 1]
        assert (pack(p.coeffs) in spans[k]) is in_next
