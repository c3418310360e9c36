import numpy as np
import pytest

from dihedral_mip.base import (
    RELATION_NAMES,
    base_lemma_checks,
    base_profile,
    c_modulo_holds,
    coefficients,
    crossed_base,
    hom_columns,
    hom_rank,
    identity_base,
    verify_relations,
)
from dihedral_mip.gf import FieldSpec
from dihedral_mip.jennings import generators, jennings_basis


@pytest.fixture(scope="module")
def base432():
    return crossed_base(4, 3, 2)


def test_relations_and_rank(base432):
    rel = verify_relations(base432)
    assert tuple(rel) == RELATION_NAMES
    assert all(rel.values())
    assert hom_rank(base432) == 512


def test_relations_over_gf4():
    base = crossed_base(4, 3, 2, FieldSpec(2))
    assert all(verify_relations(base).values())
    assert hom_rank(base) == 512


def test_relations_at_n_equals_m():
    base = crossed_base(3, 3, 2)
    assert all(verify_relations(base).values())
    assert hom_rank(base) == 256


def test_relation_failure_detected_when_m_equals_l():
    base = crossed_base(3, 2, 2)
    rel = verify_relations(base)
    assert not rel["y^(2^m) = 1"]
    with pytest.raises(ValueError):
        hom_rank(base)


def test_hom_columns_match_products():
    base = crossed_base(3, 3, 2)
    cols = hom_columns(base)
    G = base.group
    rng = np.random.default_rng(0)
    n, m, l = base.params.triple
    for j in rng.choice(G.order, 25, replace=False):
        a, b, c = int(j) >> (m + l), (int(j) >> l) & ((1 << m) - 1), int(j) & ((1 << l) - 1)
        prod = base.x.power(a) * base.y.power(b) * base.z.power(c)
        assert np.array_equal(cols[:, j], prod.coeffs)


def test_identity_base_has_identity_matrix():
    base = identity_base(3, 2, 2)
    assert np.array_equal(hom_columns(base), np.eye(base.group.order, dtype=np.uint8))
    assert hom_rank(base) == base.group.order


def test_profile_of_crossed_base(base432):
    J = jennings_basis(base432.group, base432.field)
    one = base432.x.algebra.one()
    prof = base_profile(base432.x + one, base432.y + one, J)
    assert (prof.A.alpha, prof.A.beta, prof.A.gamma) == (1, 0, 0)
    assert (prof.B.alpha, prof.B.beta, prof.B.gamma) == (1, 1, 0)
    assert (prof.lam, prof.mu, prof.nu) == (1, 1, 0)


def test_coefficients_reject_non_augmentation():
    J = jennings_basis(crossed_base(4, 3, 2).group)
    with pytest.raises(ValueError):
        coefficients(J.algebra.one(), J)


def test_c_congruence_for_standard_generators():
    base = identity_base(4, 3, 2)
    J = jennings_basis(base.group)
    assert c_modulo_holds(base.x, base.y, J)


@pytest.mark.parametrize("k", [1, 2])
def test_lemma_checks_pass(k):
    report = base_lemma_checks(crossed_base(4, 3, 2, FieldSpec(k)), perturbations=20)
    assert report.passed, report.checks
    assert report.perturbations == 20
