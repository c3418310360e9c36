import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dihedral_mip.gf import FieldSpec
from dihedral_mip.linalg import BinarySpan, field_rank, from_planes, gf2_inverse, pack, planes, unpack

from oracles import gauss_rank


@given(st.lists(st.integers(0, 1), min_size=1, max_size=70))
def test_pack_roundtrip(bits):
    arr = np.array(bits, dtype=np.uint8)
    assert np.array_equal(unpack(pack(arr), len(bits)), arr)


@given(st.integers(1, 4), st.lists(st.integers(0, 15), min_size=1, max_size=40))
def test_planes_roundtrip(k, vals):
    vec = np.array(vals, dtype=np.uint8) & ((1 << k) - 1)
    assert np.array_equal(from_planes(planes(vec, k), len(vals)), vec)


@settings(max_examples=60)
@given(st.integers(1, 3), st.integers(1, 8), st.integers(1, 10), st.randoms(use_true_random=False))
def test_field_rank_matches_textbook_elimination(k, rows, cols, rnd):
    F = FieldSpec(k)
    mat = np.array([[rnd.randrange(F.size) for _ in range(cols)] for _ in range(rows)], dtype=np.uint8)
    assert field_rank(mat, F) == gauss_rank(mat, F)


@settings(max_examples=60)
@given(st.lists(st.integers(0, (1 << 12) - 1), max_size=20), st.integers(0, (1 << 12) - 1))
def test_span_membership_and_reduction(vectors, probe):
    span = BinarySpan(12, vectors)
    assert span.rank == gauss_rank([unpack(v, 12) for v in vectors] or [[0] * 12], FieldSpec(1))
    for v in vectors:
        assert v in span
    red = span.reduce(probe)
    assert (probe ^ red) in span
    assert (red == 0) == (probe in span)
    # reduction is canonical: members of the same coset reduce identically
    if vectors:
        assert span.reduce(probe ^ vectors[0]) == red


def test_span_equality_and_sum():
    a = BinarySpan(4, [0b0011, 0b0110])
    b = BinarySpan(4, [0b0101, 0b0011])
    assert a == b
    assert (a + BinarySpan(4, [0b1000])).rank == 3


def test_vector_membership_over_gf4(gf4):
    span = BinarySpan(3, [0b011])
    assert span.contains_vector(np.array([2, 2, 0], dtype=np.uint8), gf4)
    assert not span.contains_vector(np.array([2, 3, 0], dtype=np.uint8), gf4)


@settings(max_examples=40)
@given(st.integers(1, 12), st.randoms(use_true_random=False))
def test_gf2_inverse(n, rnd):
    # random unitriangular times permutation: always invertible
    low = np.tril(np.array([[rnd.randrange(2) for _ in range(n)] for _ in range(n)]), -1) + np.eye(n, dtype=int)
    perm = np.eye(n, dtype=int)[rnd.sample(range(n), n)]
    mat = (low @ perm % 2).astype(np.uint8)
    inv = gf2_inverse(mat)
    assert np.array_equal((mat.astype(int) @ inv) % 2, np.eye(n, dtype=int))


def test_gf2_inverse_singular():
    with pytest.raises(ValueError):
        gf2_inverse(np.array([[1, 1], [1, 1]], dtype=np.uint8))
