import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linrel import DimensionError, Subspace, complement, contains, distance, intersect, project, span, subspace_sum
from linrel.subspace import null_basis, random_subspace


def full(n):
    return Subspace.full(n)


def test_span_collinear():
    E = span([np.array([1.0, 0.0]), np.array([2.0, 0.0])], 2)
    assert E.dim == 1
    assert E.equals(span([np.array([1.0, 0.0])], 2))


def test_span_empty_and_orthogonal_pair():
    assert span([], 3).dim == 0
    E = span([np.array([1.0, 1.0]), np.array([1.0, -1.0])], 2)
    assert E.dim == 2 and E.equals(full(2))


def test_span_rejects_wrong_length():
    with pytest.raises(DimensionError):
        span([np.zeros(3)], 2)


def test_contains_examples():
    E = span([np.array([1.0, 0.0])], 2)
    assert contains(E, np.array([2.0, 0.0]))
    assert not contains(E, np.array([0.0, 1.0]))
    assert contains(Subspace.zero(3), np.zeros(3))
    with pytest.raises(DimensionError):
        contains(E, np.zeros(3))


def test_intersect_examples():
    a = span([np.array([1.0, 0.0])], 2)
    b = span([np.array([0.0, 1.0])], 2)
    assert intersect(a, b).dim == 0
    assert intersect(a, a).equals(a)
    diag = span([np.array([1.0, 1.0])], 2)
    assert intersect(full(2), diag).equals(diag)
    with pytest.raises(DimensionError):
        intersect(a, full(3))


def test_sum_complement_distance():
    a = span([np.array([1.0, 0.0])], 2)
    b = span([np.array([0.0, 1.0])], 2)
    assert subspace_sum(a, b).equals(full(2))
    assert complement(Subspace.zero(3)).equals(full(3))
    assert distance(a, np.array([3.0, 4.0])) == pytest.approx(4.0)
    assert np.allclose(project(a, np.array([3.0, 4.0])), [3.0, 0.0])


def test_null_basis_of_empty_rows_is_identity():
    assert np.allclose(null_basis(np.zeros((0, 3))), np.eye(3))


def test_residual_dim_mismatch_is_finite():
    assert span([np.array([1.0, 0.0])], 2).residual(full(2)) == 1.0


dims = st.integers(min_value=1, max_value=7)


@st.composite
def subspace_pairs(draw):
    n = draw(dims)
    seed = draw(st.integers(0, 2**32 - 1))
    field = draw(st.sampled_from(["real", "complex"]))
    rng = np.random.default_rng(seed)
    E = random_subspace(rng, n, draw(st.integers(0, n)), field)
    F = random_subspace(rng, n, draw(st.integers(0, n)), field)
    v = rng.standard_normal(n)
    return E, F, v


@settings(max_examples=150, deadline=None)
@given(subspace_pairs())
def test_orthonormal_and_pythagoras(pair):
    E, _, v = pair
    B = E.basis
    assert np.allclose(B.conj().T @ B, np.eye(E.dim), atol=1e-12)
    p = project(E, v)
    assert np.linalg.norm(p) ** 2 + distance(E, v) ** 2 == pytest.approx(np.linalg.norm(v) ** 2, rel=1e-10)


@settings(max_examples=150, deadline=None)
@given(subspace_pairs())
def test_complement_dimension_and_orthogonality(pair):
    E, _, _ = pair
    C = complement(E)
    assert E.dim + C.dim == E.ambient_dim
    if E.dim and C.dim:
        assert np.max(np.abs(E.basis.conj().T @ C.basis)) < 1e-12
    assert subspace_sum(E, C).equals(Subspace.full(E.ambient_dim))


@settings(max_examples=150, deadline=None)
@given(subspace_pairs())
def test_grassmann_and_containment(pair):
    E, F, _ = pair
    I, S = intersect(E, F), subspace_sum(E, F)
    assert I.dim + S.dim == E.dim + F.dim
    assert E.contains_subspace(I) and F.contains_subspace(I)
    assert S.contains_subspace(E) and S.contains_subspace(F)


def test_nested_random_subspace(rng):
    inner = random_subspace(rng, 6, 2, "complex")
    outer = random_subspace(rng, 6, 4, "complex", containing=inner)
    mid = random_subspace(rng, 6, 3, "complex", within=outer, containing=inner)
    assert outer.contains_subspace(mid) and mid.contains_subspace(inner)


def test_zero_dimensional_ambient():
    E = Subspace.zero(0)
    assert E.dim == 0 and complement(E).dim == 0
