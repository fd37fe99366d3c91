import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stablemod import exactfield as ef
from stablemod.errors import InputError
from stablemod.exactfield import PrimeField, Subspace

P = 101


def matrices(max_rows=5, max_cols=5, p=P):
    return st.tuples(st.integers(0, max_rows), st.integers(0, max_cols)).flatmap(
        lambda rc: st.lists(st.integers(0, p - 1), min_size=rc[0] * rc[1], max_size=rc[0] * rc[1]).map(
            lambda xs: np.array(xs, dtype=np.int64).reshape(rc)
        )
    )


def test_rref_identity_and_zero():
    r, piv = ef.rref(np.eye(3, dtype=np.int64), P)
    assert np.array_equal(r, np.eye(3)) and list(piv) == [0, 1, 2]
    r, piv = ef.rref(np.zeros((2, 3), dtype=np.int64), P)
    assert not r.any() and list(piv) == []


def test_rref_rank_one():
    r, piv = ef.rref(np.array([[1, 2], [2, 4]]), P)
    assert r.tolist() == [[1, 2], [0, 0]]
    assert ef.rank(np.array([[1, 2], [2, 4]]), P) == 1


def test_solve_examples():
    b = np.array([[3, 4], [5, 6]])
    x0, n = ef.solve(np.eye(2, dtype=np.int64), b, P)
    assert np.array_equal(x0, b) and n.shape[1] == 0
    assert ef.solve(np.zeros((1, 2), dtype=np.int64), np.array([[1]]), P) is None
    x0, n = ef.solve(np.array([[1, 1]]), np.array([[3]]), P)
    assert x0[:, 0].tolist() == [3, 0]
    assert n[:, 0].tolist() == [100, 1] or n[:, 0].tolist() == [1, 100]


def test_subspace_examples():
    e1 = Subspace.span([[1, 0]], 2, P)
    e2 = Subspace.span([[0, 1]], 2, P)
    assert e1.intersect(e1) == e1
    assert e1.intersect(e2).dim == 0
    assert e1.complement() == e2


def test_non_prime_rejected():
    with pytest.raises(InputError):
        PrimeField(100)
    with pytest.raises(InputError):
        PrimeField(2**31 + 11)


def test_large_prime_matmul_is_exact():
    p = 2147483647
    a = np.array([[p - 1, p - 2], [3, p - 5]], dtype=np.int64)
    expected = (np.array(a, dtype=object) @ np.array(a, dtype=object)) % p
    assert ef.matmul(a, a, p).tolist() == expected.tolist()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    r, piv = ef.rref(m, P)
    r2, piv2 = ef.rref(r, P)
    assert np.array_equal(r, r2) and list(piv) == list(piv2)


@settings(max_examples=60, deadline=None)
@given(matrices(), matrices())
def test_dimension_formula(a, b):
    n = max(a.shape[1], b.shape[1], 1)
    v = Subspace.span(np.pad(a, ((0, 0), (0, n - a.shape[1]))), n, P)
    w = Subspace.span(np.pad(b, ((0, 0), (0, n - b.shape[1]))), n, P)
    assert v.dim + w.dim == v.sum(w).dim + v.intersect(w).dim
    assert v.sum(w).contains(v) and v.contains(v.intersect(w))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.integers(0, 3))
def test_solve_certificate(a, k):
    rng = np.random.default_rng(k)
    x = rng.integers(0, P, size=(a.shape[1], 2))
    b = ef.matmul(a, x, P)
    res = ef.solve(a, b, P)
    assert res is not None
    x0, n = res
    assert np.array_equal(ef.matmul(a, x0, P), b % P)
    if n.size:
        assert not ef.matmul(a, n, P).any()
    assert n.shape[1] == a.shape[1] - ef.rank(a, P)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_complement_is_complementary(m):
    n = m.shape[1]
    v = Subspace.span(m, n, P)
    c = v.complement()
    assert v.sum(c).dim == n and v.intersect(c).dim == 0
