"""Exact integer nullspace computation, modular and fraction-free routes."""

import random

import pytest

from motzkinrank.linalg import is_nullvector, nullspace_basis, nullvector


def random_matrix(rng, m, n, bound):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)]


def rank_of(rows, n):
    # rational Gauss, good enough as an independent rank oracle
    from fractions import Fraction

    work = [[Fraction(v) for v in row] for row in rows]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col] / work[r][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
    return r


def test_known_kernel():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = nullspace_basis(rows)
    assert len(basis) == 2
    for v in basis:
        assert is_nullvector(rows, v)
        assert any(v)


def test_full_rank_has_trivial_kernel():
    rows = [[2, 0, 0], [0, 3, 0], [0, 0, 5]]
    assert nullspace_basis(rows) == []
    assert nullvector(rows) is None


def test_zero_matrix():
    rows = [[0, 0, 0, 0]]
    basis = nullspace_basis(rows)
    assert len(basis) == 4
    for v in basis:
        assert is_nullvector(rows, v)


def test_modular_and_exact_routes_agree():
    rng = random.Random(61)
    for trial in range(25):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        rows = random_matrix(rng, m, n, 50)
        fast = nullspace_basis(rows)
        slow = nullspace_basis(rows, force_exact=True)
        assert len(fast) == len(slow) == n - rank_of(rows, n), (trial, rows)
        for v in fast + slow:
            assert is_nullvector(rows, v)


def test_huge_entries_need_many_primes():
    rng = random.Random(7)
    rows = random_matrix(rng, 4, 6, 10**40)
    fast = nullspace_basis(rows)
    slow = nullspace_basis(rows, force_exact=True)
    assert len(fast) == len(slow) == 2
    for v in fast + slow:
        assert is_nullvector(rows, v)


def test_max_vectors_cap():
    rows = [[0, 0, 0]]
    assert len(nullspace_basis(rows, max_vectors=1)) == 1
    assert len(nullspace_basis(rows, max_vectors=2)) == 2


def test_nullvector_returns_single_verified_vector():
    rows = [[1, 1, -2], [3, 3, -6]]
    v = nullvector(rows)
    assert v is not None
    assert is_nullvector(rows, v)
    assert is_nullvector(rows, nullvector(rows, force_exact=True))


def test_wide_and_tall_shapes():
    wide = [[1, 2, 3, 4, 5]]
    basis = nullspace_basis(wide)
    assert len(basis) == 4
    tall = [[1], [2], [3]]
    assert nullspace_basis(tall) == []
