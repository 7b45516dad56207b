import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pd0.linalg import (GF2Subspace, HowellBasis, IntegerEchelon, gf2_rank, gf2_solve, kernel_mod,
                        saturated_image_mod, smith_normal_form, solve_mod, solve_torus, xgcd)

small_mats = st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=m, max_size=m)))


def test_xgcd():
    for a, b in [(12, 18), (0, 5), (7, 0), (-4, 6)]:
        x, y, g = xgcd(a, b)
        assert a * x + b * y == g and g >= 0


@settings(max_examples=60, deadline=None)
@given(small_mats)
def test_smith_identities(M):
    M = np.array(M, dtype=np.int64)
    sf = smith_normal_form(M)
    S = np.zeros(M.shape, dtype=object)
    for i, d in enumerate(sf.diag):
        S[i, i] = d
    assert np.array_equal(np.array(sf.U, dtype=object) @ M.astype(object) @ np.array(sf.V, dtype=object), S)
    assert np.array_equal(np.array(sf.U, dtype=object) @ np.array(sf.U_inv, dtype=object),
                          np.eye(M.shape[0], dtype=object))
    nz = [d for d in sf.diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@settings(max_examples=40, deadline=None)
@given(small_mats, st.sampled_from([2, 4, 6, 8]))
def test_kernel_and_solve_mod_bruteforce(M, N):
    M = np.array(M, dtype=np.int64)
    m, n = M.shape
    everything = [np.array(v) for v in itertools.product(range(N), repeat=n)]
    kernel = {tuple(v) for v in everything if not ((M @ v) % N).any()}
    gens = kernel_mod(M, N)
    span = {tuple([0] * n)}
    frontier = list(span)
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = tuple((np.array(v) + np.array(g)) % N)
            if w not in span:
                span.add(w)
                frontier.append(w)
    assert span == kernel
    images = {tuple((M @ v) % N) for v in everything}
    for b in itertools.product(range(N), repeat=m):
        x = solve_mod(M, list(b), N)
        if tuple(b) in images:
            assert x is not None and tuple((M @ np.array(x)) % N) == tuple(b)
        else:
            assert x is None


@settings(max_examples=30, deadline=None)
@given(small_mats, st.sampled_from([4, 8]))
def test_saturated_image_contains_image(M, N):
    M = np.array(M, dtype=np.int64)
    gens = saturated_image_mod(M, N)
    H = HowellBasis(N, M.shape[0], gens)
    for j in range(M.shape[1]):
        assert H.contains(list(M[:, j] % N))


def test_howell_lexleast_bruteforce():
    N, k = 8, 3
    gens = [[2, 4, 0], [0, 2, 6]]
    H = HowellBasis(N, k, gens)
    sub = {(0, 0, 0)}
    frontier = [(0, 0, 0)]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = tuple((a + b) % N for a, b in zip(v, g))
            if w not in sub:
                sub.add(w)
                frontier.append(w)
    assert H.order() == len(sub)
    for v in itertools.product(range(N), repeat=k):
        coset = [tuple((a + b) % N for a, b in zip(v, s)) for s in sub]
        assert tuple(H.reduce(list(v))) == min(coset)


def test_integer_echelon_left_kernel():
    E = IntegerEchelon(np.array([[2], [2]]))
    assert E.rank == 1
    L = E.left_kernel()
    assert not (L @ np.array([[2], [2]])).any()
    D = np.array([[1, -1, 0], [0, 1, -1], [-1, 0, 1], [2, 0, 0]])
    E = IntegerEchelon(D)
    assert np.array_equal(E.U @ D, E.H)
    assert not (E.left_kernel() @ D).any()


def test_torus_membership_and_solve():
    D = np.array([[2, 0], [0, 3], [1, 1]])
    E = IntegerEchelon(D)
    rng = np.random.default_rng(0)
    for _ in range(50):
        x = rng.integers(0, 24, 2)
        rhs = (D @ x) % 24
        assert E.membership(rhs, 24) is None
        num, den = E.solve_torus(rhs, 24)
        assert not (((D @ np.array(num)) * 24 - np.array(rhs) * den) % (24 * den)).any()
        num2, den2 = solve_torus(D, rhs, 24)
        assert not (((D @ np.array(num2)) * 24 - np.array(rhs) * den2) % (24 * den2)).any()
    # 2x = a, x = 0 forces a = 0 on the torus
    D = np.array([[2], [1]])
    E = IntegerEchelon(D)
    u = E.membership([1, 0], 2)
    assert u is not None and (u @ D == 0).all() and (u @ np.array([1, 0])) % 2
    assert E.solve_torus([1, 0], 2) is None


def test_gf2():
    A = np.array([[1, 1, 0], [0, 1, 1]])
    x0, ker = gf2_solve(A, np.array([1, 0]))
    assert np.array_equal(A @ x0 % 2, [1, 0])
    assert len(ker) == 1 and not (A @ ker[0] % 2).any()
    assert gf2_solve(np.array([[1, 1], [1, 1]]), np.array([1, 0])) is None
    assert gf2_rank(A) == 2
    S = GF2Subspace(np.array([[1, 1, 0]]), 3)
    assert S.contains(np.array([1, 1, 0])) and not S.contains(np.array([1, 0, 0]))
    assert S.dim == 1
    assert tuple(S.reduce(np.array([1, 1, 1]))) == tuple(S.reduce(np.array([0, 0, 1])))
