import pytest
from hypothesis import given, settings, strategies as st

from grassmann_daha.qcomb import (
    NonTerminatingSeries, cell_sizes, gauss_binom, grassmann_scalars, phi32, q_pochhammer, qint,
    validate_nd,
)
from grassmann_daha.scalars import ONE, Q, ZERO, qpow, specialize_q


def _count_subspaces(q, n, m):
    # product formula evaluated directly over the integers
    num = den = 1
    for j in range(m):
        num *= q ** (n - j) - 1
        den *= q ** (j + 1) - 1
    return num // den


@given(st.integers(0, 7), st.integers(0, 7))
@settings(max_examples=30, deadline=None)
def test_gaussian_pascal_rule(n, m):
    if m > n:
        assert gauss_binom(n, m) == ZERO
        return
    if 0 < m < n:
        assert gauss_binom(n, m) == gauss_binom(n - 1, m - 1) + qpow(m) * gauss_binom(n - 1, m)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("n,m", [(4, 2), (6, 3), (7, 3)])
def test_gaussian_counts_subspaces(q, n, m):
    assert int(specialize_q(gauss_binom(n, m), q).re) == _count_subspaces(q, n, m)


def test_qint_and_pochhammer():
    assert qint(3) == Q**2 + Q + ONE
    assert q_pochhammer(Q, 2) == (1 - Q) * (1 - Q**2)
    assert q_pochhammer(Q, 0) == ONE


def test_phi32_terminates_at_order():
    # q-Chu-Vandermonde: the sum of (q^-n; q)_k q^k / (q; q)_k vanishes for n >= 1
    assert phi32(qpow(-2), Q, Q, Q, Q, Q) == ZERO


def test_phi32_refuses_nonterminating_input():
    with pytest.raises(NonTerminatingSeries):
        phi32(Q, Q, Q, Q, Q, Q)


@pytest.mark.parametrize("N,D", [(5, 3), (6, 2)])
def test_validate_nd_rejects(N, D):
    with pytest.raises(ValueError):
        validate_nd(N, D)


@pytest.mark.parametrize("N,D", [(6, 3), (7, 3), (8, 4), (10, 5)])
def test_intersection_numbers_are_consistent(N, D):
    g = grassmann_scalars(N, D)
    k = g.b[0]
    for i in range(D + 1):
        assert g.a[i] + g.b[i] + g.c[i] == k
    assert g.c[0] == ZERO and g.b[D] == ZERO
    minus, plus = cell_sizes(N, D)
    assert sum(minus + plus, ZERO) == gauss_binom(N, D)
    assert g.tau * g.tau != ZERO


def test_cell_sizes_at_q2():
    minus, plus = cell_sizes(6, 3)
    got = [int(specialize_q(x, 2).re) for pair in zip(minus, plus) for x in pair]
    assert got == [1, 14, 84, 336, 448, 512]
