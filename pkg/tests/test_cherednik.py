import pytest
from hypothesis import given, settings, strategies as st

from grassmann_daha import cherednik as hv
from grassmann_daha.checks import all_ok, failures
from grassmann_daha.linalg import Matrix
from grassmann_daha.scalars import ONE, Q, S, ZERO, qpow


def _ids(checks):
    return [c.id for c in failures(checks)]


@pytest.fixture(scope="module", params=[(6, 3), (8, 4)], ids=["N6D3", "N8D4"])
def gens(request):
    return hv.build_generators(*request.param)


@pytest.mark.parametrize("N,D", [(6, 3), (7, 3), (8, 4), (10, 5)])
def test_six_relations_hold(N, D):
    checks = hv.verify_hv_relations(hv.build_generators(N, D))
    assert _ids(checks) == []
    assert len(checks) == 7


@pytest.mark.parametrize("N,D", [(6, 3), (8, 4)])
def test_uncorrected_u_prime_breaks_a_mixed_relation(N, D):
    checks = hv.verify_hv_relations(hv.build_generators(N, D, uncorrected_u_prime=True))
    bad = _ids(checks)
    assert "hv.TpTUp" in bad
    # the quadratic relations only see the diagonal and survive
    assert "hv.T-quadratic" not in bad and "hv.Up-quadratic" not in bad


def test_generator_shapes(gens):
    n = gens.dim
    for M in gens.as_tuple():
        assert M.shape == (n, n)


def test_nil_daha_relations(gens):
    assert all_ok(hv.verify_nildaha(gens))


def test_spectral_data(gens):
    assert _ids(hv.verify_spectral(gens)) == []


def test_x_eigenvalues_are_powers_of_tau(gens):
    N, D = gens.ctx.N, gens.ctx.D
    lam = hv.eigenvalues(N, D)
    assert sorted(lam) == list(range(-D, D))
    assert lam[0] == gens.ctx.tau
    assert lam[-1] * gens.ctx.tau == qpow(-1)


def test_omega_closed_forms_are_real(gens):
    om, ov = hv.omega_closed(gens.ctx.N, gens.ctx.D)
    for w in list(om.values()) + list(ov.values()):
        assert w.conjugate() == w
        assert not w.is_zero()


def test_dual_basis_is_invertible_and_orthogonal(gens):
    N, D = gens.ctx.N, gens.ctx.D
    P = hv.dual_basis(N, D)
    P.inverse()
    w = hv.cell_weights(N, D)
    cols = [P.col(j) for j in range(2 * D)]
    # different eigenspaces of A_W are orthogonal
    assert hv.inner(cols[0], cols[1], w) == ZERO
    assert hv.inner(cols[0], cols[-1], w) == ZERO


@pytest.mark.parametrize("N,D", [(6, 3), (7, 3), (8, 4)])
def test_adjacency_from_x(N, D):
    assert _ids(hv.verify_t_action(N, D)) == []


@pytest.mark.parametrize("N,D", [(6, 3), (8, 4)])
def test_projections_and_dual_basis_matrices(N, D):
    assert _ids(hv.verify_projections(N, D)) == []
    assert _ids(hv.verify_dual_basis_matrices(N, D)) == []


@pytest.mark.parametrize("N,D", [(6, 3), (8, 4)])
def test_action_tables_match_matrices(N, D):
    assert _ids(hv.verify_action_tables(N, D)) == []


def test_action_table_drops_negative_targets():
    t = hv.action_table(6, 3, "X", 0, "-")
    assert all(j >= 0 for j, _ in t)


@pytest.mark.parametrize("N,D", [(6, 3), (8, 4)])
def test_h_of_x_identity(N, D):
    assert _ids(hv.verify_h_identity(N, D)) == []


def test_inner_is_hermitian():
    w = hv.cell_weights(6, 3)
    v = [ONE, S, ZERO, Q, ONE, ZERO]
    u = [Q, ZERO, ONE, ONE, S, ONE]
    assert hv.inner(v, u, w) == hv.inner(u, v, w).conjugate()


@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
@settings(max_examples=25, deadline=None)
def test_laurent_at_matrix_is_multiplicative(coeffs):
    from grassmann_daha.laurent import ZetaLaurent
    gens = hv.build_generators(6, 3)
    X = gens.Tp @ gens.T
    Xi = X.inverse()
    f = ZetaLaurent({e: c for e, c in zip(range(-3, 3), coeffs)})
    g = ZetaLaurent({1: ONE, -1: ONE})
    lhs = hv.laurent_at_matrix(f * g, X, Xi)
    rhs = hv.laurent_at_matrix(f, X, Xi) @ hv.laurent_at_matrix(g, X, Xi)
    assert lhs == rhs


@pytest.mark.parametrize("N,D", [(6, 3), (8, 4)])
def test_generators_span_everything(N, D):
    full, dim, _ = hv.word_span(hv.build_generators(N, D))
    assert full and dim == (2 * D) ** 2


def test_single_diagonal_operator_is_not_enough():
    sp = hv.build_spectral(hv.build_generators(6, 3))
    full, dim, _ = hv.word_span([sp.A_star])
    assert not full
    assert dim == 4        # A*_W has four distinct eigenvalues on W
    assert hv.irreducibility_probe([sp.A_star]) is False


def test_probe_with_identity_only():
    assert hv.word_span([Matrix.identity(4)])[1] == 1
