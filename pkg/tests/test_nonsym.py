from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grassmann_daha import nonsym as ns
from grassmann_daha.checks import failures
from grassmann_daha.cherednik import build_generators, cell_weights, inner
from grassmann_daha.laurent import ZetaLaurent
from grassmann_daha.scalars import ONE, ZERO, specialize_q


def _ids(checks):
    return [c.id for c in failures(checks)]


@pytest.fixture(scope="module", params=[(6, 3), (8, 4)], ids=["N6D3", "N8D4"])
def fam(request):
    return ns.build_family(*request.param)


@pytest.fixture(scope="module")
def form63():
    form, checks = ns.build_form(6, 3)
    assert _ids(checks) == []
    return form


def test_family_properties(fam):
    assert _ids(ns.verify_family(fam)) == []


@pytest.mark.parametrize("N,D", [(6, 3), (8, 4), (10, 5)])
def test_cells_are_polynomials_in_x(N, D):
    assert _ids(ns.verify_module_realization(N, D)) == []


def test_both_constructions_agree(fam):
    assert fam.minus == fam.minus_tilde
    assert fam.plus == fam.plus_tilde


def test_basis_order_and_get(fam):
    b = fam.basis()
    assert len(b) == 2 * fam.D
    assert b[0] == ZetaLaurent.const(ONE)
    assert fam.get(-1, "+").is_zero()
    assert fam.get(fam.D, "-") == fam.minus_D


def test_recurrences(fam):
    assert _ids(ns.verify_recurrences(fam.N, fam.D, fam)) == []


def test_recurrence_tables_have_four_entries(fam):
    tabs = ns.recurrence_tables(fam.N, fam.D, fam)
    assert sorted(tabs) == ["X+", "X-", "Xinv+", "Xinv-"]
    assert all(len(t) == fam.D for t in tabs.values())


def test_regeneration_rebuilds_every_polynomial(fam):
    regen = ns.regenerate_by_recurrence(fam.N, fam.D)
    for i in range(fam.D + 1):
        for s in ns.SIGNS:
            assert regen[(i, s)] == fam.get(i, s)


def test_expand_rejects_out_of_window(fam):
    with pytest.raises(ValueError):
        ns.expand(ZetaLaurent.monomial(fam.D + 3), fam)


@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
@settings(max_examples=25, deadline=None)
def test_expand_reconstructs(coeffs):
    fam = ns.build_family(6, 3)
    f = ZetaLaurent({e: c for e, c in zip(range(-3, 3), coeffs)})
    coords = ns.expand(f, fam)
    back = ZetaLaurent()
    for (i, s), c in coords.items():
        back = back + fam.get(i, s) * c
    assert back == f
    assert all(i < 3 for i, _ in coords)


def test_gram_is_diagonal_of_cell_sizes(form63):
    fam = ns.build_family(6, 3)
    G = ns.gram_matrix(form63, fam)
    for a, w in enumerate(cell_weights(6, 3)):
        for b in range(6):
            assert G[a, b] == (w if a == b else ZERO)


def test_gram_at_q2(form63):
    checks = ns.verify_orthogonality(6, 3, q=2, form=form63)
    assert _ids(checks) == []
    G = ns.gram_matrix(form63, ns.build_family(6, 3))
    assert specialize_q(G[2, 2], 2) == 84


def test_counted_sizes_must_match():
    wrong = [Fraction(n) for n in (1, 14, 85, 336, 448, 512)]
    checks = ns.verify_orthogonality(6, 3, q=2, counted_sizes=wrong)
    assert "orthogonality.gram-at-q=2" in _ids(checks)


@pytest.mark.parametrize("seed", [0, 1, 7])
def test_quadrature(seed, form63):
    c = ns.quadrature_check(6, 3, pairs=30, seed=seed, form=form63)
    assert c.ok, c.witness


@given(st.lists(st.integers(-2, 2), min_size=12, max_size=12))
@settings(max_examples=15, deadline=None)
def test_form_matches_module_inner_product(coeffs):
    # <f, g>_L = <f(X) x, g(X) x> on W for arbitrary f, g in L
    form, _ = ns.build_form(6, 3, check=False)
    gens = build_generators(6, 3)
    X = gens.Tp @ gens.T
    Xi = X.inverse()
    f = ZetaLaurent({e: c for e, c in zip(range(-3, 3), coeffs[:6])})
    g = ZetaLaurent({e: c for e, c in zip(range(-3, 3), coeffs[6:])})
    x = [ONE] + [ZERO] * 5
    rhs = inner(f.apply(X, x, Xi), g.apply(X, x, Xi), cell_weights(6, 3))
    assert form(f, g) == rhs


def test_auxiliaries_minimal_polynomial_degree():
    aux = ns.build_auxiliaries(6, 3)
    assert aux.mu.window() == (6, 0)
