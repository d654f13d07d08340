import dataclasses
import json

import pytest

from grassmann_daha import leonard as ls
from grassmann_daha.qcomb import gauss_binom
from grassmann_daha.scalars import ONE, Q, ZERO, qpow, specialize_q

SIZES = [(6, 3), (7, 3), (8, 4)]


@pytest.fixture(scope="module", params=SIZES, ids=lambda p: f"N{p[0]}D{p[1]}")
def systems(request):
    N, D = request.param
    out = []
    for ps in ls.four_systems(N, D):
        ld = ls.derive(ps)
        out.append((ps, ld, ls.polynomials(ps, ld)))
    return N, D, out


def test_four_systems_have_expected_diameters(systems):
    N, D, out = systems
    assert [ps.d for ps, _, _ in out] == [D, D - 2, D - 1, D - 1]
    assert [ps.name for ps, _, _ in out] == ["Phi", "Phi_perp", "Phi_tilde", "Phi_tilde_perp"]


def test_duality_holds(systems):
    for ps, ld, pf in systems[2]:
        assert ls.duality_check(ps, ld, pf) == []


def test_weights_sum_to_one(systems):
    N, D, out = systems
    for _, ld, _ in out:
        assert sum(ld.m, ZERO) == ONE
    assert out[0][1].m[0] == gauss_binom(N, D).inverse()


def test_eigenvalues_are_distinct(systems):
    for _, ld, _ in systems[2]:
        assert len(set(ld.theta)) == len(ld.theta)
        assert len(set(ld.theta_star)) == len(ld.theta_star)


def test_polynomials_are_orthogonal_for_m(systems):
    # sum_j m_j f_a(theta_j) f_b(theta_j) vanishes for a != b
    for _, ld, pf in systems[2]:
        d = ld.d
        for a in range(d + 1):
            for b in range(a + 1, d + 1):
                s = sum((ld.m[j] * ls.poly_eval(pf.f[a], ld.theta[j]) * ls.poly_eval(pf.f[b], ld.theta[j])
                         for j in range(d + 1)), ZERO)
                assert s == ZERO


def test_standard_bases_on_module(systems):
    N, D, out = systems
    A, Astar, Atil = ls.module_matrices(N, D)
    bases = ls.standard_bases(N, D)
    for ps, ld, _ in out:
        dual = Astar if ps.name in ("Phi", "Phi_perp") else Atil
        assert ls.check_standard_basis(A, dual, bases[ps.name], ld) == []


def test_module_matrix_from_intersection_numbers_matches_table(systems):
    from grassmann_daha.qcomb import grassmann_scalars
    N, D, _ = systems
    A, _, _ = ls.module_matrices(N, D)
    assert ls.module_matrices_from_counts(grassmann_scalars(N, D)) == A


@pytest.mark.parametrize("N,D", SIZES)
def test_projections_are_idempotent_with_expected_ranks(N, D):
    P, Pt = ls.projections(N, D)
    assert P @ P == P
    assert Pt @ Pt == Pt
    assert ls.projection_ranks(N, D) == (D + 1, D)


def test_bad_square_root_is_rejected():
    ps = ls.four_systems(6, 3)[0]
    with pytest.raises(ValueError, match="t\\^2"):
        dataclasses.replace(ps, t=ps.t * Q).validate()


def test_zero_parameter_is_rejected():
    ps = ls.four_systems(6, 3)[0]
    with pytest.raises(ValueError):
        dataclasses.replace(ps, b_star=ZERO).validate()


def test_poly_helpers():
    p = [ONE, -Q]            # 1 - q x
    r = [ZERO, ONE]          # x
    assert ls.poly_mul(p, r) == [ZERO, ONE, -Q]
    assert ls.poly_eval(p, qpow(-1)) == ZERO


def test_system_table_numeric_column():
    ld = ls.derive(ls.four_systems(6, 3)[0])
    rows = ls.system_table(ld, q=2)
    m0 = next(r for r in rows if r["quantity"] == "m" and r["i"] == 0)
    assert m0["numeric"] == "1/1395"
    text = ls.table_csv(rows)
    assert text.splitlines()[0] == "quantity,i,symbolic,numeric"
    assert json.loads(ls.table_json(rows)) == rows
