import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grassmann_daha import geometry as geo
from grassmann_daha.fields import GF
from grassmann_daha.leonard import module_matrices
from grassmann_daha.qcomb import grassmann_scalars
from grassmann_daha.scalars import specialize_q


@pytest.mark.parametrize("q,N,D", [(2, 4, 2), (3, 4, 2), (2, 5, 2), (2, 6, 3), (4, 4, 2)])
def test_enumeration_matches_gaussian_binomial(q, N, D):
    subs = geo.enumerate_subspaces(GF(q), N, D)
    assert len(subs) == geo.count_subspaces(q, N, D)
    assert len({s.rows for s in subs}) == len(subs)


def test_budget_is_enforced():
    with pytest.raises(geo.BudgetExceeded):
        geo.GrassmannGraph(3, 6, 3, budget=1000)


def test_distance_is_a_metric():
    g = geo.GrassmannGraph(2, 5, 2)
    rng = np.random.default_rng(1)
    idx = rng.integers(g.num_vertices, size=6)
    subs = [g.subspace(int(i)) for i in idx]
    for a in subs:
        assert geo.distance(a, a) == 0
        for b in subs:
            assert geo.distance(a, b) == geo.distance(b, a)
            for c in subs:
                assert geo.distance(a, c) <= geo.distance(a, b) + geo.distance(b, c)


def test_bfs_agrees_with_rank_distance():
    g = geo.GrassmannGraph(2, 5, 2)
    d = g.bfs_distances(0)
    x = g.subspace(0)
    for v in range(0, g.num_vertices, 7):
        assert d[v] == geo.distance(x, g.subspace(v))


def test_neighbours_have_distance_one(graph_263):
    g, x, *_ = graph_263
    nb = g.neighbors(x)
    assert len(nb) == int(specialize_q(grassmann_scalars(6, 3).b[0], 2).re)
    assert all(geo.distance(x, y) == 1 for y in nb)


def test_clique_is_delsarte(graph_263):
    g, x, H, clique, _ = graph_263
    assert clique[0] == x
    assert len(clique) == int(specialize_q(grassmann_scalars(6, 3).clique_size, 2).re)
    for a in clique:
        assert a.contains(H)
        for b in clique:
            assert geo.distance(a, b) == (0 if a == b else 1)


def test_hyperplane_must_lie_in_base():
    g = geo.GrassmannGraph(2, 6, 3)
    x = g.subspace(0)
    other = g.subspace(g.num_vertices - 1)
    H = geo.Subspace.span(g.ff, 6, other.array()[:-1])
    with pytest.raises(ValueError):
        geo.build_delsarte_clique(x, H)


def test_cell_sizes_and_radius(graph_263):
    *_, part = graph_263
    assert part.cell_sizes == [1, 14, 84, 336, 448, 512]
    assert int(part.dist_clique.max()) == 2


def test_partition_is_equitable_and_matches_symbolic(graph_263):
    *_, part = graph_263
    nums = geo.empirical_intersection_numbers(part)
    assert nums.discrepancies == []
    A, _, _ = geo.quotient_matrices(part, nums)
    SA, _, _ = module_matrices(6, 3)
    for k in range(6):
        for j in range(6):
            assert A[k][j] == specialize_q(SA[k, j], 2)


def test_sampled_tallies_agree_with_full(graph_263):
    *_, part = graph_263
    full = geo.empirical_intersection_numbers(part)
    sample = geo.empirical_intersection_numbers(part, sample_size=40)
    assert (sample.quotient == full.quotient).all()
    assert sample.discrepancies == []


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=5, deadline=None)
def test_random_base_pair_gives_same_cell_sizes(seed):
    g = geo.GrassmannGraph(2, 6, 3)
    x, H = geo.random_base_pair(g, np.random.default_rng(seed))
    part = geo.classify(g, x, geo.build_delsarte_clique(x, H), H)
    assert part.cell_sizes == [1, 14, 84, 336, 448, 512]


def test_cache_roundtrip(graph_263, tmp_path):
    g, x, H, _, part = graph_263
    assert geo.load_partition_labels(g, x, H, tmp_path) is None
    path = geo.save_partition(part, tmp_path)
    assert (geo.load_partition_labels(g, x, H, tmp_path) == part.labels).all()
    lines = path.read_text().splitlines()
    lines[5] = lines[5][:-1] + "f"
    path.write_text("\n".join(lines) + "\n")
    bad = geo.load_partition_labels(g, x, H, tmp_path)
    assert bad is None or not (bad == part.labels).all()
    assert geo.clear_cache(tmp_path) == 1
    assert geo.load_partition_labels(g, x, H, tmp_path) is None


def test_cache_key_depends_on_clique(graph_263):
    g, x, H, *_ = graph_263
    H2 = geo.Subspace.span(g.ff, 6, x.array()[1:])
    assert geo.cache_key(2, 6, 3, x, H) != geo.cache_key(2, 6, 3, x, H2)


def test_default_cache_dir_honours_env(monkeypatch, tmp_path):
    monkeypatch.setenv("GRASSMANN_DAHA_CACHE", str(tmp_path))
    assert geo.default_cache_dir() == tmp_path
