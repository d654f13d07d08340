import pytest

from grassmann_daha import geometry as geo


@pytest.fixture(scope="session")
def graph_263():
    g = geo.GrassmannGraph(2, 6, 3)
    x, H = geo.default_base_pair(g)
    clique = geo.build_delsarte_clique(x, H)
    part = geo.classify(g, x, clique, H)
    return g, x, H, clique, part
