import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grassmann_daha.fields import GF, prime_power


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms(q):
    GF(q).check_axioms()


@pytest.mark.parametrize("q,expected", [(2, (2, 1)), (9, (3, 2)), (16, (2, 4)), (6, None), (12, None), (1, None)])
def test_prime_power(q, expected):
    assert prime_power(q) == expected


@pytest.mark.parametrize("q", [2, 3, 4])
@given(data=st.data())
@settings(max_examples=20, deadline=None)
def test_rank_nullity(q, data):
    ff = GF(q)
    rows = data.draw(st.integers(1, 4))
    cols = data.draw(st.integers(1, 5))
    M = np.array(data.draw(st.lists(st.integers(0, q - 1), min_size=rows * cols, max_size=rows * cols)),
                 dtype=np.int64).reshape(rows, cols)
    r = ff.rank(M)
    kernel = ff.null_space(M)
    assert r + len(kernel) == cols
    for v in kernel:
        for row in M:
            acc = 0
            for a, b in zip(row, v):
                acc = int(ff.add[acc, ff.mul[a, b]])
            assert acc == 0
