import random
from fractions import Fraction

import pytest

from sislne.cluster import (
    Cluster,
    ClusterError,
    bookkeeping,
    check_oracles,
    curvette_multiplicities,
    cusp_cluster,
    inner_rate,
    intersection_matrix,
    is_negative_definite,
    ldl_pivots,
    matrix_oracle,
    random_cluster,
)


def test_single_blow_up():
    c = Cluster()
    assert c.weights() == [-1]
    m, q = bookkeeping(c)
    assert m == [1] and q == [Fraction(1)]


def test_free_chain():
    c = Cluster().blow_up_free(0).blow_up_free(1)
    assert c.weights() == [-2, -2, -1]
    assert c.multiplicities() == [1, 1, 1]
    assert check_oracles(c)


def test_ordinary_cusp():
    c, delta, strings = cusp_cluster(2)
    assert c.weights() == [-3, -2, -1]
    assert c.multiplicities() == [1, 1, 2]
    assert inner_rate(c, delta) == Fraction(3, 2)
    assert strings == [1]


@pytest.mark.parametrize("k", range(2, 7))
def test_cusp_family(k):
    c, delta, strings = cusp_cluster(k)
    m, q = bookkeeping(c)
    assert m[delta] == k and q[delta] == Fraction(k + 1, k)
    assert c.weights()[0] == -1 - k
    assert curvette_multiplicities(c, delta)[0] == k
    assert check_oracles(c)


def test_satellite_requires_adjacent_divisors():
    c = Cluster().blow_up_free(0).blow_up_free(1)
    with pytest.raises(ClusterError):
        c.blow_up_satellite(0, 2)
    with pytest.raises(ClusterError):
        c.blow_up_free(7)


def test_intersection_matrix_negative_definite():
    c, _, _ = cusp_cluster(4)
    mat = intersection_matrix(c)
    assert all(mat[i][j] == mat[j][i] for i in range(len(mat)) for j in range(len(mat)))
    assert is_negative_definite(mat)
    assert all(p < 0 for p in ldl_pivots(mat))
    assert not is_negative_definite([[1]])


def test_random_clusters_agree_with_matrix_oracle():
    rng = random.Random(99)
    for _ in range(120):
        c = random_cluster(rng, rng.randint(1, 12))
        m1, q1 = bookkeeping(c)
        m2, q2 = matrix_oracle(c)
        assert [Fraction(v) for v in m1] == m2 and q1 == q2


def test_persistence():
    c = Cluster()
    d = c.blow_up_free(0)
    assert c.size == 1 and d.size == 2
