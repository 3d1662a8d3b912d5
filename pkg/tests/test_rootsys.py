from collections import Counter
from itertools import combinations_with_replacement, permutations

import pytest
from hypothesis import given, settings, strategies as st

from a5deform import rootsys as rs
from a5deform.rootsys import root


def test_roots():
    R = rs.roots()
    assert len(R) == 30
    assert root(1, 2) in R
    assert (1, 1, 0, 0, 0, 0) not in R
    assert all(sum(r) == 0 for r in R)


def brute_decompositions(mu, k):
    out = []
    for combo in combinations_with_replacement(sorted(rs.roots()), k):
        if rs.add(*combo) == tuple(mu):
            out.append(Counter(combo))
    return out


MU_STAR = (1, -1, 1, -1, 1, -1)  # a1 + a3 + a5

# the six displayed three-root sums of a1 + a3 + a5
EXPECTED_SIX = [
    [root(1, 2), root(3, 4), root(5, 6)],
    [root(1, 2), root(3, 6), root(5, 4)],
    [root(1, 4), root(3, 2), root(5, 6)],
    [root(1, 4), root(3, 6), root(5, 2)],
    [root(1, 6), root(3, 2), root(5, 4)],
    [root(1, 6), root(3, 4), root(5, 2)],
]


def test_six_decompositions_of_mu_star():
    got = [Counter(m) for m in rs.decompositions(MU_STAR, 3)]
    assert len(got) == 6
    for m in EXPECTED_SIX:
        assert Counter(m) in got


def test_h2_weight_is_not_a_sum_of_two_roots():
    for mu in rs.h2_weights():
        assert rs.decompositions(mu, 2) == []


def test_four_root_obstruction_weights():
    assert rs.decompositions((3, 1, 1, -1, -1, -3), 4) == []
    assert rs.decompositions((3, -1, -1, 1, 1, -3), 4) == []
    assert rs.decompositions((4, 0, 0, 0, 0, -4), 4, distinct_at_least=3) == []
    # without the distinctness filter the weight 4(e1 - e6) is reachable
    assert rs.decompositions((4, 0, 0, 0, 0, -4), 4) == [(root(1, 6),) * 4]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_decompositions_exhaustive_against_brute_force(k):
    for mu in [MU_STAR, (2, 0, 0, 0, 0, -2), (1, 0, 0, 0, 0, -1), (0,) * 6]:
        got = sorted(map(tuple, (sorted(m) for m in rs.decompositions(mu, k))))
        want = sorted(tuple(sorted(c.elements())) for c in brute_decompositions(mu, k))
        assert got == want


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(6)), st.integers(2, 4),
       st.sampled_from([MU_STAR, (2, 0, 0, 0, 0, -2), (1, 1, 0, 0, -1, -1), (0,) * 6]))
def test_decompositions_weyl_symmetric(perm, k, mu):
    w_mu = tuple(mu[p] for p in perm)
    assert len(rs.decompositions(w_mu, k)) == len(rs.decompositions(mu, k))
    for m in rs.decompositions(w_mu, k):
        assert rs.add(*m) == w_mu


def test_weyl_orbits():
    assert rs.weyl_orbit(MU_STAR) == frozenset(rs.h2_weights())
    assert len(rs.weyl_orbit(MU_STAR)) == 20
    assert rs.weyl_orbit((0,) * 6) == {(0,) * 6}
    assert rs.weyl_orbit(root(1, 2)) == rs.roots()


def test_h2_weights():
    ws = rs.h2_weights()
    assert len(ws) == 20
    assert ws[0] == (1, 1, 1, -1, -1, -1)
    assert all(sum(w) == 0 for w in ws)
    assert rs.h2_weight_of_triple((1, 4, 5)) == (1, -1, -1, 1, 1, -1)
    assert rs.triple_of_h2_weight((1, -1, -1, 1, 1, -1)) == (1, 4, 5)


def test_bad_arguments():
    with pytest.raises(ValueError):
        rs.decompositions(MU_STAR, 5)
    with pytest.raises(ValueError):
        rs.decompositions(MU_STAR, 2, 3)
    with pytest.raises(ValueError):
        rs.root_indices((1, 1, 0, 0, 0, 0))


def test_format_weight():
    assert rs.format_weight((2, 0, 0, 0, 0, -2)) == "2e1-2e6"
    assert rs.format_weight(MU_STAR) == "e1-e2+e3-e4+e5-e6"
