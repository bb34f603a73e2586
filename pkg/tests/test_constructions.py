from itertools import combinations
from math import comb

import numpy as np
import pytest

from tightpaths.constructions import (
    clique_union,
    lift_plus,
    lifted_length,
    phi,
    short_side,
    stack_free,
    transversal_blocks,
    transversal_count,
    transversal_parts,
)
from tightpaths.core import DomainError, Hypergraph, UnsupportedPatternError, random_hypergraph, shadow
from tightpaths.patterns import find_pattern


def _ell(n, u, v):
    d = abs(u - v) % n
    return min(d, n - d)


def filter_oracle(n, r, k):
    """Parts (i)-(iii) applied one at a time, then unioned."""
    part0 = {e for e in combinations(range(n), r) if 0 in e}
    rest = [e for e in combinations(range(n), r) if 0 not in e]
    parts = [part0]
    for j in range(1, k - 1):
        parts.append({e for e in rest if any(_ell(n, e[h], e[(h + 1) % r]) == j for h in range(r))})
    if k >= 2:
        parts.append({e for e in rest
                      if any(_ell(n, e[2 * h - 1], e[2 * h]) in (k - 1, k) for h in range(1, r // 2))})
    return set().union(*parts)


@pytest.mark.parametrize("n,r,k", [(8, 2, 3), (12, 4, 3), (10, 4, 2), (9, 4, 4), (11, 6, 3), (7, 2, 1), (13, 4, 5)])
def test_stack_free_matches_filter_oracle(n, r, k):
    assert stack_free(n, r, k).edges == filter_oracle(n, r, k)


def test_stack_free_counts():
    H = stack_free(8, 2, 3)
    assert len(H) == 13
    assert sum(1 for e in H.edges if 0 in e) == 7
    for n, r in [(7, 2), (9, 4), (10, 6)]:
        assert len(stack_free(n, r, 1)) == comb(n - 1, r - 1)


@pytest.mark.parametrize("n,r,k", [(10, 4, 2), (12, 4, 2), (8, 2, 2), (10, 2, 4)])
def test_stack_free_for_even_k(n, r, k):
    assert find_pattern(stack_free(n, r, k), "stack", k) is None


@pytest.mark.slow
def test_stack_free_16_4_4():
    assert find_pattern(stack_free(16, 4, 4), "stack", 4) is None


def test_stack_free_errors():
    with pytest.raises(UnsupportedPatternError):
        stack_free(9, 3, 2)
    with pytest.raises(DomainError):
        stack_free(3, 4, 2)
    with pytest.raises(DomainError):
        stack_free(8, 2, 0)


def test_short_side():
    assert len(short_side(6, 2, 3)) == 12
    H = short_side(8, 4, 3)
    assert find_pattern(H, "stack", 3) is None
    assert len(short_side(6, 4, 5)) == comb(6, 4)
    with pytest.raises(DomainError):
        short_side(8, 4, 4)


def test_clique_union():
    H = clique_union(6, 3)
    assert len(H) == 6
    assert find_pattern(H, "zigzag", 3) is None
    assert clique_union(4, 2).edges == {(0, 1), (2, 3)}
    # remainder clique {6} carries no edge
    assert len(clique_union(7, 3)) == 6
    assert len(clique_union(8, 3)) == 7


def test_transversal_blocks():
    parts = transversal_parts(12, 4, 5)
    for a, b in combinations(parts, 2):
        assert not a.edges & b.edges
    G = transversal_blocks(12, 4, 5)
    assert len(G) == 100 == transversal_count(12, 4, 5)
    assert not G.geometric
    assert len(transversal_blocks(12, 4, 1)) == 0


def test_transversal_rejects_bad_divisibility():
    with pytest.raises(DomainError):
        transversal_blocks(11, 4, 5)
    with pytest.raises(DomainError):
        transversal_blocks(12, 4, 4)
    with pytest.raises(DomainError):
        transversal_blocks(4, 4, 9)


def test_lift_examples():
    H = Hypergraph.build(3, 3, [(0, 1, 2)], geometric=False)
    L = lift_plus(H, 2)
    assert L.edges == {(0, 1, 2, 3), (0, 1, 2, 4)}
    assert len(shadow(L)) == 7
    assert len(lift_plus(Hypergraph.build(4, 2, []), 3)) == 0


def test_lift_identities_on_random_hosts():
    rng = np.random.default_rng(8)
    for _ in range(30):
        r = int(rng.choice([2, 3]))
        n = int(rng.integers(r, 9))
        m = int(rng.integers(1, 4))
        H = random_hypergraph(n, r, float(rng.uniform(0.2, 0.8)), rng, geometric=False)
        L = lift_plus(H, m)
        assert len(L) == m * len(H)
        if H.edges:
            assert len(shadow(L)) == m * len(shadow(H)) + len(H)


def test_phi():
    assert phi(5, 3) == 2
    assert all(phi(1, r) == 1 for r in range(2, 7))
    assert lifted_length(4, 3) == 6 and phi(6, 3) == 3
    for k in range(1, 12):
        for r in range(2, 6):
            ell = lifted_length(k, r)
            assert ell + 1 - phi(ell, r) == k
    with pytest.raises(DomainError):
        phi(0, 3)


def test_lift_preserves_freeness():
    rng = np.random.default_rng(9)
    for _ in range(12):
        r = int(rng.choice([2, 3]))
        n = int(rng.integers(r + 1, 7))
        H = random_hypergraph(n, r, 0.4, rng, geometric=False)
        for k in (2, 3):
            if find_pattern(H, "tight_path", k) is None:
                assert find_pattern(lift_plus(H, 2), "tight_path", lifted_length(k, r)) is None
