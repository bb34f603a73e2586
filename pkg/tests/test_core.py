from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tightpaths import formats
from tightpaths.core import (
    CyclicGround,
    DomainError,
    Hypergraph,
    arc_length,
    complete,
    is_cyclically_ordered,
    link,
    random_hypergraph,
    segment,
    shadow,
)


@st.composite
def hypergraphs(draw, max_n=8, rs=(2, 3, 4)):
    r = draw(st.sampled_from(rs))
    n = draw(st.integers(min_value=r, max_value=max_n))
    cands = list(combinations(range(n), r))
    edges = draw(st.lists(st.sampled_from(cands), max_size=min(len(cands), 25), unique=True))
    return Hypergraph.build(n, r, edges)


@pytest.mark.parametrize("n,u,v,expected", [
    (5, 1, 3, (1, 2, 3)),
    (5, 4, 1, (4, 0, 1)),
    (5, 2, 2, (2,)),
])
def test_segment_examples(n, u, v, expected):
    assert segment(CyclicGround(n), u, v) == expected


@pytest.mark.parametrize("n,u,v,expected", [(6, 0, 4, 2), (6, 0, 3, 3), (9, 7, 7, 0)])
def test_arc_length_examples(n, u, v, expected):
    assert arc_length(CyclicGround(n), u, v) == expected


def test_invalid_vertex_is_domain_error():
    g = CyclicGround(5)
    with pytest.raises(DomainError):
        segment(g, 0, 5)
    with pytest.raises(DomainError):
        arc_length(g, -1, 2)
    with pytest.raises(DomainError):
        link(Hypergraph.build(5, 2, [(0, 1)]), 7)
    with pytest.raises(DomainError):
        CyclicGround(0)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, n - 1))))
def test_segment_lengths_and_symmetry(args):
    n, u, v = args
    g = CyclicGround(n)
    if u != v:
        assert len(segment(g, u, v)) + len(segment(g, v, u)) == n + 2
    assert arc_length(g, u, v) == arc_length(g, v, u)
    assert (arc_length(g, u, v) == 0) == (u == v)
    assert arc_length(g, u, v) <= n // 2
    assert arc_length(g, u, v) == min(len(segment(g, u, v)), len(segment(g, v, u))) - 1


def test_successor_wraps():
    assert CyclicGround(4).successor(3) == 0


def test_shadow_examples():
    assert shadow(Hypergraph.build(3, 3, [(0, 1, 2)])).edges == {(0, 1), (0, 2), (1, 2)}
    sh = shadow(Hypergraph.build(4, 3, [(0, 1, 2), (1, 2, 3)]))
    assert sh.edges == {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)}
    assert len(shadow(Hypergraph.build(4, 3, []))) == 0


def test_link_examples():
    H = Hypergraph.build(4, 3, [(0, 1, 2), (0, 2, 3)])
    assert link(H, 0).edges == {(1, 2), (2, 3)}
    assert link(H, 3).edges == {(0, 2)}
    assert len(link(Hypergraph.build(5, 3, [(0, 1, 2)]), 4)) == 0


@given(hypergraphs())
def test_shadow_contains_every_subset(H):
    sh = shadow(H)
    for e in H.edges:
        for sub in combinations(e, H.r - 1):
            assert sub in sh.edges
    assert len(sh) <= len(list(combinations(range(H.n), H.r - 1)))


@given(hypergraphs())
def test_link_degrees_sum(H):
    assert sum(len(link(H, v)) for v in range(H.n)) == H.r * len(H)
    for v in range(H.n):
        assert len(link(H, v)) == H.degree(v)
        assert link(H, v).edges <= shadow(H).edges


def test_edges_must_be_r_sets():
    with pytest.raises(DomainError):
        Hypergraph.build(5, 3, [(0, 1)])
    with pytest.raises(DomainError):
        Hypergraph.build(5, 2, [(0, 0)])
    with pytest.raises(DomainError):
        Hypergraph.build(5, 2, [(0, 9)])


def test_edges_are_deduplicated():
    H = Hypergraph.build(5, 2, [(0, 1), (1, 0), (0, 1)])
    assert len(H) == 1
    assert (1, 0) in H


def test_neighborhood():
    H = Hypergraph.build(5, 3, [(0, 1, 2), (0, 3, 4)])
    assert H.neighborhood(0) == {1, 2, 3, 4}
    assert H.neighborhood(1) == {0, 2}


def test_cyclic_order_helper():
    assert is_cyclically_ordered([3, 4, 0, 1])
    assert not is_cyclically_ordered([0, 2, 1])
    assert is_cyclically_ordered([5])


def test_random_hypergraph_is_reproducible():
    a = random_hypergraph(7, 3, 0.5, np.random.default_rng(3))
    b = random_hypergraph(7, 3, 0.5, np.random.default_rng(3))
    assert a == b


# -- file formats ------------------------------------------------------------

def test_text_round_trip_is_byte_stable(tmp_path):
    H = Hypergraph.build(6, 3, [(3, 4, 5), (0, 1, 2), (0, 2, 4)], geometric=False)
    text = formats.dumps(H)
    assert text == "6 3 abstract\n0 1 2\n0 2 4\n3 4 5\n"
    assert formats.loads(text) == H
    path = tmp_path / "h.cgh"
    formats.write(H, path)
    assert formats.dumps(formats.read(path)) == text


def test_comments_and_blank_lines():
    H = formats.loads("# header next\n4 2 cgh\n\n0 1\n# edge\n2 3\n")
    assert H.edges == {(0, 1), (2, 3)} and H.geometric


@pytest.mark.parametrize("text,line,column", [
    ("4 2\n", 1, 1),
    ("4 2 cgh\n0 x\n", 2, 3),
    ("4 2 cgh\n0 1 2\n", 2, 1),
    ("4 2 cgh\n1 0\n", 2, 3),
    ("4 2 cgh\n0 7\n", 2, 3),
    ("4 2 round\n", 1, 5),
    ("# nothing\n", 1, 1),
])
def test_malformed_files_report_position(text, line, column):
    with pytest.raises(formats.FormatError) as err:
        formats.loads(text)
    assert (err.value.line, err.value.column) == (line, column)


@given(hypergraphs())
@settings(max_examples=50)
def test_dict_round_trip(H):
    assert formats.from_dict(formats.to_dict(H)) == H
    assert formats.loads(formats.dumps(H)) == H


def test_complete():
    assert len(complete(6, 3)) == 20
