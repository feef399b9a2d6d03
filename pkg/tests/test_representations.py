from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings

from msnet import from_edges, new_msn
from msnet.errors import UnknownActor
from msnet.representations import (
    adjacency_matrix,
    multiedge_count,
    to_multigraph,
    to_repeated_list,
)

from _gen import networks

NEWMAN_EDGES = [
    ("x", "y", "l1"),
    ("x", "y", "l2"),
    ("x", "y", "l3"),
    ("x", "v", "l1"),
    ("x", "z", "l1"),
    ("x", "z", "l2"),
]


@pytest.fixture
def newman():
    return from_edges(NEWMAN_EDGES, layers=["l1", "l2", "l3"])


def test_newman_counts(newman):
    mg = to_multigraph(newman)
    assert mg.out_counts("x") == {"v": 1, "y": 3, "z": 2}


def test_newman_repeated_list(newman):
    lists = to_repeated_list(to_multigraph(newman))
    assert lists["x"] == ["v", "y", "y", "y", "z", "z"]
    assert lists["y"] == [] and lists["v"] == []


def test_empty_msn():
    mg = to_multigraph(new_msn([]))
    assert dict(mg.counts) == {}
    assert mg.total() == 0


def test_fig1_total_mass(fig1):
    mg = to_multigraph(fig1)
    assert mg.total() == 21
    assert sum(len(v) for v in to_repeated_list(mg).values()) == 21


def test_multiedge_count_matches_layer_tally(fig1):
    mg = to_multigraph(fig1)
    layers_with_xy = [l for l in fig1.layers if fig1.has_edge("x", "y", l)]
    assert multiedge_count(mg, "x", "y") == len(layers_with_xy) >= 1
    for a in fig1.actors:
        assert multiedge_count(mg, a, a) == 0


def test_multiedge_count_errors_and_zero():
    g = new_msn(["l1"])
    g.add_actors("ab")
    mg = to_multigraph(g)
    assert multiedge_count(mg, "a", "b") == 0
    with pytest.raises(UnknownActor):
        multiedge_count(mg, "a", "q")


def test_adjacency_matrix(newman):
    mg = to_multigraph(newman)
    mat = adjacency_matrix(mg)
    pos = {a: i for i, a in enumerate(mg.actors)}
    assert mat.shape == (4, 4)
    assert mat[pos["x"], pos["y"]] == 3
    assert mat.sum() == 6
    assert np.all(np.diag(mat) == 0)


def test_lossiness_witness():
    # Same per-pair totals, different layer labels.
    a = from_edges([("p", "q", "l1"), ("q", "p", "l2")], layers=["l1", "l2"])
    b = from_edges([("p", "q", "l2"), ("q", "p", "l1")], layers=["l1", "l2"])
    assert a != b
    assert to_multigraph(a) == to_multigraph(b)


@settings(max_examples=200)
@given(networks())
def test_counts_match_brute_force(data):
    g, triples = data
    mg = to_multigraph(g)
    oracle = Counter((x, y) for x, y, _ in triples)
    assert dict(mg.counts) == dict(oracle)
    assert all(c >= 1 and s != t for (s, t), c in mg.counts.items())
    lists = to_repeated_list(mg)
    assert sum(map(len, lists.values())) == len(triples)
    for actor, nbrs in lists.items():
        assert nbrs == sorted(nbrs)
        assert Counter(nbrs) == Counter({t: c for (s, t), c in oracle.items() if s == actor})
