import pytest
from hypothesis import given, settings

from msnet import Direction, new_msn
from msnet.errors import (
    DuplicateEdge,
    DuplicateLayer,
    EmptyLayerSet,
    EmptyName,
    FrozenError,
    InvalidLabel,
    NotFound,
    SelfLoop,
    UnknownActor,
    UnknownLayer,
)

from _gen import FIG1_ACTORS, FIG1_L1, networks


def test_new_msn_three_layers():
    g = new_msn(["friendship", "work", "family"])
    assert g.number_of_layers() == 3
    assert g.number_of_actors() == 0
    assert g.number_of_edges() == 0


def test_new_msn_without_layers_rejects_every_edge():
    g = new_msn([])
    g.add_actors(["a", "b"])
    assert g.layers == ()
    with pytest.raises(UnknownLayer):
        g.add_edge("a", "b", "l1")


def test_new_msn_errors():
    with pytest.raises(DuplicateLayer):
        new_msn(["a", "a"])
    with pytest.raises(EmptyName):
        new_msn(["a", ""])


def test_add_actor_ids():
    g = new_msn(["l1"])
    t = g.add_actor("t")
    u = g.add_actor("u")
    assert t != u
    assert g.add_actor("t") == t
    assert g.actors == ("t", "u")


@pytest.mark.parametrize("label", ["", " x", "x ", "a,b", "a\nb", "#x"])
def test_add_actor_invalid(label):
    with pytest.raises(InvalidLabel):
        new_msn(["l1"]).add_actor(label)


def test_add_edge_directed():
    g = new_msn(["l1"])
    g.add_actors("xy")
    g.add_edge("x", "y", "l1")
    assert g.has_edge("x", "y", "l1")
    assert not g.has_edge("y", "x", "l1")
    g.add_edge("y", "x", "l1")
    assert g.number_of_edges("l1") == 2


def test_add_edge_errors():
    g = new_msn(["l1"])
    g.add_actors("xy")
    with pytest.raises(SelfLoop):
        g.add_edge("x", "x", "l1")
    with pytest.raises(UnknownActor):
        g.add_edge("x", "q", "l1")
    with pytest.raises(UnknownLayer):
        g.add_edge("x", "y", "l9")
    g.add_edge("x", "y", "l1")
    with pytest.raises(DuplicateEdge):
        g.add_edge("x", "y", "l1")
    assert g.number_of_edges() == 1


def test_remove_actor_cascades(fig1):
    # oracle: delete tuples touching z from the published list
    expected = [(x, y) for x, y in FIG1_L1 if "z" not in (x, y)]
    assert len(expected) == 4
    fig1.remove_actor("z")
    assert fig1.number_of_edges("l1") == 4
    assert set(fig1.layer_pairs("l1")) == set(expected)
    assert not fig1.has_actor("z")
    for x, y, _ in fig1.edges():
        assert "z" not in (x, y)


def test_remove_edge_missing():
    g = new_msn(["l1"])
    g.add_actors("xy")
    with pytest.raises(NotFound):
        g.remove_edge("x", "y", "l1")
    with pytest.raises(NotFound):
        g.remove_actor("q")


def test_layer_survives_losing_its_last_edge():
    g = new_msn(["l1", "l2"])
    g.add_edge("x", "y", "l2", create=True)
    g.remove_edge("x", "y", "l2")
    assert g.layers == ("l1", "l2")
    assert g.number_of_edges("l2") == 0


def test_layer_projection_fig1(fig1):
    view = fig1.layer_projection("l1")
    assert set(view.actors) == FIG1_ACTORS
    assert view.edges == frozenset(FIG1_L1)
    assert view.layers == ("l1",)
    assert not view.out_neighbors("t") and not view.in_neighbors("t")


def test_layer_projection_empty_layer():
    g = new_msn(["l1", "l2"])
    g.add_actors("tuvxyz")
    g.add_edge("x", "y", "l1")
    view = g.layer_projection("l2")
    assert len(view.actors) == 6
    assert len(view.edges) == 0
    with pytest.raises(UnknownLayer):
        g.layer_projection("nope")


def test_projection_sizes_sum_to_edge_count(fig1):
    assert sum(len(fig1.layer_projection(l).edges) for l in fig1.layers) == 21


def test_neighbors(fig1):
    assert fig1.neighbors("x", Direction.OUT, {"l1"}) == {"y", "z"}
    assert fig1.neighbors("z", "in", {"l1"}) == {"x", "y", "u"}
    assert fig1.neighbors("t", "out", {"l1"}) == set()


def test_neighbors_is_deduplicated_union(fig1):
    # oracle: union of raw per-layer adjacency
    expected = {y for x, y, l in fig1.edges() if x == "x"}
    assert fig1.neighbors("x", "out", fig1.layers) == expected


def test_neighbors_errors(fig1):
    with pytest.raises(EmptyLayerSet):
        fig1.neighbors("x", "out", [])
    with pytest.raises(UnknownActor):
        fig1.neighbors("q", "out", ["l1"])
    with pytest.raises(UnknownLayer):
        fig1.neighbors("x", "out", ["l9"])


def test_freeze_and_copy(fig1):
    fig1.freeze()
    with pytest.raises(FrozenError):
        fig1.add_edge("t", "x", "l1")
    clone = fig1.copy()
    clone.add_edge("t", "x", "l1")
    assert clone != fig1
    assert fig1.number_of_edges() == 21


def test_contains(fig1):
    assert ("x", "y", "l1") in fig1
    assert ("t", "x", "l1") not in fig1
    assert ("nobody", "x", "l1") not in fig1


@settings(max_examples=200)
@given(networks())
def test_projection_matches_brute_force(data):
    g, triples = data
    assert g.number_of_edges() == len(triples)
    assert sum(g.number_of_edges(l) for l in g.layers) == g.number_of_edges()
    for l in g.layers:
        expected = {(x, y) for x, y, k in triples if k == l}
        assert g.layer_projection(l).edges == expected
    for x, y, l in g.edges():
        assert x != y and g.has_actor(x) and g.has_actor(y) and g.has_layer(l)


@settings(max_examples=200)
@given(networks())
def test_direction_independence_and_round_trip(data):
    g, triples = data
    before = g.edge_set()
    for x in g.actors:
        for y in g.actors:
            if x == y:
                continue
            for l in g.layers:
                if (x, y, l) in triples:
                    continue
                reverse = g.has_edge(y, x, l)
                g.add_edge(x, y, l)
                assert g.has_edge(y, x, l) == reverse
                g.remove_edge(x, y, l)
                assert g.edge_set() == before
