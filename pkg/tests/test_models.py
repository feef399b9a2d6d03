from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msnet import SSNView, new_msn
from msnet.errors import (
    MSNError,
    NonInjectiveMapping,
    PartialMapping,
    SelfPair,
    UnknownActor,
    UnmappedActor,
)
from msnet.models import (
    EdgeSetFamily,
    PillarNetwork,
    coarsen,
    from_edge_set_family,
    from_pillar,
    to_edge_set_family,
    to_pillar,
)

from _gen import FIG1_L1, networks


def test_to_pillar_fig1(fig1):
    p = to_pillar(fig1)
    assert len(p.networks) == 3
    assert all(len(net.actors) == 6 for net in p.networks)
    classes = p.classes()
    assert len(classes) == 6
    assert all(len(members) == 3 for members in classes.values())


def test_to_pillar_small_cases():
    g = new_msn(["only"])
    g.add_actors("ab")
    p = to_pillar(g)
    assert len(p.networks) == 1
    assert all(len(m) == 1 for m in p.classes().values())
    assert to_pillar(new_msn([])).networks == ()


def test_pillar_round_trip_fig1(fig1):
    back = from_pillar(to_pillar(fig1), fig1.layers)
    assert back == fig1
    assert back.layer_sizes() == {"l1": 8, "l2": 6, "l3": 7}
    p = to_pillar(fig1)
    assert to_pillar(from_pillar(p, fig1.layers)) == p


def test_from_pillar_with_distinct_local_names():
    fb = SSNView(("alice_fb", "bob_fb"), frozenset({("alice_fb", "bob_fb")}), ("facebook",))
    tw = SSNView(("@alice", "@bob"), frozenset({("@bob", "@alice")}), ("twitter",))
    mapping = (
        ("alice", 0, "alice_fb"),
        ("alice", 1, "@alice"),
        ("bob", 0, "bob_fb"),
        ("bob", 1, "@bob"),
    )
    g = from_pillar(PillarNetwork((fb, tw), mapping), ["facebook", "twitter"])
    assert g.actors == ("alice", "bob")
    assert g.edge_set() == {("alice", "bob", "facebook"), ("bob", "alice", "twitter")}


def test_from_pillar_non_injective():
    net = SSNView(("a", "b"), frozenset({("a", "b")}))
    p = PillarNetwork((net,), (("c", 0, "a"), ("c", 0, "b")))
    with pytest.raises(NonInjectiveMapping):
        from_pillar(p, ["l1"])


def test_from_pillar_actor_in_two_classes():
    net = SSNView(("a", "b"), frozenset())
    p = PillarNetwork((net,), (("c1", 0, "a"), ("c2", 0, "a"), ("c3", 0, "b")))
    with pytest.raises(NonInjectiveMapping):
        from_pillar(p, ["l1"])


def test_from_pillar_unmapped_and_bad_input():
    net = SSNView(("a", "b"), frozenset())
    with pytest.raises(UnmappedActor):
        from_pillar(PillarNetwork((net,), (("c", 0, "a"),)), ["l1"])
    with pytest.raises(UnknownActor):
        from_pillar(PillarNetwork((net,), (("c", 0, "q"),)), ["l1"])
    with pytest.raises(MSNError):
        from_pillar(PillarNetwork((net,), ()), ["l1", "l2"])


def test_from_pillar_partial_presence_via_singletons():
    a = SSNView(("p", "q"), frozenset({("p", "q")}), ("l1",))
    b = SSNView(("p",), frozenset(), ("l2",))
    mapping = (("p", 0, "p"), ("p", 1, "p"), ("q", 0, "q"))
    g = from_pillar(PillarNetwork((a, b), mapping), ["l1", "l2"])
    assert set(g.actors) == {"p", "q"}


def test_from_pillar_zero_networks():
    g = from_pillar(PillarNetwork((), ()), [])
    assert g.layers == () and g.number_of_edges() == 0


def coarsen_oracle(pairs, mapping):
    return Counter((mapping[x], mapping[y]) for x, y in pairs)


def test_coarsen_departments(fig1):
    mapping = {a: "D1" for a in "xyz"} | {a: "D2" for a in "tuv"}
    expected = coarsen_oracle(FIG1_L1, mapping)
    assert expected == {("D1", "D1"): 5, ("D2", "D2"): 2, ("D2", "D1"): 1}
    cg = coarsen(fig1.layer_projection("l1"), mapping)
    assert cg.count("D1", "D1") == 5
    assert cg.count("D2", "D2") == 2
    assert cg.count("D2", "D1") == 1
    assert cg.count("D1", "D2") == 0
    assert set(cg.actors) == {"D1", "D2"}


def test_coarsen_identity(fig1):
    view = fig1.layer_projection("l1")
    cg = coarsen(view, {a: a for a in view.actors})
    assert set(cg.counts) == set(view.edges)
    assert set(cg.counts.values()) == {1}


def test_coarsen_total_collapse(fig1):
    view = fig1.layer_projection("l3")
    cg = coarsen(view, {a: "all" for a in view.actors})
    assert dict(cg.counts) == {("all", "all"): len(view.edges)}


def test_coarsen_partial_mapping(fig1):
    with pytest.raises(PartialMapping):
        coarsen(fig1.layer_projection("l1"), {"x": "D1"})


def test_edge_set_family_fig1(fig1):
    family = to_edge_set_family(fig1)
    assert {k: len(v) for k, v in family.edge_sets.items()} == {"l1": 8, "l2": 6, "l3": 7}
    assert from_edge_set_family(family) == fig1
    assert from_edge_set_family(family).edge_set() == fig1.edge_set()


def test_edge_set_family_empty_and_errors():
    g = from_edge_set_family(EdgeSetFamily((), {}))
    assert g.number_of_actors() == 0 and g.layers == ()
    with pytest.raises(SelfPair):
        from_edge_set_family(EdgeSetFamily(("a",), {"E1": frozenset({("a", "a")})}))
    with pytest.raises(UnknownActor):
        from_edge_set_family(EdgeSetFamily(("a",), {"E1": frozenset({("a", "b")})}))


@settings(max_examples=200)
@given(networks())
def test_round_trips(data):
    g, _ = data
    assert from_pillar(to_pillar(g), g.layers) == g
    family = to_edge_set_family(g)
    assert from_edge_set_family(family) == g
    assert to_edge_set_family(from_edge_set_family(family)) == family


@settings(max_examples=200)
@given(networks(max_actors=6), st.randoms(use_true_random=False))
def test_coarsen_conservation_and_functoriality(data, rnd):
    g, _ = data
    for layer in g.layers:
        view = g.layer_projection(layer)
        m1 = {a: rnd.choice("ABCD") for a in view.actors}
        m2 = {c: rnd.choice("PQ") for c in "ABCD"}
        once = coarsen(view, m1)
        assert once.total() == len(view.edges)
        assert dict(once.counts) == dict(coarsen_oracle(view.edges, m1))
        composed = coarsen(view, {a: m2[m1[a]] for a in view.actors})
        chained = coarsen(once, m2)
        assert dict(composed.counts) == dict(chained.counts)
