"""Conversions between the multi-layered network and its alternative models.

* Pillar multi-network: separate single-layered networks, each with its own
  local actor namespace, joined by a one-to-one node mapping.
* ML-model: a many-to-one node mapping, realised here as coarsening a view
  into a quotient graph (e.g. employees collapsed into departments).
* Edge-set family: ``M = (V, {E_1, ..., E_m})``, a lossless re-encoding.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, FrozenSet, List, Mapping, Sequence, Set, Tuple, Union

from .core import MSN, Pair, SSNView, validate_label
from .errors import (
    MSNError,
    NonInjectiveMapping,
    PartialMapping,
    SelfPair,
    UnknownActor,
    UnknownLayer,
    UnmappedActor,
)

# (class_id, network_index, local_actor)
MappingRecord = Tuple[str, int, str]
NodeMapping = Mapping[str, str]


@dataclass(frozen=True)
class PillarNetwork:
    """Per-layer networks with local actor names plus an identity mapping.

    ``mapping`` holds ``(class_id, network_index, local_actor)`` records.
    ``class_ids`` lists the identity classes in order; it defaults to the
    classes named in ``mapping`` but may also name classes with no members
    (needed when there are no networks at all).
    """

    networks: Tuple[SSNView, ...]
    mapping: Tuple[MappingRecord, ...]
    class_ids: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        named = dict.fromkeys(self.class_ids)
        named.update(dict.fromkeys(cid for cid, _, _ in self.mapping))
        object.__setattr__(self, "class_ids", tuple(named))

    def classes(self) -> Dict[str, List[Tuple[int, str]]]:
        """Identity classes and their members, in ``class_ids`` order."""
        out: Dict[str, List[Tuple[int, str]]] = {cid: [] for cid in self.class_ids}
        for cid, k, local in self.mapping:
            out[cid].append((k, local))
        return out


def to_pillar(msn: MSN) -> PillarNetwork:
    """Split ``msn`` into one network per layer.

    Each network gets a copy of the full actor set as its local namespace;
    the mapping puts the copies of one actor into a class named after it.
    """
    networks = tuple(
        SSNView(
            actors=msn.actors,
            edges=frozenset(msn.layer_pairs(layer)),
            layers=(layer,),
            policy="pillar",
        )
        for layer in msn.layers
    )
    mapping = tuple(
        (actor, k, actor) for actor in msn.actors for k in range(len(networks))
    )
    return PillarNetwork(networks, mapping, msn.actors)


def check_pillar_mapping(p: PillarNetwork) -> Dict[Tuple[int, str], str]:
    """Validate the one-to-one mapping and return ``(network, local) -> class``."""
    local_sets = [set(net.actors) for net in p.networks]
    owner: Dict[Tuple[int, str], str] = {}
    per_class: Dict[str, Set[int]] = defaultdict(set)
    for cid in p.class_ids:
        validate_label(cid, "class")
    for cid, k, local in p.mapping:
        if not 0 <= k < len(p.networks):
            raise UnknownLayer(f"class {cid!r} references network {k}, which does not exist")
        if local not in local_sets[k]:
            raise UnknownActor(f"class {cid!r} references unknown actor {local!r} of network {k}")
        if k in per_class[cid]:
            raise NonInjectiveMapping(
                f"class {cid!r} holds more than one actor of network {k}"
            )
        key = (k, local)
        if key in owner and owner[key] != cid:
            raise NonInjectiveMapping(
                f"actor {local!r} of network {k} is in classes {owner[key]!r} and {cid!r}"
            )
        per_class[cid].add(k)
        owner[key] = cid
    for k, net in enumerate(p.networks):
        for local in net.actors:
            if (k, local) not in owner:
                raise UnmappedActor(f"actor {local!r} of network {k} is in no class")
    return owner


def from_pillar(p: PillarNetwork, layer_names: Sequence[str]) -> MSN:
    """Merge a pillar network into one network over its identity classes."""
    if len(layer_names) != len(p.networks):
        raise MSNError(
            f"{len(layer_names)} layer names given for {len(p.networks)} networks"
        )
    owner = check_pillar_mapping(p)
    g = MSN(layer_names)
    g.add_actors(p.class_ids)
    for k, (net, layer) in enumerate(zip(p.networks, layer_names)):
        for x, y in sorted(net.edges):
            g.add_edge(owner[(k, x)], owner[(k, y)], layer)
    return g


@dataclass(frozen=True)
class CoarseGraph:
    """Quotient graph produced by a many-to-one node mapping.

    Unlike :class:`MSN` it keeps self-loops: edges inside one coarse node are
    counted on the ``(D, D)`` pair.
    """

    actors: Tuple[str, ...]
    counts: Mapping[Pair, int]

    def count(self, a: str, b: str) -> int:
        return self.counts.get((a, b), 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> List[Tuple[str, str, int]]:
        return [(s, t, c) for (s, t), c in sorted(self.counts.items())]


def coarsen(graph: Union[SSNView, CoarseGraph], mapping: NodeMapping) -> CoarseGraph:
    """Collapse actors of ``graph`` according to ``mapping``.

    An :class:`SSNView` contributes one unit per edge; a :class:`CoarseGraph`
    contributes its counts, so coarsening can be chained.
    """
    missing = [a for a in graph.actors if a not in mapping]
    if missing:
        raise PartialMapping(f"no coarse node for actor(s) {', '.join(map(repr, missing))}")
    if isinstance(graph, CoarseGraph):
        weighted = graph.counts.items()
    else:
        weighted = ((pair, 1) for pair in graph.edges)
    tally: Counter = Counter()
    for (x, y), c in weighted:
        tally[(mapping[x], mapping[y])] += c
    coarse = tuple(dict.fromkeys(mapping[a] for a in graph.actors))
    return CoarseGraph(coarse, MappingProxyType(dict(sorted(tally.items()))))


@dataclass(frozen=True)
class EdgeSetFamily:
    actors: Tuple[str, ...]
    edge_sets: Mapping[str, FrozenSet[Pair]]


def to_edge_set_family(msn: MSN) -> EdgeSetFamily:
    sets = {layer: frozenset(msn.layer_pairs(layer)) for layer in msn.layers}
    return EdgeSetFamily(msn.actors, MappingProxyType(sets))


def from_edge_set_family(family: EdgeSetFamily) -> MSN:
    known = set(family.actors)
    for name, pairs in family.edge_sets.items():
        for x, y in pairs:
            if x == y:
                raise SelfPair(f"self-pair ({x}, {y}) in edge set {name!r}")
            for a in (x, y):
                if a not in known:
                    raise UnknownActor(f"edge set {name!r} references unknown actor {a!r}")
    g = MSN(list(family.edge_sets))
    g.add_actors(family.actors)
    for name, pairs in family.edge_sets.items():
        for x, y in sorted(pairs):
            g.add_edge(x, y, name)
    return g
