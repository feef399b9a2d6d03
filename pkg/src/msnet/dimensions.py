"""Layer, time and group dimensions.

Timestamped interaction events are cut into snapshots: the sub-network at the
intersection of a layer subset, a half-open time window and (optionally) one
group. Several layers of a network can also be aggregated into a single view
under an explicitly named policy.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from .core import MSN, Edge, Pair, SSNView, validate_label
from .errors import (
    BadTimestamp,
    EmptyLayerSet,
    EmptyWindow,
    MSNError,
    SelfLoop,
    UnknownGroup,
    UnknownLayer,
)


@dataclass(frozen=True, order=True)
class TemporalEvent:
    source: str
    target: str
    layer: str
    timestamp: int

    def __post_init__(self) -> None:
        if self.source == self.target:
            raise SelfLoop(f"self-loop event on {self.source!r}")
        if isinstance(self.timestamp, bool) or not isinstance(self.timestamp, int):
            raise BadTimestamp(f"timestamp must be an integer, got {self.timestamp!r}")
        if self.timestamp < 0:
            raise BadTimestamp(f"timestamp must be >= 0, got {self.timestamp}")

    @property
    def triple(self) -> Edge:
        return self.source, self.target, self.layer


class GroupMembership:
    """Actor -> groups relation. Groups may overlap; actors may have none."""

    def __init__(self, pairs: Iterable[Tuple[str, str]] = ()) -> None:
        self._groups: Dict[str, Set[str]] = {}
        self._members: Dict[str, Set[str]] = {}
        for actor, group in pairs:
            self.add(actor, group)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Iterable[str]]) -> "GroupMembership":
        return cls((actor, g) for actor, groups in mapping.items() for g in groups)

    def add(self, actor: str, group: str) -> None:
        validate_label(actor)
        validate_label(group, "group")
        self._groups.setdefault(actor, set()).add(group)
        self._members.setdefault(group, set()).add(actor)

    def groups(self) -> List[str]:
        return sorted(self._members)

    def groups_of(self, actor: str) -> FrozenSet[str]:
        return frozenset(self._groups.get(actor, ()))

    def members(self, group: str) -> FrozenSet[str]:
        try:
            return frozenset(self._members[group])
        except KeyError:
            raise UnknownGroup(f"unknown group {group!r}") from None

    def pairs(self) -> List[Tuple[str, str]]:
        return sorted((a, g) for g, actors in self._members.items() for a in actors)

    def __contains__(self, group: object) -> bool:
        return group in self._members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupMembership):
            return NotImplemented
        return self._members == other._members


@dataclass(frozen=True)
class SnapshotKey:
    layers: Tuple[str, ...]
    window: Tuple[int, int]
    group: Optional[str] = None

    def __post_init__(self) -> None:
        if isinstance(self.layers, str):
            object.__setattr__(self, "layers", (self.layers,))
        else:
            object.__setattr__(self, "layers", tuple(dict.fromkeys(self.layers)))
        if not self.layers:
            raise EmptyLayerSet("snapshot key needs at least one layer")
        t0, t1 = self.window
        if t0 >= t1:
            raise EmptyWindow(f"window [{t0}, {t1}) is empty")

    def contains(self, t: int) -> bool:
        t0, t1 = self.window
        return t0 <= t < t1


class AggregationPolicy(str, enum.Enum):
    UNION = "union"
    COUNT = "count"


def event_layers(events: Iterable[TemporalEvent]) -> List[str]:
    return list(dict.fromkeys(e.layer for e in events))


def event_actors(events: Iterable[TemporalEvent]) -> List[str]:
    return list(dict.fromkeys(a for e in events for a in (e.source, e.target)))


def _select(
    events: Sequence[TemporalEvent],
    membership: Optional[GroupMembership],
    key: SnapshotKey,
    layers: Optional[Sequence[str]],
    actors: Optional[Sequence[str]],
) -> Tuple[List[str], List[str], List[TemporalEvent]]:
    universe = list(layers) if layers is not None else event_layers(events)
    for name in key.layers:
        if name not in universe:
            raise UnknownLayer(f"unknown layer {name!r}")
    chosen_layers = [name for name in universe if name in set(key.layers)]
    vertex_set = list(actors) if actors is not None else event_actors(events)
    if key.group is not None:
        if membership is None or key.group not in membership:
            raise UnknownGroup(f"unknown group {key.group!r}")
        members = membership.members(key.group)
        vertex_set = [a for a in vertex_set if a in members]
    allowed = set(vertex_set)
    wanted = set(chosen_layers)
    selected = [
        e
        for e in events
        if e.layer in wanted
        and key.contains(e.timestamp)
        and e.source in allowed
        and e.target in allowed
    ]
    return chosen_layers, vertex_set, selected


def snapshot(
    events: Sequence[TemporalEvent],
    membership: Optional[GroupMembership],
    key: SnapshotKey,
    *,
    layers: Optional[Sequence[str]] = None,
    actors: Optional[Sequence[str]] = None,
) -> MSN:
    """Sub-network at the intersection of ``key``'s layers, window and group.

    ``layers`` and ``actors`` give the full layer set and actor set the events
    live in; by default both are taken from the events in first-appearance
    order. The result keeps the selected layers (in that order) and every
    actor that passes the group filter. With a group, both endpoints of an
    event must be members. Repeated events collapse into one edge.
    """
    chosen_layers, vertex_set, selected = _select(events, membership, key, layers, actors)
    g = MSN(chosen_layers)
    g.add_actors(vertex_set)
    for e in selected:
        if not g.has_edge(e.source, e.target, e.layer):
            g.add_edge(e.source, e.target, e.layer)
    return g


def event_multiplicity(
    events: Sequence[TemporalEvent],
    membership: Optional[GroupMembership],
    key: SnapshotKey,
    *,
    layers: Optional[Sequence[str]] = None,
    actors: Optional[Sequence[str]] = None,
) -> Dict[Edge, int]:
    """How many events fell on each edge of the corresponding snapshot."""
    _, _, selected = _select(events, membership, key, layers, actors)
    return dict(sorted(Counter(e.triple for e in selected).items()))


def time_series(
    events: Sequence[TemporalEvent],
    membership: Optional[GroupMembership],
    layers: Optional[Sequence[str]],
    window_length: int,
    step: int,
    *,
    group: Optional[str] = None,
    start: Optional[int] = None,
    end: Optional[int] = None,
    all_layers: Optional[Sequence[str]] = None,
    actors: Optional[Sequence[str]] = None,
) -> List[Tuple[Tuple[int, int], MSN]]:
    """Snapshots over consecutive windows ``[s, s + window_length)``.

    Window starts advance by ``step`` from ``start`` (default: earliest event)
    while they do not exceed ``end`` (default: latest event). ``step ==
    window_length`` gives tumbling windows. ``layers=None`` selects all.
    """
    if window_length <= 0 or step <= 0:
        raise MSNError("window_length and step must be positive")
    if not events:
        return []
    stamps = [e.timestamp for e in events]
    lo = min(stamps) if start is None else start
    hi = max(stamps) if end is None else end
    universe = list(all_layers) if all_layers is not None else event_layers(events)
    selected_layers = universe if layers is None else list(layers)
    vertex_set = list(actors) if actors is not None else event_actors(events)
    out = []
    t0 = lo
    while t0 <= hi:
        key = SnapshotKey(tuple(selected_layers), (t0, t0 + window_length), group)
        g = snapshot(events, membership, key, layers=universe, actors=vertex_set)
        out.append(((t0, t0 + window_length), g))
        t0 += step
    return out


def _policy(policy: Union[AggregationPolicy, str]) -> AggregationPolicy:
    try:
        return AggregationPolicy(policy)
    except ValueError:
        raise MSNError(f"unknown aggregation policy {policy!r}") from None


def aggregate_layers(
    msn: MSN, layers: Iterable[str], policy: Union[AggregationPolicy, str]
) -> SSNView:
    """Merge several layers into one view.

    UNION keeps a pair if any selected layer has it. COUNT keeps the same
    pairs and records in ``view.counts`` how many selected layers carry each.
    There is no default policy.
    """
    policy = _policy(policy)
    if isinstance(layers, str):
        layers = [layers]
    wanted = set(layers)
    for name in wanted:
        if not msn.has_layer(name):
            raise UnknownLayer(f"unknown layer {name!r}")
    if not wanted:
        raise EmptyLayerSet("at least one layer is required")
    ordered = tuple(name for name in msn.layers if name in wanted)
    tally: Counter = Counter()
    for name in ordered:
        tally.update(msn.layer_pairs(name))
    counts = None
    if policy is AggregationPolicy.COUNT:
        counts = MappingProxyType(dict(sorted(tally.items())))
    return SSNView(
        actors=msn.actors,
        edges=frozenset(tally),
        layers=ordered,
        policy=policy.value,
        counts=counts,
    )


@dataclass(frozen=True)
class OverlapReport:
    shared: FrozenSet[Pair]
    a_only: FrozenSet[Pair]
    b_only: FrozenSet[Pair]
    jaccard: float = field(default=1.0)


def compare_aggregations(
    msn: MSN, layers_a: Iterable[str], layers_b: Iterable[str]
) -> OverlapReport:
    """Overlap of the UNION views of two layer subsets."""
    a = aggregate_layers(msn, layers_a, AggregationPolicy.UNION).edges
    b = aggregate_layers(msn, layers_b, AggregationPolicy.UNION).edges
    union = a | b
    shared = a & b
    jaccard = len(shared) / len(union) if union else 1.0
    return OverlapReport(frozenset(shared), frozenset(a - b), frozenset(b - a), jaccard)
