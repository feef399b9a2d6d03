"""The canonical multi-layered social network ``<V, E, L>``.

Actors form one unified node set shared by every layer. The layer set is
fixed when the network is created. An edge is a directed ``(source, target,
layer)`` triple; self-loops and repeated triples are rejected.

Actors are addressed by their string label in the public API. Internally each
actor gets a dense integer index, and every layer keeps an out- and an
in-adjacency index keyed by those integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from .errors import (
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

Edge = Tuple[str, str, str]
Pair = Tuple[str, str]

_FORBIDDEN = (",", "\n", "\r")


class Direction(str, enum.Enum):
    OUT = "out"
    IN = "in"


def validate_label(label: str, kind: str = "actor") -> str:
    """Return ``label`` unchanged if it is usable in the edge-list format.

    Labels must be non-empty strings without commas or line breaks, without
    leading/trailing whitespace, and must not start with ``#`` (that would
    turn a record into a comment).
    """
    if not isinstance(label, str):
        raise InvalidLabel(f"{kind} label must be a string, got {type(label).__name__}")
    if not label:
        if kind == "layer":
            raise EmptyName("layer name must be non-empty")
        raise InvalidLabel(f"{kind} label must be non-empty")
    if label != label.strip():
        raise InvalidLabel(f"{kind} label {label!r} has leading/trailing whitespace")
    if any(ch in label for ch in _FORBIDDEN):
        raise InvalidLabel(f"{kind} label {label!r} contains a comma or line break")
    if label.startswith("#"):
        raise InvalidLabel(f"{kind} label {label!r} starts with '#'")
    return label


@dataclass(frozen=True)
class SSNView:
    """Immutable single-layered (or aggregated) directed network.

    ``actors`` is the full actor set of the network the view was taken from.
    ``layers`` and ``policy`` record how the view was produced. ``counts`` is
    only set for views aggregated with the COUNT policy and maps each pair to
    the number of selected layers carrying it.
    """

    actors: Tuple[str, ...]
    edges: FrozenSet[Pair]
    layers: Tuple[str, ...] = ()
    policy: str = "projection"
    counts: Optional[Mapping[Pair, int]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        for x, y in self.edges:
            if x == y:
                raise SelfLoop(f"self-loop on {x!r} in view")

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[Pair]:
        return sorted(self.edges)

    def out_neighbors(self, x: str) -> FrozenSet[str]:
        return frozenset(t for s, t in self.edges if s == x)

    def in_neighbors(self, x: str) -> FrozenSet[str]:
        return frozenset(s for s, t in self.edges if t == x)


class MSN:
    """Multi-layered social network with enforced invariants.

    >>> g = MSN(["friendship", "work"])
    >>> g.add_edge("x", "y", "friendship", create=True)
    >>> g.has_edge("x", "y", "friendship"), g.has_edge("y", "x", "friendship")
    (True, False)
    """

    def __init__(self, layers: Iterable[str] = ()) -> None:
        names = list(layers)
        seen: Set[str] = set()
        for name in names:
            validate_label(name, "layer")
            if name in seen:
                raise DuplicateLayer(f"layer {name!r} declared twice")
            seen.add(name)
        self._layers: Tuple[str, ...] = tuple(names)
        self._layer_index: Dict[str, int] = {n: i for i, n in enumerate(names)}
        self._labels: List[str] = []
        self._index: Dict[str, int] = {}
        # per layer: actor index -> set of neighbour indexes
        self._out: List[Dict[int, Set[int]]] = [{} for _ in names]
        self._in: List[Dict[int, Set[int]]] = [{} for _ in names]
        self._sizes: List[int] = [0] * len(names)
        self._frozen = False

    # ------------------------------------------------------------------
    # basic accessors
    # ------------------------------------------------------------------

    @property
    def layers(self) -> Tuple[str, ...]:
        return self._layers

    @property
    def actors(self) -> Tuple[str, ...]:
        return tuple(self._labels)

    @property
    def frozen(self) -> bool:
        return self._frozen

    def number_of_actors(self) -> int:
        return len(self._labels)

    def number_of_layers(self) -> int:
        return len(self._layers)

    def number_of_edges(self, layer: Optional[str] = None) -> int:
        if layer is None:
            return sum(self._sizes)
        return self._sizes[self._layer_idx(layer)]

    def layer_sizes(self) -> Dict[str, int]:
        return dict(zip(self._layers, self._sizes))

    def has_actor(self, label: str) -> bool:
        return label in self._index

    def has_layer(self, name: str) -> bool:
        return name in self._layer_index

    def actor_id(self, label: str) -> int:
        """Dense internal index of ``label``."""
        try:
            return self._index[label]
        except KeyError:
            raise UnknownActor(f"unknown actor {label!r}") from None

    def actor_label(self, idx: int) -> str:
        return self._labels[idx]

    def _layer_idx(self, name: str) -> int:
        try:
            return self._layer_index[name]
        except (KeyError, TypeError):
            raise UnknownLayer(f"unknown layer {name!r}") from None

    def _check_mutable(self) -> None:
        if self._frozen:
            raise FrozenError("network is frozen")

    # ------------------------------------------------------------------
    # mutation
    # ------------------------------------------------------------------

    def add_actor(self, label: str) -> int:
        """Add ``label`` to V, or return its id if it is already there."""
        self._check_mutable()
        existing = self._index.get(label)
        if existing is not None:
            return existing
        validate_label(label)
        idx = len(self._labels)
        self._labels.append(label)
        self._index[label] = idx
        return idx

    def add_actors(self, labels: Iterable[str]) -> None:
        for label in labels:
            self.add_actor(label)

    def add_edge(self, x: str, y: str, layer: str, *, create: bool = False) -> None:
        """Insert the directed edge ``<x, y, layer>``.

        With ``create=True`` unknown endpoints are added to V first.
        """
        self._check_mutable()
        li = self._layer_idx(layer)
        if x == y:
            raise SelfLoop(f"self-loop <{x}, {y}, {layer}>")
        if create:
            self.add_actor(x)
            self.add_actor(y)
        xi, yi = self.actor_id(x), self.actor_id(y)
        out = self._out[li].setdefault(xi, set())
        if yi in out:
            raise DuplicateEdge(f"edge <{x}, {y}, {layer}> already present")
        out.add(yi)
        self._in[li].setdefault(yi, set()).add(xi)
        self._sizes[li] += 1

    def remove_edge(self, x: str, y: str, layer: str) -> None:
        self._check_mutable()
        if not self.has_edge(x, y, layer):
            raise NotFound(f"edge <{x}, {y}, {layer}> not present")
        li = self._layer_index[layer]
        xi, yi = self._index[x], self._index[y]
        self._discard(self._out[li], xi, yi)
        self._discard(self._in[li], yi, xi)
        self._sizes[li] -= 1

    @staticmethod
    def _discard(adj: Dict[int, Set[int]], a: int, b: int) -> None:
        nbrs = adj[a]
        nbrs.discard(b)
        if not nbrs:
            del adj[a]

    def remove_actor(self, label: str) -> None:
        """Remove an actor together with every incident edge on every layer."""
        self._check_mutable()
        if label not in self._index:
            raise NotFound(f"actor {label!r} not present")
        edges = [e for e in self.edges() if label not in (e[0], e[1])]
        labels = [a for a in self._labels if a != label]
        self._labels = []
        self._index = {}
        self._out = [{} for _ in self._layers]
        self._in = [{} for _ in self._layers]
        self._sizes = [0] * len(self._layers)
        self.add_actors(labels)
        for x, y, layer in edges:
            self.add_edge(x, y, layer)

    def freeze(self) -> "MSN":
        """Make the network read-only; returns ``self`` for chaining."""
        self._frozen = True
        return self

    def copy(self) -> "MSN":
        """Mutable deep copy (the copy is never frozen)."""
        other = MSN(self._layers)
        other._labels = list(self._labels)
        other._index = dict(self._index)
        other._out = [{k: set(v) for k, v in adj.items()} for adj in self._out]
        other._in = [{k: set(v) for k, v in adj.items()} for adj in self._in]
        other._sizes = list(self._sizes)
        return other

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def has_edge(self, x: str, y: str, layer: str) -> bool:
        li = self._layer_idx(layer)
        xi, yi = self.actor_id(x), self.actor_id(y)
        return yi in self._out[li].get(xi, ())

    def layer_pairs(self, layer: str) -> List[Pair]:
        """Edges of one layer as (source, target) pairs, sorted by label."""
        li = self._layer_idx(layer)
        labels = self._labels
        return sorted(
            (labels[s], labels[t]) for s, tgts in self._out[li].items() for t in tgts
        )

    def edges(self, layer: Optional[str] = None) -> Iterator[Edge]:
        """Iterate over ``(source, target, layer)`` triples.

        Layers come in declaration order, pairs within a layer sorted by label.
        """
        names = self._layers if layer is None else (layer,)
        for name in names:
            for x, y in self.layer_pairs(name):
                yield x, y, name

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges())

    def _resolve_layers(self, layers: Iterable[str]) -> List[int]:
        if isinstance(layers, str):
            layers = [layers]
        idxs = sorted({self._layer_idx(name) for name in layers})
        if not idxs:
            raise EmptyLayerSet("at least one layer is required")
        return idxs

    def neighbors(
        self, x: str, direction: Direction | str, layers: Iterable[str]
    ) -> FrozenSet[str]:
        """Union over ``layers`` of the actors adjacent to ``x``."""
        direction = Direction(direction)
        xi = self.actor_id(x)
        adj = self._out if direction is Direction.OUT else self._in
        found: Set[int] = set()
        for li in self._resolve_layers(layers):
            found.update(adj[li].get(xi, ()))
        return frozenset(self._labels[i] for i in found)

    def layer_degree(self, x: str, direction: Direction | str, layer: str) -> int:
        direction = Direction(direction)
        li = self._layer_idx(layer)
        adj = self._out if direction is Direction.OUT else self._in
        return len(adj[li].get(self.actor_id(x), ()))

    def layer_projection(self, layer: str) -> SSNView:
        """The single-layered network ``<V, E_l, {l}>``."""
        return SSNView(
            actors=self.actors,
            edges=frozenset(self.layer_pairs(layer)),
            layers=(layer,),
            policy="projection",
        )

    # ------------------------------------------------------------------
    # dunder
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MSN):
            return NotImplemented
        return (
            self._layers == other._layers
            and set(self._labels) == set(other._labels)
            and self.edge_set() == other.edge_set()
        )

    __hash__ = None  # type: ignore[assignment]

    def __len__(self) -> int:
        return self.number_of_edges()

    def __contains__(self, edge: object) -> bool:
        if not (isinstance(edge, tuple) and len(edge) == 3):
            return False
        x, y, layer = edge
        if x not in self._index or y not in self._index or layer not in self._layer_index:
            return False
        return self.has_edge(x, y, layer)

    def __repr__(self) -> str:
        return (
            f"MSN(actors={self.number_of_actors()}, layers={list(self._layers)}, "
            f"edges={self.number_of_edges()})"
        )


def new_msn(layer_names: Sequence[str]) -> MSN:
    """Empty network with the given fixed layer set."""
    return MSN(layer_names)


def from_edges(
    edges: Iterable[Edge],
    layers: Optional[Sequence[str]] = None,
    actors: Iterable[str] = (),
) -> MSN:
    """Build a network from ``(source, target, layer)`` triples.

    Without ``layers`` the layer set is taken in first-appearance order.
    """
    edges = list(edges)
    if layers is None:
        layers = list(dict.fromkeys(layer for _, _, layer in edges))
    g = MSN(layers)
    g.add_actors(actors)
    for x, y, layer in edges:
        g.add_edge(x, y, layer, create=True)
    return g
