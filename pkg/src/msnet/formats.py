"""Plain-text file formats.

Edge lists are UTF-8, comma separated, unquoted (labels never contain
commas). The first non-comment line is the header, either
``source,target,layer`` (a network) or ``source,target,layer,time`` (an
event stream). Lines starting with ``#`` are comments. Two comment lines are
also read as directives so that layers without edges and actors without edges
survive a write/read round trip::

    # @layers: friendship,work,family
    # @actors: t,u,v,x,y,z

Other formats: memberships (``actor,group``), coarsening maps
(``fine,coarse``), pillar mappings (``class_id,network_index,local_actor``)
and multigraph counts (``source,target,count``).
"""

from __future__ import annotations

import io
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    TextIO,
    Tuple,
    Union,
)

from .core import MSN, SSNView, validate_label
from .dimensions import GroupMembership, TemporalEvent
from .errors import (
    ArityMismatch,
    BadHeader,
    BadTimestamp,
    DuplicateEdge,
    MSNError,
    ParseError,
    SelfLoop,
    UndeclaredLayer,
)
from .models import CoarseGraph, PillarNetwork
from .representations import MultigraphView

EDGE_HEADER = "source,target,layer"
EVENT_HEADER = "source,target,layer,time"
MEMBERSHIP_HEADER = "actor,group"
COARSEN_HEADER = "fine,coarse"
PILLAR_HEADER = "class_id,network_index,local_actor"
COUNT_HEADER = "source,target,count"

LAYERS_DIRECTIVE = "# @layers:"
ACTORS_DIRECTIVE = "# @actors:"

_TIMESTAMP = re.compile(r"[0-9]+")

Source = Union[str, os.PathLike, TextIO, Iterable[str]]


@dataclass
class EventLog:
    """Events read from a timestamped edge list, plus the declared layer and
    actor universe (directives and first appearance, in that order)."""

    events: List[TemporalEvent]
    layers: List[str] = field(default_factory=list)
    actors: List[str] = field(default_factory=list)

    def __iter__(self) -> Iterator[TemporalEvent]:
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)

    def __getitem__(self, i: int) -> TemporalEvent:
        return self.events[i]

    def collapse(self) -> MSN:
        """All events regardless of time, as one network."""
        g = MSN(self.layers)
        g.add_actors(self.actors)
        for e in self.events:
            if not g.has_edge(e.source, e.target, e.layer):
                g.add_edge(e.source, e.target, e.layer)
        return g


def _lines(source: Source) -> Iterator[Tuple[int, str]]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8", newline="") as fh:
            yield from _lines(fh)
        return
    for n, raw in enumerate(source, start=1):
        yield n, raw.rstrip("\r\n")


def _records(
    source: Source, headers: Sequence[str]
) -> Iterator[Tuple[int, str, List[str]]]:
    """Yield ``(line_no, kind, fields)``.

    ``kind`` is ``"header"`` once, ``"directive:<name>"`` for directive
    comments and ``"record"`` for data lines.
    """
    header: Optional[str] = None
    last = 0
    for n, line in _lines(source):
        last = n
        if line.startswith("#"):
            for name, prefix in (("layers", LAYERS_DIRECTIVE), ("actors", ACTORS_DIRECTIVE)):
                if line.startswith(prefix):
                    body = line[len(prefix):].strip()
                    yield n, "directive:" + name, body.split(",") if body else []
            continue
        if not line.strip():
            continue
        if header is None:
            if line not in headers:
                raise BadHeader(
                    f"expected header {' or '.join(map(repr, headers))}, got {line!r}",
                    line=n,
                )
            header = line
            yield n, "header", line.split(",")
            continue
        fields = line.split(",")
        arity = header.count(",") + 1
        if len(fields) != arity:
            raise ArityMismatch(f"expected {arity} fields, got {len(fields)}", line=n)
        yield n, "record", fields
    if header is None:
        raise BadHeader(f"missing header, expected {' or '.join(map(repr, headers))}", line=last + 1)


def _at_line(exc: MSNError, line: int) -> MSNError:
    return type(exc)(str(exc), line=line)


def parse_edge_list(
    source: Source, declared_layers: Optional[Sequence[str]] = None
) -> Union[MSN, EventLog]:
    """Read an edge list.

    A three-column file gives an :class:`MSN`; a four-column file gives an
    :class:`EventLog`. Layers are taken in first-appearance order unless
    ``declared_layers`` fixes them, in which case any other layer is an
    error. The first malformed record aborts parsing with its line number.
    """
    layers: List[str] = list(declared_layers) if declared_layers is not None else []
    fixed = declared_layers is not None
    layer_set = set(layers)
    actors: Dict[str, None] = {}
    triples: List[Tuple[int, str, str, str]] = []
    events: List[TemporalEvent] = []
    header: Optional[str] = None
    seen = set()

    def use_layer(name: str, n: int) -> None:
        if name in layer_set:
            return
        if fixed:
            raise UndeclaredLayer(f"layer {name!r} not declared", line=n)
        try:
            validate_label(name, "layer")
        except MSNError as exc:
            raise _at_line(exc, n) from exc
        layers.append(name)
        layer_set.add(name)

    def use_actor(label: str, n: int) -> None:
        if label in actors:
            return
        try:
            validate_label(label)
        except MSNError as exc:
            raise _at_line(exc, n) from exc
        actors[label] = None

    for n, kind, fields in _records(source, (EDGE_HEADER, EVENT_HEADER)):
        if kind == "header":
            header = ",".join(fields)
        elif kind == "directive:layers":
            for name in fields:
                use_layer(name.strip(), n)
        elif kind == "directive:actors":
            for label in fields:
                use_actor(label.strip(), n)
        else:
            x, y, layer = fields[:3]
            use_layer(layer, n)
            use_actor(x, n)
            use_actor(y, n)
            if x == y:
                raise SelfLoop(f"self-loop <{x}, {y}, {layer}>", line=n)
            if header == EDGE_HEADER:
                triple = (x, y, layer)
                if triple in seen:
                    raise DuplicateEdge(f"edge <{x}, {y}, {layer}> repeated", line=n)
                seen.add(triple)
                triples.append((n, x, y, layer))
            else:
                if not _TIMESTAMP.fullmatch(fields[3]):
                    raise BadTimestamp(f"bad timestamp {fields[3]!r}", line=n)
                try:
                    events.append(TemporalEvent(x, y, layer, int(fields[3])))
                except MSNError as exc:
                    raise _at_line(exc, n) from exc

    if header == EVENT_HEADER:
        return EventLog(events, layers, list(actors))
    g = MSN(layers)
    g.add_actors(actors)
    for n, x, y, layer in triples:
        try:
            g.add_edge(x, y, layer)
        except MSNError as exc:
            raise _at_line(exc, n) from exc
    return g


def read_network(
    source: Source, declared_layers: Optional[Sequence[str]] = None
) -> MSN:
    """Like :func:`parse_edge_list` but always returns a network; an event
    stream is collapsed over all time."""
    parsed = parse_edge_list(source, declared_layers)
    if isinstance(parsed, EventLog):
        return parsed.collapse()
    return parsed


def read_events(
    source: Source, declared_layers: Optional[Sequence[str]] = None
) -> EventLog:
    parsed = parse_edge_list(source, declared_layers)
    if not isinstance(parsed, EventLog):
        raise BadHeader(f"expected a timestamped edge list with header {EVENT_HEADER!r}", line=1)
    return parsed


def _directives(layers: Sequence[str], actors: Sequence[str]) -> List[str]:
    out = []
    if layers:
        out.append(f"{LAYERS_DIRECTIVE} {','.join(layers)}")
    if actors:
        out.append(f"{ACTORS_DIRECTIVE} {','.join(actors)}")
    return out


def write_edge_list(msn: MSN) -> str:
    """Canonical text: directives, header, then edges sorted by (layer in
    declaration order, source, target)."""
    lines = _directives(msn.layers, msn.actors)
    lines.append(EDGE_HEADER)
    lines.extend(f"{x},{y},{layer}" for x, y, layer in msn.edges())
    return "\n".join(lines) + "\n"


def write_events(log: EventLog) -> str:
    lines = _directives(log.layers, log.actors)
    lines.append(EVENT_HEADER)
    lines.extend(f"{e.source},{e.target},{e.layer},{e.timestamp}" for e in log.events)
    return "\n".join(lines) + "\n"


def write_counts(view: Union[MultigraphView, CoarseGraph]) -> str:
    lines = [COUNT_HEADER]
    lines.extend(f"{s},{t},{c}" for s, t, c in view.rows())
    return "\n".join(lines) + "\n"


def read_membership(source: Source) -> GroupMembership:
    membership = GroupMembership()
    for n, kind, fields in _records(source, (MEMBERSHIP_HEADER,)):
        if kind != "record":
            continue
        try:
            membership.add(*fields)
        except MSNError as exc:
            raise _at_line(exc, n) from exc
    return membership


def read_node_mapping(source: Source) -> Dict[str, str]:
    """``fine,coarse`` file to a dict; a fine actor may appear only once
    (repeating an identical row is tolerated)."""
    mapping: Dict[str, str] = {}
    for n, kind, fields in _records(source, (COARSEN_HEADER,)):
        if kind != "record":
            continue
        fine, coarse = fields
        try:
            validate_label(fine)
            validate_label(coarse)
        except MSNError as exc:
            raise _at_line(exc, n) from exc
        if mapping.get(fine, coarse) != coarse:
            raise ParseError(f"actor {fine!r} mapped to both {mapping[fine]!r} and {coarse!r}", line=n)
        mapping[fine] = coarse
    return mapping


def write_pillar_mapping(p: PillarNetwork) -> str:
    """Mapping records grouped by class; a class without members is written
    as ``class_id,,``."""
    lines = [PILLAR_HEADER]
    for cid, members in p.classes().items():
        if not members:
            lines.append(f"{cid},,")
        lines.extend(f"{cid},{k},{local}" for k, local in members)
    return "\n".join(lines) + "\n"


def read_pillar_mapping(source: Source) -> Tuple[List[Tuple[str, int, str]], List[str]]:
    """Return ``(records, class_ids)``."""
    records = []
    class_ids: Dict[str, None] = {}
    for n, kind, fields in _records(source, (PILLAR_HEADER,)):
        if kind != "record":
            continue
        cid, k, local = fields
        class_ids[cid] = None
        if k == "" and local == "":
            continue
        if not _TIMESTAMP.fullmatch(k):
            raise ParseError(f"bad network index {k!r}", line=n)
        records.append((cid, int(k), local))
    return records, list(class_ids)


def _network_file(k: int) -> str:
    return f"network_{k}.csv"


def write_pillar(p: PillarNetwork, directory: Union[str, os.PathLike]) -> List[Path]:
    """One edge-list file per network plus ``mapping.csv``.

    Each network file is a regular three-column edge list whose single layer
    is the network's layer name and whose actor directive lists its local
    namespace.
    """
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    written = []
    for k, net in enumerate(p.networks):
        layer = net.layers[0] if net.layers else f"network_{k}"
        lines = _directives([layer], net.actors)
        lines.append(EDGE_HEADER)
        lines.extend(f"{x},{y},{layer}" for x, y in sorted(net.edges))
        path = root / _network_file(k)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        written.append(path)
    path = root / "mapping.csv"
    path.write_text(write_pillar_mapping(p), encoding="utf-8")
    written.append(path)
    return written


def read_pillar(directory: Union[str, os.PathLike]) -> Tuple[PillarNetwork, List[str]]:
    """Inverse of :func:`write_pillar`; also returns the layer names."""
    root = Path(directory)
    networks = []
    names = []
    k = 0
    while (root / _network_file(k)).exists():
        g = read_network(root / _network_file(k))
        if g.number_of_layers() != 1:
            raise ParseError(f"{_network_file(k)} must hold exactly one layer", line=1)
        layer = g.layers[0]
        networks.append(
            SSNView(g.actors, frozenset(g.layer_pairs(layer)), (layer,), "pillar")
        )
        names.append(layer)
        k += 1
    mapping, class_ids = read_pillar_mapping(root / "mapping.csv")
    return PillarNetwork(tuple(networks), tuple(mapping), tuple(class_ids)), names


def fixture_text(name: str = "fig1.csv") -> str:
    return resources.files("msnet.data").joinpath(name).read_text(encoding="utf-8")


def load_fixture(name: str = "fig1.csv") -> MSN:
    """The bundled example network (six actors, three layers)."""
    return read_network(io.StringIO(fixture_text(name)))
