"""Degree, density and neighbourhood measures on a multi-layered network."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Union

from .core import MSN, Direction
from .dimensions import AggregationPolicy, _policy
from .errors import EmptyLayerSet, TooFewActors


def degree(
    msn: MSN,
    x: str,
    direction: Union[Direction, str],
    layers: Iterable[str],
    policy: Union[AggregationPolicy, str],
) -> int:
    """Degree of ``x`` over ``layers``.

    UNION counts distinct neighbours across the layers, COUNT sums the
    per-layer degrees (a neighbour on two layers counts twice).
    """
    policy = _policy(policy)
    if isinstance(layers, str):
        layers = [layers]
    layers = list(dict.fromkeys(layers))
    if not layers:
        raise EmptyLayerSet("at least one layer is required")
    if policy is AggregationPolicy.UNION:
        return len(msn.neighbors(x, direction, layers))
    msn.actor_id(x)
    return sum(msn.layer_degree(x, direction, layer) for layer in layers)


@dataclass(frozen=True)
class DegreeReport:
    actor: str
    out_degree: Dict[str, int]
    in_degree: Dict[str, int]
    policy: AggregationPolicy
    layers: tuple
    out_total: int
    in_total: int


def degree_report(
    msn: MSN,
    x: str,
    policy: Union[AggregationPolicy, str],
    layers: Iterable[str] | None = None,
) -> DegreeReport:
    layers = tuple(msn.layers if layers is None else layers)
    policy = _policy(policy)
    return DegreeReport(
        actor=x,
        out_degree={l: msn.layer_degree(x, Direction.OUT, l) for l in msn.layers},
        in_degree={l: msn.layer_degree(x, Direction.IN, l) for l in msn.layers},
        policy=policy,
        layers=layers,
        out_total=degree(msn, x, Direction.OUT, layers, policy),
        in_total=degree(msn, x, Direction.IN, layers, policy),
    )


def density(msn: MSN, layer: str) -> Fraction:
    """Directed density ``|E_l| / (|V| (|V| - 1))`` as an exact fraction."""
    n = msn.number_of_actors()
    if n < 2:
        raise TooFewActors(f"density needs at least 2 actors, network has {n}")
    return Fraction(msn.number_of_edges(layer), n * (n - 1))


@dataclass(frozen=True)
class DensityReport:
    layer: str
    edges: int
    density: Fraction


def density_report(msn: MSN) -> List[DensityReport]:
    """One report per layer, ordered as :func:`density_ranking`."""
    return [
        DensityReport(layer, msn.number_of_edges(layer), density(msn, layer))
        for layer in density_ranking(msn)
    ]


def density_ranking(msn: MSN) -> List[str]:
    """Layers by decreasing density; equal densities ordered by name."""
    n = msn.number_of_actors()
    if n < 2:
        raise TooFewActors(f"density needs at least 2 actors, network has {n}")
    return sorted(msn.layers, key=lambda l: (-density(msn, l), l))


@dataclass(frozen=True)
class NeighbourhoodReport:
    actor: str
    out_neighbors: Dict[str, FrozenSet[str]]
    in_neighbors: Dict[str, FrozenSet[str]]
    union: FrozenSet[str]
    intersection: FrozenSet[str]


def neighbourhood_report(msn: MSN, x: str) -> NeighbourhoodReport:
    """Per-layer in/out neighbour sets of ``x``.

    ``union`` and ``intersection`` are taken over the out-neighbour sets of
    all layers; with no layers both are empty.
    """
    msn.actor_id(x)
    out = {l: msn.neighbors(x, Direction.OUT, [l]) for l in msn.layers}
    inn = {l: msn.neighbors(x, Direction.IN, [l]) for l in msn.layers}
    sets = list(out.values())
    union = frozenset().union(*sets)
    inter = frozenset(sets[0]).intersection(*sets[1:]) if sets else frozenset()
    return NeighbourhoodReport(x, out, inn, union, inter)
