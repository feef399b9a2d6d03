"""Layer-erased multigraph views.

Flattening a multi-layered network into a multigraph keeps only how many
parallel edges join each ordered pair of actors. Which layer each edge came
from is discarded, so there is deliberately no function going back.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, List, Mapping, Tuple

import numpy as np

from .core import MSN, Pair
from .errors import UnknownActor

RepeatedAdjacencyList = Dict[str, List[str]]


@dataclass(frozen=True)
class MultigraphView:
    """Sparse multiedge counts over a shared actor set.

    ``counts[(i, j)]`` is the number of layers carrying ``i -> j``. Pairs with
    no edge are absent rather than stored as zero.
    """

    actors: Tuple[str, ...]
    counts: Mapping[Pair, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> List[Tuple[str, str, int]]:
        """``(source, target, count)`` sorted by pair."""
        return [(s, t, c) for (s, t), c in sorted(self.counts.items())]

    def out_counts(self, actor: str) -> Dict[str, int]:
        return {t: c for (s, t), c in sorted(self.counts.items()) if s == actor}


def to_multigraph(msn: MSN) -> MultigraphView:
    tally: Counter = Counter()
    for x, y, _ in msn.edges():
        tally[(x, y)] += 1
    return MultigraphView(msn.actors, MappingProxyType(dict(sorted(tally.items()))))


def to_repeated_list(mg: MultigraphView) -> RepeatedAdjacencyList:
    """Newman-style adjacency list: one entry per parallel edge.

    Every actor gets a list, sorted by neighbour label, where a neighbour
    reached by ``k`` parallel edges appears ``k`` times.
    """
    lists: RepeatedAdjacencyList = {a: [] for a in mg.actors}
    for (s, t), c in sorted(mg.counts.items()):
        lists[s].extend([t] * c)
    return lists


def multiedge_count(mg: MultigraphView, i: str, j: str) -> int:
    known = set(mg.actors)
    for a in (i, j):
        if a not in known:
            raise UnknownActor(f"unknown actor {a!r}")
    return mg.counts.get((i, j), 0)


def adjacency_matrix(mg: MultigraphView) -> np.ndarray:
    """Dense ``|V| x |V|`` count matrix, rows/columns in ``mg.actors`` order."""
    pos = {a: k for k, a in enumerate(mg.actors)}
    mat = np.zeros((len(pos), len(pos)), dtype=np.int64)
    for (s, t), c in mg.counts.items():
        mat[pos[s], pos[t]] = c
    return mat
