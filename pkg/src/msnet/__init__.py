"""Multi-layered social networks: construction, conversion and analysis."""

from .core import MSN, Direction, SSNView, from_edges, new_msn
from .dimensions import (
    AggregationPolicy,
    GroupMembership,
    OverlapReport,
    SnapshotKey,
    TemporalEvent,
    aggregate_layers,
    compare_aggregations,
    event_multiplicity,
    snapshot,
    time_series,
)
from . import errors
from .errors import MSNError, ParseError
from .formats import (
    EventLog,
    load_fixture,
    parse_edge_list,
    read_network,
    write_edge_list,
)
from .measures import (
    degree,
    degree_report,
    density,
    density_ranking,
    density_report,
    neighbourhood_report,
)
from .models import (
    CoarseGraph,
    EdgeSetFamily,
    PillarNetwork,
    coarsen,
    from_edge_set_family,
    from_pillar,
    to_edge_set_family,
    to_pillar,
)
from .representations import (
    MultigraphView,
    adjacency_matrix,
    multiedge_count,
    to_multigraph,
    to_repeated_list,
)

__version__ = "0.1.0"
