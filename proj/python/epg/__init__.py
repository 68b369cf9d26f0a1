"""Enhanced power graphs of finite groups."""

from ._epg import (
    Error,
    Graph,
    Group,
    chromatic_number,
    complement,
    diameter,
    edge_connectivity,
    enhanced_power_graph,
    find_odd_antihole,
    find_odd_hole,
    formula_report,
    graphs_coincide,
    independence_number,
    max_clique,
    maximum_matching,
    min_degree,
    oracle_report,
    parse_spec,
    power_graph,
    strong_metric_dimension,
    strong_resolving_oracle,
    verify,
    verify_group,
)

__all__ = [name for name in dir() if not name.startswith("_")]
