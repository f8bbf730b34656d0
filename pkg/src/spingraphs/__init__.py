"""Spin graphs of non-singular even spin bundles on hyperelliptic surfaces."""

from .atlas import (
    ExceptionalClass,
    LeafCensus,
    SurfaceType,
    branch_number,
    class_count,
    classes_for_genus,
    enumerate_surface_types,
    i_max,
    iter_surface_types,
    leaf_census,
    max_i_classes,
    order,
    total_class_count,
)
from .divisor import (
    Divisor,
    PointLabel,
    conjugate_divisor,
    epsilon_degree,
    mutual_incidence_check,
)
from .graphs import (
    Edge,
    GraphKind,
    SpinGraph,
    canonical_class,
    edges_from_divisors,
    epsilon_degree_of_vertex,
    exceptional_graph,
    graph_branch_number,
    head_vertices,
    section_divisor,
    standard_graph,
    validate,
    weierstrass_graph,
)
from .partitions import count_partitions, enumerate_partitions, total_partitions

__version__ = "0.1.0"
