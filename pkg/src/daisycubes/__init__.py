"""Daisy cubes: generation, Θ-classes, ≤-expansions, proper labellings and
daisy graphs of rooted graphs."""

from .bitstring import BitString, downward_closure, hamming_distance, is_downward_closed, leq, reduce_generators
from .expansion import (
    DecompositionCertificate,
    ExpansionSpec,
    contract,
    decompose,
    expand,
    is_convex_leq_expansion_step,
    is_leq_subgraph,
    leq_expand,
    peripheral_expand,
    replay,
    validate_expansion_spec,
)
from .generators import (
    LabelledGraph,
    daisy_cube,
    enumerate_antichains,
    fibonacci_cube,
    hypercube,
    lucas_cube,
    strip_and_scramble,
)
from .graph import DisconnectedGraphError, Graph, bfs_distances, distance_matrix
from .labelling import flip_coordinate, proper_label, recognize_daisy, verify_proper
from .rooted import RootedGraph, daisy_graph, leq_gr
from .theta import edge_split, is_partial_cube, theta_star_partition

__version__ = "0.1.0"
