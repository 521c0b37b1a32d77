"""
Graph representation, standard constructors, the join operator and the extremal graph H.

Vertices are 0-based integers; the labels v1..vn used in docstrings map to 0..n-1.
"""
from qplanar.graphs.constructors import (
    build_H,
    complete,
    complete_bipartite,
    cycle,
    empty,
    fan,
    icosahedron,
    join,
    make,
    octahedron,
    path,
    random_connected,
    star,
    wheel,
)
from qplanar.graphs.data import DegreeProfile, Graph, degree_profile, neighborhood_subgraphs
from qplanar.graphs.io import read_edge_list, write_edge_list

__all__ = [
    "DegreeProfile",
    "Graph",
    "build_H",
    "complete",
    "complete_bipartite",
    "cycle",
    "degree_profile",
    "empty",
    "fan",
    "icosahedron",
    "join",
    "make",
    "neighborhood_subgraphs",
    "octahedron",
    "path",
    "random_connected",
    "read_edge_list",
    "star",
    "wheel",
    "write_edge_list",
]
