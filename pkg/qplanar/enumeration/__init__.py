"""
Isomorph-free triangulation generation, planar_code input and the extremal search.
"""
from qplanar.enumeration.canonical import canonical_form, is_isomorphic, refine
from qplanar.enumeration.data import Census, SearchResult
from qplanar.enumeration.generate import (
    KNOWN_CENSUS,
    brute_force_classes,
    census,
    gen_triangulations,
    generate_embeddings,
    split_vertex,
)
from qplanar.enumeration.planar_code import read_planar_code, write_planar_code
from qplanar.enumeration.search import extremal_search, load_classes

__all__ = [
    "KNOWN_CENSUS",
    "Census",
    "SearchResult",
    "brute_force_classes",
    "canonical_form",
    "census",
    "extremal_search",
    "gen_triangulations",
    "generate_embeddings",
    "is_isomorphic",
    "load_classes",
    "read_planar_code",
    "refine",
    "split_vertex",
    "write_planar_code",
]
