"""
Planarity, outer-planarity and link-cycle utilities.
"""
from qplanar.planarity.data import RotationEmbedding
from qplanar.planarity.embedding import (
    check_outerplanar_degree_sum,
    faces,
    gap_profile,
    is_maximal_outer_planar,
    is_maximal_planar,
    is_outer_planar,
    is_planar,
    link_cycle,
)

__all__ = [
    "RotationEmbedding",
    "check_outerplanar_degree_sum",
    "faces",
    "gap_profile",
    "is_maximal_outer_planar",
    "is_maximal_planar",
    "is_outer_planar",
    "is_planar",
    "link_cycle",
]
