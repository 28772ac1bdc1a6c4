"""Cubical homology, persistence and global sections over Z2."""

from .cubical import CubicalComplex, LocalSystem, WindowRect, boundary_band, build_local_system, realize
from .gf2 import BitMatrix, rank_z2
from .homology import HomologyBasis, betti, betti_numbers, express_in_basis, homology_basis, induced_matrix
from .persistence import (
    Filtration,
    MergingProfile,
    PersistenceDiagram,
    merging_profile,
    nested_filtration,
    persistence,
    rank_oracle_counts,
    short_filtration,
    sublevel_filtration,
)
from .sheaf import NSystem, SectionSpace, global_section_dim, global_section_dim_n

__all__ = [
    "BitMatrix",
    "CubicalComplex",
    "Filtration",
    "HomologyBasis",
    "LocalSystem",
    "MergingProfile",
    "NSystem",
    "PersistenceDiagram",
    "SectionSpace",
    "WindowRect",
    "betti",
    "betti_numbers",
    "boundary_band",
    "build_local_system",
    "express_in_basis",
    "global_section_dim",
    "global_section_dim_n",
    "homology_basis",
    "induced_matrix",
    "merging_profile",
    "nested_filtration",
    "persistence",
    "rank_oracle_counts",
    "rank_z2",
    "realize",
    "short_filtration",
    "sublevel_filtration",
]
