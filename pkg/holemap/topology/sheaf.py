"""Global sections of H_q(X_1) -> H_q(X) <- ... <- H_q(X_n).

Over Z2 the difference rho_1(s_1) - rho_i(s_i) is a sum, so the block matrix
below is assembled with XOR and no signs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

from ..imaging.images import Pixel
from .cubical import LocalSystem, chebyshev_separated, realize
from .gf2 import BitMatrix, rank_z2
from .homology import induced_matrix


@dataclass(frozen=True)
class NSystem:
    """Ambient pixel set with n >= 2 pairwise closure-disjoint parts."""

    ambient: FrozenSet[Pixel]
    parts: Tuple[FrozenSet[Pixel], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ambient", frozenset(self.ambient))
        object.__setattr__(self, "parts", tuple(frozenset(part) for part in self.parts))
        if len(self.parts) < 2:
            raise ValueError(f"too-few-parts:{len(self.parts)}")
        for index, part in enumerate(self.parts):
            if not part <= self.ambient:
                raise ValueError(f"part-outside-ambient:{index}")
        for i, j in itertools.combinations(range(len(self.parts)), 2):
            if not chebyshev_separated(self.parts[i], self.parts[j]):
                raise ValueError(f"parts-not-separated:{i},{j}")

    @classmethod
    def from_local_system(cls, system: LocalSystem) -> "NSystem":
        return cls(ambient=system.black, parts=(system.x1, system.x2))


@dataclass(frozen=True)
class SectionSpace:
    q: int
    dim_gamma: int
    phi_rank: int
    part_betti: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.dim_gamma < 0 or self.phi_rank < 0:
            raise ValueError(f"negative-dimension:{self.dim_gamma},{self.phi_rank}")
        if self.part_betti and sum(self.part_betti) - self.phi_rank != self.dim_gamma:
            raise ValueError("rank-nullity-violated")


def restriction_matrices(system: NSystem, q: int) -> List[BitMatrix]:
    """rho_i: H_q(X_i) -> H_q(X) for every part, all in the same ambient basis."""

    ambient = realize(system.ambient)
    return [induced_matrix(realize(part), ambient, q) for part in system.parts]


def difference_map(restrictions: List[BitMatrix], ambient_rank: int) -> BitMatrix:
    """phi(s_1..s_n) = (rho_1 s_1 + rho_i s_i) for i = 2..n, stacked in blocks."""

    blocks = len(restrictions) - 1
    columns: List[int] = []
    for column in restrictions[0].columns:
        stacked = 0
        for block in range(blocks):
            stacked |= column << (block * ambient_rank)
        columns.append(stacked)
    for block, rho in enumerate(restrictions[1:]):
        columns.extend(column << (block * ambient_rank) for column in rho.columns)
    return BitMatrix(rows=blocks * ambient_rank, cols=len(columns), columns=tuple(columns))


def global_section_dim_n(system: NSystem, q: int) -> SectionSpace:
    """dim Gamma = sum beta_q(X_i) - rank phi, Gamma being the kernel of phi."""

    restrictions = restriction_matrices(system, q)
    ambient_rank = restrictions[0].rows
    phi = difference_map(restrictions, ambient_rank)
    part_betti = tuple(rho.cols for rho in restrictions)
    phi_rank = rank_z2(phi)
    return SectionSpace(q=q, dim_gamma=sum(part_betti) - phi_rank, phi_rank=phi_rank, part_betti=part_betti)


def global_section_dim(system: LocalSystem, q: int) -> SectionSpace:
    ambient = realize(system.black)
    rho1 = induced_matrix(realize(system.x1), ambient, q)
    rho2 = induced_matrix(realize(system.x2), ambient, q)
    phi_rank = rank_z2(rho1.hstack(rho2))
    part_betti = (rho1.cols, rho2.cols)
    return SectionSpace(q=q, dim_gamma=sum(part_betti) - phi_rank, phi_rank=phi_rank, part_betti=part_betti)


def enumerate_sections(system: NSystem, q: int) -> int:
    """Count tuples (s_1..s_n) with all rho_i(s_i) equal by exhaustive enumeration."""

    restrictions = restriction_matrices(system, q)
    if sum(rho.cols for rho in restrictions) > 20:
        raise ValueError("enumeration-too-large")
    images = [[rho.apply(vector) for vector in range(1 << rho.cols)] for rho in restrictions]
    total = 0
    for s1_image in images[0]:
        product = 1
        for other in images[1:]:
            product *= sum(1 for image in other if image == s1_image)
        total += product
    return total


__all__ = [
    "NSystem",
    "SectionSpace",
    "difference_map",
    "enumerate_sections",
    "global_section_dim",
    "global_section_dim_n",
    "restriction_matrices",
]
