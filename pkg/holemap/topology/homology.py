"""Z2 homology of cubical complexes: Betti numbers, bases and induced maps.

Chains are sets of cell positions within one dimension; only the maps
between homology groups, whose sizes are Betti numbers, use BitMatrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Dict, FrozenSet, Iterable, List, Set, Tuple

from .cubical import Cell, CubicalComplex
from .gf2 import BitMatrix, rank_z2, reduce_sparse, reduce_sparse_tracked, sparse_low

MAX_DIMENSION = 2


def _boundary_rank(complex_: CubicalComplex, q: int) -> int:
    if q <= 0 or q > MAX_DIMENSION:
        return 0
    _, pivots = reduce_sparse(complex_.boundary_columns(q))
    return len(pivots)


def betti(complex_: CubicalComplex, q: int) -> int:
    """dim ker d_q - dim im d_{q+1}."""

    if q < 0 or q > MAX_DIMENSION:
        return 0
    return complex_.count(q) - _boundary_rank(complex_, q) - _boundary_rank(complex_, q + 1)


def betti_numbers(complex_: CubicalComplex) -> Tuple[int, int, int]:
    ranks = [_boundary_rank(complex_, q) for q in range(MAX_DIMENSION + 2)]
    return tuple(complex_.count(q) - ranks[q] - ranks[q + 1] for q in range(MAX_DIMENSION + 1))  # type: ignore[return-value]


@dataclass(frozen=True)
class HomologyBasis:
    """Representative q-cycles, independent modulo boundaries; ``rank`` is the Betti number."""

    q: int
    representatives: Tuple[FrozenSet[Cell], ...]
    rank: int

    def __post_init__(self) -> None:
        if self.rank != len(self.representatives):
            raise ValueError(f"basis-rank-mismatch:{self.rank}!={len(self.representatives)}")


def _basis_chains(complex_: CubicalComplex, q: int) -> Tuple[List[FrozenSet[int]], List[Set[int]]]:
    """Representative cycles as position sets plus the non-zero reduced columns of d_{q+1}."""

    reduced_q, _, transforms = reduce_sparse_tracked(complex_.boundary_columns(q))
    higher, pivots_up = reduce_sparse(complex_.boundary_columns(q + 1))
    representatives = [
        frozenset(transforms[j])
        for j in range(complex_.count(q))
        if not reduced_q[j] and j not in pivots_up
    ]
    return representatives, [column for column in higher if column]


def homology_basis(complex_: CubicalComplex, q: int) -> HomologyBasis:
    if q < 0 or q > MAX_DIMENSION:
        return HomologyBasis(q=q, representatives=(), rank=0)
    chains, _ = _basis_chains(complex_, q)
    representatives = tuple(complex_.chain_cells(cycle, q) for cycle in chains)
    return HomologyBasis(q=q, representatives=representatives, rank=len(representatives))


class _CoordinateSolver:
    """Echelon form of boundaries and tagged representatives of one complex.

    Each pivot row maps to (column, tag); the tag is a bitset over basis
    indices recording which representatives were folded into the column.
    """

    def __init__(
        self,
        complex_: CubicalComplex,
        q: int,
        representatives: List[FrozenSet[int]],
        boundaries: List[Set[int]],
    ) -> None:
        self.complex = complex_
        self.q = q
        self.rank = len(representatives)
        self._pivots: Dict[int, Tuple[FrozenSet[int], int]] = {}
        for column in boundaries:
            self._insert(column, 0)
        for index, representative in enumerate(representatives):
            self._insert(representative, 1 << index)

    @classmethod
    def for_basis(cls, complex_: CubicalComplex, basis: HomologyBasis) -> "_CoordinateSolver":
        if not 0 <= basis.q <= MAX_DIMENSION:
            return cls(complex_, basis.q, [], [])
        _, boundaries = _basis_chains(complex_, basis.q)
        representatives = [complex_.chain_indices(cycle, basis.q) for cycle in basis.representatives]
        return cls(complex_, basis.q, representatives, boundaries)

    @classmethod
    def canonical(cls, complex_: CubicalComplex, q: int) -> "_CoordinateSolver":
        if not 0 <= q <= MAX_DIMENSION:
            return cls(complex_, q, [], [])
        representatives, boundaries = _basis_chains(complex_, q)
        return cls(complex_, q, representatives, boundaries)

    def _eliminate(self, chain: AbstractSet[int], tag: int) -> Tuple[Set[int], int]:
        column = set(chain)
        low = sparse_low(column)
        while low >= 0 and low in self._pivots:
            pivot_column, pivot_tag = self._pivots[low]
            column ^= pivot_column
            tag ^= pivot_tag
            low = sparse_low(column)
        return column, tag

    def _insert(self, chain: AbstractSet[int], tag: int) -> None:
        column, tag = self._eliminate(chain, tag)
        if not column:
            raise RuntimeError("dependent-homology-representatives")
        self._pivots[sparse_low(column)] = (frozenset(column), tag)

    def coordinates_of_chain(self, cycle: AbstractSet[int]) -> int:
        if self.complex.boundary_of(cycle, self.q):
            raise ValueError("not-a-cycle")
        residual, tag = self._eliminate(cycle, 0)
        if residual:
            raise RuntimeError("cycle-not-expressible")
        return tag

    def coordinates(self, cycle: Iterable[Cell]) -> Tuple[int, ...]:
        tag = self.coordinates_of_chain(self.complex.chain_indices(cycle, self.q))
        return tuple((tag >> i) & 1 for i in range(self.rank))


def express_in_basis(cycle: Iterable[Cell], complex_: CubicalComplex, basis: HomologyBasis) -> Tuple[int, ...]:
    """Coordinates of ``cycle`` in ``basis``: the unique lambda with cycle - sum(lambda_i rep_i) a boundary."""

    return _CoordinateSolver.for_basis(complex_, basis).coordinates(cycle)


def induced_matrix(sub: CubicalComplex, ambient: CubicalComplex, q: int) -> BitMatrix:
    """Matrix of H_q(sub) -> H_q(ambient) for the inclusion, in the canonical bases."""

    if not sub.issubcomplex(ambient):
        raise ValueError("not-a-subcomplex")
    source = homology_basis(sub, q)
    solver = _CoordinateSolver.canonical(ambient, q)
    columns = tuple(
        solver.coordinates_of_chain(ambient.chain_indices(representative, q))
        for representative in source.representatives
    )
    return BitMatrix(rows=solver.rank, cols=source.rank, columns=columns)


def induced_rank(sub: CubicalComplex, ambient: CubicalComplex, q: int) -> int:
    return rank_z2(induced_matrix(sub, ambient, q))


__all__ = [
    "BitMatrix",
    "HomologyBasis",
    "betti",
    "betti_numbers",
    "express_in_basis",
    "homology_basis",
    "induced_matrix",
    "induced_rank",
    "rank_z2",
]
