import random

import pytest
from scipy import ndimage

from holemap.imaging.synthetic import random_image, rectangular_ring
from holemap.topology.cubical import realize
from holemap.topology.gf2 import BitMatrix, rank_z2, reduce_sparse, reduce_sparse_tracked, sparse_low
from holemap.topology.homology import (
    betti,
    betti_numbers,
    express_in_basis,
    homology_basis,
    induced_matrix,
    induced_rank,
)
from holemap.topology.persistence import Filtration, merging_profile, persistence


def test_rank_small_matrices():
    assert rank_z2(BitMatrix.zeros(0, 0)) == 0
    assert rank_z2(BitMatrix.identity(3)) == 3
    assert rank_z2(BitMatrix.from_dense([[1, 1], [1, 1]])) == 1
    assert rank_z2(BitMatrix.from_dense([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2


def test_bitmatrix_product_and_stacking():
    a = BitMatrix.from_dense([[1, 0], [1, 1]])
    assert (a @ a).to_dense() == [[1, 0], [0, 1]]
    assert a.hstack(BitMatrix.identity(2)).cols == 4
    assert a.vstack(a).to_dense() == [[1, 0], [1, 1], [1, 0], [1, 1]]
    with pytest.raises(ValueError, match="shape-mismatch"):
        a @ BitMatrix.identity(3)


def test_sparse_reduction_matches_bitset_rank():
    rng = random.Random(3)
    for _ in range(200):
        rows, cols = rng.randint(0, 9), rng.randint(0, 9)
        dense = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
        matrix = BitMatrix.from_dense(dense, cols)
        sparse = [{i for i in range(rows) if dense[i][j]} for j in range(cols)]
        reduced, pivots = reduce_sparse(sparse)
        assert len(pivots) == rank_z2(matrix)
        assert all(sparse_low(reduced[j]) == low for low, j in pivots.items())
        _, tracked_pivots, transforms = reduce_sparse_tracked(sparse)
        assert tracked_pivots == pivots
        for j, transform in enumerate(transforms):
            total = set()
            for k in transform:
                total ^= sparse[k]
            assert total == reduced[j]


def test_chain_positions_cancel_repeated_cells():
    complex_ = realize([(0, 0)])
    edge = (0, 1)
    assert complex_.chain_indices([edge, edge], 1) == frozenset()
    assert complex_.chain_cells(complex_.chain_indices([edge], 1), 1) == frozenset({edge})
    with pytest.raises(ValueError, match="cell-not-in-complex"):
        complex_.chain_indices([(5, 5)], 2)


def test_betti_of_single_pixel_and_crossing(crossing_image):
    assert betti_numbers(realize([(0, 0)])) == (1, 0, 0)
    complex_ = realize(crossing_image.black)
    assert (betti(complex_, 0), betti(complex_, 1)) == (1, 1)


def test_betti_of_border_ring():
    ring = realize(rectangular_ring(0, 0, 6, 6))
    assert betti_numbers(ring) == (1, 1, 0)


def test_betti_of_empty_complex():
    assert betti_numbers(realize([])) == (0, 0, 0)


def test_betti_two_is_always_zero():
    rng = random.Random(5)
    for _ in range(30):
        image = random_image(rng, 8, 8, rng.uniform(0.3, 0.8))
        assert betti(realize(image.black), 2) == 0


def test_betti_zero_matches_flood_fill():
    rng = random.Random(1234)
    structure = ndimage.generate_binary_structure(2, 2)
    for _ in range(1000):
        size = rng.randint(1, 6)
        image = random_image(rng, size, size, rng.uniform(0.2, 0.8))
        _, components = ndimage.label(image.to_mask(), structure=structure)
        assert betti(realize(image.black), 0) == components


def _boundary_mod_check(complex_, cycle, q):
    return complex_.boundary_of(complex_.chain_indices(cycle, q), q) == frozenset()


def test_basis_of_ring_traces_the_hole():
    complex_ = realize(rectangular_ring(0, 0, 4, 4))
    basis = homology_basis(complex_, 1)
    assert basis.rank == 1
    (rep,) = basis.representatives
    assert _boundary_mod_check(complex_, rep, 1)
    assert express_in_basis(rep, complex_, basis) == (1,)


def test_basis_of_empty_and_single_pixel():
    assert homology_basis(realize([]), 0).rank == 0
    basis = homology_basis(realize([(0, 0)]), 0)
    assert basis.rank == 1
    assert len(basis.representatives[0]) == 1


def test_express_in_basis_on_two_holes():
    pixels = rectangular_ring(0, 0, 3, 3) | rectangular_ring(0, 4, 3, 3)
    complex_ = realize(pixels)
    basis = homology_basis(complex_, 1)
    assert basis.rank == 2
    first, second = basis.representatives
    assert express_in_basis(first, complex_, basis) == (1, 0)
    assert express_in_basis(second, complex_, basis) == (0, 1)
    assert express_in_basis(first ^ second, complex_, basis) == (1, 1)


def test_express_boundary_is_zero_and_non_cycle_rejected():
    complex_ = realize([(0, 0)])
    basis = homology_basis(complex_, 1)
    square_boundary = frozenset({(0, 1), (2, 1), (1, 0), (1, 2)})
    assert express_in_basis(square_boundary, complex_, basis) == ()
    with pytest.raises(ValueError, match="not-a-cycle"):
        express_in_basis({(0, 1)}, complex_, basis)


def test_induced_identity_and_component_inclusion(crossing_image):
    ambient = realize(crossing_image.black)
    assert induced_matrix(ambient, ambient, 1).to_dense() == [[1]]
    assert induced_matrix(realize([(2, 0)]), ambient, 0).to_dense() == [[1]]


def test_induced_from_crossing_outside_part(crossing_system):
    ambient = realize(crossing_system.black)
    matrix = induced_matrix(realize(crossing_system.x2), ambient, 0)
    assert (matrix.rows, matrix.cols) == (1, 3)
    assert matrix.to_dense() == [[1, 1, 1]]
    assert rank_z2(matrix) == 1


def test_induced_rejects_non_subcomplex():
    with pytest.raises(ValueError, match="not-a-subcomplex"):
        induced_matrix(realize([(0, 0)]), realize([(3, 3)]), 0)


def test_induced_maps_compose():
    rng = random.Random(17)
    for _ in range(30):
        image = random_image(rng, 6, 6, rng.uniform(0.4, 0.8))
        large = set(image.black)
        middle = {pixel for pixel in large if rng.random() < 0.8}
        small = {pixel for pixel in middle if rng.random() < 0.8}
        s, t, u = realize(small), realize(middle), realize(large)
        for q in (0, 1):
            assert induced_matrix(s, u, q) == induced_matrix(t, u, q) @ induced_matrix(s, t, q)


def test_induced_rank_matches_two_step_persistence():
    rng = random.Random(29)
    for _ in range(30):
        image = random_image(rng, 6, 6, rng.uniform(0.4, 0.8))
        sub_pixels = {pixel for pixel in image.black if rng.random() < 0.6}
        sub, ambient = realize(sub_pixels), realize(image.black)
        levels = {cell: (1 if cell in sub else 3) for cell in ambient.cells}
        diagram = persistence(Filtration(complex=ambient, level=levels))
        for q in (0, 1):
            assert induced_rank(sub, ambient, q) == merging_profile(diagram, q).i
