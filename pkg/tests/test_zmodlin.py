import itertools

import numpy as np
import pytest

from mckay_labels.algebra.zmodlin import (
    AbelianGroupShape,
    cokernel_order,
    cokernel_representatives,
    image_contains,
    int_det,
    int_matrix,
    kernel_basis,
    kernel_shape,
    smith_normal_form,
    solve_mod,
    torsion_count,
)

CARTAN_C2 = [[2, -1], [-2, 2]]
CARTAN_A3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


def _apply(M, x, N):
    return tuple(int(v) % N for v in M.dot(np.array(list(x), dtype=object)))


def test_int_matrix_shapes():
    assert int_matrix([], 3).shape == (0, 3)
    assert int_matrix([[1, 2]]).shape == (1, 2)
    with pytest.raises(ValueError):
        int_matrix([[1, 2]], 3)


@pytest.mark.parametrize("rows,det", [
    (CARTAN_A3, 4),
    (CARTAN_C2, 2),
    ([[2, 4], [1, 2]], 0),
    ([[0, 1], [1, 0]], -1),
    ([[5]], 5),
])
def test_int_det(rows, det):
    assert int_det(int_matrix(rows)) == det


@pytest.mark.parametrize("rows,diag", [
    ([[2, 4], [6, 8]], [2, 4]),
    (CARTAN_C2, [1, 2]),
    (CARTAN_A3, [1, 1, 4]),
    ([[3, 1, 2]], [1]),
    ([[0, 0], [0, 0]], [0, 0]),
])
def test_smith_normal_form(rows, diag):
    M = int_matrix(rows)
    U, D, V = smith_normal_form(M)
    assert (U.dot(M).dot(V) == D).all()
    assert [int(D[i, i]) for i in range(min(D.shape))] == diag
    assert sum(1 for v in D.flat if v) == sum(1 for d in diag if d)
    assert abs(int_det(U)) == 1 and abs(int_det(V)) == 1


def test_shape_normalization():
    assert AbelianGroupShape.from_orders([2, 3]).divisors == (6,)
    shape = AbelianGroupShape.from_orders([4, 6])
    assert shape.divisors == (2, 12)
    assert shape.order == 24
    assert str(shape) == "Z/2 + Z/12"
    assert str(AbelianGroupShape.from_orders([1])) == "1"
    with pytest.raises(AssertionError):
        AbelianGroupShape((4, 2))


def test_solve_mod():
    M = int_matrix([[2]])
    assert solve_mod(M, [1], 4) is None
    x = solve_mod(M, [2], 4)
    assert _apply(M, x, 4) == (2,)
    assert image_contains(int_matrix(CARTAN_C2), [1, 0], 4)
    assert not image_contains(int_matrix(CARTAN_C2), [1, 1], 4)
    with pytest.raises(ValueError):
        solve_mod(M, [1], 0)
    with pytest.raises(ValueError):
        solve_mod(M, [1, 1], 4)


def test_empty_system():
    M = int_matrix([], 2)
    assert solve_mod(M, [], 5) == (0, 0)
    assert kernel_shape(M, 5).divisors == (5, 5)
    assert cokernel_order(M, 5) == 1
    assert cokernel_representatives(M, 5) == [()]


def test_kernel_basis_c2():
    M = int_matrix(CARTAN_C2)
    basis = kernel_basis(M, 4)
    assert [order for _, order in basis] == [2]
    vec, _ = basis[0]
    assert _apply(M, vec, 4) == (0, 0)
    assert any(v % 4 for v in vec)


@pytest.mark.parametrize("rows", [CARTAN_C2, CARTAN_A3, [[2, 4], [6, 8]], [[4, 6, 0], [2, 0, 6]], [[0]]])
@pytest.mark.parametrize("N", [1, 2, 3, 4, 6])
def test_kernel_and_cokernel_match_enumeration(rows, N):
    M = int_matrix(rows)
    points = list(itertools.product(range(N), repeat=M.shape[1]))
    kernel = [x for x in points if not any(_apply(M, x, N))]
    image = {_apply(M, x, N) for x in points}
    assert kernel_shape(M, N).order == len(kernel)
    assert cokernel_order(M, N) * len(image) == N ** M.shape[0]
    reps = cokernel_representatives(M, N)
    assert len(reps) == cokernel_order(M, N)
    # representatives lie in distinct cosets of the image
    for a, b in itertools.combinations(reps, 2):
        diff = tuple((x - y) % N for x, y in zip(a, b))
        assert diff not in image


def test_torsion_count():
    shape = AbelianGroupShape((2, 4))
    assert torsion_count(shape, 2) == 4
    assert torsion_count(shape, 0) == 8
    assert torsion_count(shape, 3) == 1
    with pytest.raises(ValueError):
        torsion_count(shape, -1)
