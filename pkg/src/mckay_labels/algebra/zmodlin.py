"""
Integer linear algebra modulo N.

Matrices are numpy arrays of Python integers (``dtype=object``) so that no
reduction step can overflow. The Smith normal form drives everything else:
with U·M·V = D, the system M·x = b (mod N) becomes D·y = U·b (mod N) in the
coordinates y = V^{-1}·x, which splits into independent congruences.
"""
import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger("mckay_labels.zmodlin")

IntMatrix = np.ndarray


def int_matrix(rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> IntMatrix:
    """Build an exact integer matrix; `cols` is needed only when `rows` is empty."""
    rows = [list(r) for r in rows]
    if not rows:
        return np.zeros((0, cols or 0), dtype=object)
    M = np.array(rows, dtype=object)
    if M.ndim != 2 or (cols is not None and M.shape[1] != cols):
        raise ValueError(f"inconsistent matrix dimensions: {M.shape}")
    return M


def _eye(n: int) -> IntMatrix:
    M = np.zeros((n, n), dtype=object)
    for i in range(n):
        M[i, i] = 1
    return M


def int_det(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = M.shape[0]
    if n != M.shape[1]:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    A = [[int(x) for x in row] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


@dataclass(frozen=True)
class AbelianGroupShape:
    """A finite abelian group Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... | d_t, trivial factors dropped."""
    divisors: Tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.divisors, self.divisors[1:]):
            assert b % a == 0, f"divisor chain broken: {self.divisors}"
        assert all(d > 1 for d in self.divisors), f"trivial factor kept: {self.divisors}"

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> "AbelianGroupShape":
        """Normalize any list of cyclic factor orders into invariant-factor form."""
        D = int_matrix([[o if i == j else 0 for j in range(len(orders))] for i, o in enumerate(orders)], len(orders))
        _, diag, _ = smith_normal_form(D)
        return cls(tuple(d for d in _diagonal(diag) if d > 1))

    @property
    def order(self) -> int:
        return shape_order(self)

    def __str__(self) -> str:
        return " + ".join(f"Z/{d}" for d in self.divisors) or "1"


@dataclass(frozen=True)
class _SNF:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix


def _diagonal(D: IntMatrix) -> List[int]:
    return [int(D[i, i]) for i in range(min(D.shape))]


def _snf(M: IntMatrix) -> _SNF:
    D = np.array(M, dtype=object).copy()
    rows, cols = D.shape
    U, U_inv = _eye(rows), _eye(rows)
    V, V_inv = _eye(cols), _eye(cols)

    def swap_rows(i, j):
        D[[i, j]] = D[[j, i]]
        U[[i, j]] = U[[j, i]]
        U_inv[:, [i, j]] = U_inv[:, [j, i]]

    def swap_cols(i, j):
        D[:, [i, j]] = D[:, [j, i]]
        V[:, [i, j]] = V[:, [j, i]]
        V_inv[[i, j]] = V_inv[[j, i]]

    def add_row(src, dst, k):
        # row_dst += k * row_src
        D[dst] = D[dst] + k * D[src]
        U[dst] = U[dst] + k * U[src]
        U_inv[:, src] = U_inv[:, src] - k * U_inv[:, dst]

    def add_col(src, dst, k):
        # col_dst += k * col_src
        D[:, dst] = D[:, dst] + k * D[:, src]
        V[:, dst] = V[:, dst] + k * V[:, src]
        V_inv[src] = V_inv[src] - k * V_inv[dst]

    def negate_row(i):
        D[i] = -D[i]
        U[i] = -U[i]
        U_inv[:, i] = -U_inv[:, i]

    for t in range(min(rows, cols)):
        while True:
            nonzero = [(abs(D[i, j]), i, j) for i in range(t, rows) for j in range(t, cols) if D[i, j] != 0]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, rows):
                q = D[i, t] // D[t, t]
                if q:
                    add_row(t, i, -q)
                if D[i, t] != 0:
                    done = False
            for j in range(t + 1, cols):
                q = D[t, j] // D[t, t]
                if q:
                    add_col(t, j, -q)
                if D[t, j] != 0:
                    done = False
            if not done:
                continue
            # divisibility: pull an offending row into row t and reduce again
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if D[i, j] % D[t, t] != 0), None)
            if bad is None:
                break
            add_row(bad, t, 1)
        if D[t, t] < 0:
            negate_row(t)

    assert (U.dot(np.array(M, dtype=object)).dot(V) == D).all()
    return _SNF(U, D, V, U_inv, V_inv)


def smith_normal_form(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U·M·V = D diagonal, diagonal entries a divisibility chain, U and V unimodular."""
    snf = _snf(M)
    return snf.U, snf.D, snf.V


def _mod_gcd(d: int, N: int) -> int:
    return math.gcd(d, N)  # gcd(0, N) = N


def solve_mod(M: IntMatrix, b: Sequence[int], N: int) -> Optional[Tuple[int, ...]]:
    """Some x with M·x = b (mod N), or None when the system is inconsistent."""
    if N < 1:
        raise ValueError(f"modulus must be >= 1, got {N}")
    rows, cols = M.shape
    if len(b) != rows:
        raise ValueError(f"right-hand side has {len(b)} entries, matrix has {rows} rows")
    if rows == 0:
        return (0,) * cols
    snf = _snf(M)
    c = [int(v) % N for v in snf.U.dot(np.array(list(b), dtype=object))]
    diag = _diagonal(snf.D)
    y = [0] * cols
    for i in range(rows):
        d = diag[i] if i < len(diag) else 0
        g = _mod_gcd(d, N)
        if c[i] % g:
            return None
        if d % N:
            modulus = N // g
            y[i] = ((c[i] // g) * pow((d // g) % modulus, -1, modulus)) % modulus if modulus > 1 else 0
    x = snf.V.dot(np.array(y, dtype=object))
    return tuple(int(v) % N for v in x)


def image_contains(M: IntMatrix, b: Sequence[int], N: int) -> bool:
    return solve_mod(M, b, N) is not None


def kernel_basis(M: IntMatrix, N: int) -> List[Tuple[Tuple[int, ...], int]]:
    """
    Independent generators of {x in (Z/N)^cols : M·x = 0 (mod N)} with their orders.

    The kernel is the direct sum of the listed cyclic groups; trivial ones are omitted.
    """
    if N < 1:
        raise ValueError(f"modulus must be >= 1, got {N}")
    rows, cols = M.shape
    if rows == 0:
        diag: List[int] = []
        V = _eye(cols)
    else:
        snf = _snf(M)
        diag, V = _diagonal(snf.D), snf.V
    gens = []
    for i in range(cols):
        d = diag[i] if i < len(diag) else 0
        g = _mod_gcd(d, N)
        if g > 1:
            step = N // g
            gens.append((tuple(int(v * step) % N for v in V[:, i]), g))
    return gens


def kernel_shape(M: IntMatrix, N: int) -> AbelianGroupShape:
    return AbelianGroupShape.from_orders([g for _, g in kernel_basis(M, N)])


def cokernel_order(M: IntMatrix, N: int) -> int:
    """|(Z/N)^rows / M·(Z/N)^cols|."""
    rows, _ = M.shape
    if rows == 0:
        return 1
    diag = _diagonal(_snf(M).D)
    return reduce(lambda acc, i: acc * _mod_gcd(diag[i] if i < len(diag) else 0, N), range(rows), 1)


def cokernel_representatives(M: IntMatrix, N: int) -> List[Tuple[int, ...]]:
    """One vector of (Z/N)^rows per coset of the image of M, in a fixed order."""
    rows, _ = M.shape
    if rows == 0:
        return [()]
    snf = _snf(M)
    diag = _diagonal(snf.D)
    ranges = [range(_mod_gcd(diag[i] if i < len(diag) else 0, N)) for i in range(rows)]
    reps = []
    for y in np.ndindex(*[len(r) for r in ranges]):
        x = snf.U_inv.dot(np.array(list(y), dtype=object))
        reps.append(tuple(int(v) % N for v in x))
    return reps


def shape_order(shape: AbelianGroupShape) -> int:
    return reduce(lambda a, b: a * b, shape.divisors, 1)


def torsion_count(shape: AbelianGroupShape, t: int) -> int:
    """#{x : t·x = 0} in the group, i.e. prod gcd(d_i, t) with gcd(d, 0) = d."""
    if t < 0:
        raise ValueError(f"exponent must be >= 0, got {t}")
    return reduce(lambda acc, d: acc * math.gcd(d, t), shape.divisors, 1)
