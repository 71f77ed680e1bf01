__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Smith normal form over the integers together with the lattice operations built on top of it:
cokernels, saturated kernels, subquotients of column lattices and integer solutions of linear systems."""

from typing import List, Optional, Sequence, Tuple
import dataclasses
import logging

from src.algebra.int_matrix import IntMatrix
from src.algebra.abelian_groups import FGAbelianGroup
from src.errors import DenominatorNotContained

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SNFResult:
    """
    left @ A @ right == diag(d), with left and right unimodular.

    Args:
        d (tuple): invariant factors, non-negative, each dividing the next. Has min(rows, cols) entries.
        left (IntMatrix): rows x rows unimodular matrix.
        right (IntMatrix): cols x cols unimodular matrix.
    """

    d: Tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x != 0)

    def diagonal(self) -> IntMatrix:
        return IntMatrix.diagonal(self.d, rows=self.left.rows, cols=self.right.cols)


def _select_pivot(D: List[List[int]], t: int) -> Optional[Tuple[int, int]]:
    # Smallest nonzero absolute value, ties broken by lowest (row, col).
    best = None
    best_abs = 0
    for i in range(t, len(D)):
        row = D[i]
        for j in range(t, len(row)):
            v = abs(row[j])
            if v and (best is None or v < best_abs):
                best, best_abs = (i, j), v
    return best


def smith_normal_form(A: IntMatrix) -> SNFResult:
    """
    Computes the Smith normal form of an integer matrix with its unimodular transforms.

    Args:
        A (IntMatrix): input matrix, possibly with zero rows or columns.

    Returns:
        SNFResult: invariant factors and transforms with left @ A @ right == diag(d).
    """

    m, n = A.rows, A.cols
    D = A.to_rows()
    L = IntMatrix.identity(m).to_rows()
    R = IntMatrix.identity(n).to_rows()

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            D[i], D[j] = D[j], D[i]
            L[i], L[j] = L[j], L[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for M in (D, R):
                for row in M:
                    row[i], row[j] = row[j], row[i]

    def add_row(src: int, dst: int, c: int) -> None:
        # row dst += c * row src
        for M in (D, L):
            a, b = M[src], M[dst]
            for k in range(len(a)):
                b[k] += c * a[k]

    def add_col(src: int, dst: int, c: int) -> None:
        for M in (D, R):
            for row in M:
                row[dst] += c * row[src]

    steps = 0
    t = 0
    while t < min(m, n):
        pivot = _select_pivot(D, t)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        steps += 1

        p = D[t][t]
        clean = True
        for i in range(t + 1, m):
            q = D[i][t] // p
            if q:
                add_row(t, i, -q)
            if D[i][t]:
                clean = False
        for j in range(t + 1, n):
            q = D[t][j] // p
            if q:
                add_col(t, j, -q)
            if D[t][j]:
                clean = False
        if not clean:
            # A nonzero remainder is strictly smaller than |p| and becomes the next pivot.
            continue

        offender = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
            None,
        )
        if offender is not None:
            add_row(offender, t, 1)
            continue

        if p < 0:
            for M in (D, L):
                M[t] = [-x for x in M[t]]
        t += 1

    d = tuple(D[i][i] for i in range(min(m, n)))
    logger.debug("SNF of %dx%d matrix in %d pivot steps: %s", m, n, steps, d)
    return SNFResult(
        d=d,
        left=IntMatrix.from_rows(L, cols=m),
        right=IntMatrix.from_rows(R, cols=n),
    )


def cokernel(A: IntMatrix) -> FGAbelianGroup:
    """
    Z^rows / image(A).

    Args:
        A (IntMatrix): map Z^cols -> Z^rows.

    Returns:
        FGAbelianGroup: the cokernel.
    """

    snf = smith_normal_form(A)
    nonzero = [x for x in snf.d if x != 0]
    return FGAbelianGroup(free_rank=A.rows - len(nonzero), torsion=tuple(x for x in nonzero if x > 1))


def _normalize_sign(column: Sequence[int]) -> List[int]:
    for x in column:
        if x:
            return list(column) if x > 0 else [-y for y in column]
    return list(column)


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """
    Basis of the integer kernel of A as the columns of a cols x k matrix. The spanned sublattice is saturated.
    Each column is normalized so that its first nonzero entry is positive.

    Args:
        A (IntMatrix): input matrix.

    Returns:
        IntMatrix: kernel basis, possibly with zero columns.
    """

    snf = smith_normal_form(A)
    columns = [_normalize_sign(snf.right.column(j)) for j in range(snf.rank, A.cols)]
    return IntMatrix.from_columns(columns, rows=A.cols)


def _lattice_coordinates(snf: SNFResult, v: Sequence[int]) -> Optional[List[int]]:
    # Coordinates of v in the basis {left^-1 (d_i e_i)} of the column lattice, or None if v is outside it.
    w = snf.left.apply(list(v))
    r = snf.rank
    if any(w[i] for i in range(r, len(w))):
        return None
    if any(w[i] % snf.d[i] for i in range(r)):
        return None
    return [w[i] // snf.d[i] for i in range(r)]


def solve_in_lattice(A: IntMatrix, v: Sequence[int]) -> Optional[List[int]]:
    """
    Finds an integer vector x with A @ x == v.

    Args:
        A (IntMatrix): coefficient matrix.
        v (Sequence[int]): right hand side, of length A.rows.

    Returns:
        list: a solution, or None when v is not in the column lattice of A.
    """

    assert len(v) == A.rows, "right hand side has the wrong length"
    snf = smith_normal_form(A)
    y = _lattice_coordinates(snf, v)
    if y is None:
        return None
    y = y + [0] * (A.cols - len(y))
    return snf.right.apply(y)


def subquotient(num_gens: IntMatrix, den_gens: IntMatrix) -> FGAbelianGroup:
    """
    Quotient of the column lattice of num_gens by the column lattice of den_gens.

    Args:
        num_gens (IntMatrix): generators of the numerator lattice as columns.
        den_gens (IntMatrix): generators of the denominator lattice as columns, same ambient dimension.

    Returns:
        FGAbelianGroup: the subquotient.

    Raises:
        DenominatorNotContained: if some denominator generator is not in the numerator lattice.
    """

    assert num_gens.rows == den_gens.rows, "numerator and denominator must live in the same ambient lattice"
    snf = smith_normal_form(num_gens)
    coordinates = []
    for j in range(den_gens.cols):
        c = _lattice_coordinates(snf, den_gens.column(j))
        if c is None:
            raise DenominatorNotContained(
                f"denominator generator {j} = {list(den_gens.column(j))} is not in the numerator lattice"
            )
        coordinates.append(c)
    return cokernel(IntMatrix.from_columns(coordinates, rows=snf.rank))
