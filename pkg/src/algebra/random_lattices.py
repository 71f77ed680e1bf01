__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from fractions import Fraction
from typing import List, Tuple
import numpy as np

from src.algebra.int_matrix import IntMatrix


def random_unimodular(rank: int, rng: np.random.Generator, steps: int = None) -> Tuple[IntMatrix, IntMatrix]:
    """
    Random product of elementary integer row operations, returned together with its inverse.

    Args:
        rank (int): size of the matrix.
        rng (np.random.Generator): random number generator.
        steps (int, optional): number of elementary operations. Defaults to 3 * rank.

    Returns:
        Tuple[IntMatrix, IntMatrix]: (U, U^-1).
    """

    steps = 3 * rank if steps is None else steps
    U = IntMatrix.identity(rank).to_rows()
    U_inv = IntMatrix.identity(rank).to_rows()
    for _ in range(steps if rank > 1 else 0):
        kind = int(rng.integers(0, 3))
        i, j = (int(x) for x in rng.choice(rank, size=2, replace=False))
        if kind == 0:
            c = int(rng.choice([-2, -1, 1, 2]))
            # U <- (I + c e_ij) U and U^-1 <- U^-1 (I - c e_ij)
            U[i] = [a + c * b for a, b in zip(U[i], U[j])]
            for row in U_inv:
                row[j] -= c * row[i]
        elif kind == 1:
            U[i], U[j] = U[j], U[i]
            for row in U_inv:
                row[i], row[j] = row[j], row[i]
        else:
            U[i] = [-a for a in U[i]]
            for row in U_inv:
                row[i] = -row[i]
    return IntMatrix.from_rows(U, cols=rank), IntMatrix.from_rows(U_inv, cols=rank)


def block_involution(a: int, b: int, r: int) -> IntMatrix:
    """
    diag(1^a, (-1)^b, swap^r): the split model of a lattice with a trivial, b cyclotomic and r regular summands.
    """

    swap = IntMatrix.from_rows([[0, 1], [1, 0]])
    blocks = [IntMatrix.identity(1)] * a + [-IntMatrix.identity(1)] * b + [swap] * r
    return IntMatrix.block_diagonal(blocks)


def random_affine_model(
    a: int, b: int, r: int, chern: bool, rng: np.random.Generator
) -> Tuple[IntMatrix, List[Fraction]]:
    """
    Random conjugate of the split model with a prescribed Chern flag.

    The split translation lift has entries 1/2 on a random nonempty subset of the trivial coordinates when chern is
    set. It is then moved by a random anti-invariant rational vector, which leaves the Chern class unchanged, and
    conjugated by a random unimodular matrix.

    Args:
        a (int): number of trivial summands.
        b (int): number of cyclotomic summands.
        r (int): number of regular summands.
        chern (bool): whether the equivariant Chern class is nonzero. Requires a >= 1.
        rng (np.random.Generator): random number generator.

    Returns:
        Tuple[IntMatrix, List[Fraction]]: the involution and the translation lift.
    """

    assert not chern or a >= 1, "a nonzero Chern class needs a trivial summand"
    n = a + b + 2 * r
    sigma = block_involution(a, b, r)
    t = [Fraction(0)] * n
    if chern:
        support = rng.random(a) < 0.5
        support[int(rng.integers(0, a))] = True
        for i in range(a):
            if support[i]:
                t[i] = Fraction(1, 2)
    w = [Fraction(int(x), 3) for x in rng.integers(-3, 4, size=n)]
    sw = sigma.apply(w)
    t = [ti + (wi - swi) / 2 for ti, wi, swi in zip(t, w, sw)]
    t = [ti + int(x) for ti, x in zip(t, rng.integers(-2, 3, size=n))]

    U, U_inv = random_unimodular(n, rng)
    return U @ sigma @ U_inv, U.apply(t)
