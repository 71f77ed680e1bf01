__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from typing import Iterable, List, Sequence, Tuple
import dataclasses


@dataclasses.dataclass(frozen=True)
class IntMatrix:
    """
    Immutable integer matrix stored row-major. Entries are python ints, so there is no overflow.

    Args:
        rows (int): number of rows.
        cols (int): number of columns.
        entries (tuple): rows * cols integers in row-major order.
    """

    rows: int = 0
    cols: int = 0
    entries: Tuple[int, ...] = dataclasses.field(default_factory=tuple)

    def __post_init__(self):
        assert type(self.rows) is int and self.rows >= 0, "rows must be a non-negative integer"
        assert type(self.cols) is int and self.cols >= 0, "cols must be a non-negative integer"
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        assert len(self.entries) == self.rows * self.cols, "entries length must equal rows x cols"

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        """
        Args:
            rows (Sequence[Sequence[int]]): list of rows.
            cols (int, optional): column count, needed only when there are no rows.

        Returns:
            IntMatrix: the matrix.
        """

        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        assert all(len(r) == cols for r in rows), "all rows must have the same length"
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int = None) -> "IntMatrix":
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int = None, cols: int = None) -> "IntMatrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        data = [0] * (rows * cols)
        for i, v in enumerate(values):
            data[i * cols + i] = v
        return cls(rows, cols, tuple(data))

    @classmethod
    def block_diagonal(cls, blocks: Iterable["IntMatrix"]) -> "IntMatrix":
        blocks = list(blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0, c0 = 0, 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(data, cols=cols)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols : (i + 1) * self.cols]) for i in range(self.rows)]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def select_columns(self, indices: Iterable[int]) -> "IntMatrix":
        return IntMatrix.from_columns([self.column(j) for j in indices], rows=self.rows)

    def select_rows(self, indices: Iterable[int]) -> "IntMatrix":
        return IntMatrix.from_rows([self.row(i) for i in indices], cols=self.cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.to_rows(), rows=self.cols)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def hstack(self, *others: "IntMatrix") -> "IntMatrix":
        out = self.to_rows()
        cols = self.cols
        for o in others:
            assert o.rows == self.rows, "hstack requires equal row counts"
            for i in range(self.rows):
                out[i].extend(o.row(i))
            cols += o.cols
        return IntMatrix.from_rows(out, cols=cols)

    def vstack(self, *others: "IntMatrix") -> "IntMatrix":
        out = self.to_rows()
        for o in others:
            assert o.cols == self.cols, "vstack requires equal column counts"
            out.extend(o.to_rows())
        return IntMatrix.from_rows(out, cols=self.cols)

    def apply(self, vector: Sequence) -> list:
        """
        Multiplies the matrix with a vector of ints or Fractions.
        """

        assert len(vector) == self.cols, "vector length must equal the column count"
        n = self.cols
        return [sum((self.entries[i * n + j] * vector[j] for j in range(n)), 0) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        assert self.cols == other.rows, f"shape mismatch {self.shape} @ {other.shape}"
        b = other.to_rows()
        out = []
        for i in range(self.rows):
            a = self.row(i)
            out.append([sum(a[k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)])
        return IntMatrix.from_rows(out, cols=other.cols)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        assert self.shape == other.shape, "shape mismatch"
        return IntMatrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def as_strings(self) -> List[List[str]]:
        return [[str(x) for x in r] for r in self.to_rows()]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.to_rows()) + "]"
