"""Exact dense and sparse linear algebra over Q and Q(sqrt d)."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import Scalar, conjugate, lift, normalize, radicand

Vector = tuple


def common_field(values: Iterable) -> int | None:
    """The radicand shared by all irrational values, or None if all rational."""
    d = None
    for x in values:
        r = radicand(x)
        if r is not None:
            if d is not None and r != d:
                raise ValueError(f"mixed fields Q(sqrt {d}) and Q(sqrt {r})")
            d = r
    return d


def to_field(x, d: int | None) -> Scalar:
    if isinstance(x, str):
        from .scalar import parse_scalar
        return parse_scalar(x, d)
    return lift(x, d)


class ExactMatrix:
    """Immutable matrix with entries in Q or in a single quadratic field."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None,
                 field: int | None = None) -> None:
        data = [list(r) for r in data]
        if cols is None:
            if not data:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix rows")
        flat = [x for r in data for x in r]
        d = common_field(flat)
        if field is not None:
            if d is not None and d != field:
                raise ValueError(f"entry in Q(sqrt {d}) for a Q(sqrt {field}) matrix")
            d = field
        self.rows = len(data)
        self.cols = cols
        self.field = d
        self.entries = tuple(tuple(lift(x, d) for x in r) for r in data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int,
                     field: int | None = None) -> ExactMatrix:
        cols = len(columns)
        data = [[columns[j][i] for j in range(cols)] for i in range(nrows)]
        return cls(data, cols=cols, field=field)

    @classmethod
    def identity(cls, n: int, field: int | None = None) -> ExactMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)],
                   cols=n, field=field)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.columns(), cols=self.rows, field=self.field)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ocols = other.columns()
            return ExactMatrix(
                [[dot(r, c) for c in ocols] for r in self.entries],
                cols=other.cols, field=self.field or other.field)
        v = tuple(other)
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(dot(r, v) for r in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.to_lists()!r})"

    def to_lists(self) -> list[list[Scalar]]:
        return [[normalize(x) for x in r] for r in self.entries]

    def conjugate(self) -> ExactMatrix:
        return ExactMatrix([[conjugate(x) for x in r] for r in self.entries],
                           cols=self.cols, field=self.field)

    def select_columns(self, idx: Sequence[int]) -> ExactMatrix:
        return ExactMatrix([[r[j] for j in idx] for r in self.entries],
                           cols=len(idx), field=self.field)

    def rank(self) -> int:
        return rank(self)

    def kernel_basis(self) -> list[Vector]:
        return kernel_basis(self)


def as_matrix(M) -> ExactMatrix:
    return M if isinstance(M, ExactMatrix) else ExactMatrix(M)


def dot(u: Sequence, v: Sequence) -> Scalar:
    s = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def rref(M) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are the first nonzero entry found scanning rows top-down in each
    column; the result is canonical regardless of that choice.
    """
    M = as_matrix(M)
    A = [list(r) for r in M.entries]
    pivots: list[int] = []
    r = 0
    for c in range(M.cols):
        if r == len(A):
            break
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv if x else x for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y if y else x for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M) -> int:
    M = as_matrix(M)
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(rref(M)[1])


def kernel_basis(M) -> list[Vector]:
    """Basis of ``{x : Mx = 0}``, one vector per free column.

    The vector for free column ``f`` has ``x_f = 1``, zero at the other free
    columns, and ``x_p = -R[i][f]`` at the ``i``-th pivot column ``p``.
    """
    M = as_matrix(M)
    d = M.field
    zero, one = lift(0, d), lift(1, d)
    if M.rows == 0:
        R, pivots = [], []
    else:
        R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivset:
            continue
        x = [zero] * M.cols
        x[f] = one
        for i, p in enumerate(pivots):
            x[p] = -R[i][f]
        basis.append(tuple(normalize(v) for v in x))
    return basis


def solve(M, b: Sequence) -> Vector | None:
    """Some solution of ``Mx = b`` (free variables set to zero), or None."""
    M = as_matrix(M)
    if len(b) != M.rows:
        raise ValueError("shape mismatch")
    aug = ExactMatrix([list(r) + [b[i]] for i, r in enumerate(M.entries)],
                      cols=M.cols + 1)
    R, pivots = rref(aug) if M.rows else ([], [])
    if M.cols in pivots:
        return None
    x = [Fraction(0)] * M.cols
    for i, p in enumerate(pivots):
        x[p] = R[i][M.cols]
    return tuple(normalize(v) for v in x)


def inverse(M) -> ExactMatrix:
    M = as_matrix(M)
    n = M.rows
    if n != M.cols:
        raise ValueError("inverse of a non-square matrix")
    aug = ExactMatrix([list(r) + [1 if i == j else 0 for j in range(n)]
                       for i, r in enumerate(M.entries)], cols=2 * n, field=M.field)
    R, pivots = rref(aug) if n else ([], [])
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return ExactMatrix([r[n:] for r in R], cols=n, field=M.field)


def determinant(M) -> Scalar:
    M = as_matrix(M)
    n = M.rows
    if n != M.cols:
        raise ValueError("determinant of a non-square matrix")
    A = [list(r) for r in M.entries]
    det = lift(1, M.field)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return normalize(lift(0, M.field))
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det = det * A[c][c]
        inv = 1 / A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return normalize(det)


def sparse_rank(rows: Iterable[dict]) -> int:
    """Rank of a matrix given as sparse rows ``{column: value}``.

    Rows are reduced against pivots keyed by their leading column; suited to
    the large, very sparse relation matrices of graded components.
    """
    pivots: dict = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = 1 / row[lead]
                pivots[lead] = {k: v * inv for k, v in row.items()}
                break
            f = row[lead]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)
