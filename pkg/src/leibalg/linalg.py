"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` values (always reduced, positive
denominator, zero as ``0/1``). Vectors are plain tuples of Fractions.
Matrices act on column vectors: ``m @ v`` is the image of ``v``, so column
``j`` holds the image of the ``j``-th standard basis vector.

Row reduction runs on a sparse row representation because the derivation
systems built elsewhere in the package are tall and very sparse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence, TypeVar

from .errors import DimensionMismatchError, NotSquareError
from .poly import Poly

Vector = tuple  # tuple[Fraction, ...]
SparseRow = dict  # dict[int, Fraction]

T = TypeVar("T")

ZERO = Fraction(0)
ONE = Fraction(1)


# -- vectors ---------------------------------------------------------------


def vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    """Standard basis vector ``e_i`` (0-based) of length ``n``."""
    return tuple(ONE if k == i else ZERO for k in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_is_zero(u: Vector) -> bool:
    return not any(u)


def lin_comb(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    out[k] += c * x
    return tuple(out)


# -- matrices --------------------------------------------------------------


class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(x) for x in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError("ragged row list")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows(
            [[col[i] for col in columns] for i in range(rows)], cols=len(columns)
        )

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def diagonal_matrix(cls, diag: Sequence) -> Matrix:
        n = len(diag)
        return cls(n, n, [diag[i] if i == j else ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> Matrix:
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __rmul__(self, c) -> Matrix:
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = [other.column(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for c in ocols:
                    out.append(sum((a * b for a, b in zip(r, c) if a and b), ZERO))
            return Matrix(self.rows, other.cols, out)
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a and b), ZERO) for i in range(self.rows)
        )

    def transpose(self) -> Matrix:
        return Matrix.from_columns([self.row(i) for i in range(self.rows)], rows=self.cols)

    def commutator(self, other: Matrix) -> Matrix:
        return self @ other - other @ self

    def __pow__(self, k: int) -> Matrix:
        if not self.is_square():
            raise NotSquareError("power of a non-square matrix")
        result, base = Matrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.entries)

    def diagonal(self) -> Vector:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def is_upper_triangular(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(min(i, self.cols)))

    def is_lower_triangular(self) -> bool:
        return self.transpose().is_upper_triangular()

    def flatten(self) -> Vector:
        return self.entries

    def map_entries(self, fn: Callable) -> list[list]:
        return [[fn(x) for x in self.row(i)] for i in range(self.rows)]


# -- sparse row reduction --------------------------------------------------


def _to_sparse(row: Iterable) -> SparseRow:
    return {j: Fraction(x) for j, x in enumerate(row) if x}


class EchelonBuilder:
    """Incrementally maintained reduced row echelon form of a row space.

    Each stored row has a leading 1 in its pivot column and zeros in every
    other pivot column, so reducing a new row needs one pass over the pivot
    columns it touches.
    """

    def __init__(self) -> None:
        self.pivots: dict[int, SparseRow] = {}

    def reduce(self, row: SparseRow) -> SparseRow:
        r = dict(row)
        for c in [c for c in r if c in self.pivots]:
            coef = r.get(c)
            if not coef:
                continue
            for k, v in self.pivots[c].items():
                nv = r.get(k, ZERO) - coef * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def add(self, row: SparseRow) -> bool:
        """Insert ``row``; return True if it enlarged the row space."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {k: v * inv for k, v in r.items()}
        for prow in self.pivots.values():
            coef = prow.get(p)
            if coef:
                for k, v in r.items():
                    nv = prow.get(k, ZERO) - coef * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.pivots[p] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def sorted_rows(self) -> list[tuple[int, SparseRow]]:
        return sorted(self.pivots.items())


def rref_sparse(rows: Iterable[SparseRow]) -> EchelonBuilder:
    eb = EchelonBuilder()
    for r in rows:
        if r:
            eb.add(r)
    return eb


def kernel_basis_sparse(rows: Iterable[SparseRow], ncols: int) -> list[Vector]:
    """Reduced-echelon basis of the null space of a sparse system."""
    eb = rref_sparse(rows)
    free = [j for j in range(ncols) if j not in eb.pivots]
    raw = []
    for f in free:
        v = {f: ONE}
        for p, prow in eb.pivots.items():
            c = prow.get(f)
            if c:
                v[p] = -c
        raw.append(v)
    return [_dense(r, ncols) for _, r in rref_sparse(raw).sorted_rows()]


def _dense(row: SparseRow, n: int) -> Vector:
    out = [ZERO] * n
    for k, v in row.items():
        out[k] = v
    return tuple(out)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns of ``m``."""
    eb = rref_sparse(_to_sparse(m.row(i)) for i in range(m.rows))
    rows = [_dense(r, m.cols) for _, r in eb.sorted_rows()]
    rows += [zero_vector(m.cols)] * (m.rows - len(rows))
    return Matrix.from_rows(rows, cols=m.cols), sorted(eb.pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of ``{v : m v = 0}`` in reduced row echelon form.

    The reduced echelon basis of a subspace is unique, so the output is
    deterministic.
    """
    return kernel_basis_sparse((_to_sparse(m.row(i)) for i in range(m.rows)), m.cols)


def row_space_basis(vectors: Iterable[Sequence]) -> list[Vector]:
    """Reduced row echelon basis of the span of ``vectors``."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return []
    n = len(vectors[0])
    eb = rref_sparse(_to_sparse(v) for v in vectors)
    return [_dense(r, n) for _, r in eb.sorted_rows()]


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """One solution of ``m x = b`` (free variables set to 0), or None."""
    b = vector(b)
    if len(b) != m.rows:
        raise DimensionMismatchError("right-hand side length mismatch")
    aug = []
    for i in range(m.rows):
        r = _to_sparse(m.row(i))
        if b[i]:
            r[m.cols] = b[i]
        aug.append(r)
    eb = rref_sparse(aug)
    if m.cols in eb.pivots:
        return None
    x = [ZERO] * m.cols
    for p, prow in eb.pivots.items():
        x[p] = prow.get(m.cols, ZERO)
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    from .errors import SingularMatrixError

    if not m.is_square():
        raise NotSquareError("inverse of a non-square matrix")
    n = m.rows
    cols = []
    for j in range(n):
        x = solve(m, basis_vector(n, j))
        if x is None:
            raise SingularMatrixError("matrix is singular")
        cols.append(x)
    inv = Matrix.from_columns(cols, rows=n)
    if not (m @ inv) == Matrix.identity(n):
        raise SingularMatrixError("matrix is singular")
    return inv


def determinant(m: Matrix) -> Fraction:
    if not m.is_square():
        raise NotSquareError("determinant of a non-square matrix")
    n = m.rows
    cp = char_poly(m)
    # det(tI - m) at t = 0 is det(-m) = (-1)^n det(m)
    return cp(0) * (-1) ** n


# -- characteristic polynomial --------------------------------------------


def berkowitz(rows: Sequence[Sequence[T]], zero: T, one: T) -> list[T]:
    """Coefficients of ``det(t I - M)``, highest degree first.

    Division-free, so it works over any commutative ring whose elements
    support ``+``, ``-`` and ``*`` (Fractions, or :class:`Poly` entries when
    the matrix depends on a parameter).
    """
    n = len(rows)
    vect: list[T] = [one]
    for k in range(n):
        a = rows[k][k]
        row_k = [rows[k][j] for j in range(k)]
        col = [rows[i][k] for i in range(k)]
        q: list[T] = [one, zero - a]
        for _ in range(k):
            acc = zero
            for x, y in zip(row_k, col):
                acc = acc + x * y
            q.append(zero - acc)
            col = [_dot(rows[i][:k], col, zero) for i in range(k)]
        new = []
        for i in range(k + 2):
            acc = zero
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                acc = acc + q[i - j] * vect[j]
            new.append(acc)
        vect = new
    return vect


def _dot(u, v, zero):
    acc = zero
    for x, y in zip(u, v):
        acc = acc + x * y
    return acc


def char_poly(m: Matrix) -> Poly:
    """Characteristic polynomial ``det(t I - m)`` with exact coefficients."""
    if not m.is_square():
        raise NotSquareError(f"characteristic polynomial of a {m.rows}x{m.cols} matrix")
    coeffs = berkowitz(m.to_rows(), ZERO, ONE)
    return Poly(reversed(coeffs))


def char_poly_pencil(d1: Matrix, d2: Matrix) -> list[Poly]:
    """Characteristic polynomial of ``t*d1 + d2`` with coefficients in Q[t].

    Returns the coefficients of ``det(s I - (t d1 + d2))`` in the matrix
    variable ``s``, highest degree first; each is a polynomial in ``t``.
    """
    if not (d1.is_square() and d2.is_square()):
        raise NotSquareError("pencil of non-square matrices")
    if d1.shape != d2.shape:
        raise DimensionMismatchError(f"shape {d1.shape} vs {d2.shape}")
    n = d1.rows
    rows = [[Poly([d2[i, j], d1[i, j]]) for j in range(n)] for i in range(n)]
    return berkowitz(rows, Poly(), Poly([1]))


def is_nilpotent_matrix(m: Matrix) -> bool:
    """True iff the characteristic polynomial of ``m`` is ``t^n``."""
    if not m.is_square():
        raise NotSquareError(f"nilpotency of a {m.rows}x{m.cols} matrix")
    return char_poly(m) == Poly.monomial(m.rows)
