"""Dense exact matrices over Q(i), plus the integer lattice routines.

Everything here is deterministic: elimination always picks the first
nonzero pivot in row/column order, and the Smith reduction always picks
the smallest-magnitude nonzero entry of the working submatrix. That makes
ranks, divisors, and solver output reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidScalarError, NonUnimodularError, NotIntegralError
from .scalars import GaussianRational, as_gaussian


class Matrix:
    """An immutable dense matrix with GaussianRational entries."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: Iterable[Iterable[int | Fraction | GaussianRational]]) -> None:
        entries = tuple(tuple(as_gaussian(x) for x in row) for row in rows)
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("ragged rows")
        self.rows = len(entries)
        self.cols = width
        self._entries = entries

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if r == c else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> Matrix:
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence[int | Fraction | GaussianRational]) -> Matrix:
        n = len(values)
        return cls([[values[r] if r == c else 0 for c in range(n)] for r in range(n)])

    def __getitem__(self, key: tuple[int, int]) -> GaussianRational:
        r, c = key
        return self._entries[r][c]

    def row(self, r: int) -> tuple[GaussianRational, ...]:
        return self._entries[r]

    def column(self, c: int) -> tuple[GaussianRational, ...]:
        return tuple(row[c] for row in self._entries)

    def entries(self) -> tuple[tuple[GaussianRational, ...], ...]:
        return self._entries

    def flatten(self) -> tuple[GaussianRational, ...]:
        return tuple(x for row in self._entries for x in row)

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix(
            [
                [a + b if a and b else (a or b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self._entries, other._entries)
            ]
        )

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._entries, other._entries)
            ]
        )

    def __neg__(self) -> Matrix:
        return Matrix([[-x for x in row] for row in self._entries])

    def __mul__(self, scalar: int | Fraction | GaussianRational) -> Matrix:
        if isinstance(scalar, Matrix):
            return NotImplemented
        c = as_gaussian(scalar)
        return Matrix([[x * c if x else x for x in row] for row in self._entries])

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape()} by {other.shape()}")
        cols = other.cols
        out = []
        for ra in self._entries:
            row = []
            for c in range(cols):
                acc = None
                for k, a in enumerate(ra):
                    if not a:
                        continue
                    term = a * other._entries[k][c]
                    acc = term if acc is None else acc + term
                row.append(acc if acc is not None else as_gaussian(0))
            out.append(row)
        return Matrix(out)

    def matvec(self, vec: Sequence[GaussianRational]) -> tuple[GaussianRational, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match matrix width")
        out = []
        for row in self._entries:
            acc = None
            for a, x in zip(row, vec):
                if not a or not x:
                    continue
                term = a * x
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else as_gaussian(0))
        return tuple(out)

    def transpose(self) -> Matrix:
        return Matrix(list(zip(*self._entries)))

    def conjugate(self) -> Matrix:
        return Matrix([[x.conjugate() for x in row] for row in self._entries])

    def adjoint(self) -> Matrix:
        """Conjugate transpose."""
        return self.conjugate().transpose()

    def kron(self, other: Matrix) -> Matrix:
        out = []
        for ra in self._entries:
            for rb in other._entries:
                out.append([a * b for a in ra for b in rb])
        return Matrix(out)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_gaussian_integer(self) -> bool:
        return all(x.is_gaussian_integer() for row in self._entries for x in row)

    def is_hermitian(self) -> bool:
        return self.is_square() and self == self.adjoint()

    def det(self) -> GaussianRational:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        work = [list(row) for row in self._entries]
        n = self.rows
        sign = 1
        result = as_gaussian(1)
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if work[r][col]), None)
            if pivot_row is None:
                return as_gaussian(0)
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                sign = -sign
            pivot = work[col][col]
            result = result * pivot
            inv = pivot.inverse()
            for r in range(col + 1, n):
                factor = work[r][col]
                if not factor:
                    continue
                scale = factor * inv
                for c in range(col, n):
                    work[r][c] = work[r][c] - scale * work[col][c]
        return result if sign > 0 else -result

    def inv(self) -> Matrix:
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        work = [list(row) + [as_gaussian(1 if r == c else 0) for c in range(n)] for r, row in enumerate(self._entries)]
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if work[r][col]), None)
            if pivot_row is None:
                raise ValueError("matrix is singular")
            work[col], work[pivot_row] = work[pivot_row], work[col]
            inv = work[col][col].inverse()
            work[col] = [x * inv for x in work[col]]
            for r in range(n):
                if r == col or not work[r][col]:
                    continue
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return Matrix([row[n:] for row in work])

    def _check_shape(self, other: Matrix) -> None:
        if self.shape() != other.shape():
            raise ValueError(f"shape mismatch: {self.shape()} vs {other.shape()}")

    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._entries)
        return f"Matrix[{body}]"


def integer_rows(m: Matrix) -> list[list[int]]:
    """Extract a plain-int row list from a matrix of rational integers."""
    out = []
    for row in m.entries():
        ints = []
        for x in row:
            if x.im or x.re.denominator != 1:
                raise NotIntegralError(f"entry {x} is not a rational integer")
            ints.append(x.re.numerator)
        out.append(ints)
    return out


def rank_of_rows(rows: Iterable[Sequence[GaussianRational]]) -> int:
    """Rank of the row span, by incremental exact elimination.

    Rows are consumed one at a time, so callers can stream large flattened
    families without materializing the full matrix.
    """
    basis: list[tuple[int, list[GaussianRational]]] = []
    for row in rows:
        vec = list(row)
        for pivot_col, pivot_row in basis:
            factor = vec[pivot_col]
            if factor:
                for c in range(pivot_col, len(vec)):
                    vec[c] = vec[c] - factor * pivot_row[c]
        lead = next((c for c, x in enumerate(vec) if x), None)
        if lead is None:
            continue
        inv = vec[lead].inverse()
        vec = [x * inv for x in vec]
        basis.append((lead, vec))
    return len(basis)


def mat_rank(m: Matrix, ring: str = "gaussian_rationals") -> int:
    """Exact rank over Q or Q(i) with the deterministic first-nonzero pivot rule."""
    if ring not in ("rationals", "gaussian_rationals"):
        raise ValueError(f"unknown ring {ring!r}")
    if ring == "rationals":
        for row in m.entries():
            for x in row:
                if x.im:
                    raise ValueError(f"entry {x} is not rational; use ring='gaussian_rationals'")
    return rank_of_rows(m.entries())


def smith_form(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Elementary divisors of an integer matrix.

    Returns the full diagonal of the Smith normal form: nonnegative integers
    d_1 | d_2 | ... with zeros trailing, of length min(rows, cols).
    """
    a = [[int(x) for x in row] for row in rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    limit = min(nr, nc)
    divisors: list[int] = []
    t = 0
    while t < limit:
        best_r = best_c = -1
        best = 0
        for r in range(t, nr):
            for c in range(t, nc):
                v = abs(a[r][c])
                if v and (best == 0 or v < best):
                    best_r, best_c, best = r, c, v
        if best == 0:
            break
        a[t], a[best_r] = a[best_r], a[t]
        for row in a:
            row[t], row[best_c] = row[best_c], row[t]
        while True:
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            dirty = False
            for r in range(t + 1, nr):
                if a[r][t]:
                    q = a[r][t] // a[t][t]
                    a[r] = [x - q * y for x, y in zip(a[r], a[t])]
                    if a[r][t]:
                        a[t], a[r] = a[r], a[t]
                        dirty = True
            for c in range(t + 1, nc):
                if a[t][c]:
                    q = a[t][c] // a[t][t]
                    for r in range(nr):
                        a[r][c] -= q * a[r][t]
                    if a[t][c]:
                        for r in range(nr):
                            a[r][t], a[r][c] = a[r][c], a[r][t]
                        dirty = True
            if dirty:
                continue
            pivot = a[t][t]
            offender = next(
                (
                    r
                    for r in range(t + 1, nr)
                    if any(a[r][c] % pivot for c in range(t + 1, nc))
                ),
                None,
            )
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
        divisors.append(abs(a[t][t]))
        t += 1
    divisors.extend([0] * (limit - len(divisors)))
    return tuple(divisors)


def solve_mod1(
    a_rows: Sequence[Sequence[int]], c: Sequence[Fraction]
) -> tuple[Fraction, ...]:
    """Solve A x = c (mod 1) for unimodular integer A; entries returned in [0, 1)."""
    mat = Matrix(a_rows)
    if not mat.is_square():
        raise ValueError("coefficient matrix must be square")
    if not mat.is_gaussian_integer() or any(x.im for row in mat.entries() for x in row):
        raise NotIntegralError("coefficient matrix must have integer entries")
    d = mat.det()
    if d.im or abs(d.re) != 1:
        raise NonUnimodularError(f"determinant is {d}, not a unit")
    inverse = mat.inv()
    rhs = tuple(as_gaussian(Fraction(x)) for x in c)
    solution = inverse.matvec(rhs)
    out = []
    for x in solution:
        if x.im:
            raise InvalidScalarError("solution left the rational line")
        out.append(x.re % 1)
    return tuple(out)
