"""
Exact dense linear algebra over Z[i] (GMatrix) and Q(i) (QMatrix).
"""

from dataclasses import dataclass

from sympy import QQ_I, ZZ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from src.algebra.gaussint import (
    ONE, ZERO, GaussInt, GaussRat, format_gauss, parse_gauss, residue_field,
)
from src.errors import InvariantViolation


class NonSquareError(ValueError):
    pass


class NonHermitianError(ValueError):
    pass


class SingularMatrixError(ValueError):
    def __init__(self, det):
        super().__init__(f"matrix is singular (det = {det})")
        self.det = det


class MatrixParseError(ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Matrix:
    """Immutable row-major matrix; subclasses fix the entry type."""

    zero = ZERO
    one = ONE

    def __init__(self, rows, cols, entries):
        entries = tuple(self._coerce(x) for x in entries)
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def _coerce(x):
        return GaussInt.coerce(x)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [cls.one if i == j else cls.zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(rows, cols, [cls.zero] * (rows * cols))

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        return cls(n, n, [values[i] if i == j else cls.zero for i in range(n) for j in range(n)])

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return self.entries[j::self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, fn):
        return type(self)(self.rows, self.cols, [fn(x) for x in self.entries])

    def transpose(self):
        return type(self)(self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def conjugate(self):
        return self.map(lambda x: x.conjugate())

    def adjoint(self):
        """Conjugate transpose M*."""
        return self.transpose().conjugate()

    def is_hermitian(self):
        return self.is_square and self.adjoint() == self

    def trace(self):
        total = self.zero
        for i in range(min(self.rows, self.cols)):
            total = total + self[i, i]
        return total

    def _result_type(self, other):
        return QMatrix if isinstance(self, QMatrix) or isinstance(other, QMatrix) else GMatrix

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix sum")
        return self._result_type(other)(self.rows, self.cols,
                                        [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix difference")
        return self._result_type(other)(self.rows, self.cols,
                                        [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def scale(self, c):
        if isinstance(c, GaussRat) and not isinstance(self, QMatrix):
            return QMatrix(self.rows, self.cols, [c * x for x in self.entries])
        return self.map(lambda x: c * x)

    def __matmul__(self, other):
        if isinstance(other, (list, tuple)):
            return [self._dot(self.row(i), other) for i in range(self.rows)]
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [other.col(j) for j in range(other.cols)]
        entries = [self._dot(self.row(i), columns[j])
                   for i in range(self.rows) for j in range(other.cols)]
        return self._result_type(other)(self.rows, other.cols, entries)

    def _dot(self, xs, ys):
        total = self.zero
        for x, y in zip(xs, ys):
            if x and y:
                total = total + x * y
        return total

    def __pow__(self, k):
        if not self.is_square:
            raise NonSquareError("powers need a square matrix")
        result = type(self).identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"{type(self).__name__}[{body}]"


class GMatrix(Matrix):
    """Matrix with Gaussian-integer entries."""

    def to_qmatrix(self):
        return QMatrix(self.rows, self.cols, self.entries)


class QMatrix(Matrix):
    """Matrix with Gaussian-rational entries."""

    zero = GaussRat(ZERO)
    one = GaussRat(ONE)

    @staticmethod
    def _coerce(x):
        return GaussRat.coerce(x)

    def is_integral(self):
        return all(x.is_integral() for x in self.entries)

    def to_gmatrix(self):
        return GMatrix(self.rows, self.cols, [x.to_gauss_int() for x in self.entries])


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree."""
    coefficients: tuple

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def is_monic(self):
        return self.coefficients[-1] == 1

    def evaluate_at(self, matrix):
        """Horner evaluation p(M) for a square matrix M."""
        n = matrix.rows
        result = type(matrix).zeros(n)
        eye = type(matrix).identity(n)
        for c in reversed(self.coefficients):
            result = result @ matrix + eye.scale(c)
        return result

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(f"{s}{b}" for s, b in terms[1:])


def _require_square(m):
    if not m.is_square:
        raise NonSquareError(f"expected a square matrix, got {m.rows}x{m.cols}")


def _domain_matrix(m, domain):
    if domain == ZZ_I:
        rows = [[x.element for x in m.row(i)] for i in range(m.rows)]
    else:
        rows = [[GaussRat.coerce(x).element for x in m.row(i)] for i in range(m.rows)]
    return DomainMatrix(rows, (m.rows, m.cols), domain)


def det(m):
    """Determinant via sympy's DomainMatrix: fraction-free Bareiss over ZZ_I, elimination over QQ_I."""
    _require_square(m)
    if isinstance(m, QMatrix):
        return GaussRat.wrap(_domain_matrix(m, QQ_I).det())
    return GaussInt.wrap(_domain_matrix(m, ZZ_I).det())


def char_poly_hermitian(a):
    """det(xI - A) for a Hermitian Gaussian-integer matrix, by Faddeev-LeVerrier.

    The coefficients are computed in Z[i] and must come out real.
    """
    _require_square(a)
    if not a.is_hermitian():
        raise NonHermitianError("characteristic polynomial requested for a non-Hermitian matrix")
    n = a.rows
    eye = GMatrix.identity(n)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = GMatrix.zeros(n)
    for k in range(1, n + 1):
        m = a @ m + eye.scale(coeffs[n - k + 1])
        coeffs[n - k] = -((a @ m).trace().exact_div(k))
    if any(c.im for c in coeffs):
        raise InvariantViolation(f"Hermitian matrix produced non-real coefficients {coeffs}")
    return IntPolynomial(tuple(c.re for c in coeffs))


def inverse(m):
    """Exact inverse over Q(i)."""
    _require_square(m)
    try:
        inv = _domain_matrix(m, QQ_I).inv()
    except DMNonInvertibleMatrixError:
        raise SingularMatrixError(ZERO) from None
    return QMatrix.from_rows([[GaussRat.wrap(x) for x in row] for row in inv.to_list()])


def rank_mod_prime(m, prime):
    """Rank of m over the residue field Z[i]/(prime)."""
    field = residue_field(GaussInt.coerce(prime))
    a = [[field.reduce(x) for x in m.row(i)] for i in range(m.rows)]
    rank = 0
    for col in range(m.cols):
        pivot_row = next((i for i in range(rank, m.rows) if not field.is_zero(a[i][col])), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        inv = field.inv(a[rank][col])
        a[rank] = [field.mul(inv, x) for x in a[rank]]
        for i in range(m.rows):
            if i != rank and not field.is_zero(a[i][col]):
                f = a[i][col]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def parse_matrix(text):
    """Parse the comma-separated matrix text format (one row per line, '#' comments)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = [parse_gauss(cell) for cell in line.split(",")]
        except ValueError as exc:
            raise MatrixParseError(str(exc), lineno) from exc
        if rows and len(row) != len(rows[0]):
            raise MatrixParseError(f"expected {len(rows[0])} entries, got {len(row)}", lineno)
        rows.append(row)
    if not rows:
        raise MatrixParseError("no matrix rows", 0)
    return GMatrix.from_rows(rows)


def format_matrix(m):
    return "\n".join(",".join(format_gauss(x) for x in m.row(i)) for i in range(m.rows)) + "\n"
