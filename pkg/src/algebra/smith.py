"""
Smith Normal Form over Z[i] with unimodular transforms.
"""

from dataclasses import dataclass

from src.algebra.gaussint import (
    UNITS, ZERO, GaussInt, NotPrimeError, euclidean_divmod, format_gauss,
    gamma_normalize, is_gaussian_prime, norm,
)
from src.algebra.matrix import GMatrix, det


@dataclass(frozen=True)
class SnfResult:
    """M = v1 * diag(d) * v2 with d_1 | d_2 | ... and every d_i in Gamma or zero."""
    d: tuple
    v1: GMatrix
    v2: GMatrix
    v2_inv: GMatrix

    @property
    def d_n(self):
        return self.d[-1]

    def diagonal(self):
        return GMatrix.diagonal(list(self.d))

    def is_unimodular(self):
        return det(self.v1) in UNITS and det(self.v2) in UNITS

    def reconstruct(self):
        return self.v1 @ self.diagonal() @ self.v2


class _Reducer:
    """Working state for the elimination; keeps m == v1 * a * v2 throughout."""

    def __init__(self, m):
        self.n = m.rows
        self.a = m.to_rows()
        identity = GMatrix.identity(self.n)
        self.v1 = identity.to_rows()
        self.v2 = identity.to_rows()
        self.v2_inv = identity.to_rows()

    # row operations act on a from the left, so v1 absorbs their inverse on the right

    def swap_rows(self, i, j):
        if i == j:
            return
        a, v1 = self.a, self.v1
        a[i], a[j] = a[j], a[i]
        for row in v1:
            row[i], row[j] = row[j], row[i]

    def add_row(self, target, source, c):
        """row_target += c * row_source."""
        a = self.a
        a[target] = [x + c * y for x, y in zip(a[target], a[source])]
        for row in self.v1:
            row[source] = row[source] - c * row[target]

    def scale_row(self, i, unit):
        self.a[i] = [unit * x for x in self.a[i]]
        inv = unit.conjugate()
        for row in self.v1:
            row[i] = row[i] * inv

    def swap_cols(self, i, j):
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        self.v2[i], self.v2[j] = self.v2[j], self.v2[i]
        for row in self.v2_inv:
            row[i], row[j] = row[j], row[i]

    def add_col(self, target, source, c):
        """col_target += c * col_source."""
        for row in self.a:
            row[target] = row[target] + c * row[source]
        self.v2[source] = [x - c * y for x, y in zip(self.v2[source], self.v2[target])]
        for row in self.v2_inv:
            row[target] = row[target] + c * row[source]

    def min_entry(self, t):
        best = None
        for i in range(t, self.n):
            for j in range(t, self.n):
                x = self.a[i][j]
                if x and (best is None or norm(x) < best[0]):
                    best = (norm(x), i, j)
        return best

    def clear_cross(self, t):
        """Reduce column t and row t modulo the pivot; True when both are cleared."""
        pivot = self.a[t][t]
        clean = True
        for i in range(t + 1, self.n):
            if self.a[i][t]:
                q, r = euclidean_divmod(self.a[i][t], pivot)
                self.add_row(i, t, -q)
                clean = clean and not r
        for j in range(t + 1, self.n):
            if self.a[t][j]:
                q, r = euclidean_divmod(self.a[t][j], pivot)
                self.add_col(j, t, -q)
                clean = clean and not r
        return clean

    def offending_row(self, t):
        pivot = self.a[t][t]
        for i in range(t + 1, self.n):
            for j in range(t + 1, self.n):
                if not pivot.divides(self.a[i][j]):
                    return i
        return None

    def run(self):
        d = []
        for t in range(self.n):
            while True:
                best = self.min_entry(t)
                if best is None:
                    break
                _, i, j = best
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                if not self.clear_cross(t):
                    continue
                bad = self.offending_row(t)
                if bad is None:
                    break
                self.add_row(t, bad, GaussInt(1, 0))
            if best is None:
                d.extend([ZERO] * (self.n - t))
                break
            unit, _ = gamma_normalize(self.a[t][t])
            self.scale_row(t, unit.conjugate())
            d.append(self.a[t][t])
        return SnfResult(
            d=tuple(d),
            v1=GMatrix.from_rows(self.v1),
            v2=GMatrix.from_rows(self.v2),
            v2_inv=GMatrix.from_rows(self.v2_inv),
        )


def snf(m):
    """Smith Normal Form of a square Gaussian-integer matrix.

    Pivots are the nonzero entries of least norm (ties by row, then column); rank-deficient
    input ends in zero divisors.
    """
    if not m.is_square:
        raise ValueError(f"snf expects a square matrix, got {m.rows}x{m.cols}")
    return _Reducer(m).run()


def solve_mod_p2_nontrivial(m, prime, result=None):
    """A vector z with m z = 0 (mod p^2) and z != 0 (mod p), or None if there is none.

    Such z exists exactly when p^2 divides the last elementary divisor; it is then the last
    column of v2^-1.
    """
    prime = GaussInt.coerce(prime)
    if not is_gaussian_prime(prime):
        raise NotPrimeError(f"{format_gauss(prime)} is not a Gaussian prime")
    result = result or snf(m)
    if not (prime * prime).divides(result.d_n):
        return None
    return list(result.v2_inv.col(m.cols - 1))
