"""
Transfer unitaries U = W(G) W(H)^-1 between R-cospectral mixed graphs, their levels,
and the block normal form U_{k,s} of level-(1+i) unitaries.
"""

from dataclasses import dataclass

from src.algebra.gaussint import (
    ONE, ONE_PLUS_I, ZERO, GaussInt, GaussRat, factor, format_gauss, gamma_normalize, gauss_lcm,
)
from src.algebra.matrix import QMatrix, det, inverse
from src.errors import InvariantViolation
from src.graphs.mixed_graph import Permutation, herm_adjacency
from src.spectra.walk import generalized_spectrum, walk_matrix


class NotCospectralError(ValueError):
    pass


class SingularWalkMatrixError(ValueError):
    def __init__(self, side):
        super().__init__(f"walk matrix of {side} is singular")
        self.side = side


class LevelError(ValueError):
    pass


@dataclass(frozen=True)
class TransferUnitary:
    u: QMatrix
    level: GaussInt

    @property
    def is_permutation(self):
        return self.level == ONE

    def level_in_one_or_one_plus_i(self):
        return self.level in (ONE, ONE_PLUS_I)


def _ones(n):
    return [GaussRat(ONE)] * n


def is_unitary(u):
    return u.adjoint() @ u == QMatrix.identity(u.rows)


def fixes_all_ones(u):
    return u @ _ones(u.rows) == _ones(u.rows)


def level(u):
    """Gamma-normalized lcm of the entry denominators: the least l with l*U integral."""
    if not u.is_square or not is_unitary(u):
        raise LevelError("level is defined for unitary matrices only")
    ell = ONE
    for x in u.entries:
        ell = gauss_lcm(ell, x.gaussian_denominator())
    ell = gamma_normalize(ell)[1]
    if not u.scale(GaussRat(ell)).is_integral():
        raise InvariantViolation(f"{format_gauss(ell)} * U is not integral")
    for prime, _ in factor(ell).factors:
        smaller = GaussRat(ell.exact_div(prime))
        if u.scale(smaller).is_integral():
            raise InvariantViolation(f"level {format_gauss(ell)} is not minimal: "
                                     f"{format_gauss(ell.exact_div(prime))} already clears U")
    return ell


def has_level_shape(ell):
    """l = a or l = a(1+i) for a positive integer a."""
    return ell.im == 0 or ell.re == ell.im


def transfer_unitary(g, h):
    """The unique Gaussian rational unitary with Ue = e and U* A(G) U = A(H)."""
    if g.n != h.n:
        raise ValueError(f"cannot compare graphs on {g.n} and {h.n} vertices")
    if generalized_spectrum(g) != generalized_spectrum(h):
        raise NotCospectralError("graphs are not R-cospectral")
    wg, wh = walk_matrix(g), walk_matrix(h)
    if not det(wg):
        raise SingularWalkMatrixError("G")
    if wg.adjoint() @ wg != wh.adjoint() @ wh:
        raise InvariantViolation("R-cospectral graphs with different walk Gram matrices")
    if not det(wh):
        raise InvariantViolation("walk Gram identity holds but W(H) is singular")

    u = wg @ inverse(wh)
    if not is_unitary(u):
        raise InvariantViolation("transfer matrix is not unitary")
    if not fixes_all_ones(u):
        raise InvariantViolation("transfer matrix does not fix the all-ones vector")
    if u.adjoint() @ herm_adjacency(g) @ u != herm_adjacency(h):
        raise InvariantViolation("U* A(G) U differs from A(H)")
    return TransferUnitary(u=u, level=level(u))


def unitary_block(k, s):
    """U_{k,s}: k diagonal copies of U0 = (1/(1+i))[[1, i], [i, 1]] followed by I_s."""
    if k < 0 or s < 0 or 2 * k + s == 0:
        raise ValueError(f"invalid block shape k={k}, s={s}")
    n = 2 * k + s
    half = GaussRat.fraction(ONE, ONE_PLUS_I)
    diag, off = half, half * GaussInt(0, 1)
    rows = [[GaussRat(ZERO)] * n for _ in range(n)]
    for b in range(k):
        r = 2 * b
        rows[r][r], rows[r][r + 1] = diag, off
        rows[r + 1][r], rows[r + 1][r + 1] = off, diag
    for r in range(2 * k, n):
        rows[r][r] = GaussRat(ONE)
    return QMatrix.from_rows(rows)


def decompose_level_two(u):
    """Permutations P, Q and k >= 1 with P U Q = U_{k, n-2k}.

    Works on T = (1+i)U, whose rows hold either the pair {1, i} or a single 1+i.
    """
    n = u.rows
    if not fixes_all_ones(u):
        raise LevelError("U does not fix the all-ones vector")
    ell = level(u)
    if ell != ONE_PLUS_I:
        raise LevelError(f"expected level 1+i, got {format_gauss(ell)}")
    t = u.scale(GaussRat(ONE_PLUS_I)).to_gmatrix()
    i_unit = GaussInt(0, 1)

    support = [[j for j in range(n) if t[r, j]] for r in range(n)]
    rows_left = set(range(n))
    rows_order, cols_order = [], []

    while True:
        r = next((r for r in sorted(rows_left) if len(support[r]) == 2), None)
        if r is None:
            break
        a, b = support[r]
        if (t[r, a], t[r, b]) == (ONE, i_unit):
            c1, c2 = a, b
        elif (t[r, a], t[r, b]) == (i_unit, ONE):
            c1, c2 = b, a
        else:
            raise InvariantViolation(f"row {r + 1} of (1+i)U is not of the form {{1, i}}")
        r2 = next((x for x in sorted(rows_left) if x != r and t[x, c1] == i_unit), None)
        if r2 is None or t[r2, c2] != ONE or len(support[r2]) != 2:
            raise InvariantViolation(f"row {r + 1} of (1+i)U has no partner row")
        rows_order += [r, r2]
        cols_order += [c1, c2]
        rows_left -= {r, r2}

    k = len(rows_order) // 2
    for r in sorted(rows_left):
        if len(support[r]) != 1 or t[r, support[r][0]] != ONE_PLUS_I:
            raise InvariantViolation(f"row {r + 1} of (1+i)U is neither a pair nor 1+i")
        rows_order.append(r)
        cols_order.append(support[r][0])
    if k < 1:
        raise InvariantViolation("level 1+i unitary without a U0 block")

    p = Permutation(tuple(r + 1 for r in rows_order)).inverse()
    q = Permutation(tuple(c + 1 for c in cols_order))
    if p.matrix() @ u @ q.matrix() != unitary_block(k, n - 2 * k):
        raise InvariantViolation("P U Q is not in block normal form")
    return p, q, k


def undirected_rigidity_check(a, k, s):
    """Whether B = U_{k,s}* A U_{k,s} has all entries in {0, 1, i, -i}; if so, B must equal A."""
    n = a.rows
    if not a.is_square or 2 * k + s != n:
        raise ValueError(f"block shape k={k}, s={s} does not fit a {a.rows}x{a.cols} matrix")
    if any(x not in (ZERO, ONE) for x in a.entries) or any(a[i, i] for i in range(n)) \
            or a.transpose() != a:
        raise ValueError("expected the 0/1 adjacency matrix of an undirected graph")
    block = unitary_block(k, s)
    b = block.adjoint() @ a @ block
    allowed = (ZERO, ONE, GaussInt(0, 1), GaussInt(0, -1))
    in_range = all(x in allowed for x in b.entries)
    if in_range and b != a:
        raise InvariantViolation("B has entries in {0, 1, i, -i} but differs from A")
    return in_range
