"""
Walk matrices W(G) = [e, Ae, ..., A^{n-1}e], walk reports and generalized spectra.
"""

from dataclasses import dataclass

from src.algebra.gaussint import (
    ONE, ONE_PLUS_I, GaussInt, format_gauss, is_square_free,
)
from src.algebra.matrix import GMatrix, IntPolynomial, char_poly_hermitian, det, rank_mod_prime
from src.algebra.smith import snf
from src.errors import InvariantViolation
from src.graphs.mixed_graph import complement_like_matrix, herm_adjacency


def walk_matrix(graph, adjacency=None):
    """Column k is A^k e."""
    a = adjacency if adjacency is not None else herm_adjacency(graph)
    n = a.rows
    column = [ONE] * n
    columns = [column]
    for _ in range(n - 1):
        column = a @ column
        columns.append(column)
    return GMatrix(n, n, [columns[j][i] for i in range(n) for j in range(n)])


def reduce_determinant(det_w, n):
    """det W / 2^floor(n/2); the division is always exact."""
    scale = GaussInt(2 ** (n // 2), 0)
    if not scale.divides(det_w):
        raise InvariantViolation(f"2^{n // 2} does not divide det W = {format_gauss(det_w)}")
    return det_w.exact_div(scale)


@dataclass(frozen=True)
class WalkReport:
    w: GMatrix
    det_w: GaussInt
    reduced: GaussInt
    rank_1pi: int
    snf_d: tuple
    condition_holds: bool

    def to_dict(self):
        return {
            "det_w": format_gauss(self.det_w),
            "reduced": format_gauss(self.reduced),
            "rank_1pi": self.rank_1pi,
            "snf": [format_gauss(d) for d in self.snf_d],
            "condition": self.condition_holds,
        }


def walk_report(graph):
    w = walk_matrix(graph)
    det_w = det(w)
    reduced = reduce_determinant(det_w, graph.n)
    return WalkReport(
        w=w,
        det_w=det_w,
        reduced=reduced,
        rank_1pi=rank_mod_prime(w, ONE_PLUS_I),
        snf_d=snf(w).d,
        condition_holds=bool(det_w) and is_square_free(reduced),
    )


def satisfies_main_condition(graph):
    """det W != 0 and det W / 2^floor(n/2) square-free in Z[i]."""
    det_w = det(walk_matrix(graph))
    return bool(det_w) and is_square_free(reduce_determinant(det_w, graph.n))


@dataclass(frozen=True)
class GenSpectrum:
    """Characteristic polynomials of A and of J - I - A; equality is R-cospectrality."""
    p_a: IntPolynomial
    p_c: IntPolynomial

    def to_dict(self):
        return {"charpoly_a": list(self.p_a.coefficients),
                "charpoly_c": list(self.p_c.coefficients)}

    @classmethod
    def from_dict(cls, data):
        return cls(IntPolynomial(tuple(data["charpoly_a"])), IntPolynomial(tuple(data["charpoly_c"])))


def generalized_spectrum(graph):
    return GenSpectrum(char_poly_hermitian(herm_adjacency(graph)),
                       char_poly_hermitian(complement_like_matrix(graph)))


def r_cospectral(g, h):
    if g.n != h.n:
        raise ValueError(f"cannot compare graphs on {g.n} and {h.n} vertices")
    return generalized_spectrum(g) == generalized_spectrum(h)
