from itertools import product

import pytest
from hypothesis import given
import hypothesis.strategies as st

from src.algebra.gaussint import (
    ONE_PLUS_I, GaussInt, NotPrimeError, associates, in_gamma,
)
from src.algebra.matrix import GMatrix, det
from src.algebra.smith import snf, solve_mod_p2_nontrivial
from tests.strategies import gauss_ints, gmatrices

I = GaussInt(0, 1)

# complete residue systems of Z[i] modulo p
RESIDUES_MOD_P = {
    ONE_PLUS_I: [GaussInt(0), GaussInt(1)],
    GaussInt(2, 1): [GaussInt(k) for k in range(5)],
    GaussInt(3): [GaussInt(a, b) for a in range(3) for b in range(3)],
}


def brute_force_solution_exists(a, p):
    """Search every z = z0 + p*z1 (mod p^2) whose z0 is a nonzero kernel vector of a mod p."""
    residues = RESIDUES_MOD_P[p]
    p2 = p * p
    for z0 in product(residues, repeat=a.cols):
        if not any(z0) or not all(p.divides(y) for y in a @ list(z0)):
            continue
        for z1 in product(residues, repeat=a.cols):
            z = [x + p * y for x, y in zip(z0, z1)]
            if all(p2.divides(y) for y in a @ z):
                return True
    return False


def check_snf(a):
    result = snf(a)
    assert result.reconstruct() == a
    assert result.is_unimodular()
    for d in result.d:
        assert not d or in_gamma(d)
    for d, e in zip(result.d, result.d[1:]):
        assert d.divides(e)
    assert result.v2 @ result.v2_inv == GMatrix.identity(a.rows)
    return result


class TestSnf:
    def test_diagonal_example(self):
        result = check_snf(GMatrix.from_rows([[ONE_PLUS_I, 0], [0, GaussInt(1, -1)]]))
        assert result.d == (ONE_PLUS_I, ONE_PLUS_I)

    def test_walk_matrix_example(self):
        result = check_snf(GMatrix.from_rows([[1, I], [1, -I]]))
        assert result.d == (GaussInt(1), GaussInt(2))

    def test_identity(self):
        assert check_snf(GMatrix.identity(4)).d == (GaussInt(1),) * 4

    def test_rank_deficient(self):
        result = check_snf(GMatrix.from_rows([[1, 1, 0], [1, 1, 0], [0, 0, 0]]))
        assert result.d == (GaussInt(1), GaussInt(0), GaussInt(0))

    def test_needs_gcd_step(self):
        result = check_snf(GMatrix.from_rows([[2, 0], [0, 3]]))
        assert result.d == (GaussInt(1), GaussInt(6))

    def test_non_square(self):
        with pytest.raises(ValueError):
            snf(GMatrix(2, 3, [0] * 6))

    @given(gmatrices(max_n=4))
    def test_invariants(self, a):
        result = check_snf(a)
        product_of_divisors = GaussInt(1)
        for d in result.d:
            product_of_divisors = product_of_divisors * d
        assert associates(product_of_divisors, det(a))


class TestSolveModP2:
    def test_diagonal(self):
        z = solve_mod_p2_nontrivial(GMatrix.from_rows([[1, 0], [0, 9]]), GaussInt(3))
        assert z == [GaussInt(0), GaussInt(1)]

    @pytest.mark.parametrize("p", [ONE_PLUS_I, GaussInt(3), GaussInt(2, 1)])
    def test_identity_has_none(self, p):
        assert solve_mod_p2_nontrivial(GMatrix.identity(3), p) is None

    def test_not_prime(self):
        with pytest.raises(NotPrimeError):
            solve_mod_p2_nontrivial(GMatrix.identity(2), GaussInt(2))

    @given(st.lists(gauss_ints(4), min_size=9, max_size=9),
           st.sampled_from([ONE_PLUS_I, GaussInt(3), GaussInt(2, 1)]))
    def test_agrees_with_exhaustive_search_3x3(self, entries, p):
        self._check(GMatrix(3, 3, entries), p)

    @pytest.mark.parametrize("p", [ONE_PLUS_I, GaussInt(3), GaussInt(2, 1)])
    def test_exhaustive_search_finds_lifted_solution(self, p):
        a = GMatrix.from_rows([[1, 0, 0], [0, p, 0], [0, 0, p * p]])
        self._check(a, p)
        assert brute_force_solution_exists(a, p)

    def _check(self, a, p):
        result = snf(a)
        z = solve_mod_p2_nontrivial(a, p, result)
        assert (z is not None) == (p * p).divides(result.d_n)
        assert (z is not None) == brute_force_solution_exists(a, p)
        if z is not None:
            assert not all(p.divides(x) for x in z)
            assert all((p * p).divides(y) for y in a @ z)
