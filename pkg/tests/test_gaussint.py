import pickle

import pytest
from hypothesis import given
import hypothesis.strategies as st
from sympy import QQ_I, ZZ_I

from src.algebra.gaussint import (
    I, ONE, ONE_PLUS_I, UNITS, GaussianZeroError, GaussInt, GaussRat, LiteralParseError,
    NotPrimeError, associates, euclidean_divmod, factor, format_gauss, format_rat,
    gamma_normalize, gauss_gcd, gauss_lcm, in_gamma, is_gaussian_prime, is_square_free,
    norm, parity, parse_gauss, residue, residue_field,
)
from tests.strategies import gauss_ints


def g(re, im=0):
    return GaussInt(re, im)


class TestNorm:
    def test_examples(self):
        assert norm(g(1, 1)) == 2
        assert norm(g(0)) == 0
        assert norm(g(2, 1)) == 5

    @given(gauss_ints(1000), gauss_ints(1000))
    def test_multiplicative(self, a, b):
        assert norm(a * b) == norm(a) * norm(b)


class TestGammaNormalize:
    def test_examples(self):
        assert gamma_normalize(g(0, -2)) == (g(0, -1), g(2))
        assert gamma_normalize(g(2, -1)) == (g(0, -1), g(1, 2))
        assert gamma_normalize(g(7)) == (ONE, g(7))

    def test_zero(self):
        with pytest.raises(GaussianZeroError, match="no Γ-representative of 0"):
            gamma_normalize(g(0))

    @given(gauss_ints(1000, nonzero=True))
    def test_exactly_one_associate_in_gamma(self, z):
        assert sum(in_gamma(u * z) for u in UNITS) == 1
        unit, rep = gamma_normalize(z)
        assert unit * rep == z and in_gamma(rep)


class TestEuclid:
    def test_examples(self):
        assert euclidean_divmod(g(5), g(1, 2)) == (g(1, -2), g(0))
        assert euclidean_divmod(g(3, 2), g(2)) == (g(2, 1), g(-1))
        assert euclidean_divmod(g(17, -4), ONE) == (g(17, -4), g(0))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            euclidean_divmod(g(3), g(0))

    @given(gauss_ints(10 ** 6), gauss_ints(10 ** 6, nonzero=True))
    def test_contract(self, a, b):
        q, r = euclidean_divmod(a, b)
        assert q * b + r == a
        assert norm(r) < norm(b)
        assert 2 * norm(r) <= norm(b)


class TestGcdLcm:
    def test_examples(self):
        assert gauss_gcd(g(1, 1), g(1, -1)) == g(1, 1)
        assert gauss_gcd(g(12, 5), ONE) == ONE
        assert gauss_lcm(g(1, 2), g(2, 1)) == g(5)

    def test_zero_arguments(self):
        with pytest.raises(GaussianZeroError):
            gauss_gcd(g(0), g(0))
        with pytest.raises(GaussianZeroError):
            gauss_lcm(g(0), g(3))

    @given(gauss_ints(500, nonzero=True), gauss_ints(500, nonzero=True))
    def test_gcd_lcm_contract(self, a, b):
        d = gauss_gcd(a, b)
        m = gauss_lcm(a, b)
        assert in_gamma(d) and in_gamma(m)
        assert d.divides(a) and d.divides(b)
        assert a.divides(m) and b.divides(m)
        assert associates(d * m, a * b)


class TestParityAndPrimes:
    def test_parity_examples(self):
        assert parity(ONE_PLUS_I) == "even"
        assert parity(g(3)) == "odd"
        assert parity(g(0, -1)) == "odd"

    @given(gauss_ints(1000))
    def test_parity_is_residue_mod_one_plus_i(self, z):
        assert (parity(z) == "even") == (residue(z, ONE_PLUS_I) == 0)
        assert (parity(z) == "even") == ONE_PLUS_I.divides(z)

    def test_prime_examples(self):
        assert is_gaussian_prime(ONE_PLUS_I)
        assert not is_gaussian_prime(g(2))
        assert is_gaussian_prime(g(3))
        assert not is_gaussian_prime(g(5))
        assert is_gaussian_prime(g(0, -7))
        assert not is_gaussian_prime(I)


class TestFactor:
    def test_five(self):
        f = factor(g(5))
        assert f.unit == g(0, -1)
        assert f.factors == ((g(1, 2), 1), (g(2, 1), 1))

    def test_two(self):
        f = factor(g(2))
        assert f.unit == g(0, -1)
        assert f.factors == ((ONE_PLUS_I, 2),)
        assert f.multiplicity(g(1, -1)) == 2

    def test_unit(self):
        f = factor(I)
        assert f.unit == I and f.factors == ()

    def test_zero(self):
        with pytest.raises(GaussianZeroError):
            factor(g(0))

    @given(gauss_ints(22000, nonzero=True))
    def test_round_trip(self, z):
        f = factor(z)
        assert f.expand() == z
        assert f.unit in UNITS
        for prime, multiplicity in f.factors:
            assert is_gaussian_prime(prime) and in_gamma(prime) and multiplicity >= 1
        keys = [(norm(p), p.re) for p, _ in f.factors]
        assert keys == sorted(keys)

    def test_square_free(self):
        assert not is_square_free(g(2))
        assert is_square_free(g(-17))
        assert not is_square_free(g(-68))
        assert is_square_free(g(0, 1))
        assert not is_square_free(g(9))

    @given(st.integers(1, 5000), st.booleans())
    def test_square_free_shortcut_for_axis_values(self, a, imaginary):
        z = g(0, a) if imaginary else g(a)
        odd_square_free = a % 2 == 1 and all(a % (p * p) for p in range(3, int(a ** 0.5) + 1, 2))
        assert is_square_free(z) == odd_square_free


class TestResidue:
    def test_examples(self):
        assert residue(g(3, 2), ONE_PLUS_I) == 1
        assert residue(g(1, 2), g(1, 2)) == 0
        assert residue(I, g(2, 1)) == 3

    def test_inert_prime_pairs(self):
        assert residue(g(7, -1), g(3)) == (1, 2)

    def test_not_prime(self):
        with pytest.raises(NotPrimeError):
            residue(g(1), g(2))

    @given(gauss_ints(1000), gauss_ints(1000), st.sampled_from([ONE_PLUS_I, g(2, 1), g(3), g(1, 4)]))
    def test_ring_homomorphism(self, a, b, p):
        field = residue_field(p)
        assert residue(a + b, p) == field.add(residue(a, p), residue(b, p))
        assert residue(a * b, p) == field.mul(residue(a, p), residue(b, p))


class TestGaussRat:
    def test_lowest_terms(self):
        q = GaussRat(g(2, 4), 6)
        assert (q.num, q.den) == (g(1, 2), 3)

    def test_fraction_rationalizes(self):
        q = GaussRat.fraction(ONE, ONE_PLUS_I)
        assert (q.num, q.den) == (g(1, -1), 2)
        assert q.gaussian_denominator() == ONE_PLUS_I

    def test_arithmetic(self):
        half = GaussRat(ONE, 2)
        assert half + half == ONE
        assert (GaussRat(g(1, 1), 2) * g(1, -1)) == ONE
        assert GaussRat(g(3), 1) / g(0, 3) == g(0, -1)

    def test_format(self):
        assert format_rat(GaussRat(g(1, 1), 2)) == "(1+i)/2"
        assert format_rat(GaussRat(g(0, -1), 2)) == "-i/2"
        assert format_rat(GaussRat(g(4))) == "4"


class TestLiterals:
    @pytest.mark.parametrize("text,value", [
        ("3", g(3)), ("-2i", g(0, -2)), ("1+2i", g(1, 2)), ("-1-1i", g(-1, -1)),
        ("i", I), ("-i", g(0, -1)), ("1-i", g(1, -1)), ("0", g(0)),
    ])
    def test_parse(self, text, value):
        assert parse_gauss(text) == value

    @pytest.mark.parametrize("text", ["", "1+", "2j", "i2", "1.5", "--1", "1+2"])
    def test_parse_rejects(self, text):
        with pytest.raises(LiteralParseError):
            parse_gauss(text)

    @given(gauss_ints(10 ** 6))
    def test_format_parses_back(self, z):
        assert parse_gauss(format_gauss(z)) == z


class TestDomainBacking:
    def test_elements_live_in_sympy_domains(self):
        assert ZZ_I.of_type(g(3, 2).element)
        assert QQ_I.of_type(GaussRat(ONE, 2).element)
        assert (g(3, 2) * g(1, -1)).element == ZZ_I(5, -1)

    def test_ties_round_half_up(self):
        assert euclidean_divmod(g(1), g(2)) == (g(1), g(-1))
        assert euclidean_divmod(g(-1, -1), g(2)) == (g(0), g(-1, -1))

    def test_pickles(self):
        q = GaussRat(g(1, 1), 2)
        assert pickle.loads(pickle.dumps(q)) == q
        assert pickle.loads(pickle.dumps(g(3, -4))) == g(3, -4)

    def test_real_values_hash_like_ints(self):
        assert g(3) in {3} and 3 in {g(3)}
        assert GaussRat(g(3)) in {3}
        assert len({g(2), 2, GaussRat(g(4), 2)}) == 1

    @given(gauss_ints(1000))
    def test_equal_values_hash_equal(self, a):
        q = GaussRat(a * 2, 2)
        assert q == a and hash(q) == hash(a)
        if not a.im:
            assert a == a.re and hash(a) == hash(a.re)
