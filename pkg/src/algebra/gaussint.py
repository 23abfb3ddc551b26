"""
Arithmetic and number theory in the Gaussian integers Z[i] and their fraction field.

GaussInt and GaussRat carry sympy ZZ_I / QQ_I elements; ring operations, Euclidean
division, gcd and lcm are the domain's own. Every nonzero Gaussian integer has exactly
one associate in the quadrant Gamma = {Re > 0, Im >= 0}; gcd, lcm, factor lists and
elementary divisors are always reported by that representative.
"""

import re
from dataclasses import dataclass
from functools import lru_cache

from sympy import QQ_I, ZZ_I, factorint, isprime
from sympy.ntheory import sqrt_mod


class GaussianZeroError(ValueError):
    pass


class NotPrimeError(ValueError):
    pass


class InexactDivisionError(ValueError):
    pass


class LiteralParseError(ValueError):
    pass


def _zz_i(value):
    if isinstance(value, GaussInt):
        return value.element
    if isinstance(value, int):
        return ZZ_I(value)
    return None


class GaussInt:
    """A Gaussian integer re + im*i backed by a ZZ_I element."""

    __slots__ = ("element",)

    def __init__(self, re=0, im=0):
        self.element = ZZ_I(re, im)

    @classmethod
    def wrap(cls, element):
        z = cls.__new__(cls)
        z.element = element
        return z

    @staticmethod
    def coerce(value):
        if isinstance(value, GaussInt):
            return value
        if isinstance(value, int):
            return GaussInt(value, 0)
        raise TypeError(f"cannot use {value!r} as a Gaussian integer")

    @property
    def re(self):
        return int(self.element.x)

    @property
    def im(self):
        return int(self.element.y)

    def __add__(self, other):
        other = _zz_i(other)
        if other is None:
            return NotImplemented
        return GaussInt.wrap(self.element + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _zz_i(other)
        if other is None:
            return NotImplemented
        return GaussInt.wrap(self.element - other)

    def __rsub__(self, other):
        other = _zz_i(other)
        if other is None:
            return NotImplemented
        return GaussInt.wrap(other - self.element)

    def __mul__(self, other):
        other = _zz_i(other)
        if other is None:
            return NotImplemented
        return GaussInt.wrap(self.element * other)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return euclidean_divmod(self, other)

    def __neg__(self):
        return GaussInt.wrap(-self.element)

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers leave Z[i]")
        return GaussInt.wrap(self.element ** exponent)

    def __eq__(self, other):
        other = _zz_i(other)
        if other is None:
            return NotImplemented
        return self.element == other

    def __hash__(self):
        # real values hash like the int they equal
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.element)

    def __reduce__(self):
        return GaussInt, (self.re, self.im)

    def conjugate(self):
        return GaussInt(self.re, -self.im)

    def divides(self, other):
        """True if self | other in Z[i] (0 divides only 0)."""
        other = GaussInt.coerce(other)
        if not self:
            return not other
        return not other.element % self.element

    def exact_div(self, divisor):
        divisor = GaussInt.coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("Gaussian division by zero")
        q, r = divmod(self.element, divisor.element)
        if r:
            raise InexactDivisionError(f"{format_gauss(divisor)} does not divide {format_gauss(self)}")
        return GaussInt.wrap(q)

    def is_unit(self):
        return norm(self) == 1

    def __str__(self):
        return format_gauss(self)

    def __repr__(self):
        return f"GaussInt({format_gauss(self)})"


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
ONE_PLUS_I = GaussInt(1, 1)
UNITS = (ONE, I, GaussInt(-1, 0), GaussInt(0, -1))


def norm(z):
    z = GaussInt.coerce(z)
    return z.re * z.re + z.im * z.im


def in_gamma(z):
    return z.re > 0 and z.im >= 0


def gamma_normalize(z):
    """Split z into (unit, rep) with rep in Gamma and unit * rep == z."""
    z = GaussInt.coerce(z)
    if not z:
        raise GaussianZeroError("no Γ-representative of 0")
    rep = GaussInt.wrap(ZZ_I.normalize(z.element))
    return z.exact_div(rep), rep


def associates(a, b):
    a, b = GaussInt.coerce(a), GaussInt.coerce(b)
    if not a or not b:
        return not a and not b
    return gamma_normalize(a)[1] == gamma_normalize(b)[1]


def euclidean_divmod(a, b):
    """Return (q, r) with a == q*b + r and norm(r) <= norm(b)/2; quotient parts round half up."""
    a, b = GaussInt.coerce(a), GaussInt.coerce(b)
    if not b:
        raise ZeroDivisionError("Gaussian division by zero")
    q, r = divmod(a.element, b.element)
    return GaussInt.wrap(q), GaussInt.wrap(r)


def gauss_gcd(a, b):
    a, b = GaussInt.coerce(a), GaussInt.coerce(b)
    if not a and not b:
        raise GaussianZeroError("gcd(0, 0) is undefined")
    return GaussInt.wrap(ZZ_I.gcd(a.element, b.element))


def gauss_lcm(a, b):
    a, b = GaussInt.coerce(a), GaussInt.coerce(b)
    if not a or not b:
        raise GaussianZeroError("lcm with a zero argument")
    return GaussInt.wrap(ZZ_I.normalize(ZZ_I.lcm(a.element, b.element)))


def parity(z):
    """'even' iff (1+i) | z, i.e. Re(z) - Im(z) is even."""
    z = GaussInt.coerce(z)
    return "even" if (z.re - z.im) % 2 == 0 else "odd"


def is_gaussian_prime(z):
    z = GaussInt.coerce(z)
    if not z:
        return False
    if isprime(norm(z)):
        return True
    if z.re == 0 or z.im == 0:
        p = abs(z.re + z.im)
        return p % 4 == 3 and isprime(p)
    return False


@lru_cache(maxsize=None)
def _split_prime(p):
    """The Gamma prime above a rational prime p = 1 (mod 4), with its conjugate."""
    t = min(sqrt_mod(p - 1, p, all_roots=True))
    first = gauss_gcd(GaussInt(p, 0), GaussInt(t, 1))
    second = gamma_normalize(first.conjugate())[1]
    return first, second


@dataclass(frozen=True)
class GammaFactorization:
    unit: GaussInt
    factors: tuple  # ((prime, multiplicity), ...) ordered by (norm, re)

    def expand(self):
        value = self.unit
        for prime, multiplicity in self.factors:
            value = value * prime ** multiplicity
        return value

    def multiplicity(self, prime):
        rep = gamma_normalize(prime)[1]
        for p, m in self.factors:
            if p == rep:
                return m
        return 0


def _strip(z, prime):
    count = 0
    while prime.divides(z):
        z = z.exact_div(prime)
        count += 1
    return z, count


def factor(z):
    """Unique factorisation z = unit * prod(prime ** m) with primes in Gamma."""
    z = GaussInt.coerce(z)
    if not z:
        raise GaussianZeroError("cannot factor 0")
    found = []
    rest = z
    for p in sorted(factorint(norm(z))):
        if p == 2:
            candidates = [ONE_PLUS_I]
        elif p % 4 == 3:
            candidates = [GaussInt(p, 0)]
        else:
            candidates = list(_split_prime(p))
        for prime in candidates:
            rest, count = _strip(rest, prime)
            if count:
                found.append((prime, count))
    if not rest.is_unit():
        raise AssertionError(f"factorisation of {z!r} left cofactor {rest!r}")
    found.sort(key=lambda item: (norm(item[0]), item[0].re))
    return GammaFactorization(unit=rest, factors=tuple(found))


def is_square_free(z):
    return all(m < 2 for _, m in factor(z).factors)


class ResidueField:
    """The finite field Z[i]/(p) for a Gaussian prime p.

    Elements are ints mod N(p) for the ramified prime 1+i and for split primes,
    and pairs (a, b) mod q meaning a + b*i for an inert rational prime q.
    """

    def __init__(self, prime):
        prime = GaussInt.coerce(prime)
        if not is_gaussian_prime(prime):
            raise NotPrimeError(f"{format_gauss(prime)} is not a Gaussian prime")
        self.prime = gamma_normalize(prime)[1]
        n = norm(self.prime)
        if self.prime.im == 0:
            self.inert = True
            self.characteristic = self.prime.re
            self.order = n
            self.i_image = None
        else:
            self.inert = False
            self.characteristic = n
            self.order = n
            # t with i = t (mod p): p | (i - t)
            roots = [1] if n == 2 else sqrt_mod(n - 1, n, all_roots=True)
            self.i_image = next(t for t in sorted(roots) if self.prime.divides(GaussInt(-t, 1)))

    def reduce(self, z):
        z = GaussInt.coerce(z)
        q = self.characteristic
        if self.inert:
            return (z.re % q, z.im % q)
        return (z.re + z.im * self.i_image) % q

    @property
    def zero(self):
        return (0, 0) if self.inert else 0

    @property
    def one(self):
        return (1, 0) if self.inert else 1

    def is_zero(self, x):
        return x == self.zero

    def add(self, x, y):
        q = self.characteristic
        if self.inert:
            return ((x[0] + y[0]) % q, (x[1] + y[1]) % q)
        return (x + y) % q

    def sub(self, x, y):
        q = self.characteristic
        if self.inert:
            return ((x[0] - y[0]) % q, (x[1] - y[1]) % q)
        return (x - y) % q

    def mul(self, x, y):
        q = self.characteristic
        if self.inert:
            return ((x[0] * y[0] - x[1] * y[1]) % q, (x[0] * y[1] + x[1] * y[0]) % q)
        return (x * y) % q

    def inv(self, x):
        q = self.characteristic
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero in a residue field")
        if self.inert:
            # (a+bi)^-1 = (a-bi)/(a^2+b^2)
            d = pow((x[0] * x[0] + x[1] * x[1]) % q, -1, q)
            return ((x[0] * d) % q, (-x[1] * d) % q)
        return pow(x, -1, q)


@lru_cache(maxsize=None)
def residue_field(prime):
    return ResidueField(prime)


def residue(z, prime):
    """Canonical image of z in Z[i]/(prime)."""
    return residue_field(GaussInt.coerce(prime)).reduce(z)


def _qq_i(value):
    if isinstance(value, GaussRat):
        return value.element
    if isinstance(value, GaussInt):
        return QQ_I.convert_from(value.element, ZZ_I)
    if isinstance(value, int):
        return QQ_I(value)
    return None


class GaussRat:
    """Exact Gaussian rational backed by a QQ_I element.

    num/den is its lowest-terms form: den a positive ordinary integer, num in Z[i].
    """

    __slots__ = ("element",)

    def __init__(self, num, den=1):
        if den <= 0:
            raise ValueError("GaussRat denominator must be positive")
        self.element = _qq_i(GaussInt.coerce(num)) / den

    @classmethod
    def wrap(cls, element):
        q = cls.__new__(cls)
        q.element = element
        return q

    @staticmethod
    def coerce(value):
        if isinstance(value, GaussRat):
            return value
        return GaussRat(GaussInt.coerce(value), 1)

    @staticmethod
    def fraction(num, den):
        """num/den for Gaussian integers."""
        num, den = GaussInt.coerce(num), GaussInt.coerce(den)
        if not den:
            raise ZeroDivisionError("Gaussian rational with zero denominator")
        return GaussRat.wrap(_qq_i(num) / _qq_i(den))

    @property
    def num(self):
        return GaussInt.wrap(QQ_I.numer(self.element))

    @property
    def den(self):
        return int(QQ_I.denom(self.element).x)

    def __add__(self, other):
        other = _qq_i(other)
        if other is None:
            return NotImplemented
        return GaussRat.wrap(self.element + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _qq_i(other)
        if other is None:
            return NotImplemented
        return GaussRat.wrap(self.element - other)

    def __rsub__(self, other):
        other = _qq_i(other)
        if other is None:
            return NotImplemented
        return GaussRat.wrap(other - self.element)

    def __mul__(self, other):
        other = _qq_i(other)
        if other is None:
            return NotImplemented
        return GaussRat.wrap(self.element * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _qq_i(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return GaussRat.wrap(self.element / other)

    def __rtruediv__(self, other):
        other = _qq_i(other)
        if other is None:
            return NotImplemented
        return GaussRat.wrap(other) / self

    def __neg__(self):
        return GaussRat.wrap(-self.element)

    def __eq__(self, other):
        other = _qq_i(other)
        if other is None:
            return NotImplemented
        return self.element == other

    def __hash__(self):
        if self.den == 1:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.element)

    def __reduce__(self):
        return GaussRat, (self.num, self.den)

    def conjugate(self):
        return GaussRat.wrap(QQ_I(self.element.x, -self.element.y))

    def is_integral(self):
        return self.den == 1

    def to_gauss_int(self):
        if self.den != 1:
            raise InexactDivisionError(f"{format_rat(self)} is not a Gaussian integer")
        return self.num

    def gaussian_denominator(self):
        """Smallest (Gamma-normalised) d in Z[i] with d * self integral."""
        if not self:
            return ONE
        den = GaussInt(self.den, 0)
        return gamma_normalize(den.exact_div(gauss_gcd(self.num, den)))[1]

    def __str__(self):
        return format_rat(self)

    def __repr__(self):
        return f"GaussRat({format_rat(self)})"


_LITERAL = re.compile(
    r"^(?P<sign>[+-]?)(?:(?P<re>\d+)(?:(?P<op>[+-])(?P<im>\d*)i)?|(?P<pure>\d*)i)$"
)


def parse_gauss(text):
    """Parse a Gaussian-integer literal such as '3', '-2i', '1+2i', '-1-1i' or 'i'."""
    match = _LITERAL.match(text.strip())
    if not match:
        raise LiteralParseError(f"not a Gaussian integer literal: {text!r}")
    sign = -1 if match["sign"] == "-" else 1
    if match["re"] is not None:
        real = sign * int(match["re"])
        if match["op"] is None:
            return GaussInt(real, 0)
        imag = int(match["im"]) if match["im"] else 1
        return GaussInt(real, imag if match["op"] == "+" else -imag)
    imag = int(match["pure"]) if match["pure"] else 1
    return GaussInt(0, sign * imag)


def format_gauss(z):
    z = GaussInt.coerce(z)
    if z.im == 0:
        return str(z.re)
    if z.im == 1:
        imag = "i"
    elif z.im == -1:
        imag = "-i"
    else:
        imag = f"{z.im}i"
    if z.re == 0:
        return imag
    return f"{z.re}{imag}" if z.im < 0 else f"{z.re}+{imag}"


def format_rat(q):
    q = GaussRat.coerce(q)
    if q.den == 1:
        return format_gauss(q.num)
    if q.num.re and q.num.im:
        return f"({format_gauss(q.num)})/{q.den}"
    return f"{format_gauss(q.num)}/{q.den}"
