"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are represented by their coordinate vector on the power basis
1, z, ..., z^(phi(m)-1) of Q(zeta_m), where z = zeta_m and reduction is
modulo the m-th cyclotomic polynomial.  All coefficients are Fractions,
so every operation is exact.  Complex conjugation is the Galois map
z -> z^(m-1); quadratic fields of fundamental discriminant D embed via
the Gauss sum sqrt(D) = sum_a kronecker(D, a) zeta_|D|^a.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


def euler_phi(m):
    n, result, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def kronecker(a, n):
    """Kronecker symbol (a|n), defined for all integers n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    t = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            t = -t
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    a = list(a)
    lead = b[-1]
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        coeff = Fraction(a[i + len(b) - 1], 1) / lead
        if coeff != 0:
            q[i] = coeff
            for j, y in enumerate(b):
                a[i + j] -= coeff * y
    return _poly_trim(q), _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m == 1:
        return (-1, 1)
    num = [0] * m + [1]
    num[0] = -1  # x^m - 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, list(cyclotomic_poly(d)))
    q, r = _poly_divmod(num, den)
    assert not r, "cyclotomic division must be exact"
    return tuple(Fraction(c) for c in q)


class CycNum:
    """An element of Q(zeta_m) on the power basis of zeta_m."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        d = euler_phi(m)
        c = [Fraction(x) for x in coeffs]
        if len(c) > d:
            c = _reduce_mod_cyclo(c, m)
        c += [Fraction(0)] * (d - len(c))
        self.m = m
        self.coeffs = tuple(c)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(x, m=1):
        return CycNum(m, [Fraction(x)])

    @staticmethod
    def zeta(m, k=1):
        k %= m
        c = [0] * (k + 1)
        c[k] = 1
        return CycNum(m, c)

    @staticmethod
    def sqrt_disc(disc, m=None):
        """sqrt(disc) for a fundamental discriminant, via the Gauss sum.

        Requires |disc| | m when m is given; the result lives in
        Q(zeta_|disc|) otherwise.
        """
        d = abs(disc)
        g = CycNum(d, [0])
        for a in range(1, d):
            chi = kronecker(disc, a)
            if chi:
                g = g + CycNum.zeta(d, a) * chi
        if m is not None:
            g = g.promote(m)
        assert g * g == CycNum.from_rational(disc, g.m)
        return g

    # -- ring structure ------------------------------------------------

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(other, self.m)
        if not isinstance(other, CycNum):
            return None, None
        if self.m == other.m:
            return self, other
        lcm = self.m * other.m // gcd(self.m, other.m)
        return self.promote(lcm), other.promote(lcm)

    def promote(self, m2):
        """Image under Q(zeta_m) -> Q(zeta_m2), zeta_m -> zeta_m2^(m2/m)."""
        if m2 == self.m:
            return self
        assert m2 % self.m == 0, "target modulus must be a multiple"
        step = m2 // self.m
        out = [Fraction(0)] * (len(self.coeffs) * step + 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] += c
        return CycNum(m2, out)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNum(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.m, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNum(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        prod = _poly_mul(list(a.coeffs), list(b.coeffs))
        return CycNum(a.m, _reduce_mod_cyclo(prod, a.m))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        result = CycNum.from_rational(1, self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        mod = list(cyclotomic_poly(self.m))
        r0, r1 = mod, _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            qs = _poly_mul(q, s1)
            s = [x - y for x, y in
                 zip(s0 + [0] * max(0, len(qs) - len(s0)),
                     qs + [0] * max(0, len(s0) - len(qs)))]
            r0, r1, s0, s1 = r1, r, s1, _poly_trim(s)
        assert r1, "cyclotomic polynomial factors are coprime to nonzero elements"
        c = r1[0]
        return CycNum(self.m, [x / c for x in s1])

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def galois(self, j):
        """Apply the automorphism zeta -> zeta^j, gcd(j, m) = 1."""
        assert gcd(j, self.m) == 1
        out = [Fraction(0)] * (self.m + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                out[(i * j) % self.m] += c
        return CycNum(self.m, out)

    def conj(self):
        """Complex conjugation, zeta -> zeta^(-1)."""
        if self.m == 1:
            return self
        return self.galois(self.m - 1)

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        assert self.is_rational(), "not a rational element"
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.m, self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if i == 0 else f"{c}*z{self.m}^{i}")
        return " + ".join(terms) if terms else "0"


def _reduce_mod_cyclo(coeffs, m):
    mod = list(cyclotomic_poly(m))
    c = [Fraction(x) for x in coeffs]
    _, r = _poly_divmod(c, mod)
    return r


def root_of_unity_order(x):
    """Order of x as a root of unity in its field, or None."""
    if not isinstance(x, CycNum):
        if x == 1:
            return 1
        if x == -1:
            return 2
        return None
    acc = x
    for k in range(1, 2 * x.m + 1):
        if acc == 1:
            return k
        acc = acc * x
    return None
