"""The quadratic extension R(sqrt(ell)) of a coefficient ring R.

Values are pairs a + b*sqrt(ell) with a, b in R, where R is Fraction or
CycNum.  This is where half-integral powers of ell live (the ell^(3/2)
and ell^(1/2) normalisations of spherical eigenvalues and local factor
coefficients).  sqrt(ell) is purely formal; equality is componentwise.
"""

from fractions import Fraction


class SqrtExt:
    __slots__ = ("ell", "a", "b")

    def __init__(self, ell, a, b=0):
        self.ell = ell
        self.a = a if not isinstance(a, int) else Fraction(a)
        self.b = b if not isinstance(b, int) else Fraction(b)

    @staticmethod
    def half_power(ell, k):
        """ell^(k/2) as an element of Q(sqrt(ell)), k any integer."""
        q, r = divmod(k, 2)
        body = Fraction(ell) ** q
        if r == 0:
            return SqrtExt(ell, body, 0)
        return SqrtExt(ell, 0, body)

    def _coerce(self, other):
        if isinstance(other, SqrtExt):
            if other.ell != self.ell:
                raise ValueError("mixed sqrt extensions")
            return other
        return SqrtExt(self.ell, other, 0 * self.b if not isinstance(self.b, Fraction) else Fraction(0))

    def __add__(self, other):
        o = self._coerce(other)
        return SqrtExt(self.ell, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return SqrtExt(self.ell, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return SqrtExt(self.ell,
                       self.a * o.a + self.ell * (self.b * o.b),
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj_sqrt(self):
        """The involution sqrt(ell) -> -sqrt(ell)."""
        return SqrtExt(self.ell, self.a, -self.b)

    def norm(self):
        return self.a * self.a - self.ell * (self.b * self.b)

    def inv(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("non-invertible sqrt-extension element")
        c = self.conj_sqrt()
        if isinstance(n, Fraction) or isinstance(n, int):
            return SqrtExt(self.ell, c.a / Fraction(n), c.b / Fraction(n))
        return SqrtExt(self.ell, c.a / n, c.b / n)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = SqrtExt(self.ell, 1, 0) if isinstance(self.a, (int, Fraction)) \
            else SqrtExt(self.ell, self.a * 0 + 1, self.b * 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_rational_part_only(self):
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, SqrtExt):
            if other.ell != self.ell:
                return (self.b == 0 and other.b == 0 and self.a == other.a)
            return self.a == other.a and self.b == other.b
        return self.b == 0 and self.a == other

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.ell, self.a, self.b))

    def __repr__(self):
        if self.b == 0:
            return repr(self.a)
        return f"({self.a} + {self.b}*sqrt({self.ell}))"
