"""Group rings L[G] for a finite abelian G with cyclotomic coefficients."""

from fractions import Fraction

from .cyclotomic import CycNum
from .abgroup import FinAbGroup


class GroupRingElt:
    __slots__ = ("group", "terms")

    def __init__(self, group, terms=None):
        self.group = group
        self.terms = {}
        if terms:
            for g, c in terms.items():
                g = group.reduce(g)
                if not _is_zero(c):
                    self.terms[g] = self.terms.get(g, _zero()) + c
        self.terms = {g: c for g, c in self.terms.items() if not _is_zero(c)}

    @staticmethod
    def basis(group, g, coeff=1):
        return GroupRingElt(group, {tuple(g): _coerce(coeff)})

    @staticmethod
    def one(group):
        return GroupRingElt.basis(group, group.identity())

    def __add__(self, other):
        assert self.group == other.group
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, _zero()) + c
        return GroupRingElt(self.group, out)

    def __neg__(self):
        return GroupRingElt(self.group, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, GroupRingElt):
            return GroupRingElt(self.group, {g: c * _coerce(other) for g, c in self.terms.items()})
        assert self.group == other.group
        out = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                g = self.group.add(g1, g2)
                out[g] = out.get(g, _zero()) + c1 * c2
        return GroupRingElt(self.group, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = GroupRingElt.one(self.group)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        """Inverse of a single-term element c.[g] (unit test for norm factors)."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomial group-ring elements are inverted here")
        (g, c), = self.terms.items()
        cinv = c.inv() if isinstance(c, CycNum) else Fraction(1) / Fraction(c)
        return GroupRingElt(self.group, {self.group.neg(g): _coerce(cinv)})

    def apply_char(self, char, modulus=None):
        """Evaluate the character: sum of coeff * chi(g).  Ring homomorphism."""
        total = None
        for g, c in self.terms.items():
            v = self.group.char_value(char, g, modulus) * c
            total = v if total is None else total + v
        if total is None:
            return CycNum.from_rational(0, modulus or 1)
        return total

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        if self.group != other.group or set(self.terms) != set(other.terms):
            return False
        return all(self.terms[g] == other.terms[g] for g in self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c!r})[{g}]" for g, c in sorted(self.terms.items()))


def _zero():
    return CycNum.from_rational(0, 1)


def _coerce(c):
    if isinstance(c, CycNum):
        return c
    return CycNum.from_rational(Fraction(c), 1)


def _is_zero(c):
    return c == 0
