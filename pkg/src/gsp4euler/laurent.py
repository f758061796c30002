"""Multivariate Laurent polynomials with exact coefficients.

Terms are keyed by sorted tuples of (variable, exponent) pairs with
nonzero integer exponents; coefficients may be Fraction, SqrtExt or
CycNum (anything ring-like).  Exponents are bounded (default 64) so a
runaway computation fails fast instead of silently exploding.
"""

from fractions import Fraction

EXPONENT_BOUND = 64


class LaurentOverflowError(Exception):
    pass


def _is_zero(c):
    try:
        return c == 0
    except TypeError:
        return False


def _key(items):
    pairs = tuple(sorted((v, e) for v, e in items if e != 0))
    for _, e in pairs:
        if abs(e) > EXPONENT_BOUND:
            raise LaurentOverflowError(f"exponent {e} exceeds bound {EXPONENT_BOUND}")
    return pairs


class Laurent:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if not _is_zero(c):
                    self.terms[_key(k)] = c

    @staticmethod
    def const(c):
        if _is_zero(c):
            return Laurent()
        return Laurent({(): c})

    @staticmethod
    def var(name, exp=1, coeff=Fraction(1)):
        return Laurent({((name, exp),): coeff})

    def variables(self):
        return {v for k in self.terms for v, _ in k}

    def is_zero(self):
        return not self.terms

    def constant_part(self):
        return self.terms.get((), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, Laurent):
            other = Laurent.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c if k in out else c
            if _is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        result = Laurent()
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = Laurent()
        result.terms = {k: -c for k, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, Laurent):
            other = Laurent.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Laurent):
            other = Laurent.const(other)
        out = {}
        for k1, c1 in self.terms.items():
            e1 = dict(k1)
            for k2, c2 in other.terms.items():
                c = c1 * c2
                if _is_zero(c):
                    continue
                e = dict(e1)
                for v, x in k2:
                    e[v] = e.get(v, 0) + x
                k = _key(e.items())
                s = out.get(k, 0) + c if k in out else c
                if _is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        result = Laurent()
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = Laurent.const(Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        """Inverse of a monomial (single-term) Laurent polynomial."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomials are invertible in the Laurent ring")
        (k, c), = self.terms.items()
        if isinstance(c, (int, Fraction)):
            cinv = Fraction(1) / Fraction(c)
        else:
            cinv = c.inv()
        return Laurent({tuple((v, -e) for v, e in k): cinv})

    def substitute(self, assignment):
        """Substitute values for variables; exact, inverses must exist.

        assignment maps variable name -> value (ring element or Laurent).
        Variables not assigned remain symbolic.  Raises KeyError-style
        MissingAssignment only through `evaluate`, which requires full
        coverage.
        """
        out = Laurent()
        for k, c in self.terms.items():
            term = Laurent.const(c)
            for v, e in k:
                if v in assignment:
                    val = assignment[v]
                    if not isinstance(val, Laurent):
                        val = Laurent.const(val)
                    term = term * (val ** e)
                else:
                    term = term * Laurent.var(v, e)
            out = out + term
        return out

    def evaluate(self, assignment):
        """Full substitution; every variable must be assigned."""
        missing = self.variables() - set(assignment)
        if missing:
            raise MissingAssignment(f"no value for {sorted(missing)}")
        res = self.substitute(assignment)
        assert not res.variables()
        return res.constant_part()

    def coefficient_of(self, var, exp):
        """The Laurent polynomial coefficient of var^exp."""
        out = {}
        for k, c in self.terms.items():
            d = dict(k)
            if d.get(var, 0) == exp:
                d.pop(var, None)
                out[_key(d.items())] = c
        result = Laurent()
        result.terms = out
        return result

    def degree_in(self, var):
        degs = [dict(k).get(var, 0) for k in self.terms]
        return max(degs) if degs else 0

    def rename(self, mapping):
        out = {}
        for k, c in self.terms.items():
            out[_key((mapping.get(v, v), e) for v, e in k)] = c
        result = Laurent()
        result.terms = out
        return result

    def __eq__(self, other):
        if not isinstance(other, Laurent):
            other = Laurent.const(other)
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            mon = "*".join(f"{v}^{e}" if e != 1 else v for v, e in k)
            c = self.terms[k]
            bits.append(f"({c!r})" + (f"*{mon}" if mon else ""))
        return " + ".join(bits)


class MissingAssignment(Exception):
    pass


class PolyX:
    """Dense polynomial in one distinguished variable X over any ring.

    Coefficients may be Laurent polynomials, CycNum, SqrtExt or
    Fractions; the class only uses +, * and zero-tests on them.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while len(c) > 1 and _is_zero(c[-1]):
            c.pop()
        self.coeffs = c

    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyX([self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyX([self[i] + (-1) * other[i] for i in range(n)])

    def __mul__(self, other):
        if not isinstance(other, PolyX):
            return PolyX([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                p = a * b
                out[i + j] = p if isinstance(out[i + j], int) and out[i + j] == 0 else out[i + j] + p
        return PolyX(out)

    __rmul__ = __mul__

    def scale_x(self, c):
        """Substitute X -> c*X."""
        return PolyX([coeff * (c ** i) if i else coeff for i, coeff in enumerate(self.coeffs)])

    def eval_at(self, x, one=1):
        """Evaluate at a ring element x (Horner, needs * and +)."""
        acc = self.coeffs[-1] * one if self.coeffs else 0
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c * one
        return acc

    def is_zero(self):
        return all(_is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        for i in range(n):
            a, b = self[i], other[i]
            if isinstance(a, int) and a == 0:
                if not _is_zero(b):
                    return False
            elif isinstance(b, int) and b == 0:
                if not _is_zero(a):
                    return False
            elif not (a == b):
                return False
        return True

    def __repr__(self):
        return " + ".join(f"({c!r})*X^{i}" for i, c in enumerate(self.coeffs) if not _is_zero(c)) or "0"
