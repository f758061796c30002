"""CM eigenform q-expansions: a_n = sum of psi(a) over ideals of norm n.

Ideals of norm n coprime to the conductor are enumerated by factoring n
and combining the local choices (e + 1 ideals above a split p^e, one
above even inert powers, one above ramified powers).  The eigenform
checks are the weight-two Hecke relations with nebentypus omega*eps_K:
multiplicativity on coprime indices and

    a_(l^(r+1)) = a_l a_(l^r) - l * eps(l) * a_(l^(r-1))

away from the level, plus a_l = psi(l) + psi(lbar) split / 0 inert.
"""

from fractions import Fraction
from math import gcd

from .cyclotomic import CycNum
from .iqfield import IdealHNF, prime_ideals_above


def factorize(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def ideals_of_norm(field, n):
    """All integral ideals of norm n."""
    out = [IdealHNF.unit_ideal(field)]
    for p, e in factorize(n).items():
        primes, kind = prime_ideals_above(field, p)
        if kind == "split":
            p1, p2 = primes
            local = [(p1 ** i) * (p2 ** (e - i)) for i in range(e + 1)]
        elif kind == "inert":
            if e % 2:
                return []
            local = [primes[0] ** (e // 2)]
        else:
            local = [primes[0] ** e]
        out = [a * b for a in out for b in local]
    return out


class QExpansion:
    """Exact coefficients a_1..a_B of the theta series of psi."""

    def __init__(self, psi, bound):
        self.psi = psi
        self.bound = bound
        self.level = psi.level()
        self.coeffs = {1: _one(psi)}
        for n in range(2, bound + 1):
            self.coeffs[n] = self._coefficient(n)

    def _coefficient(self, n):
        total = None
        for ideal in ideals_of_norm(self.psi.field, n):
            if not ideal.is_coprime(_conductor(self.psi)):
                continue
            v = self.psi.value(ideal)
            total = v if total is None else total + v
        if total is None:
            return _zero(self.psi)
        return total

    def a(self, n):
        return self.coeffs[n]


def _conductor(psi):
    return psi.modulus if hasattr(psi, "modulus") else psi.ray_n.modulus


def _one(psi):
    return CycNum.from_rational(1, psi.m)


def _zero(psi):
    return CycNum.from_rational(0, psi.m)


def q_expansion(psi, bound):
    return QExpansion(psi, bound)


def verify_eigenform(f, prime_bound):
    """Hecke-eigenform checks on a QExpansion up to its bound."""
    psi = f.psi
    field = psi.field
    B = f.bound
    level = f.level
    report = {"bound": B, "level": level}

    mult_ok = True
    for m in range(2, B + 1):
        for n in range(2, B // m + 1):
            if gcd(m, n) == 1:
                if f.a(m * n) != f.a(m) * f.a(n):
                    mult_ok = False
    report["multiplicative"] = mult_ok

    rec_ok = True
    for ell in [p for p in range(2, prime_bound + 1) if _is_prime(p) and level % p]:
        eps = psi.nebentypus(ell)
        r = 1
        while ell ** (r + 1) <= B:
            lhs = f.a(ell ** (r + 1))
            rhs = f.a(ell) * f.a(ell ** r) - f.a(ell ** (r - 1)) * eps * ell
            if lhs != rhs:
                rec_ok = False
            r += 1
    report["recurrence"] = rec_ok

    split_ok = True
    for ell in [p for p in range(2, min(prime_bound, B) + 1) if _is_prime(p) and level % p]:
        primes, kind = prime_ideals_above(field, ell)
        if kind == "inert":
            if f.a(ell) != 0:
                split_ok = False
        elif kind == "split":
            expected = psi.value(primes[0]) + psi.value(primes[1])
            if f.a(ell) != expected:
                split_ok = False
    report["split_inert"] = split_ok

    report["a1_is_one"] = f.a(1) == 1
    report["pass"] = mult_ok and rec_ok and split_ok and report["a1_is_one"]
    return report


def _is_prime(n):
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True
