"""Groessencharacters of infinity type (-1, 0) on an imaginary quadratic field.

psi((alpha)) = alpha * wtilde(alpha) where wtilde is a character of
(O_K/f)^x restricting to u -> u^(-1) on the image of the unit group
(the existence condition; UnitObstruction otherwise).  Values live in
the cyclotomic field Q(zeta_m) with K embedded through the Gauss sum,
so |psi(a)|^2 = N(a) is checked exactly by complex conjugation.

Class-field extension beyond principal ideals requires roots that leave
the cyclotomic value field for h_K > 1; construction is scoped to class
number one (which covers every verification in the suite).
"""

from fractions import Fraction
from math import gcd

from .cyclotomic import CycNum, kronecker
from .iqfield import IdealHNF, prime_ideals_above, class_number
from .rayclass import RayClassGroup


class UnitObstruction(Exception):
    pass


class ClassExtensionUnsupported(Exception):
    pass


class ModulusMismatch(Exception):
    pass


def embed_element(field, u, m):
    """x + y*theta as a CycNum in Q(zeta_m); needs |disc| | m."""
    x, y = u
    sq = CycNum.sqrt_disc(field.disc, m)
    theta = (sq + field.disc) * Fraction(1, 2)
    return theta * y + Fraction(x)


class HeckeChar:
    """A Groessencharacter of infinity type (-1, 0) and modulus f."""

    def __init__(self, field, modulus, ray, wtilde_char, m):
        self.field = field
        self.modulus = modulus
        self.ray = ray                # RayClassGroup of modulus f
        self.wtilde_char = wtilde_char  # character tuple on ray.ring_units
        self.m = m                    # cyclotomic modulus of the value field
        self._cache = {}

    def wtilde(self, alpha):
        """The finite-order part at a residue alpha coprime to f."""
        ring = self.ray.ring_units
        coords = self.ray._ring_coords(self.modulus.reduce_element(alpha))
        return ring.char_value(self.wtilde_char, coords, self.m)

    def value_principal(self, alpha):
        return embed_element(self.field, alpha, self.m) * self.wtilde(alpha)

    def value(self, ideal):
        """psi(ideal) for an ideal coprime to f (class number one)."""
        key = (ideal.a, ideal.b, ideal.c)
        if key in self._cache:
            return self._cache[key]
        assert ideal.is_coprime(self.modulus)
        gen = ideal.generator_if_principal()
        if gen is None:
            raise ClassExtensionUnsupported(
                "psi on non-principal ideals needs a root outside the cyclotomic value field")
        out = self.value_principal(gen)
        self._cache[key] = out
        return out

    def conductor_norm(self):
        return self.modulus.norm()

    def level(self):
        return self.modulus.norm() * abs(self.field.disc)

    def omega(self, n):
        """The Dirichlet character with psi((n)) = n * omega(n)."""
        n = int(n)
        assert gcd(n, self.conductor_norm()) == 1
        val = self.value(IdealHNF.principal(self.field, (n, 0)))
        out = val * Fraction(1, n)
        return out

    def nebentypus(self, n):
        """omega * epsilon_K at an integer n coprime to the level."""
        return self.omega(n) * kronecker(self.field.disc, n)


def hecke_char_construct(field, modulus, extra_modulus=1):
    """Find psi of infinity type (-1, 0) and the given modulus.

    Scans the characters of (O_K/f)^x for one with wtilde(u) = u^(-1)
    on the unit group; raises UnitObstruction when none exists.  The
    value field is Q(zeta_m) with m = lcm(|disc|, exponent of the
    residue units, extra_modulus).
    """
    if class_number(field.disc) != 1:
        raise ClassExtensionUnsupported("construction scoped to class number one")
    ray = RayClassGroup(field, modulus)
    ring = ray.ring_units
    m = abs(field.disc)
    for d in ring.orders:
        m = m * d // gcd(m, d)
    m = m * extra_modulus // gcd(m, extra_modulus)

    units = field.units()
    targets = []
    for u in units:
        inv = units[[field.mul(u, v) for v in units].index((1, 0))]
        targets.append((u, embed_element(field, inv, m)))

    for char in ring.characters():
        ok = True
        for u, target in targets:
            coords = ray._ring_coords(modulus.reduce_element(u))
            if ring.char_value(char, coords, m) != target:
                ok = False
                break
        if ok:
            return HeckeChar(field, modulus, ray, char, m)
    raise UnitObstruction(f"no unit-compatible character mod {modulus}")


class TwistedChar:
    """psi * chi for a character chi of a ray class group H_n, f | n."""

    def __init__(self, psi, ray_n, chi):
        if not psi.modulus.divides(ray_n.modulus):
            raise ModulusMismatch("psi's modulus must divide the twisting modulus")
        self.psi = psi
        self.ray_n = ray_n
        self.chi = chi
        self.m = psi.m
        for d in ray_n.group.orders:
            self.m = self.m * d // gcd(self.m, d)

    def value(self, ideal):
        a = self.psi.value(ideal).promote(self.m)
        b = self.ray_n.group.char_value(self.chi, self.ray_n.dlog(ideal), self.m)
        return a * b

    def conductor_norm(self):
        return self.ray_n.modulus.norm()

    def level(self):
        return self.ray_n.modulus.norm() * abs(self.psi.field.disc)

    def nebentypus(self, n):
        # chi((n)) times the nebentypus of psi
        field = self.psi.field
        chi_val = self.ray_n.group.char_value(
            self.chi, self.ray_n.dlog(IdealHNF.principal(field, (n, 0))), self.m)
        return chi_val * self.psi.nebentypus(n)


def char_twist_and_omega(psi, ray_n, chi):
    """(psi*chi, omega table) with omega(n) = psi((n))/n checked multiplicative."""
    twist = TwistedChar(psi, ray_n, chi)
    nf = psi.conductor_norm()
    table = {}
    for n in range(1, 3 * nf + 2):
        if gcd(n, nf) == 1:
            table[n % nf] = psi.omega(n) if (n % nf) not in table else table[n % nf]
    return twist, table
