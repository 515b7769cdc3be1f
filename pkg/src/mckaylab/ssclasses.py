"""Semisimple conjugacy classes of GL_n(q) and GU_n(q), combinatorially.

A semisimple class is a multiset of eigenvalue orbits.  Writing eq for
the signed field size (q in the linear case, -q in the unitary case),
the eigenvalues of degree k live in a cyclic group of order
M_k = |q^k - eps^k| = |eq^k - 1|, encoded as Z/M_k, and the Frobenius
acts by multiplication by eq.  A label (k, e) is an orbit of size
exactly k, named by its minimal member.  Since j | k forces M_j | M_k,
smaller-degree labels embed via e -> e * (M_k / M_j), and "size exactly
k" excludes the embedded ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .exactfield import SignedPermutation, SignedPrimePower, group_order, spp

Label = tuple[int, int]


@dataclass(frozen=True, order=True)
class SSClass:
    """Multiset of eigenvalue orbits: sorted ((k, e), multiplicity) pairs."""

    factors: tuple

    @property
    def rank(self) -> int:
        return sum(k * m for (k, _), m in self.factors)


def eigen_modulus(k: int, sp: SignedPrimePower) -> int:
    return abs(sp.q**k - sp.eps**k)


def canonical_label(k: int, e: int, sp: SignedPrimePower) -> Label:
    """Minimal member of the multiplication-by-eq orbit of e in Z/M_k."""
    m = eigen_modulus(k, sp)
    base = sp.eq % m
    e %= m
    best, x = e, e * base % m
    while x != e:
        best = min(best, x)
        x = x * base % m
    return (k, best)


@cache
def labels_of_degree(k: int, sp: SignedPrimePower) -> tuple:
    """Canonical representatives of the orbits of size exactly k."""
    m = eigen_modulus(k, sp)
    base = sp.eq % m
    seen: set = set()
    out = []
    for e in range(m):
        if e in seen:
            continue
        orbit = [e]
        x = e * base % m
        while x != e:
            orbit.append(x)
            x = x * base % m
        seen.update(orbit)
        if len(orbit) == k:
            out.append(e)
    return tuple(out)


@cache
def enumerate_ss_classes(n: int, sp: SignedPrimePower) -> tuple:
    """All semisimple classes of the rank-n group, canonically sorted."""
    labels = [(k, e) for k in range(1, n + 1) for e in labels_of_degree(k, sp)]
    out = []

    def rec(i: int, budget: int, chosen: list) -> None:
        if budget == 0:
            out.append(SSClass(tuple(chosen)))
            return
        if i == len(labels):
            return
        rec(i + 1, budget, chosen)
        k = labels[i][0]
        for m in range(1, budget // k + 1):
            chosen.append((labels[i], m))
            rec(i + 1, budget - m * k, chosen)
            chosen.pop()

    rec(0, n, [])
    return tuple(sorted(out))


def identity_class(n: int) -> SSClass:
    return SSClass((((1, 0), n),))


def is_central(cls: SSClass) -> bool:
    return len(cls.factors) == 1 and cls.factors[0][0][0] == 1


def centralizer_factors(cls: SSClass, sp: SignedPrimePower) -> tuple:
    """The (multiplicity, signed field) pairs of the centralizer's factors.

    The centralizer of a semisimple element with a degree-k eigenvalue
    orbit of multiplicity m contributes a rank-m general linear or
    unitary group over the degree-k extension, with sign eps^k.
    """
    return tuple(
        (m, spp(sp.eps**k, sp.q**k)) for (k, _), m in cls.factors
    )


def centralizer_order(cls: SSClass, sp: SignedPrimePower) -> int:
    out = 1
    for m, sub_sp in centralizer_factors(cls, sp):
        out *= group_order(m, sub_sp)
    return out


def norm_exponent(cls: SSClass, sp: SignedPrimePower) -> int:
    """Determinant of the class as an exponent in Z/M_1.

    A degree-k orbit through e has determinant e * (1 + eq + ... +
    eq^(k-1)) in eigenvalue exponents, which lands in Z/M_1 as
    eps^(k+1) * e.  Translating the whole class by z shifts the result
    by rank * z, the determinant shift law.
    """
    m1 = eigen_modulus(1, sp)
    out = 0
    for (k, e), m in cls.factors:
        sign = sp.eps ** (k + 1)
        out += m * sign * e
    return out % m1


def zhat_translate(cls: SSClass, sp: SignedPrimePower, z: int) -> SSClass:
    """Multiply the class by the central eigenvalue with exponent z."""
    m1 = eigen_modulus(1, sp)
    new = []
    for (k, e), m in cls.factors:
        mk = eigen_modulus(k, sp)
        new.append((canonical_label(k, e + z * (mk // m1), sp), m))
    return SSClass(tuple(sorted(new)))


def component_group(cls: SSClass, sp: SignedPrimePower) -> tuple:
    """Central translations fixing the class, a subgroup of Z/M_1.

    This is the component group of the centralizer image in the adjoint
    quotient; its order divides gcd(rank, M_1).
    """
    m1 = eigen_modulus(1, sp)
    return tuple(z for z in range(m1) if zhat_translate(cls, sp, z) == cls)


@cache
def pgl_ss_classes(n: int, sp: SignedPrimePower) -> tuple:
    """Orbits of the central translation action on semisimple classes.

    Each orbit is the parameter of one semisimple class of the adjoint
    group; returned as sorted tuples with the minimal class first.
    """
    m1 = eigen_modulus(1, sp)
    seen: set = set()
    orbits = []
    for cls in enumerate_ss_classes(n, sp):
        if cls in seen:
            continue
        orbit = {zhat_translate(cls, sp, z) for z in range(m1)}
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    return tuple(orbits)
