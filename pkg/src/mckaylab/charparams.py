"""Irreducible characters of GL_n(q) and GU_n(q) by Jordan parameters.

A character is a pair: a semisimple class s together with one partition
per eigenvalue-orbit factor of s (a unipotent label of the centralizer).
Its degree is the p'-part of the index of the centralizer times the
product of the generic degrees of the partitions, an exact integer.

The central translation group Z/M_1 acts on characters by translating s
and carrying the partitions along; stabilizer orders drive both the
restriction combinatorics to the determinant-one subgroup and the
relevance tests used by the local-global comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from itertools import product as iproduct

from .exactfield import SignedPrimePower, ell_val, group_order, order_for_ell, spp
from .partitions import e_core_quotient, generic_degree, partitions, wreath_degree
from .ssclasses import (
    SSClass,
    canonical_label,
    centralizer_order,
    component_group,
    eigen_modulus,
    enumerate_ss_classes,
    norm_exponent,
    pgl_ss_classes,
)


@dataclass(frozen=True, order=True)
class GlobalChar:
    """Jordan parameter: semisimple class plus one partition per factor."""

    cls: SSClass
    parts: tuple


@cache
def enumerate_irr(n: int, sp: SignedPrimePower) -> tuple:
    out = []
    for cls in enumerate_ss_classes(n, sp):
        mults = [m for _, m in cls.factors]
        for parts in iproduct(*(partitions(m) for m in mults)):
            out.append(GlobalChar(cls, parts))
    return tuple(out)


def factor_field(k: int, sp: SignedPrimePower) -> SignedPrimePower:
    return spp(sp.eps**k, sp.q**k)


def index_order(cls: SSClass, n: int, sp: SignedPrimePower) -> int:
    return group_order(n, sp) // centralizer_order(cls, sp)


def degree(chi: GlobalChar, n: int, sp: SignedPrimePower) -> int:
    idx = index_order(chi.cls, n, sp)
    while idx % sp.p == 0:
        idx //= sp.p
    for ((k, _), _), lam in zip(chi.cls.factors, chi.parts):
        idx *= generic_degree(lam, factor_field(k, sp))
    return idx


def central_char(chi: GlobalChar, sp: SignedPrimePower) -> int:
    """Exponent in Z/M_1 by which the centre acts."""
    return norm_exponent(chi.cls, sp)


def zhat_act(chi: GlobalChar, sp: SignedPrimePower, z: int) -> GlobalChar:
    """Tensor by the z-th power of the determinant-type linear character."""
    m1 = eigen_modulus(1, sp)
    decorated = []
    for ((k, e), m), lam in zip(chi.cls.factors, chi.parts):
        mk = eigen_modulus(k, sp)
        decorated.append((canonical_label(k, e + z * (mk // m1), sp), m, lam))
    decorated.sort(key=lambda t: (t[0], t[1]))
    cls = SSClass(tuple((lab, m) for lab, m, _ in decorated))
    return GlobalChar(cls, tuple(lam for _, _, lam in decorated))


def zhat_stab_order(chi: GlobalChar, sp: SignedPrimePower) -> int:
    m1 = eigen_modulus(1, sp)
    return sum(1 for z in range(m1) if zhat_act(chi, sp, z) == chi)


def is_ellprime(chi: GlobalChar, n: int, sp: SignedPrimePower, ell: int) -> bool:
    return ell_val(degree(chi, n, sp), ell) == 0


def count_ellprime(n: int, sp: SignedPrimePower, ell: int) -> int:
    return sum(1 for chi in enumerate_irr(n, sp) if is_ellprime(chi, n, sp, ell))


def _factor_core_data(chi: GlobalChar, sp: SignedPrimePower, ell: int):
    for ((k, _), _), lam in zip(chi.cls.factors, chi.parts):
        sub = factor_field(k, sp)
        e = order_for_ell(sub.eq, ell)
        core, quot, w = e_core_quotient(lam, e)
        yield e, core, quot, w


def ellprime_structural(chi: GlobalChar, n: int, sp: SignedPrimePower, ell: int) -> bool:
    """Hook-free test for an ell-prime degree.

    The valuation of the degree splits as the valuation of the
    centralizer index plus, per factor, the valuations of the core
    degree, of the wreath-label degree of the quotient, and of a
    binomial tail.  All three vanish exactly when the core is small and
    the quotient's wreath degree is prime to ell, so no big integers
    need to be formed.
    """
    if ell_val(index_order(chi.cls, n, sp), ell) != 0:
        return False
    for e, core, quot, _ in _factor_core_data(chi, sp, ell):
        if sum(core) >= e:
            return False
        if ell_val(wreath_degree(quot), ell) != 0:
            return False
    return True


def global_relevant(chi: GlobalChar, n: int, sp: SignedPrimePower, ell: int) -> bool:
    """Does chi lie over an ell-prime character of the det-one subgroup?

    Restriction to the determinant-one subgroup is multiplicity free
    with t = |stab| constituents of equal degree, so the constituents
    are ell-prime exactly when the valuations of degree and stabilizer
    order agree.
    """
    v_deg = ell_val(degree(chi, n, sp), ell)
    return v_deg == ell_val(zhat_stab_order(chi, sp), ell)


def _is_ell_power(x: int, ell: int) -> bool:
    while x % ell == 0:
        x //= ell
    return x == 1


def sl_relevant(chi: GlobalChar, n: int, sp: SignedPrimePower, ell: int) -> bool:
    """Adjoint-side relevance test, stated on (s, component group) data.

    Three conditions: the centralizer index and the component group
    A(s) have the same ell-valuation; each factor passes the structural
    ell-prime test; and the ell-part of A(s) fixes the decorated
    parameter.  Tested to agree with global_relevant, not assumed.
    """
    a = component_group(chi.cls, sp)
    if ell_val(index_order(chi.cls, n, sp), ell) != ell_val(len(a), ell):
        return False
    for e, core, quot, _ in _factor_core_data(chi, sp, ell):
        if sum(core) >= e:
            return False
        if ell_val(wreath_degree(quot), ell) != 0:
            return False
    m1 = eigen_modulus(1, sp)
    for z in a:
        if z and _is_ell_power(m1 // math.gcd(z, m1), ell):
            if zhat_act(chi, sp, z) != chi:
                return False
    return True


def count_irr_sl(n: int, sp: SignedPrimePower) -> int:
    """Number of irreducible characters of the det-one subgroup.

    Each translation orbit of size o contributes M_1/o constituents.
    """
    m1 = eigen_modulus(1, sp)
    seen: set = set()
    total = 0
    for chi in enumerate_irr(n, sp):
        if chi in seen:
            continue
        orbit = {zhat_act(chi, sp, z) for z in range(m1)}
        seen.update(orbit)
        total += m1 // len(orbit)
    return total


def count_jordan_params(n: int, sp: SignedPrimePower) -> int:
    """Same count organized by adjoint semisimple classes.

    For each translation orbit of semisimple classes and each orbit of
    A(s) on the attached multipartitions, the packet contributes the
    order of the stabilizer of the multipartition in A(s).
    """
    total = 0
    for orbit in pgl_ss_classes(n, sp):
        s = orbit[0]
        a = component_group(s, sp)
        seen: set = set()
        for parts in iproduct(*(partitions(m) for _, m in s.factors)):
            chi = GlobalChar(s, parts)
            if chi in seen:
                continue
            sub_orbit = {zhat_act(chi, sp, z) for z in a}
            seen.update(sub_orbit)
            total += len(a) // len(sub_orbit)
    return total


def to_params(chi: GlobalChar) -> dict:
    return {
        "factors": [[k, e, m] for (k, e), m in chi.cls.factors],
        "parts": [list(p) for p in chi.parts],
    }


def from_params(data: dict) -> GlobalChar:
    cls = SSClass(tuple(((k, e), m) for k, e, m in data["factors"]))
    return GlobalChar(cls, tuple(tuple(p) for p in data["parts"]))
