"""Characters of the normalizer of a maximal ell-split Levi torus.

For ell not dividing q, let d0 be the multiplicative order of the
signed field size eq modulo ell (modulo 4 when ell = 2), a = n // d0
and m = n % d0.  The relevant local subgroup is

    N = (GL_m(eq) x (C_Q)^a) : (C_d0 wr S_a),    Q = |q^d0 - eps^d0|,

where the cyclic C_d0 acts on each torus coordinate C_Q by the eq-power
map.  Its irreducible characters are Clifford data: a character of the
GL_m factor, a multiset of eq-power orbits on Z/Q with multiplicities
summing to a, and per orbit a wreath label for the inertia quotient
C_t wr S_s with t = d0 / (orbit size).

The transport map carries a character of GL_n(eq) lying over an
ell-prime character of the determinant-one subgroup to such local data:
per eigenvalue factor, the e-core goes into the GL_m part and the
e-quotient becomes the wreath label of a torus-character block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from itertools import product as iproduct

from .charparams import (
    GlobalChar,
    central_char,
    degree,
    enumerate_irr,
    factor_field,
    index_order,
    zhat_act,
)
from .exactfield import SignedPrimePower, ell_val, group_order, order_for_ell
from .partitions import (
    e_core_quotient,
    partitions,
    wreath_degree,
    wreath_labels,
)
from .ssclasses import SSClass, eigen_modulus, enumerate_ss_classes


class TransportError(ValueError):
    """A supposedly relevant global character has no local image."""


@dataclass(frozen=True)
class TorusData:
    d0: int
    a: int
    m: int
    Q: int
    sigma: int
    m1: int


@cache
def torus_data(n: int, sp: SignedPrimePower, ell: int) -> TorusData:
    if sp.q % ell == 0:
        raise ValueError("ell divides q")
    d0 = order_for_ell(sp.eq, ell)
    return TorusData(
        d0=d0,
        a=n // d0,
        m=n % d0,
        Q=eigen_modulus(d0, sp),
        sigma=sp.eps ** (d0 + 1),
        m1=eigen_modulus(1, sp),
    )


def local_order(n: int, sp: SignedPrimePower, ell: int) -> int:
    td = torus_data(n, sp, ell)
    return group_order(td.m, sp) * td.Q**td.a * td.d0**td.a * math.factorial(td.a)


def canonical_theta(theta: int, n: int, sp: SignedPrimePower, ell: int) -> int:
    """Minimal member of the eq-power orbit of theta in Z/Q."""
    td = torus_data(n, sp, ell)
    base = sp.eq % td.Q
    theta %= td.Q
    best, x = theta, theta * base % td.Q
    while x != theta:
        best = min(best, x)
        x = x * base % td.Q
    return best


def theta_orbit_size(rep: int, n: int, sp: SignedPrimePower, ell: int) -> int:
    td = torus_data(n, sp, ell)
    base = sp.eq % td.Q
    size, x = 1, rep * base % td.Q
    while x != rep:
        size += 1
        x = x * base % td.Q
    return size


@cache
def theta_orbits(n: int, sp: SignedPrimePower, ell: int) -> tuple:
    """All eq-power orbits on Z/Q as (representative, size), sorted."""
    td = torus_data(n, sp, ell)
    base = sp.eq % td.Q
    seen: set = set()
    out = []
    for theta in range(td.Q):
        if theta in seen:
            continue
        orbit = [theta]
        x = theta * base % td.Q
        while x != theta:
            orbit.append(x)
            x = x * base % td.Q
        seen.update(orbit)
        assert td.d0 % len(orbit) == 0
        out.append((theta, len(orbit)))
    return tuple(out)


@dataclass(frozen=True, order=True)
class LocalChar:
    """Clifford data: GL_m part, torus-orbit blocks, wreath labels.

    blocks is a sorted tuple of (orbit representative, multiplicity)
    with distinct representatives; etas[i] is a wreath label of length
    d0 / (orbit size) whose partitions sum to the multiplicity.
    """

    chi_m: GlobalChar
    blocks: tuple
    etas: tuple


@cache
def enumerate_local_irr(n: int, sp: SignedPrimePower, ell: int) -> tuple:
    td = torus_data(n, sp, ell)
    orbits = theta_orbits(n, sp, ell)

    shapes: list = []

    def rec(i: int, budget: int, chosen: list) -> None:
        if budget == 0:
            shapes.append(tuple(chosen))
            return
        if i == len(orbits):
            return
        rec(i + 1, budget, chosen)
        rep, size = orbits[i]
        for mult in range(1, budget + 1):
            chosen.append((rep, mult))
            rec(i + 1, budget - mult, chosen)
            chosen.pop()

    rec(0, td.a, [])

    size_of = {rep: size for rep, size in orbits}
    out = []
    for chi_m in enumerate_irr(td.m, sp):
        for shape in shapes:
            eta_pools = [
                wreath_labels(td.d0 // size_of[rep], mult) for rep, mult in shape
            ]
            for etas in iproduct(*eta_pools):
                out.append(LocalChar(chi_m, shape, etas))
    return tuple(out)


def wreath_index(psi: LocalChar, n: int, sp: SignedPrimePower, ell: int) -> int:
    """Index of the inertia subgroup inside C_d0 wr S_a, exactly."""
    td = torus_data(n, sp, ell)
    num = td.d0**td.a * math.factorial(td.a)
    den = 1
    for (_, mult), eta in zip(psi.blocks, psi.etas):
        den *= len(eta) ** mult * math.factorial(mult)
    index, rem = divmod(num, den)
    assert rem == 0, "inertia order does not divide the Weyl order"
    return index


def local_degree(psi: LocalChar, n: int, sp: SignedPrimePower, ell: int) -> int:
    td = torus_data(n, sp, ell)
    out = degree(psi.chi_m, td.m, sp) * wreath_index(psi, n, sp, ell)
    for eta in psi.etas:
        out *= wreath_degree(eta)
    return out


def local_ellprime(psi: LocalChar, n: int, sp: SignedPrimePower, ell: int) -> bool:
    return ell_val(local_degree(psi, n, sp, ell), ell) == 0


def local_ellprime_structural(
    psi: LocalChar, n: int, sp: SignedPrimePower, ell: int
) -> bool:
    """Two-condition form: wreath index and wreath degrees both ell-prime.

    The GL_m factor degree is automatically prime to ell because m is
    smaller than the order of eq at ell; asserted, not assumed.
    """
    td = torus_data(n, sp, ell)
    assert ell_val(degree(psi.chi_m, td.m, sp), ell) == 0
    if ell_val(wreath_index(psi, n, sp, ell), ell) != 0:
        return False
    return all(ell_val(wreath_degree(eta), ell) == 0 for eta in psi.etas)


def local_zhat_act(
    psi: LocalChar, n: int, sp: SignedPrimePower, ell: int, z: int
) -> LocalChar:
    """Tensor by the central translation z, on local Clifford data.

    The determinant pulls the z-th central character back to the torus
    coordinate as the character with index sigma * z * Q / M_1, which is
    invariant under the eq-power action, so blocks shift rigidly and
    the wreath labels ride along unchanged.
    """
    td = torus_data(n, sp, ell)
    delta = td.sigma * z * (td.Q // td.m1)
    moved = [
        ((canonical_theta(rep + delta, n, sp, ell), mult), eta)
        for (rep, mult), eta in zip(psi.blocks, psi.etas)
    ]
    moved.sort(key=lambda pair: pair[0])
    return LocalChar(
        zhat_act(psi.chi_m, sp, z),
        tuple(block for block, _ in moved),
        tuple(eta for _, eta in moved),
    )


def local_stab_order(psi: LocalChar, n: int, sp: SignedPrimePower, ell: int) -> int:
    td = torus_data(n, sp, ell)
    return sum(
        1 for z in range(td.m1) if local_zhat_act(psi, n, sp, ell, z) == psi
    )


def local_central_label(psi: LocalChar, n: int, sp: SignedPrimePower, ell: int) -> int:
    """Exponent in Z/M_1 by which the centre of the big group acts.

    A central scalar with exponent w embeds into each torus coordinate
    with exponent w * Q / M_1, so a block character theta evaluates on
    it through theta mod M_1; this is orbit-invariant since eq = 1
    modulo M_1.
    """
    td = torus_data(n, sp, ell)
    nu = central_char(psi.chi_m, sp)
    for (rep, mult) in psi.blocks:
        nu += mult * (rep % td.m1)
    return nu % td.m1


def local_relevant(psi: LocalChar, n: int, sp: SignedPrimePower, ell: int) -> bool:
    """Does psi lie over an ell-prime character of the det-one part?"""
    v_deg = ell_val(local_degree(psi, n, sp, ell), ell)
    return v_deg == ell_val(local_stab_order(psi, n, sp, ell), ell)


def transport(chi: GlobalChar, n: int, sp: SignedPrimePower, ell: int) -> LocalChar:
    """Local image of a global character, factor by factor.

    Eigenvalue factor (k, e) with partition lam splits into its e_k-core
    (toward the GL_m part) and e_k-quotient (the wreath label of a torus
    block at theta = sigma * e * Q / M_k).  Requires k | d0 whenever the
    quotient is nonempty and the cores to fill GL_m exactly; violations
    raise TransportError with the offending factor.
    """
    td = torus_data(n, sp, ell)
    core_factors = []
    blocks = []
    for ((k, e_lab), mult), lam in zip(chi.cls.factors, chi.parts):
        sub = factor_field(k, sp)
        e = order_for_ell(sub.eq, ell)
        core, quot, w = e_core_quotient(lam, e)
        if core:
            core_factors.append(((k, e_lab), sum(core), core))
        if w:
            if td.d0 % k != 0 or e * k != td.d0:
                raise TransportError(
                    f"factor of degree {k} with nonempty quotient, d0={td.d0}"
                )
            mk = eigen_modulus(k, sp)
            rep = canonical_theta(td.sigma * e_lab * (td.Q // mk), n, sp, ell)
            if theta_orbit_size(rep, n, sp, ell) != k:
                raise TransportError(
                    f"transported torus character has orbit size != {k}"
                )
            blocks.append(((rep, w), quot))

    m_used = sum(k * c for (k, _), c, _ in core_factors)
    if m_used != td.m or sum(w for (_, w), _ in blocks) != td.a:
        raise TransportError("core and quotient ranks do not fill m + d0*a")

    core_factors.sort(key=lambda t: (t[0], t[1]))
    chi_m = GlobalChar(
        SSClass(tuple((lab, c) for lab, c, _ in core_factors)),
        tuple(core for _, _, core in core_factors),
    )
    blocks.sort(key=lambda pair: pair[0])
    reps = [rep for (rep, _), _ in blocks]
    assert len(set(reps)) == len(reps), "transported blocks collide"
    return LocalChar(
        chi_m,
        tuple(block for block, _ in blocks),
        tuple(eta for _, eta in blocks),
    )


def enumerate_ellprime_params(n: int, sp: SignedPrimePower, ell: int) -> tuple:
    """Independent enumeration of the ell-prime global characters.

    Walks semisimple classes with ell-prime centralizer index and, per
    factor, the partitions assembled from a small core and an ell-prime
    wreath label; returns (class, cores, quotients) triples.  The count
    must agree with filtering all characters by degree valuation.
    """
    out = []
    for cls in enumerate_ss_classes(n, sp):
        if ell_val(index_order(cls, n, sp), ell) != 0:
            continue
        pools = []
        for (k, _), mult in cls.factors:
            e = order_for_ell(factor_field(k, sp).eq, ell)
            cores = partitions(mult % e)
            quots = [
                lab
                for lab in wreath_labels(e, mult // e)
                if ell_val(wreath_degree(lab), ell) == 0
            ]
            pools.append([(c, qu) for c in cores for qu in quots])
        for combo in iproduct(*pools):
            out.append(
                (cls, tuple(c for c, _ in combo), tuple(qu for _, qu in combo))
            )
    return tuple(out)
