"""Partition combinatorics.

Hook lengths, e-core/e-quotient decompositions via beta-sets, generic degrees
of unipotent characters of GL_n(eps*q) evaluated exactly at the signed prime
power, symmetric group dimensions, and irreducible labels of wreath products
C_e wr S_w.  Partitions are weakly decreasing tuples of positive ints.
"""

from __future__ import annotations

import math
from functools import cache
from itertools import combinations_with_replacement

from .exactfield import SignedPrimePower, ell_val

Partition = tuple[int, ...]
WreathLabel = tuple[Partition, ...]


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order; (()) for n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((),)

    def gen(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def is_partition(lam: Partition) -> bool:
    return all(isinstance(x, int) and x > 0 for x in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """Multiset of hook lengths, sorted descending."""
    conj = conjugate(lam)
    hooks = []
    for i, row in enumerate(lam):
        for j in range(row):
            hooks.append(row - j + conj[j] - i - 1)
    return tuple(sorted(hooks, reverse=True))


def n_lambda(lam: Partition) -> int:
    """sum_i (i-1) * lam_i with rows numbered from 1."""
    return sum(i * part for i, part in enumerate(lam))


def beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    """First-column hook lengths of lam padded to the given number of beads."""
    if length < len(lam):
        raise ValueError("beta-set length too small")
    padded = lam + (0,) * (length - len(lam))
    return tuple(padded[i] + (length - 1 - i) for i in range(length))


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    desc = sorted(beta, reverse=True)
    k = len(desc)
    parts = tuple(desc[i] - (k - 1 - i) for i in range(k))
    return tuple(p for p in parts if p > 0)


def e_core_quotient(lam: Partition, e: int) -> tuple[Partition, WreathLabel, int]:
    """(e-core, e-quotient, weight) of lam.

    Uses a beta-set whose length is a multiple of e (the convention that
    makes the quotient independent of padding).  |core| + e*w = |lam| and the
    quotient's component sizes sum to w.
    """
    if e < 1:
        raise ValueError("e must be >= 1")
    length = e * (len(lam) // e + 1)
    beta = beta_set(lam, length)
    runners: list[list[int]] = [[] for _ in range(e)]
    for b in beta:
        runners[b % e].append(b // e)
    quotient = tuple(_partition_from_beta(tuple(r)) for r in runners)
    core_beta = []
    for r, runner in enumerate(runners):
        core_beta.extend(e * j + r for j in range(len(runner)))
    core = _partition_from_beta(tuple(core_beta))
    w = sum(sum(mu) for mu in quotient)
    assert sum(core) + e * w == sum(lam)
    return core, quotient, w


def from_core_quotient(core: Partition, quotient: WreathLabel, e: int) -> Partition:
    """Inverse of e_core_quotient for a genuine e-core."""
    if len(quotient) != e:
        raise ValueError("quotient must have e components")
    need = max([len(core)] + [e * (len(mu) + 1) for mu in quotient])
    length = e * (need // e + 1)
    beta = beta_set(core, length)
    runners: list[list[int]] = [[] for _ in range(e)]
    for b in beta:
        runners[b % e].append(b // e)
    new_beta = []
    for r, runner in enumerate(runners):
        positions = sorted(runner)
        assert positions == list(range(len(positions))), "input is not an e-core"
        mu = quotient[r]
        k = len(positions)
        padded = tuple(mu) + (0,) * (k - len(mu))
        for i, pos in enumerate(positions):
            new_beta.append(e * (pos + padded[k - 1 - i]) + r)
    return _partition_from_beta(tuple(new_beta))


def generic_degree(lam: Partition, sp: SignedPrimePower) -> int:
    """|Deg_lam(eps*q)| for the unipotent character labelled by lam.

    Deg_lam(x) = x^n(lam) * prod_{k<=|lam|}(x^k - 1) / prod_hooks(x^h - 1),
    evaluated exactly; the division is asserted exact.
    """
    x = sp.eq
    size = sum(lam)
    if size == 0:
        return 1
    num = x ** n_lambda(lam)
    for k in range(1, size + 1):
        num *= x**k - 1
    den = 1
    for h in hook_lengths(lam):
        den *= x**h - 1
    quotient, rem = divmod(num, den)
    assert rem == 0
    return abs(quotient)


def symmetric_dim(mu: Partition) -> int:
    """Dimension of the S_|mu| irreducible labelled by mu (hook formula)."""
    size = sum(mu)
    den = 1
    for h in hook_lengths(mu):
        den *= h
    dim, rem = divmod(math.factorial(size), den)
    assert rem == 0
    return dim


@cache
def wreath_labels(e: int, w: int) -> tuple[WreathLabel, ...]:
    """All e-tuples of partitions with total size w, in a fixed order."""
    if e < 1 or w < 0:
        raise ValueError("need e >= 1, w >= 0")

    def gen(slots: int, remaining: int):
        if slots == 1:
            for lam in partitions(remaining):
                yield (lam,)
            return
        for here in range(remaining + 1):
            for lam in partitions(here):
                for rest in gen(slots - 1, remaining - here):
                    yield (lam,) + rest

    return tuple(gen(e, w))


def wreath_degree(label: WreathLabel) -> int:
    """Degree of the C_e wr S_w irreducible with the given label:
    multinomial over component sizes times product of S_k dimensions."""
    w = sum(sum(mu) for mu in label)
    den = 1
    for mu in label:
        for h in hook_lengths(mu):
            den *= h
    deg, rem = divmod(math.factorial(w), den)
    assert rem == 0
    return deg


@cache
def wreath_irr(e: int, w: int) -> tuple[tuple[WreathLabel, int], ...]:
    """(label, degree) for every irreducible of C_e wr S_w."""
    out = tuple((label, wreath_degree(label)) for label in wreath_labels(e, w))
    assert sum(d * d for _, d in out) == e**w * math.factorial(w)
    return out


def wreath_degree_val(label: WreathLabel, ell: int) -> int:
    return ell_val(wreath_degree(label), ell)


def multipartitions(sizes: tuple[int, ...]) -> tuple[tuple[Partition, ...], ...]:
    """All tuples of partitions with the given component sizes."""
    if not sizes:
        return ((),)
    rest = multipartitions(sizes[1:])
    return tuple((lam,) + tail for lam in partitions(sizes[0]) for tail in rest)


def e_cores_of_size(size: int, e: int) -> tuple[Partition, ...]:
    """All partitions of the given size that are e-cores."""
    return tuple(
        lam for lam in partitions(size) if all(h % e != 0 for h in hook_lengths(lam))
    )
