"""Brute-force matrix groups over small finite fields.

Builds GL/SL over GF(q) and GU/SU inside GL_n(q^2) by closure from explicit
generators, with conjugacy classes, centralizer orders, Sylow subgroups,
normalizers, and the two standard outer maps (entrywise p-power Frobenius and
the inverse-transpose twist gamma).  Elements are tuples of row tuples of
field-encoded ints, so they hash and sort deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cache

from .exactfield import (
    ExactFieldError,
    FiniteField,
    SignedPrimePower,
    build_field,
    ell_part,
    group_order,
    sl_group_order,
    spp,
)

Matrix = tuple[tuple[int, ...], ...]

GROUP_SIZE_LIMIT = 25000


class OracleError(ValueError):
    """Raised for unsupported or oversized oracle requests."""


# ---------------------------------------------------------------------------
# matrix arithmetic


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix, F: FiniteField) -> Matrix:
    n = len(a)
    mul, add = F.mul, F.add
    bt = tuple(zip(*b))
    out = []
    for row in a:
        new_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add(acc, mul(x, y))
            new_row.append(acc)
        out.append(tuple(new_row))
    return tuple(out)


def mat_inv(a: Matrix, F: FiniteField) -> Matrix:
    n = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = F.inv(aug[col][col])
        aug[col] = [F.mul(inv_p, x) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_det(a: Matrix, F: FiniteField) -> int:
    n = len(a)
    m = [list(row) for row in a]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = F.neg(det)
        det = F.mul(det, m[col][col])
        inv_p = F.inv(m[col][col])
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = F.mul(m[r][col], inv_p)
                m[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(m[r], m[col])]
    return det


def conj_transpose(a: Matrix, F: FiniteField, q: int) -> Matrix:
    """Transpose with entrywise q-power (the order-2 automorphism of GF(q^2))."""
    n = len(a)
    return tuple(tuple(F.pow(a[j][i], q) for j in range(n)) for i in range(n))


def form_matrix(n: int, F: FiniteField) -> Matrix:
    """The fixed antidiagonal form v0 with (k, n+1-k) entry (-1)^(k+1)."""
    one = 1
    rows = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        entry = one if k % 2 == 1 else F.neg(one)
        rows[k - 1][n - k] = entry
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# group views


@dataclass
class GroupView:
    """A finite group given by an explicit element list and multiplication.

    Used both for full matrix groups and for subgroups; conjugacy data is
    computed lazily and cached on the instance.
    """

    elements: tuple
    generators: tuple
    identity: object
    mul: object
    inv: object
    _index: dict = field(default=None, repr=False)
    _classes: object = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> dict:
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.elements)}
        return self._index

    def __contains__(self, g) -> bool:
        return g in self.index

    def conjugacy_classes(self) -> "ConjugacyPartition":
        if self._classes is None:
            self._classes = conjugacy_partition(self)
        return self._classes

    def element_order(self, g) -> int:
        n, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            n += 1
        return n

    def exponent(self) -> int:
        out = 1
        for rep in self.conjugacy_classes().reps:
            out = math.lcm(out, self.element_order(rep))
        return out


@dataclass
class ConjugacyPartition:
    reps: tuple
    sizes: tuple[int, ...]
    class_map: dict
    members: tuple

    @property
    def count(self) -> int:
        return len(self.reps)


def conjugacy_partition(view: GroupView) -> ConjugacyPartition:
    """Orbit BFS under conjugation by the view's generators.

    Classes are ordered identity first, then by (size, minimal member), and
    each representative is the minimal member, so the result is deterministic.
    """
    mul, inv = view.mul, view.inv
    gens = view.generators or view.elements
    gen_pairs = [(g, inv(g)) for g in gens]
    assigned: dict = {}
    raw_classes = []
    for start in view.elements:
        if start in assigned:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for g, gi in gen_pairs:
                y = mul(g, mul(x, gi))
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        idx = len(raw_classes)
        for x in orbit:
            assigned[x] = idx
        raw_classes.append(tuple(sorted(orbit)))
    order = sorted(
        range(len(raw_classes)),
        key=lambda i: (
            raw_classes[i][0] != view.identity,
            len(raw_classes[i]),
            raw_classes[i][0],
        ),
    )
    classes = [raw_classes[i] for i in order]
    class_map = {x: k for k, cls in enumerate(classes) for x in cls}
    return ConjugacyPartition(
        reps=tuple(cls[0] for cls in classes),
        sizes=tuple(len(cls) for cls in classes),
        class_map=class_map,
        members=tuple(classes),
    )


def closure(gens, mul, identity, limit: int = GROUP_SIZE_LIMIT) -> tuple:
    """BFS closure of a generator list; sorted tuple of elements."""
    elements = {identity}
    frontier = [identity]
    gens = sorted({g for g in gens if g != identity})
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(x, g)
            if y not in elements:
                if len(elements) >= limit:
                    raise OracleError(f"closure exceeded limit {limit}")
                elements.add(y)
                frontier.append(y)
    return tuple(sorted(elements))


def find_generators(elements, mul, identity) -> tuple:
    """Greedy small generating set for an explicitly listed group."""
    target = set(elements)
    gens: list = []
    current = {identity}
    for x in sorted(elements):
        if x in current:
            continue
        gens.append(x)
        current = set(closure(gens, mul, identity, limit=len(target) + 1))
        if current == target:
            break
    return tuple(gens)


def subgroup_view(parent: GroupView, elements, generators=None) -> GroupView:
    elements = tuple(sorted(elements))
    if generators is None:
        generators = find_generators(elements, parent.mul, parent.identity)
    return GroupView(
        elements=elements,
        generators=tuple(generators),
        identity=parent.identity,
        mul=parent.mul,
        inv=parent.inv,
    )


def subgroup_closure(parent: GroupView, gens) -> GroupView:
    elems = closure(list(gens), parent.mul, parent.identity, limit=parent.order)
    return subgroup_view(parent, elems, generators=tuple(gens))


# ---------------------------------------------------------------------------
# matrix groups


@dataclass
class MatrixGroup(GroupView):
    kind: str = ""
    n: int = 0
    sp: SignedPrimePower = None
    F: FiniteField = None
    v0: Matrix = None


def _transvection_generators(n: int, F: FiniteField) -> list[Matrix]:
    """Adjacent elementary transvections over an additive basis of the field."""
    gens = []
    # base-p encoding: the monomial x^j is the integer p^j
    basis = [F.p**j for j in range(F.k)]
    for i in range(n - 1):
        for t in basis:
            for (r, c) in ((i, i + 1), (i + 1, i)):
                m = [list(row) for row in identity_matrix(n)]
                m[r][c] = t
                gens.append(tuple(tuple(row) for row in m))
    return gens


def _unitary_condition(g: Matrix, v0: Matrix, F: FiniteField, q: int) -> bool:
    return mat_mul(mat_mul(conj_transpose(g, F, q), v0, F), g, F) == v0


def _unitary_generators(n: int, q: int, F: FiniteField, v0: Matrix) -> list[Matrix]:
    """Monomial and unitriangular elements preserving the form, by filtering."""
    from itertools import permutations, product

    gens = []
    units = list(F.units())
    # monomial matrices
    for perm in permutations(range(n)):
        for entries in product(units, repeat=n):
            m = [[0] * n for _ in range(n)]
            for col in range(n):
                m[perm[col]][col] = entries[col]
            g = tuple(tuple(row) for row in m)
            if _unitary_condition(g, v0, F, q):
                gens.append(g)
    # unitriangular matrices, both orientations
    positions_upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for positions in (positions_upper, [(j, i) for i, j in positions_upper]):
        for entries in product(range(F.size), repeat=len(positions)):
            m = [list(row) for row in identity_matrix(n)]
            for (i, j), t in zip(positions, entries):
                m[i][j] = t
            g = tuple(tuple(row) for row in m)
            if _unitary_condition(g, v0, F, q):
                gens.append(g)
    return gens


@cache
def build_group(kind: str, n: int, q: int, limit: int = GROUP_SIZE_LIMIT) -> MatrixGroup:
    """Construct GL/SL/GU/SU of degree n over the field with q elements.

    GU/SU live inside GL_n(q^2) cut out by the antidiagonal Hermitian form;
    the element count is checked against the order formula.
    """
    if kind not in ("GL", "SL", "GU", "SU"):
        raise OracleError(f"unknown kind {kind}")
    eps = 1 if kind in ("GL", "SL") else -1
    sp = spp(eps, q)
    special = kind in ("SL", "SU")
    expected = sl_group_order(n, sp) if special else group_order(n, sp)
    if expected > limit:
        raise OracleError(f"group order {expected} exceeds limit {limit}")

    if eps == 1:
        F = build_field(sp.p, sp.pp.m)
        gens = _transvection_generators(n, F) if n > 1 else []
        if not special:
            gen_unit = F.multiplicative_generator() if F.size > 2 else 1
            m = [list(row) for row in identity_matrix(n)]
            m[0][0] = gen_unit
            gens.append(tuple(tuple(row) for row in m))
        if n == 1 and special:
            gens = []
        mul = lambda a, b: mat_mul(a, b, F)
        elements = closure(gens, mul, identity_matrix(n), limit=limit)
        v0 = form_matrix(n, F)
    else:
        F = build_field(sp.p, 2 * sp.pp.m)
        v0 = form_matrix(n, F)
        raw = _unitary_generators(n, q, F, v0)
        mul = lambda a, b: mat_mul(a, b, F)
        elements = closure(raw, mul, identity_matrix(n), limit=limit)
        if special:
            elements = tuple(g for g in elements if mat_det(g, F) == 1)
        gens = find_generators(elements, mul, identity_matrix(n))

    if len(elements) != expected:
        raise OracleError(
            f"built {len(elements)} elements of {kind}_{n}({q}), expected {expected}"
        )
    group = MatrixGroup(
        elements=tuple(elements),
        generators=tuple(gens),
        identity=identity_matrix(n),
        mul=mul,
        inv=lambda a: mat_inv(a, F),
        kind=kind,
        n=n,
        sp=sp,
        F=F,
        v0=v0,
    )
    return group


# ---------------------------------------------------------------------------
# automorphisms


def frobenius_map(G: MatrixGroup, g: Matrix) -> Matrix:
    """Entrywise p-power Frobenius."""
    F = G.F
    out = tuple(tuple(F.frobenius(x) for x in row) for row in g)
    if out not in G.index:
        raise OracleError("Frobenius image left the group")
    return out


def gamma_map(G: MatrixGroup, g: Matrix) -> Matrix:
    """The twist gamma(g) = v0 . (g^T)^(-1) . v0^(-1)."""
    F = G.F
    gt = tuple(zip(*g))
    gti = mat_inv(tuple(tuple(row) for row in gt), F)
    out = mat_mul(mat_mul(G.v0, gti, F), mat_inv(G.v0, F), F)
    if out not in G.index:
        raise OracleError("gamma image left the group")
    return out


def apply_automorphism(G: MatrixGroup, which: str, g: Matrix) -> Matrix:
    if which == "frobenius":
        return frobenius_map(G, g)
    if which == "gamma":
        return gamma_map(G, g)
    raise OracleError(f"unknown automorphism {which}")


# ---------------------------------------------------------------------------
# subgroup machinery


def centralizer_order(view: GroupView, g) -> int:
    part = view.conjugacy_classes()
    k = part.class_map[g]
    return view.order // part.sizes[k]


def center(view: GroupView) -> GroupView:
    gens = view.generators or view.elements
    elems = [
        x for x in view.elements if all(view.mul(x, g) == view.mul(g, x) for g in gens)
    ]
    return subgroup_view(view, elems)


def normalizer(view: GroupView, sub: GroupView) -> GroupView:
    """{g : g S g^-1 = S} by scanning; sub must be a subgroup of view."""
    sub_set = set(sub.elements)
    sub_gens = sub.generators or sub.elements
    mul, inv = view.mul, view.inv
    out = []
    for g in view.elements:
        gi = inv(g)
        if all(mul(g, mul(s, gi)) in sub_set for s in sub_gens):
            out.append(g)
    return subgroup_view(view, out)


def sylow_subgroup(view: GroupView, ell: int) -> GroupView:
    """Deterministic Sylow ell-subgroup by normalizer climbing."""
    target, _ = ell_part(view.order, ell)
    if target == 1:
        return subgroup_view(view, [view.identity], generators=())
    current = subgroup_view(view, [view.identity], generators=())
    while current.order < target:
        norm = normalizer(view, current)
        grown = False
        cur_set = set(current.elements)
        for y in norm.elements:
            if y in cur_set:
                continue
            o = view.element_order(y)
            if ell_part(o, ell)[1] != 1:
                continue
            try:
                cand = closure(
                    tuple(current.generators) + (y,), view.mul, view.identity, limit=target
                )
            except OracleError:
                continue
            if ell_part(len(cand), ell)[0] == len(cand):
                current = subgroup_view(view, cand, tuple(current.generators) + (y,))
                grown = True
                break
        if not grown:
            raise OracleError("Sylow climbing stalled")  # pragma: no cover
    return current


def conjugates_of_subgroup(view: GroupView, sub: GroupView) -> int:
    """Number of distinct conjugates of sub inside view."""
    seen = set()
    mul, inv = view.mul, view.inv
    base = frozenset(sub.elements)
    for g in view.elements:
        gi = inv(g)
        seen.add(frozenset(mul(g, mul(s, gi)) for s in sub.elements))
    return len(seen)
