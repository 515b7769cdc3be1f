"""Exact arithmetic foundation.

Small finite fields with deterministic defining polynomials, multiplicative
orders, l-part/l'-part splitting, orders of general linear and unitary groups,
and orders of twisted maximal tori given by signed permutations.  Everything
is plain integer arithmetic; nothing here is approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

from sympy import factorint, isprime

FIELD_SIZE_LIMIT = 2**20

# Fields at least this small precompute full multiplication/inverse tables.
_TABLE_LIMIT = 128


class ExactFieldError(ValueError):
    """Raised for invalid field, order, or torus parameters."""


# ---------------------------------------------------------------------------
# prime powers and signed prime powers


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p**m, validated at construction."""

    p: int
    m: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise ExactFieldError(f"{self.p} is not prime")
        if self.m < 1:
            raise ExactFieldError(f"exponent {self.m} must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.m


@dataclass(frozen=True)
class SignedPrimePower:
    """A prime power together with a sign eps in {+1, -1}.

    The sign selects the linear (+1) or unitary (-1) twist: group and torus
    order formulas below are polynomial identities in eps*q.
    """

    eps: int
    pp: PrimePower

    def __post_init__(self) -> None:
        if self.eps not in (1, -1):
            raise ExactFieldError(f"sign {self.eps} must be +1 or -1")

    @property
    def q(self) -> int:
        return self.pp.q

    @property
    def p(self) -> int:
        return self.pp.p

    @property
    def eq(self) -> int:
        """The signed prime power eps*q as a plain integer."""
        return self.eps * self.pp.q


def spp(eps: int, q: int) -> SignedPrimePower:
    """Build a SignedPrimePower from a sign and a prime power given as int."""
    fac = factorint(q)
    if len(fac) != 1:
        raise ExactFieldError(f"{q} is not a prime power")
    ((p, m),) = fac.items()
    return SignedPrimePower(eps, PrimePower(p, m))


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p), little-endian int tuples


def _poly_trim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _poly_mod(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    # b monic
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    while da >= db:
        c = a[da] % p
        if c:
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - c * b[i]) % p
        da -= 1
        while da >= 0 and a[da] % p == 0:
            da -= 1
        a = a[: da + 1]
    return _poly_trim(tuple(x % p for x in a))


def _poly_powmod(a: tuple[int, ...], e: int, mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = _poly_mod(a, mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        base = _poly_mod(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _poly_gcd(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    while b:
        # make b monic before reducing
        lead = b[-1]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            b = tuple((c * inv) % p for c in b)
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_sub(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    n = max(len(a), len(b))
    a += (0,) * (n - len(a))
    b += (0,) * (n - len(b))
    return _poly_trim(tuple((x - y) % p for x, y in zip(a, b)))


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Rabin test for a monic polynomial over GF(p)."""
    k = len(poly) - 1
    if k == 1:
        return True
    x = (0, 1)
    xq = _poly_powmod(x, p**k, poly, p)
    if _poly_sub(xq, x, p) != ():
        return False
    for r in factorint(k):
        xe = _poly_powmod(x, p ** (k // r), poly, p)
        if _poly_gcd(poly, _poly_sub(xe, x, p), p) != (1,):
            return False
    return True


# ---------------------------------------------------------------------------
# finite fields


class FiniteField:
    """GF(p**k) with elements encoded as integers 0 .. p**k - 1.

    The encoding is base-p positional: the integer sum(c_i * p**i) stands for
    the residue class of sum(c_i * x**i) modulo the defining polynomial.
    Zero is 0 and one is 1 under any modulus, so prime subfield elements keep
    their usual names.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.size = p**k
        self._mul_table: list[tuple[int, ...]] | None = None
        self._inv_table: list[int] | None = None
        if self.size <= _TABLE_LIMIT:
            self._build_tables()

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, k={self.k}, modulus={self.modulus})"

    # encoding ------------------------------------------------------------

    def _dec(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        while a:
            out.append(a % p)
            a //= p
        return tuple(out)

    def _enc(self, coeffs: tuple[int, ...]) -> int:
        out = 0
        for c in reversed(coeffs):
            out = out * self.p + c
        return out

    # arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        ca, cb = self._dec(a), self._dec(b)
        n = max(len(ca), len(cb))
        ca += (0,) * (n - len(ca))
        cb += (0,) * (n - len(cb))
        return self._enc(tuple((x + y) % p for x, y in zip(ca, cb)))

    def neg(self, a: int) -> int:
        p = self.p
        if self.k == 1:
            return (-a) % p
        return self._enc(tuple((-c) % p for c in self._dec(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        prod = _poly_mul(self._dec(a), self._dec(b), self.p)
        return self._enc(_poly_mod(prod, self.modulus, self.p))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.size - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        """The p-power map, a field automorphism of order k."""
        return self.pow(a, self.p)

    def _build_tables(self) -> None:
        n = self.size
        self._mul_table = [tuple(self._mul_raw(a, b) for b in range(n)) for a in range(n)]
        inv = [0] * n
        for a in range(1, n):
            row = self._mul_table[a]
            inv[a] = row.index(1)
        self._inv_table = inv

    # structure -----------------------------------------------------------

    def elements(self) -> range:
        return range(self.size)

    def units(self) -> range:
        return range(1, self.size)

    def multiplicative_generator(self) -> int:
        target = self.size - 1
        for a in self.units():
            if self.element_order(a) == target:
                return a
        raise ExactFieldError("no generator found")  # pragma: no cover

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ExactFieldError("0 has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def trace_to_prime(self, a: int) -> int:
        """Trace into GF(p), returned as an integer 0 <= t < p."""
        t, x = 0, a
        for _ in range(self.k):
            t = self.add(t, x)
            x = self.frobenius(x)
        if t >= self.p:  # trace lands in the prime subfield
            raise ExactFieldError("trace left the prime subfield")  # pragma: no cover
        return t

    def embed(self, other: "FiniteField"):
        """Return the embedding map of this field into a larger one.

        Requires other = GF(p**(k*r)).  The image of x is the first root of
        this field's modulus in the other field, scanned in encoding order.
        """
        if other.p != self.p or other.k % self.k != 0:
            raise ExactFieldError("no embedding exists")
        mod = self.modulus
        root = None
        for cand in other.elements():
            acc, power = 0, 1
            for c in mod:
                if c:
                    acc = other.add(acc, other.mul(c % other.p, power))
                power = other.mul(power, cand)
            if acc == 0:
                root = cand
                break
        if root is None:
            raise ExactFieldError("modulus has no root in target")  # pragma: no cover

        def phi(a: int) -> int:
            out, power = 0, 1
            for c in self._dec(a):
                if c:
                    out = other.add(out, other.mul(c, power))
                power = other.mul(power, root)
            return out

        return phi


@cache
def build_field(p: int, k: int) -> FiniteField:
    """GF(p**k) with the lexicographically least irreducible monic modulus.

    Moduli are ordered by the base-p integer encoding of their lower
    coefficients, so the choice is deterministic; GF(p) gets modulus x.
    """
    if not isprime(p):
        raise ExactFieldError(f"{p} is not prime")
    if k < 1:
        raise ExactFieldError("k must be >= 1")
    if p**k > FIELD_SIZE_LIMIT:
        raise ExactFieldError(f"field size {p**k} exceeds limit {FIELD_SIZE_LIMIT}")
    for code in range(p**k):
        lower = []
        c = code
        for _ in range(k):
            lower.append(c % p)
            c //= p
        poly = tuple(lower) + (1,)
        if _is_irreducible(poly, p):
            return FiniteField(p, k, poly)
    raise ExactFieldError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# orders and valuations


def mult_order(a: int, modulus: int) -> int:
    """Multiplicative order of a modulo modulus (a may be negative)."""
    if modulus < 1:
        raise ExactFieldError(f"modulus {modulus} must be >= 1")
    if modulus == 1:
        return 1
    a %= modulus
    if math.gcd(a, modulus) != 1:
        raise ExactFieldError(f"{a} is not invertible mod {modulus}")
    n, x = 1, a
    while x != 1:
        x = (x * a) % modulus
        n += 1
    return n


def ell_part(x: int, ell: int) -> tuple[int, int]:
    """Split |x| as (l-part, l'-part); x must be nonzero, ell prime."""
    if x == 0:
        raise ExactFieldError("0 has no l-part")
    if not isprime(ell):
        raise ExactFieldError(f"{ell} is not prime")
    x = abs(x)
    lp = 1
    while x % ell == 0:
        x //= ell
        lp *= ell
    return lp, x


def ell_val(x: int, ell: int) -> int:
    """The exponent of ell in |x|."""
    v = 0
    x = abs(x)
    while x % ell == 0:
        x //= ell
        v += 1
    return v


def order_for_ell(x: int, ell: int) -> int:
    """Order of x mod ell, with the usual modulus-4 convention at ell = 2."""
    return mult_order(x, 4 if ell == 2 else ell)


def group_order(n: int, sp: SignedPrimePower) -> int:
    """|GL_n(q)| for eps=+1, |GU_n(q)| for eps=-1; n = 0 gives 1."""
    if n < 0:
        raise ExactFieldError("n must be >= 0")
    q, eq = sp.q, sp.eq
    out = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        out *= abs(eq**i - 1)
    return out


def sl_group_order(n: int, sp: SignedPrimePower) -> int:
    """|SL_n(q)| or |SU_n(q)|."""
    if n == 0:
        return 1
    return group_order(n, sp) // (sp.q - sp.eps) if n >= 1 else 1


# ---------------------------------------------------------------------------
# signed permutations and twisted torus orders


@dataclass(frozen=True)
class SignedPermutation:
    """A monomial matrix with entries +-1: perm[i] is the image of i,
    signs[i] the entry in column i."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ExactFieldError("invalid signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ExactFieldError("signs must be +-1")

    @property
    def n(self) -> int:
        return len(self.perm)

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """Matrix product self . other."""
        if self.n != other.n:
            raise ExactFieldError("size mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.n))
        return SignedPermutation(perm, signs)

    def matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            m[self.perm[i]][i] = self.signs[i]
        return m

    def cycles(self) -> list[tuple[int, int]]:
        """(length, sign product) per cycle."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            length, sign, j = 0, 1, i
            while not seen[j]:
                seen[j] = True
                sign *= self.signs[j]
                j = self.perm[j]
                length += 1
            out.append((length, sign))
        return out


def identity_perm(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(n)), (1,) * n)


def block_cycles(d0: int, a: int, m: int) -> SignedPermutation:
    """a disjoint d0-cycles followed by m fixed points, all signs +1."""
    perm = []
    for i in range(a):
        base = i * d0
        perm.extend([base + (j + 1) % d0 for j in range(d0)])
    perm.extend(range(a * d0, a * d0 + m))
    return SignedPermutation(tuple(perm), (1,) * (a * d0 + m))


def int_det(rows: list[list[int]]) -> int:
    """Exact integer determinant by Bareiss fraction-free elimination."""
    a = [row[:] for row in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def torus_order(w: SignedPermutation, sp: SignedPrimePower) -> int:
    """Order of the w-twisted maximal torus, |det(q * sigma_eps * w - 1)|.

    sigma_eps is -identity in the unitary case.  Equals the product over
    cycles of |(eps*q)^length * sign - 1|; the determinant route avoids
    trusting that identity and is what the tests cross-check against.
    """
    n = w.n
    mat = w.matrix()
    scale = sp.q * sp.eps
    rows = [[scale * mat[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    return abs(int_det(rows))
