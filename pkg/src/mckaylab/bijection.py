"""Cell-level verification of the global/local character correspondence.

A *cell* is a tuple (n, eps, q, ell) with ell not dividing q.  For each cell
the checker pairs every relevant global character of GL_n(eps q) with its
local counterpart on the torus-normalizer side, then certifies:

  * the pairing is a bijection onto the relevant local characters,
  * central characters agree across each pair,
  * the pairing commutes with tensoring by linear characters (zhat),
  * constituent degrees satisfy the +/- congruence mod ell,
  * the two prime-to-ell degree criteria match their structural forms,
  * parameter counts for the SL/SU-descent agree,
  * sum-of-squares mass checks on both sides,
  * where the groups are small enough, everything against exact character
    tables of explicitly constructed matrix groups.

Reports are plain dicts with stable keys so the CLI can serialize them.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import cache
from itertools import product

from .exactfield import (
    SignedPrimePower,
    ell_part,
    ell_val,
    group_order,
    sl_group_order,
    spp,
)
from .charparams import (
    GlobalChar,
    central_char,
    count_ellprime,
    count_irr_sl,
    count_jordan_params,
    degree,
    ellprime_structural,
    enumerate_irr,
    global_relevant,
    index_order,
    is_ellprime,
    to_params,
    zhat_act,
    zhat_stab_order,
)
from .localside import (
    LocalChar,
    TransportError,
    enumerate_local_irr,
    local_central_label,
    local_degree,
    local_ellprime,
    local_ellprime_structural,
    local_order,
    local_relevant,
    local_stab_order,
    local_zhat_act,
    torus_data,
    transport,
)
from . import dixon
from .matrixoracle import (
    OracleError,
    build_group,
    normalizer,
    subgroup_closure,
    subgroup_view,
    sylow_subgroup,
)

ORACLE_ORDER_LIMIT = 750

GRID_N = (2, 3, 4)
GRID_Q = (2, 3, 4, 5, 7)
GRID_ELL = (2, 3, 5, 7)


@dataclass(frozen=True, order=True)
class Cell:
    """One verification unit: the group GL_n(eps q) at the prime ell."""

    n: int
    eps: int
    q: int
    ell: int

    @property
    def sp(self) -> SignedPrimePower:
        return spp(self.eps, self.q)

    @property
    def kind(self) -> str:
        return "GL" if self.eps == 1 else "GU"

    def label(self) -> str:
        return f"{self.kind}({self.n},{self.q}) ell={self.ell}"

    def as_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "q": self.q,
                "eps": self.eps, "ell": self.ell}


def default_grid() -> tuple[Cell, ...]:
    """All cells with n in 2..4, q in {2,3,4,5,7}, both signs, ell prime to q."""
    cells = []
    for n, q, eps, ell in product(GRID_N, GRID_Q, (1, -1), GRID_ELL):
        if spp(eps, q).p == ell:
            continue
        cells.append(Cell(n, eps, q, ell))
    return tuple(sorted(cells))


def local_to_params(psi: LocalChar) -> dict:
    return {
        "chi_m": to_params(psi.chi_m),
        "blocks": [[rep, mult] for rep, mult in psi.blocks],
        "etas": [[list(map(list, eta))] for eta in psi.etas],
    }


# ---------------------------------------------------------------------------
# the pairing


def omega_tilde(cell: Cell) -> tuple:
    """Pair each relevant global character with its local image.

    Returns ((chi, psi), ...) sorted by chi.  Raises if the images fail to
    exhaust the relevant local characters bijectively; callers that want a
    soft failure should use check_cell instead.
    """
    n, sp, ell = cell.n, cell.sp, cell.ell
    pairs = []
    for chi in enumerate_irr(n, sp):
        if not global_relevant(chi, n, sp, ell):
            continue
        pairs.append((chi, transport(chi, n, sp, ell)))
    images = [psi for _, psi in pairs]
    target = [psi for psi in enumerate_local_irr(n, sp, ell)
              if local_relevant(psi, n, sp, ell)]
    if len(set(images)) != len(images) or set(images) != set(target):
        raise TransportError(f"pairing is not bijective on {cell.label()}")
    return tuple(pairs)


# ---------------------------------------------------------------------------
# per-cell checks


def _jordan_ellprime(chi: GlobalChar, n: int, sp: SignedPrimePower,
                     ell: int) -> bool:
    """ell-prime test via the Jordan factorization deg = index_{p'} * unipotent."""
    idx = index_order(chi.cls, n, sp)
    deg = degree(chi, n, sp)
    unip = deg // ell_part(idx, sp.p)[1]
    return ell_val(idx, ell) == 0 and ell_val(unip, ell) == 0


def check_cell(cell: Cell, oracle_limit: int = ORACLE_ORDER_LIMIT,
               with_oracle: bool = True, max_witnesses: int = 3) -> dict:
    """Run every per-cell certificate and return a report dict.

    Report schema (stable keys):
      cell, degenerate, counts{global, local, ellprime_global,
      ellprime_local, per_nu}, checks{bijective, central, zhat,
      in_congruence, mckay, ellprime_equiv, jordan_eq, sum_squares, oracle},
      witnesses, ms, status.
    """
    t0 = time.perf_counter()
    n, sp, ell = cell.n, cell.sp, cell.ell
    td = torus_data(n, sp, ell)
    m1 = abs(sp.q - sp.eps)

    witnesses: list[dict] = []

    def note(kind: str, **payload) -> None:
        if len(witnesses) < max_witnesses:
            witnesses.append({"check": kind, **payload})

    global_chars = enumerate_irr(n, sp)
    local_chars = enumerate_local_irr(n, sp, ell)

    pairs = []
    transport_ok = True
    for chi in global_chars:
        if not global_relevant(chi, n, sp, ell):
            continue
        try:
            pairs.append((chi, transport(chi, n, sp, ell)))
        except TransportError as exc:
            transport_ok = False
            note("transport", global_char=to_params(chi), error=str(exc))

    images = [psi for _, psi in pairs]
    relevant_local = [psi for psi in local_chars
                      if local_relevant(psi, n, sp, ell)]
    bijective = (transport_ok and len(set(images)) == len(images)
                 and set(images) == set(relevant_local))
    if not bijective and transport_ok:
        note("bijective", n_pairs=len(pairs), n_local=len(relevant_local))

    central = True
    for chi, psi in pairs:
        if central_char(chi, sp) != local_central_label(psi, n, sp, ell):
            central = False
            note("central", global_char=to_params(chi),
                 local_char=local_to_params(psi))

    zhat = True
    for z in range(m1):
        for chi, psi in pairs:
            lhs = transport(zhat_act(chi, sp, z), n, sp, ell)
            rhs = local_zhat_act(psi, n, sp, ell, z)
            if lhs != rhs:
                zhat = False
                note("zhat", z=z, global_char=to_params(chi))
    in_congruence = True
    for chi, psi in pairs:
        r = degree(chi, n, sp) // zhat_stab_order(chi, sp)
        rp = local_degree(psi, n, sp, ell) // local_stab_order(psi, n, sp, ell)
        if (r - rp) % ell != 0 and (r + rp) % ell != 0:
            in_congruence = False
            note("in_congruence", r=r, r_prime=rp, global_char=to_params(chi))

    per_nu: dict[str, int] = {}
    for chi, _ in pairs:
        key = str(central_char(chi, sp))
        per_nu[key] = per_nu.get(key, 0) + 1

    ellprime_equiv = True
    n_ellprime_global = 0
    for chi in global_chars:
        direct = is_ellprime(chi, n, sp, ell)
        n_ellprime_global += direct
        if (direct != ellprime_structural(chi, n, sp, ell)
                or direct != _jordan_ellprime(chi, n, sp, ell)):
            ellprime_equiv = False
            note("ellprime_equiv", side="global", global_char=to_params(chi))
    n_ellprime_local = 0
    for psi in local_chars:
        direct = local_ellprime(psi, n, sp, ell)
        n_ellprime_local += direct
        if direct != local_ellprime_structural(psi, n, sp, ell):
            ellprime_equiv = False
            note("ellprime_equiv", side="local",
                 local_char=local_to_params(psi))
    if n_ellprime_global != count_ellprime(n, sp, ell):
        ellprime_equiv = False
        note("ellprime_count", direct=n_ellprime_global,
             combinatorial=count_ellprime(n, sp, ell))

    mckay = n_ellprime_global == n_ellprime_local
    if not mckay:
        note("mckay", global_count=n_ellprime_global,
             local_count=n_ellprime_local)

    jordan_eq = count_irr_sl(n, sp) == count_jordan_params(n, sp)
    if not jordan_eq:
        note("jordan_eq", irr_sl=count_irr_sl(n, sp),
             jordan=count_jordan_params(n, sp))

    sum_global = sum(degree(chi, n, sp) ** 2 for chi in global_chars)
    sum_local = sum(local_degree(psi, n, sp, ell) ** 2 for psi in local_chars)
    sum_squares = (sum_global == group_order(n, sp)
                   and sum_local == local_order(n, sp, ell))
    if not sum_squares:
        note("sum_squares", global_sum=sum_global, local_sum=sum_local)

    oracle = None
    oracle_detail = None
    if with_oracle and group_order(n, sp) <= oracle_limit:
        oracle_detail = verify_vs_oracle(cell, oracle_limit)
        oracle = oracle_detail["ok"]
        if oracle is False:
            note("oracle", detail=oracle_detail)

    checks = {
        "bijective": bijective,
        "central": central,
        "zhat": zhat,
        "in_congruence": in_congruence,
        "mckay": mckay,
        "ellprime_equiv": ellprime_equiv,
        "jordan_eq": jordan_eq,
        "sum_squares": sum_squares,
        "oracle": oracle,
    }
    status = "ok" if all(v is not False for v in checks.values()) else "fail"
    return {
        "cell": cell.as_dict(),
        "degenerate": td.a == 0,
        "counts": {
            "global": len(pairs),
            "local": len(relevant_local),
            "ellprime_global": n_ellprime_global,
            "ellprime_local": n_ellprime_local,
            "per_nu": dict(sorted(per_nu.items())),
        },
        "checks": checks,
        "witnesses": witnesses,
        "ms": int((time.perf_counter() - t0) * 1000),
        "status": status,
    }


# ---------------------------------------------------------------------------
# explicit torus constructions for the oracle route


def _mat_pow(a, e: int, mul, identity):
    result, base = identity, a
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def _prime_divisors(x: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out.append(x)
    return tuple(out)


def _has_order(g, target: int, mul, identity) -> bool:
    if _mat_pow(g, target, mul, identity) != identity:
        return False
    return all(_mat_pow(g, target // r, mul, identity) != identity
               for r in _prime_divisors(target))


def _primitive_companion(F, d0: int, target: int):
    """Companion matrix of the first monic degree-d0 polynomial over F whose
    companion matrix has multiplicative order exactly target."""
    idm = tuple(tuple(int(i == j) for j in range(d0)) for i in range(d0))

    def mul(a, b):
        from .matrixoracle import mat_mul
        return mat_mul(a, b, F)

    for coeffs in product(range(F.size), repeat=d0):
        if coeffs[0] == 0:
            continue
        comp = [[0] * d0 for _ in range(d0)]
        for i in range(1, d0):
            comp[i][i - 1] = 1
        for i in range(d0):
            comp[i][d0 - 1] = F.neg(coeffs[i])
        cand = tuple(tuple(row) for row in comp)
        if _has_order(cand, target, mul, idm):
            return cand
    raise OracleError(f"no degree-{d0} companion of order {target} over F")


def explicit_torus(G, ell: int):
    """The product-of-cyclics torus whose normalizer realizes the local side.

    Returns a subgroup view of G; trivial when ell does not divide |G|.
    """
    sp = G.sp
    td = torus_data(G.n, sp, ell)
    if td.a == 0:
        return subgroup_view(G, (G.identity,), (G.identity,))
    d0, Q, n = td.d0, td.Q, G.n

    if sp.eps == 1:
        block = _primitive_companion(G.F, d0, Q)
        gens = []
        for i in range(td.a):
            m = [list(row) for row in G.identity]
            for r in range(d0):
                for c in range(d0):
                    m[i * d0 + r][i * d0 + c] = block[r][c]
            gens.append(tuple(tuple(row) for row in m))
        torus = subgroup_closure(G, gens)
        if torus.order != Q**td.a:
            raise OracleError("split-side torus closure has wrong order")
        return torus

    if d0 == 1:
        # full norm-one torus: the centralizer of a regular element of it
        target = Q**n
        for x in G.elements:
            if x == G.identity:
                continue
            if _mat_pow(x, Q, G.mul, G.identity) != G.identity:
                continue
            cent = tuple(g for g in G.elements
                         if G.mul(g, x) == G.mul(x, g))
            if len(cent) != target:
                continue
            if any(_mat_pow(g, Q, G.mul, G.identity) != G.identity
                   for g in cent):
                continue
            if any(G.mul(a, b) != G.mul(b, a)
                   for a in cent for b in cent):
                continue
            return subgroup_view(G, cent)
        raise OracleError("no regular norm-one torus element found")

    if td.m == 0 and td.a == 1:
        for x in G.elements:
            if G.element_order(x) == Q:
                torus = subgroup_closure(G, (x,))
                if torus.order != Q:
                    raise OracleError("cyclic torus closure has wrong order")
                return torus
        raise OracleError(f"no element of order {Q} found")

    raise OracleError("no explicit torus route for this unitary cell")


# ---------------------------------------------------------------------------
# oracle cross-validation


@cache
def oracle_table(kind: str, n: int, q: int):
    G = build_group(kind, n, q)
    return G, dixon.character_table(G)


def verify_vs_oracle(cell: Cell, oracle_limit: int = ORACLE_ORDER_LIMIT) -> dict:
    """Compare combinatorial predictions against exact character tables.

    Checks, for an oracle-buildable cell:
      * global degree multiset and the ell-prime count,
      * |Irr_ell'(N(P))| for a Sylow ell-subgroup P equals the local count,
      * the normalizer of the explicit torus has the predicted order, class
        count, degree multiset, and ell-prime count,
      * SL/SU class count equals the descent parameter count when buildable.
    """
    n, sp, ell = cell.n, cell.sp, cell.ell
    out: dict = {"ok": True}

    def record(key: str, good: bool, **info) -> None:
        out[key] = {"ok": good, **info}
        if not good:
            out["ok"] = False

    if group_order(n, sp) > oracle_limit:
        return {"ok": None, "reason": "group order exceeds oracle limit"}

    G, table = oracle_table(cell.kind, n, cell.q)
    want_deg = sorted(degree(chi, n, sp) for chi in enumerate_irr(n, sp))
    got_deg = sorted(table.degrees)
    record("global_degrees", want_deg == got_deg,
           expected=want_deg, got=got_deg)
    got_lp = len(dixon.irr_ellprime(table, ell))
    want_lp = count_ellprime(n, sp, ell)
    record("global_ellprime", got_lp == want_lp,
           oracle=got_lp, combinatorial=want_lp)

    local = enumerate_local_irr(n, sp, ell)
    want_local_deg = sorted(local_degree(psi, n, sp, ell) for psi in local)
    want_local_lp = sum(local_ellprime(psi, n, sp, ell) for psi in local)

    P = sylow_subgroup(G, ell)
    NP = normalizer(G, P)
    np_table = dixon.character_table(NP)
    got_np_lp = len(dixon.irr_ellprime(np_table, ell))
    record("sylow_normalizer_ellprime", got_np_lp == want_local_lp,
           oracle=got_np_lp, combinatorial=want_local_lp,
           normalizer_order=NP.order)

    S0 = explicit_torus(G, ell)
    NT = normalizer(G, S0)
    record("torus_normalizer_order", NT.order == local_order(n, sp, ell),
           oracle=NT.order, combinatorial=local_order(n, sp, ell))
    nt_table = dixon.character_table(NT)
    got_nt_deg = sorted(nt_table.degrees)
    record("torus_normalizer_degrees", got_nt_deg == want_local_deg,
           expected=want_local_deg, got=got_nt_deg)
    record("torus_normalizer_count", len(nt_table.chars) == len(local),
           oracle=len(nt_table.chars), combinatorial=len(local))
    got_nt_lp = len(dixon.irr_ellprime(nt_table, ell))
    record("torus_normalizer_ellprime", got_nt_lp == want_local_lp,
           oracle=got_nt_lp, combinatorial=want_local_lp)

    if sl_group_order(n, sp) <= oracle_limit:
        skind = "SL" if sp.eps == 1 else "SU"
        S = build_group(skind, n, cell.q)
        got_classes = S.conjugacy_classes().count
        record("sl_class_count", got_classes == count_irr_sl(n, sp),
               oracle=got_classes, combinatorial=count_irr_sl(n, sp))

    return out


# ---------------------------------------------------------------------------
# grid driver


def run_grid(cells=None, oracle_limit: int = ORACLE_ORDER_LIMIT,
             with_oracle: bool = True) -> list[dict]:
    """Check every cell; per-cell failures are collected, not raised."""
    if cells is None:
        cells = default_grid()
    reports = []
    for cell in sorted(cells):
        try:
            reports.append(check_cell(cell, oracle_limit, with_oracle))
        except (ValueError, OracleError) as exc:
            reports.append({
                "cell": cell.as_dict(),
                "degenerate": None,
                "counts": {},
                "checks": {},
                "witnesses": [{"check": "error", "error": str(exc)}],
                "ms": 0,
                "status": "error",
            })
    return reports


def all_ok(reports) -> bool:
    return all(r["status"] == "ok" for r in reports)
