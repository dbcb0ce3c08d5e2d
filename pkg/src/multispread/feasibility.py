"""Parameter admissibility: necessary conditions and characterized families.

The oracle answers, for a tuple (q, m, t, mu) and optionally lambda,
whether a multispread with those parameters exists.  FEASIBLE and
INFEASIBLE verdicts carry the identifier of the governing statement
(rule ids like "theorem:th:t2"); cells that no known rule settles come
back UNKNOWN, and the recipe engine refuses them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedQ
from .gf import gcd, prime_power

FEASIBLE = "FEASIBLE"
INFEASIBLE = "INFEASIBLE"
UNKNOWN = "UNKNOWN"

R_FOLD = "lemma:l:fold"
R_TRIVIAL = "lemma:l:rec"
R_MU_LT_Q = "proposition:p:mu<q"
R_T_GT_M = "proposition:p:t>m"
R_CONGRUENCE = "proposition:c:ness"
R_BI = "proposition:p:ness"
R_L2452 = "corollary:c:l2452"
R_M0 = "proposition:p:m0"
R_T2 = "theorem:th:t2"
R_T3_R1 = "theorem:th:t3m4"
R_T3_R2 = "theorem:th:t=3m=4"
R_T4_R2 = "theorem:th:t=4m=6"
R_T4_R3 = "theorem:th:t=4m=7"
R_T4_R1 = "theorem:th:t=4m=5"
R_UNION_CLOSURE = "lemma:l:sum"


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str | None = None
    witness: object = None

    def __bool__(self):
        return self.status == FEASIBLE


def lambda_min_congruence(q: int, m: int, t: int, mu: int) -> int:
    """Smallest nonnegative lambda with lambda = -mu(q^m - 1) mod q^t - 1."""
    return (-mu * (q ** m - 1)) % (q ** t - 1)


def _n0_interval(q, m, t, mu):
    imax = min(_ilog(mu, q), t - 1)
    target = mu * (q ** m - 1)
    lo = -(-target // (q ** t - 1))        # ceil
    hi = target // (q ** t - q ** imax)    # floor
    return imax, lo, hi


def _ilog(n: int, q: int) -> int:
    out = 0
    while n >= q:
        n //= q
        out += 1
    return out


def bi_decomposition(q: int, m: int, t: int, mu: int) -> list[int] | None:
    """Nonnegative b_0..b_imax with mu(q^m - 1) = sum b_i (q^t - q^i),
    smallest lexicographically, or None.

    The count of dimension-(t-i) members in any multispread solves this,
    so unsolvability is a nonexistence proof.  (Counts may be zero; the
    statement's "positive" reading loses nothing, a zero count simply
    drops the term.)
    """
    imax, lo, hi = _n0_interval(q, m, t, mu)
    if lo > hi:
        return None
    target = mu * (q ** m - 1)
    coeffs = [q ** t - q ** i for i in range(imax + 1)]

    def rec(i, rem):
        if i == len(coeffs) - 1:
            b, r = divmod(rem, coeffs[i])
            return [b] if r == 0 else None
        for b in range(rem // coeffs[i] + 1):
            tail = rec(i + 1, rem - b * coeffs[i])
            if tail is not None:
                return [b] + tail
        return None

    return rec(0, target)


def _characterized_rule(q, t, m) -> str | None:
    """Rule id of the theorem characterizing this (q, t, m) cell for
    mu >= q, if any."""
    r = m % t
    if r == 0:
        return R_M0
    if t == 2:
        return R_T2
    if t == 3 and r == 1:
        return R_T3_R1
    if t == 3 and r == 2 and q in (2, 3):
        return R_T3_R2
    if t == 4 and r == 2:
        return R_T4_R2
    if t == 4 and r == 3 and q == 2:
        return R_T4_R3
    if t == 4 and r == 1 and q == 2:
        return R_T4_R1
    return None


def closure_decompositions(q, m, t, mu):
    """All (a, c) with mu = a q^j + c base, where j projections of a spread
    seed the cell; used for cells no theorem characterizes."""
    s = gcd(t, m)
    base = (q ** t - 1) // (q ** s - 1)
    j = (t - m % t) % t
    out = []
    for a in range(mu // q ** j + 1):
        c, r = divmod(mu - a * q ** j, base)
        if r == 0:
            out.append((a, c))
    return j, out


def oracle(q: int, m: int, t: int, mu: int, lam: int | None = None) -> Verdict:
    """Three-valued existence check; with lam omitted, asks whether any
    lambda works."""
    decomp = prime_power(q)
    if decomp is None or q > 1 << 10:
        raise UnsupportedQ(f"q={q} is not a prime power <= 2^10")
    if m < 1 or t < 1 or mu < 0 or (lam is not None and lam < 0):
        raise ValueError("parameters must be positive (lambda, mu nonnegative)")

    if mu == 0:
        # only 0-subspaces can occur; each adds q^t - 1 to lambda
        if lam is None or lam % (q ** t - 1) == 0:
            return Verdict(FEASIBLE, R_TRIVIAL, {"lambda_min": 0})
        return Verdict(INFEASIBLE, R_CONGRUENCE)

    if t > m:
        step = q ** (t - m)
        if mu % step != 0:
            return Verdict(INFEASIBLE, R_T_GT_M)
        floor = (step - 1) * (mu // step)
        if lam is None:
            return Verdict(FEASIBLE, R_T_GT_M, {"lambda_min": floor})
        if lam >= floor and (lam - floor) % (q ** t - 1) == 0:
            return Verdict(FEASIBLE, R_T_GT_M, {"lambda_min": floor})
        return Verdict(INFEASIBLE, R_T_GT_M)

    s = gcd(t, m)
    base = (q ** t - 1) // (q ** s - 1)

    if lam is not None and (lam + mu * (q ** m - 1)) % (q ** t - 1) != 0:
        return Verdict(INFEASIBLE, R_CONGRUENCE)

    if mu < q:
        if mu % base == 0:
            # congruence already implies q^t - 1 | lam here
            return Verdict(FEASIBLE, R_MU_LT_Q, {"lambda_min": 0})
        return Verdict(INFEASIBLE, R_MU_LT_Q)

    if bi_decomposition(q, m, t, mu) is None:
        reason = R_L2452 if (q, m, t) == (2, 5, 4) and mu in (2, 3) else R_BI
        return Verdict(INFEASIBLE, reason, {"interval": _n0_interval(q, m, t, mu)[1:]})

    rule = _characterized_rule(q, t, m)
    if rule == R_T4_R1 and m == 5 and mu in (2, 3):
        return Verdict(INFEASIBLE, R_L2452)
    if rule is not None:
        lam_min = lambda_min_congruence(q, m, t, mu)
        if lam is None or lam % (q ** t - 1) == lam_min % (q ** t - 1):
            if mu % base == 0 and (lam is None or lam == 0):
                return Verdict(FEASIBLE, R_FOLD, {"lambda_min": lam_min})
            return Verdict(FEASIBLE, rule, {"lambda_min": lam_min})
        return Verdict(INFEASIBLE, R_CONGRUENCE)

    # no characterization: feasible only as far as generic unions of
    # projected spreads, fold spreads, and 0-subspaces reach
    j, decs = closure_decompositions(q, m, t, mu)
    if decs:
        if lam is None:
            return Verdict(FEASIBLE, R_UNION_CLOSURE, {"decompositions": decs, "j": j})
        for a, c in decs:
            floor = a * (q ** j - 1)
            if lam >= floor and (lam - floor) % (q ** t - 1) == 0:
                return Verdict(FEASIBLE, R_UNION_CLOSURE, {"a": a, "c": c, "j": j})
        return Verdict(UNKNOWN)
    return Verdict(UNKNOWN)


def min_lambda_existence(q: int, m: int, t: int, mu: int) -> int | None:
    """The least feasible lambda, where a characterization pins it down;
    None on UNKNOWN or INFEASIBLE cells (and on cells only the generic
    union closure reaches, whose true minimum is open)."""
    v = oracle(q, m, t, mu)
    if v.status != FEASIBLE:
        return None
    if v.reason == R_UNION_CLOSURE:
        return None
    if isinstance(v.witness, dict) and "lambda_min" in v.witness:
        return v.witness["lambda_min"]
    return lambda_min_congruence(q, m, t, mu)
