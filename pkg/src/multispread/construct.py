"""Constructive machinery: fold spreads, unions, the six lift operations,
switching, the conic ladder for pseudodimension 2, the Desarguesian-orbit
construction in F_q^6, and a recipe planner that assembles them.

Every construction verifies its output against the predicted parameters
before returning, so a Multispread coming out of this module is always
backed by the coverage oracle in core.
"""

from __future__ import annotations

import enum
import itertools
from typing import NamedTuple

from . import core
from .catalog import catalog_entry
from .core import Multispread, MultifoldPartition, verify
from .errors import (
    AmbientNotTPlusS,
    BlockDisjointnessFailed,
    ConfigurationNotFound,
    DivisibilityViolated,
    InternalVerifyFailed,
    KindPreconditionFailed,
    NoSuchMember,
    NotCovered,
    ParamMismatch,
    SOutOfRange,
)
from .feasibility import (
    FEASIBLE,
    R_UNION_CLOSURE,
    closure_decompositions,
    lambda_min_congruence,
    oracle,
)
from .gf import Field, gcd, make_field, prime_factors, subfield_view
from .linalg import Subspace, enumerate_subspaces, intersect, span


class LiftKind(enum.Enum):
    ADD_ZERO = "add-zero"      # lambda += q^t - 1
    ADD_FOLD = "add-fold"      # mu += (q^t-1)/(q^s-1)
    EMBED = "embed"            # m += t
    PROJECT = "project"        # m -= 1, mu *= q, lambda += (q-1)mu
    RAISE_PDIM = "raise-pdim"  # t += 1, mu *= q, lambda = q*lambda + (q-1)n
    SUBFIELD = "subfield"      # (t, m)_q -> (lt, lm)_p


class Oval(NamedTuple):
    field: Field
    points: tuple[Subspace, ...]


class RecipeResult(NamedTuple):
    multispread: Multispread
    plan: tuple[str, ...]


def _expect(ms: Multispread, lam: int, mu: int) -> Multispread:
    if (ms.lam, ms.mu) != (lam, mu):
        raise InternalVerifyFailed(
            f"built {ms.params}, expected lambda={lam} mu={mu}")
    return ms


def _subfield_generator(big: Field, sub_l: int) -> int:
    """Smallest generator of the multiplicative group of the order-p^sub_l
    subfield of big."""
    order = big.p ** sub_l - 1
    for e in big.subfield_elements(sub_l):
        if e in (0, 1) and order > 1:
            continue
        if all(big.pow(e, order // r) != 1 for r in prime_factors(order)):
            return e
    return 1


def fold_spread(field: Field, t: int, m: int, mu: int) -> Multispread:
    """The (0, mu; t, m)_q multispread of multiplicative coset translates
    of a fixed t-subspace of GF(q^m)."""
    q = field.q
    if t < 1 or t > m:
        raise DivisibilityViolated(f"need 1 <= t <= m, got t={t} m={m}")
    s = gcd(t, m)
    base = (q ** t - 1) // (q ** s - 1)
    if mu % base != 0:
        raise DivisibilityViolated(
            f"mu={mu} is not a multiple of (q^t-1)/(q^s-1) = {base}")
    if mu == 0:
        return verify({}, field, m, t)
    big = make_field(field.p, field.l * m)
    view = subfield_view(big, field)
    z = big.p if big.l > 1 else 1
    theta = _subfield_generator(big, field.l * s)
    c_basis = [big.mul(big.pow(theta, a), big.pow(z, b))
               for b in range(t // s) for a in range(s)]
    star = [e for e in big.subfield_elements(field.l * s) if e]
    mult = mu // base
    seen = bytearray(big.q)
    members: dict[Subspace, int] = {}
    for x in range(1, big.q):
        if seen[x]:
            continue
        for beta in star:
            seen[big.mul(beta, x)] = 1
        sub = span(field, m, [view.to_vector(big.mul(x, c)) for c in c_basis])
        if sub.dim != t:
            raise InternalVerifyFailed(f"coset has dim {sub.dim}, expected {t}")
        members[sub] = members.get(sub, 0) + mult
    return _expect(verify(members, field, m, t), 0, mu)


def union(a: Multispread, b: Multispread) -> Multispread:
    if a.field != b.field or (a.m, a.t) != (b.m, b.t):
        raise ParamMismatch(f"{a.params} vs {b.params}")
    members = dict(a.members)
    for sub, mult in b.members.items():
        members[sub] = members.get(sub, 0) + mult
    return _expect(verify(members, a.field, a.m, a.t), a.lam + b.lam, a.mu + b.mu)


def _zero_subspace(field: Field, m: int) -> Subspace:
    return span(field, m, [])


def lift(ms: Multispread, kind: LiftKind) -> Multispread:
    """Apply one parameter-transforming lift; output is re-verified."""
    field, m, t = ms.field, ms.m, ms.t
    q = field.q
    if kind is LiftKind.ADD_ZERO:
        members = dict(ms.members)
        zero = _zero_subspace(field, m)
        members[zero] = members.get(zero, 0) + 1
        return _expect(verify(members, field, m, t), ms.lam + q ** t - 1, ms.mu)

    if kind is LiftKind.ADD_FOLD:
        if t > m:
            raise KindPreconditionFailed("add-fold needs t <= m")
        base = (q ** t - 1) // (q ** gcd(t, m) - 1)
        return union(ms, fold_spread(field, t, m, base))

    if kind is LiftKind.EMBED:
        return _embed(ms)

    if kind is LiftKind.PROJECT:
        if m < 2:
            raise KindPreconditionFailed("project needs m >= 2")
        members: dict[Subspace, int] = {}
        for sub, mult in ms.members.items():
            img = span(field, m - 1, [row[:-1] for row in sub.basis])
            members[img] = members.get(img, 0) + mult
        return _expect(verify(members, field, m - 1, t),
                       ms.lam + (q - 1) * ms.mu, q * ms.mu)

    if kind is LiftKind.RAISE_PDIM:
        return _expect(verify(dict(ms.members), field, m, t + 1),
                       q * ms.lam + (q - 1) * ms.n, q * ms.mu)

    if kind is LiftKind.SUBFIELD:
        p, l = field.p, field.l
        prime = make_field(p)
        scalars = [p ** a for a in range(l)]
        members = {}
        for sub, mult in ms.members.items():
            rows = []
            for vec in sub.basis:
                for sc in scalars:
                    scaled = [field.mul(sc, c) for c in vec]
                    rows.append(tuple(d for c in scaled
                                      for d in _base_p_digits(c, p, l)))
            img = span(prime, l * m, rows)
            if img.dim != l * sub.dim:
                raise InternalVerifyFailed("subfield expansion lost rank")
            members[img] = members.get(img, 0) + mult
        return _expect(verify(members, prime, l * m, l * t), ms.lam, ms.mu)

    raise KindPreconditionFailed(f"unknown lift kind {kind!r}")


def _base_p_digits(c: int, p: int, l: int) -> tuple[int, ...]:
    digits = []
    for _ in range(l):
        digits.append(c % p)
        c //= p
    digits.reverse()
    return tuple(digits)


def _embed(ms: Multispread) -> Multispread:
    field, m, t = ms.field, ms.m, ms.t
    q = field.q
    if t > m:
        # rebuild at ambient 2t from the parameter shape, then project down
        step = q ** (t - m)
        mu0 = ms.mu // step
        zeros = (ms.lam - (step - 1) * mu0) // (q ** t - 1)
        out = fold_spread(field, t, 2 * t, mu0) if mu0 else \
            verify({}, field, 2 * t, t)
        for _ in range(zeros):
            out = lift(out, LiftKind.ADD_ZERO)
        for _ in range(t - m):
            out = lift(out, LiftKind.PROJECT)
        return _expect(out, ms.lam, ms.mu)
    big = make_field(field.p, field.l * m)
    view = subfield_view(big, field)
    z = big.p if big.l > 1 else 1
    u_basis = [big.pow(z, b) for b in range(t)]
    members: dict[Subspace, int] = {}
    zero_t = (0,) * t
    for sub, mult in ms.members.items():
        img = span(field, m + t, [row + zero_t for row in sub.basis])
        members[img] = members.get(img, 0) + mult
    if ms.mu:
        for alpha in big.elements():
            rows = []
            for b, u in enumerate(u_basis):
                unit = tuple(1 if i == b else 0 for i in range(t))
                rows.append(view.to_vector(big.mul(alpha, u)) + unit)
            sub = span(field, m + t, rows)
            members[sub] = members.get(sub, 0) + ms.mu
    return _expect(verify(members, field, m + t, t), ms.lam, ms.mu)


def switch_up(ms: Multispread, target: Subspace) -> Multispread:
    """Replace one copy of a (t-s)-dimensional member by q^s + 1
    t-subspaces through it; mu rises by one."""
    field, m, t = ms.field, ms.m, ms.t
    q = field.q
    s = m - t
    if s < 1:
        raise AmbientNotTPlusS(f"need m = t + s with s >= 1, got t={t} m={m}")
    if ms.members.get(target, 0) < 1:
        raise NoSuchMember(f"{target!r} is not a member")
    if target.dim != t - s:
        raise NoSuchMember(f"target has dim {target.dim}, need {t - s}")
    pivots = {next(i for i, x in enumerate(row) if x) for row in target.basis}
    w_basis = [tuple(1 if j == i else 0 for j in range(m))
               for i in range(m) if i not in pivots]
    inner = fold_spread(field, s, 2 * s, 1)
    members = dict(ms.members)
    members[target] -= 1
    if members[target] == 0:
        del members[target]
    for piece, _ in sorted(inner.members.items(), key=lambda kv: kv[0].sort_key()):
        mapped = []
        for coeffs in piece.basis:
            vec = [0] * m
            for c, w in zip(coeffs, w_basis):
                if c:
                    vec = [field.add(a, field.mul(c, b)) for a, b in zip(vec, w)]
            mapped.append(tuple(vec))
        sub = span(field, m, list(target.basis) + mapped)
        if sub.dim != t:
            raise InternalVerifyFailed("direct sum has wrong dimension")
        members[sub] = members.get(sub, 0) + 1
    return _expect(verify(members, field, m, t),
                   ms.lam - (q ** s - 1), ms.mu + 1)


def switch_down(ms: Multispread, core_sub: Subspace) -> Multispread:
    """Inverse of switch_up: collapse q^s + 1 t-subspaces with pairwise
    intersection core_sub into core_sub; mu drops by one."""
    field, m, t = ms.field, ms.m, ms.t
    q = field.q
    s = m - t
    if s < 1:
        raise AmbientNotTPlusS(f"need m = t + s with s >= 1, got t={t} m={m}")
    need = q ** s + 1
    cands = [sub for sub, mult in sorted(ms.members.items(),
                                         key=lambda kv: kv[0].sort_key())
             if mult >= 1 and sub.dim == t
             and all(sub.contains(row) for row in core_sub.basis)]

    def extend(chosen, rest):
        if len(chosen) == need:
            return chosen
        for i, cand in enumerate(rest):
            if all(intersect(cand, c) == core_sub for c in chosen):
                found = extend(chosen + [cand], rest[i + 1:])
                if found:
                    return found
        return None

    clique = extend([], cands)
    if clique is None:
        raise ConfigurationNotFound(
            f"no {need} t-subspaces pairwise meeting in the given core")
    members = dict(ms.members)
    for sub in clique:
        members[sub] -= 1
        if members[sub] == 0:
            del members[sub]
    members[core_sub] = members.get(core_sub, 0) + 1
    return _expect(verify(members, field, m, t),
                   ms.lam + (q ** s - 1), ms.mu - 1)


def oval(field: Field) -> Oval:
    """q + 1 points of PG(2, q) in conic position, no three spanning a
    2-subspace; checked exhaustively."""
    pts = [span(field, 3, [(1, x, field.mul(x, x))]) for x in field.elements()]
    pts.append(span(field, 3, [(0, 0, 1)]))
    for trip in itertools.combinations(pts, 3):
        joined = span(field, 3, [p.basis[0] for p in trip])
        if joined.dim != 3:
            raise InternalVerifyFailed("conic points are not in general position")
    return Oval(field, tuple(pts))


def desarguesian_46(field: Field, s: int) -> Multispread:
    """Spread members plus s trace-kernel orbits: a
    ((q^2-q+1-s)(q^2-1), q+s; 4, 6)_q multispread."""
    q = field.q
    if s < 0 or s > q * q - q + 1:
        raise SOutOfRange(f"s={s} outside 0..q^2-q+1")
    big = make_field(field.p, field.l * 6)
    view = subfield_view(big, field)
    theta3 = _subfield_generator(big, field.l * 3)
    cube_star = [e for e in big.subfield_elements(field.l * 3) if e]

    spread: list[Subspace] = []
    seen = bytearray(big.q)
    for x in range(1, big.q):
        if seen[x]:
            continue
        for beta in cube_star:
            seen[big.mul(beta, x)] = 1
        spread.append(span(field, 6, [view.to_vector(big.mul(x, big.pow(theta3, a)))
                                      for a in range(3)]))
    assert len(spread) == q ** 3 + 1

    tr = big.trace_to(field.l * 2)
    kernel = [x for x in big.elements() if tr(x) == 0]
    t_sub = span(field, 6, [view.to_vector(x) for x in kernel])
    if t_sub.dim != 4:
        raise InternalVerifyFailed("trace kernel is not 4-dimensional")
    t_gens = [view.from_vector(row) for row in t_sub.basis]

    def block_of(sub: Subspace) -> frozenset[int]:
        idx = frozenset(i for i, d in enumerate(spread)
                        if intersect(sub, d).dim == 2)
        if len(idx) != q + 1:
            raise BlockDisjointnessFailed(
                f"orbit member meets {len(idx)} spread members in planes")
        return idx

    alpha = big.generator
    chosen: list[list[int]] = []  # field-element generator lists
    used: set[int] = set()
    power = 1
    for _ in range(big.q - 1 if s else 0):
        gens = [big.mul(power, g) for g in t_gens]
        cand = span(field, 6, [view.to_vector(g) for g in gens])
        blk = block_of(cand)
        if not blk & used:
            chosen.append(gens)
            used |= blk
            if len(chosen) == s:
                break
        power = big.mul(power, alpha)
    if len(chosen) < s:
        raise BlockDisjointnessFailed(
            f"found only {len(chosen)} pairwise disjoint blocks")

    members: dict[Subspace, int] = {}
    for i, d in enumerate(spread):
        if i not in used:
            members[d] = members.get(d, 0) + 1
    sc_step = big.pow(alpha, q ** 3 + 1)
    for gens in chosen:
        orbit = set()
        g = 1
        for _ in range(q ** 3 - 1):
            orbit.add(span(field, 6,
                           [view.to_vector(big.mul(g, x)) for x in gens]))
            g = big.mul(g, sc_step)
        if len(orbit) != (q ** 3 - 1) // (q - 1):
            raise InternalVerifyFailed("orbit size is off")
        for sub in orbit:
            members[sub] = members.get(sub, 0) + 1
    ms = _expect(verify(members, field, 6, 4),
                 (q * q - q + 1 - s) * (q * q - 1), q + s)
    dims = {}
    for sub, mult in ms.members.items():
        dims[sub.dim] = dims.get(sub.dim, 0) + mult
    if dims.get(3, 0) != q ** 3 + 1 - s * (q + 1) or \
            dims.get(4, 0) != s * (q * q + q + 1):
        raise InternalVerifyFailed(f"member dimension counts {dims} are off")
    return ms


def dual_partition_cor(field: Field, s: int) -> MultifoldPartition:
    """1-fold partition of F_q^6 into (q^2+q+1)s planes and
    q^3+1-(q+1)s solids, dual to desarguesian_46."""
    part = desarguesian_46(field, s).dualize()
    if part.nu != 1:
        raise InternalVerifyFailed(f"dual fold {part.nu} != 1")
    q = field.q
    dims = {}
    for sub, mult in part.members.items():
        dims[sub.dim] = dims.get(sub.dim, 0) + mult
    if dims.get(2, 0) != (q * q + q + 1) * s or \
            dims.get(3, 0) != q ** 3 + 1 - (q + 1) * s:
        raise InternalVerifyFailed(f"partition dimension counts {dims} are off")
    return part


# -- the recipe planner --

def _first_member_of_dim(ms: Multispread, d: int) -> Subspace:
    for sub, mult in sorted(ms.members.items(), key=lambda kv: kv[0].sort_key()):
        if sub.dim == d and mult >= 1:
            return sub
    raise NoSuchMember(f"no member of dim {d}")


def _seed_t2(field: Field, mu0: int, plan: list[str]) -> Multispread:
    q = field.q
    if mu0 == q:
        plan.append(f"project spread (0,1;2,4)_{q} -> ({q-1},{q};2,3)")
        return lift(fold_spread(field, 2, 4, 1), LiftKind.PROJECT)
    if mu0 == q + 1:
        plan.append(f"fold-spread (0,{q+1};2,3)_{q}")
        return fold_spread(field, 2, 3, q + 1)
    steps = 2 * q + 2 - mu0
    plan.append(f"double line cover (0,{2*q+2};2,3)_{q}, "
                f"{steps} conic-point switch-downs")
    ms = verify({sub: 2 for sub in enumerate_subspaces(field, 3, 2)}, field, 3, 2)
    ov = oval(field)
    for i in range(steps):
        ms = switch_down(ms, ov.points[i])
    return ms


def _seed_t3_r1(field: Field, mu0: int, plan: list[str]) -> Multispread:
    q = field.q
    top = q * q + q + 1
    if mu0 > top:
        j = mu0 - top
        plan.append(f"union for mu={mu0}: ({q+j}) + ({q*q+1})")
        return union(_seed_t3_r1(field, q + j, plan),
                     _seed_t3_r1(field, q * q + 1, plan))
    steps = mu0 - q
    plan.append(f"line spread of F_{q}^4 as pdim 3, {steps} switch-ups")
    ms = lift(fold_spread(field, 2, 4, 1), LiftKind.RAISE_PDIM)
    for _ in range(steps):
        ms = switch_up(ms, _first_member_of_dim(ms, 2))
    return ms


def _seed_t3_r2(field: Field, mu0: int, plan: list[str]) -> Multispread:
    q = field.q
    if lambda_min_congruence(q, 5, 3, mu0) == 0:
        plan.append(f"fold-spread (0,{mu0};3,5)_{q}")
        return fold_spread(field, 3, 5, mu0)
    if mu0 == q:
        plan.append(f"project spread (0,1;3,6)_{q} -> ({q-1},{q};3,5)")
        return lift(fold_spread(field, 3, 6, 1), LiftKind.PROJECT)
    seeds = {(2, 3): "A1-X1", (3, 4): "A1-20-4", (3, 5): "A1-12-5"}
    name = seeds.get((q, mu0))
    if name:
        plan.append(f"catalog {name}")
        return catalog_entry(name)
    plan.append(f"union for mu={mu0}: ({q}) + ({mu0-q})")
    return union(_seed_t3_r2(field, q, plan), _seed_t3_r2(field, mu0 - q, plan))


def _seed_t4_r2(field: Field, mu0: int, plan: list[str]) -> Multispread:
    q = field.q
    if mu0 - q <= q * q - q + 1:
        plan.append(f"desarguesian orbits s={mu0 - q} in F_{q}^6")
        return desarguesian_46(field, mu0 - q)
    plan.append(f"union for mu={mu0}: ({q}) + ({mu0-q})")
    return union(_seed_t4_r2(field, q, plan), _seed_t4_r2(field, mu0 - q, plan))


def _seed_t4_r3(field: Field, mu0: int, plan: list[str]) -> Multispread:
    q = field.q
    if lambda_min_congruence(q, 7, 4, mu0) == 0:
        plan.append(f"fold-spread (0,{mu0};4,7)_2")
        return fold_spread(field, 4, 7, mu0)
    if mu0 == 2:
        plan.append("project spread (0,1;4,8)_2 -> (1,2;4,7)")
        return lift(fold_spread(field, 4, 8, 1), LiftKind.PROJECT)
    if mu0 == 3:
        plan.append("catalog A1-9-3")
        return catalog_entry("A1-9-3")
    plan.append(f"union for mu={mu0}: (2) + ({mu0-2})")
    return union(_seed_t4_r3(field, 2, plan), _seed_t4_r3(field, mu0 - 2, plan))


def _seed_t4_r1(field: Field, mu0: int, plan: list[str]) -> Multispread:
    if mu0 <= 12:
        steps = mu0 - 4
        plan.append(f"(1,2;3,5)_2 as pdim 4 -> (11,4;4,5)_2, {steps} switch-ups")
        ms = lift(lift(fold_spread(field, 3, 6, 1), LiftKind.PROJECT),
                  LiftKind.RAISE_PDIM)
        for _ in range(steps):
            ms = switch_up(ms, _first_member_of_dim(ms, 3))
        return ms
    if mu0 <= 15:
        steps = 15 - mu0
        plan.append(f"all solids (0,15;4,5)_2, {steps} switch-downs")
        ms = fold_spread(field, 4, 5, 15)
        for _ in range(steps):
            for cand in enumerate_subspaces(field, 5, 3):
                try:
                    ms = switch_down(ms, cand)
                    break
                except ConfigurationNotFound:
                    continue
            else:
                raise ConfigurationNotFound("switch-down ladder got stuck")
        return ms
    plan.append(f"union for mu={mu0}: (4) + ({mu0-4})")
    return union(_seed_t4_r1(field, 4, plan), _seed_t4_r1(field, mu0 - 4, plan))


def _characterized_seed(field: Field, t: int, m: int, mu: int,
                        plan: list[str]) -> tuple[Multispread, int]:
    """Seed multispread at base dimension m0 = (m mod t) + t (or 9 for the
    two catalog-backed cells), its lambda equal to the congruence floor.
    Returns (seed, m0)."""
    q = field.q
    r = m % t
    s = gcd(t, m)
    base = (q ** t - 1) // (q ** s - 1)
    if t == 4 and q == 2 and r == 1 and mu in (2, 3):
        name = "A2-13-2" if mu == 2 else "A2-12-3"
        plan.append(f"catalog {name}")
        return catalog_entry(name), 9
    win_lo = 4 if (t == 4 and q == 2 and r == 1) else q
    mu0 = win_lo + (mu - win_lo) % base
    folds = (mu - mu0) // base
    seed_fn = {
        (2, 1): _seed_t2,
        (3, 1): _seed_t3_r1,
        (3, 2): _seed_t3_r2,
        (4, 1): _seed_t4_r1,
        (4, 2): _seed_t4_r2,
        (4, 3): _seed_t4_r3,
    }[(t, r)]
    ms = seed_fn(field, mu0, plan)
    if folds:
        plan.append(f"add-fold x{folds} (mu += {folds * base})")
        ms = union(ms, fold_spread(field, t, ms.m, folds * base))
    return ms, ms.m


def _closure_seed(field: Field, t: int, m: int, lam: int, mu: int,
                  plan: list[str]) -> tuple[Multispread, int]:
    q = field.q
    r = m % t
    m0 = r + t
    j = t - r
    s = gcd(t, m)
    base = (q ** t - 1) // (q ** s - 1)
    qt1 = q ** t - 1
    pick = None
    for a in range(mu // q ** j + 1):
        c, rem = divmod(mu - a * q ** j, base)
        if rem:
            continue
        floor = a * (q ** j - 1)
        if lam >= floor and (lam - floor) % qt1 == 0:
            pick = (a, c)
            break
    if pick is None:
        raise NotCovered(f"no union-closure decomposition reaches "
                         f"({lam},{mu};{t},{m})_{q}")
    a, c = pick
    plan.append(f"union closure: {a} x projected spread + fold mu={c * base}")
    ms = None
    if a:
        piece = fold_spread(field, t, 2 * t, 1)
        for _ in range(j):
            piece = lift(piece, LiftKind.PROJECT)
        ms = piece
        for _ in range(a - 1):
            ms = union(ms, piece)
    if c:
        folds = fold_spread(field, t, m0, c * base)
        ms = folds if ms is None else union(ms, folds)
    return ms, m0


def recipe(q: int, m: int, t: int, lam: int, mu: int) -> RecipeResult:
    """Construct a verified multispread with exactly the given parameters,
    or raise NotCovered when the oracle cannot justify them."""
    verdict = oracle(q, m, t, mu, lam)
    if verdict.status != FEASIBLE:
        raise NotCovered(
            f"({lam},{mu};{t},{m})_{q} is {verdict.status}"
            + (f" ({verdict.reason})" if verdict.reason else ""),
            verdict=verdict)
    from .gf import prime_power
    p, l = prime_power(q)
    field = make_field(p, l)
    qt1 = q ** t - 1
    plan: list[str] = []

    if mu == 0:
        zeros = lam // qt1
        plan.append(f"{zeros} zero subspaces")
        ms = verify({_zero_subspace(field, m): zeros} if zeros else {},
                    field, m, t)
    elif t > m:
        step = q ** (t - m)
        copies = mu // step
        zeros = (lam - (step - 1) * copies) // qt1
        plan.append(f"full space x{copies} + {zeros} zero subspaces")
        members: dict[Subspace, int] = {}
        full = span(field, m, [tuple(1 if j == i else 0 for j in range(m))
                               for i in range(m)])
        if copies:
            members[full] = copies
        if zeros:
            members[_zero_subspace(field, m)] = zeros
        ms = verify(members, field, m, t)
    else:
        s = gcd(t, m)
        base = (q ** t - 1) // (q ** s - 1)
        if mu < q or m % t == 0:
            plan.append(f"fold-spread (0,{mu};{t},{m})_{q}")
            ms = fold_spread(field, t, m, mu)
        elif verdict.reason == R_UNION_CLOSURE:
            ms, m0 = _closure_seed(field, t, m, lam, mu, plan)
        else:
            ms, m0 = _characterized_seed(field, t, m, mu, plan)
        embeds = (m - ms.m) // t
        for _ in range(embeds):
            plan.append(f"embed {ms.m}->{ms.m + t}")
            ms = lift(ms, LiftKind.EMBED)
        zeros = (lam - ms.lam) // qt1
        if zeros:
            plan.append(f"add-zero x{zeros} (lambda += {zeros * qt1})")
            members = dict(ms.members)
            zsub = _zero_subspace(field, m)
            members[zsub] = members.get(zsub, 0) + zeros
            ms = verify(members, field, m, t)

    if (ms.lam, ms.mu, ms.m, ms.t) != (lam, mu, m, t):
        raise InternalVerifyFailed(
            f"recipe built {ms.params}, requested ({lam},{mu};{t},{m})_{q}")
    return RecipeResult(ms, tuple(plan))
