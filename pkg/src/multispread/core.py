"""Multispread data model, ground-truth verification, duality, file format.

A multispread assigns every member subspace a pseudodimension t >= dim and
covers each nonzero vector of F_q^m with constant weighted multiplicity mu,
weight q^(t-dim); the surplus at zero is lambda.  Verification here is by
explicit coverage accumulation over all nonzero vectors, and everything
else in the package is tested against it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AmbientTooLarge,
    DimensionExceedsT,
    FormatError,
    InconsistentHeader,
    MixedAmbient,
    NonIntegerNu,
    NonUniformCoverage,
    NonUniformFold,
)
from .gf import Field, make_field, prime_power
from .linalg import Subspace, span_ints

_VERIFY_LIMIT = 1 << 24


@dataclass(frozen=True)
class MultispreadParams:
    q: int
    m: int
    t: int
    lam: int
    mu: int
    n: int

    def __str__(self):
        return f"({self.lam},{self.mu};{self.t},{self.m})_{self.q}"


def as_member_dict(members) -> dict[Subspace, int]:
    """Normalize members to {subspace: multiplicity}, collating repeats."""
    if isinstance(members, dict):
        items = members.items()
    else:
        items = []
        for entry in members:
            if isinstance(entry, Subspace):
                items.append((entry, 1))
            else:
                items.append(entry)
    out: dict[Subspace, int] = {}
    for sub, mult in items:
        if mult < 1:
            raise ValueError(f"multiplicity {mult} < 1 for {sub}")
        out[sub] = out.get(sub, 0) + mult
    return out


def _coverage(members: dict[Subspace, int], field: Field, m: int,
              weight_of) -> list[int]:
    if field.q ** m > _VERIFY_LIMIT:
        raise AmbientTooLarge(f"q^m = {field.q ** m} exceeds {_VERIFY_LIMIT}")
    cov = [0] * (field.q ** m)
    for sub, mult in members.items():
        if sub.field != field or sub.m != m:
            raise MixedAmbient(f"member {sub!r} not in F_{field.q}^{m}")
        w = mult * weight_of(sub)
        for e in sub.element_ints():
            cov[e] += w
    return cov


class Multispread:
    """A verified multispread; build through verify()."""

    __slots__ = ("field", "m", "t", "members", "lam", "mu", "n")

    def __init__(self, field, m, t, members, lam, mu, n, _token=None):
        if _token is not _TOKEN:
            raise TypeError("use multispread.core.verify() to build a Multispread")
        self.field = field
        self.m = m
        self.t = t
        self.members = members
        self.lam = lam
        self.mu = mu
        self.n = n

    @property
    def params(self) -> MultispreadParams:
        return MultispreadParams(self.field.q, self.m, self.t,
                                 self.lam, self.mu, self.n)

    def sorted_members(self) -> list[tuple[Subspace, int]]:
        return sorted(self.members.items(), key=lambda kv: kv[0].sort_key())

    def dualize(self) -> "MultifoldPartition":
        """Orthogonal complements of the members form a nu-fold partition."""
        q, m, t = self.field.q, self.m, self.t
        if m >= t:
            shrink = q ** (m - t) * self.mu
            scaled_mu = q ** (m - t) * self.mu - self.mu
        else:
            shrink, rem = divmod(self.mu, q ** (t - m))
            if rem:
                raise NonIntegerNu(f"mu={self.mu} not divisible by q^(t-m)")
            scaled_mu = shrink - self.mu
        nu = self.n - shrink
        dual_members = {sub.complement(): mult for sub, mult in self.members.items()}
        part = verify_partition(dual_members, self.field, self.m)
        if part.nu != nu:
            raise NonIntegerNu(f"dual fold {part.nu} != n - q^(m-t) mu = {nu}")
        # (q^t - 1) nu = (q^(m-t) - 1) mu + lambda
        if (q ** t - 1) * nu != scaled_mu + self.lam:
            raise NonIntegerNu("fold identity violated")
        return part

    def __eq__(self, other):
        return (isinstance(other, Multispread)
                and self.field == other.field
                and (self.m, self.t) == (other.m, other.t)
                and self.members == other.members)

    def __repr__(self):
        return f"Multispread{self.params}"


class MultifoldPartition:
    """A multiset of subspaces covering every nonzero vector nu times."""

    __slots__ = ("field", "m", "members", "nu")

    def __init__(self, field, m, members, nu, _token=None):
        if _token is not _TOKEN:
            raise TypeError("use verify_partition() to build a MultifoldPartition")
        self.field = field
        self.m = m
        self.members = members
        self.nu = nu

    def sorted_members(self) -> list[tuple[Subspace, int]]:
        return sorted(self.members.items(), key=lambda kv: kv[0].sort_key())

    def complement_members(self) -> dict[Subspace, int]:
        """The dual multiset; feed to verify() to recover a multispread."""
        return {sub.complement(): mult for sub, mult in self.members.items()}

    def __eq__(self, other):
        return (isinstance(other, MultifoldPartition)
                and self.field == other.field
                and self.m == other.m
                and self.members == other.members)

    def __repr__(self):
        n = sum(self.members.values())
        return f"MultifoldPartition(nu={self.nu}, n={n}, F_{self.field.q}^{self.m})"


_TOKEN = object()


def _build_multispread(field, m, t, members, lam, mu, n) -> Multispread:
    return Multispread(field, m, t, members, lam, mu, n, _token=_TOKEN)


def verify(members, field: Field, m: int, t: int) -> Multispread:
    """Check the defining coverage equations and return the Multispread.

    Raises NonUniformCoverage when some nonzero vector has the wrong
    weighted multiplicity, DimensionExceedsT for an over-dimensioned
    member.
    """
    members = as_member_dict(members)
    q = field.q
    for sub in members:
        if sub.dim > t:
            raise DimensionExceedsT(f"member of dim {sub.dim} > t = {t}")
    cov = _coverage(members, field, m, lambda s: q ** (t - s.dim))
    mu = cov[1] if len(cov) > 1 else 0
    for v in range(1, q ** m):
        if cov[v] != mu:
            raise NonUniformCoverage(v, cov[v], mu)
    lam = sum(mult * (q ** (t - sub.dim) - 1) for sub, mult in members.items())
    n = sum(members.values())
    assert lam + mu * (q ** m - 1) == n * (q ** t - 1)
    return _build_multispread(field, m, t, members, lam, mu, n)


def verify_partition(members, field: Field, m: int) -> MultifoldPartition:
    """Check that every nonzero vector lies in a constant number of members."""
    members = as_member_dict(members)
    cov = _coverage(members, field, m, lambda s: 1)
    nu = cov[1] if len(cov) > 1 else 0
    for v in range(1, field.q ** m):
        if cov[v] != nu:
            raise NonUniformFold(v, cov[v], nu)
    return MultifoldPartition(field, m, members, nu, _token=_TOKEN)


# -- line-oriented file format --

def _format_vec(n: int, p: int) -> str:
    return f"{n:#x}" if p == 2 else str(n)


def _field_header(field: Field) -> str:
    if field.l == 1:
        return ""
    return f" modulus={field.modulus:#x}"


def serialize_multispread(ms: Multispread) -> str:
    lines = ["multispread v1",
             f"q={ms.field.q} m={ms.m} t={ms.t} lambda={ms.lam} mu={ms.mu}"
             f" n={ms.n}{_field_header(ms.field)}"]
    p = ms.field.p
    for sub, mult in ms.sorted_members():
        vecs = " ".join(_format_vec(v, p) for v in
                        ( _basis_ints(sub) ))
        lines.append(f"sub mult={mult} : {vecs}".rstrip())
    return "\n".join(lines) + "\n"


def serialize_partition(part: MultifoldPartition) -> str:
    lines = ["partition v1",
             f"q={part.field.q} m={part.m} nu={part.nu}"
             f"{_field_header(part.field)}"]
    p = part.field.p
    for sub, mult in part.sorted_members():
        vecs = " ".join(_format_vec(v, p) for v in _basis_ints(sub))
        lines.append(f"sub mult={mult} : {vecs}".rstrip())
    return "\n".join(lines) + "\n"


def _basis_ints(sub: Subspace) -> list[int]:
    from .linalg import vector_to_int
    return [vector_to_int(row, sub.field.q) for row in sub.basis]


def _parse_header_fields(line: str, line_no: int) -> dict[str, int]:
    out = {}
    for token in line.split():
        if "=" not in token:
            raise FormatError(line_no, f"bad header token {token!r}")
        key, _, value = token.partition("=")
        try:
            out[key] = int(value, 0)
        except ValueError:
            raise FormatError(line_no, f"bad integer {value!r}") from None
    return out


def _parse_body(text: str, magic: str):
    lines = text.splitlines()
    rows = [(i + 1, ln.split("#", 1)[0].strip()) for i, ln in enumerate(lines)]
    rows = [(no, ln) for no, ln in rows if ln]
    if not rows or rows[0][1] != magic:
        raise FormatError(rows[0][0] if rows else 1, f"expected {magic!r}")
    if len(rows) < 2:
        raise FormatError(rows[-1][0], "missing header line")
    header = _parse_header_fields(rows[1][1], rows[1][0])
    for key in ("q", "m"):
        if key not in header:
            raise FormatError(rows[1][0], f"header lacks {key}=")
    decomp = prime_power(header["q"])
    if decomp is None:
        raise FormatError(rows[1][0], f"q={header['q']} is not a prime power")
    p, l = decomp
    field = make_field(p, l, header.get("modulus"))
    m = header["m"]
    members: list[tuple[Subspace, int]] = []
    for no, ln in rows[2:]:
        if not ln.startswith("sub"):
            raise FormatError(no, f"expected member line, got {ln!r}")
        head, sep, vec_part = ln.partition(":")
        if not sep:
            raise FormatError(no, "member line lacks ':'")
        head_fields = head[3:].split()
        mult = 1
        for token in head_fields:
            key, _, value = token.partition("=")
            if key != "mult":
                raise FormatError(no, f"unknown member field {key!r}")
            mult = int(value, 0)
        try:
            ints = [int(tok, 0) for tok in vec_part.split()]
            sub = span_ints(field, m, ints)
        except ValueError as exc:
            raise FormatError(no, str(exc)) from None
        members.append((sub, mult))
    return field, m, header, members


def parse_multispread(text: str) -> Multispread:
    field, m, header, members = _parse_body(text, "multispread v1")
    if "t" not in header:
        raise FormatError(2, "header lacks t=")
    ms = verify(members, field, m, header["t"])
    for key, got in (("lambda", ms.lam), ("mu", ms.mu), ("n", ms.n)):
        if key in header and header[key] != got:
            raise InconsistentHeader(
                f"declared {key}={header[key]}, verified {got}")
    return ms


def parse_partition(text: str) -> MultifoldPartition:
    field, m, header, members = _parse_body(text, "partition v1")
    part = verify_partition(members, field, m)
    if "nu" in header and header["nu"] != part.nu:
        raise InconsistentHeader(f"declared nu={header['nu']}, verified {part.nu}")
    return part
