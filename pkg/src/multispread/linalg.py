"""Vectors and canonical subspaces of F_q^m.

A vector is a tuple of m field-element encodings.  Its integer text form
packs the coordinates base q, first coordinate most significant; over
GF(2) this is the usual bitmask/hexadecimal convention.  Subspaces carry
a reduced row-echelon basis, so equal subspaces compare (and hash) equal.
"""

from __future__ import annotations

import itertools

from .errors import AmbientTooLarge, MixedAmbient
from .gf import Field

_ENUM_LIMIT = 1 << 24


def vector_to_int(vec, q: int) -> int:
    n = 0
    for c in vec:
        n = n * q + c
    return n


def vector_from_int(n: int, q: int, m: int) -> tuple[int, ...]:
    if n < 0 or n >= q ** m:
        raise ValueError(f"{n} is not a vector of F_{q}^{m}")
    coords = []
    for _ in range(m):
        coords.append(n % q)
        n //= q
    coords.reverse()
    return tuple(coords)


def dot(field: Field, u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


def rref(field: Field, rows) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form; returns the nonzero rows."""
    work = [list(r) for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    pivot_row = 0
    for col in range(ncols):
        piv = next((r for r in range(pivot_row, len(work)) if work[r][col]), None)
        if piv is None:
            continue
        work[pivot_row], work[piv] = work[piv], work[pivot_row]
        inv = field.inv(work[pivot_row][col])
        if inv != 1:
            work[pivot_row] = [field.mul(inv, v) for v in work[pivot_row]]
        for r in range(len(work)):
            if r != pivot_row and work[r][col]:
                c = work[r][col]
                work[r] = [field.sub(a, field.mul(c, b))
                           for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
        if pivot_row == len(work):
            break
    return tuple(tuple(r) for r in work[:pivot_row])


class Subspace:
    """A canonical linear subspace of F_q^m (possibly the zero subspace)."""

    __slots__ = ("field", "m", "basis", "_elems")

    def __init__(self, field: Field, m: int, basis: tuple[tuple[int, ...], ...]):
        # basis must already be canonical; use span() to build one
        self.field = field
        self.m = m
        self.basis = basis
        self._elems: tuple[int, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec) -> bool:
        if len(vec) != self.m:
            raise MixedAmbient(f"vector of length {len(vec)} in F^({self.m})")
        field = self.field
        v = list(vec)
        for row in self.basis:
            piv = next(i for i, x in enumerate(row) if x)
            if v[piv]:
                c = v[piv]
                v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, row)]
        return not any(v)

    def vectors(self):
        """All q^dim vectors, as tuples, in a deterministic order."""
        field, q = self.field, self.field.q
        elems = [(0,) * self.m]
        for row in self.basis:
            scaled = [[field.mul(c, x) for x in row] for c in range(q)]
            elems = [tuple(field.add(a, b) for a, b in zip(e, s))
                     for e in elems for s in scaled]
        return elems

    def element_ints(self) -> tuple[int, ...]:
        """The member vectors in integer form, sorted; cached."""
        if self._elems is None:
            q = self.field.q
            self._elems = tuple(sorted(vector_to_int(v, q) for v in self.vectors()))
        return self._elems

    def complement(self) -> "Subspace":
        """Orthogonal complement under the standard dot product."""
        field, m = self.field, self.m
        if not self.basis:
            return Subspace(field, m, rref(field, [
                tuple(1 if j == i else 0 for j in range(m)) for i in range(m)]))
        pivots = [next(i for i, x in enumerate(row) if x) for row in self.basis]
        free = [j for j in range(m) if j not in pivots]
        rows = []
        for f in free:
            v = [0] * m
            v[f] = 1
            for r, pcol in enumerate(pivots):
                v[pcol] = field.neg(self.basis[r][f])
            rows.append(tuple(v))
        return Subspace(field, m, rref(field, rows))

    def sort_key(self):
        return (self.dim, self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.field == other.field
                and self.m == other.m
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.m, self.basis))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        q = self.field.q
        vecs = ",".join(str(vector_to_int(b, q)) for b in self.basis)
        return f"<{self.dim}-subspace of F_{q}^{self.m}: [{vecs}]>"


def span(field: Field, m: int, vectors) -> Subspace:
    """Canonical subspace spanned by the given vectors (empty -> zero)."""
    vecs = [tuple(v) for v in vectors]
    for v in vecs:
        if len(v) != m:
            raise MixedAmbient(f"vector of length {len(v)} in F^{m}")
        if any(c < 0 or c >= field.q for c in v):
            raise ValueError(f"coordinate out of range in {v}")
    return Subspace(field, m, rref(field, vecs))


def span_ints(field: Field, m: int, ints) -> Subspace:
    return span(field, m, [vector_from_int(n, field.q, m) for n in ints])


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_space(a, b)
    return Subspace(a.field, a.m, rref(a.field, a.basis + b.basis))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus intersection of two subspaces of the same space."""
    _check_same_space(a, b)
    field, m = a.field, a.m
    rows = [row + row for row in a.basis] + [row + (0,) * m for row in b.basis]
    reduced = rref(field, rows)
    inter = [row[m:] for row in reduced if not any(row[:m])]
    return Subspace(field, m, rref(field, inter))


def orthogonal_complement(s: Subspace) -> Subspace:
    return s.complement()


def _check_same_space(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.m != b.m:
        raise MixedAmbient(f"F_{a.field.q}^{a.m} vs F_{b.field.q}^{b.m}")


def gaussian_binomial(m: int, d: int, q: int) -> int:
    if d < 0 or d > m:
        return 0
    num = den = 1
    for i in range(d):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(field: Field, m: int, d: int):
    """Every d-subspace of F_q^m exactly once, basis matrices in
    lexicographic row-major order."""
    if field.q ** m > _ENUM_LIMIT:
        raise AmbientTooLarge(f"q^m = {field.q ** m} exceeds {_ENUM_LIMIT}")
    if d < 0 or d > m:
        return iter(())
    if d == 0:
        return iter((Subspace(field, m, ()),))
    q = field.q
    out = []
    for pivots in itertools.combinations(range(m), d):
        pivot_set = set(pivots)
        free = [(i, j) for i in range(d) for j in range(pivots[i] + 1, m)
                if j not in pivot_set]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * m for _ in range(d)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            out.append(Subspace(field, m, tuple(tuple(r) for r in rows)))
    out.sort(key=lambda s: s.basis)
    return iter(out)
