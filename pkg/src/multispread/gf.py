"""Arithmetic in GF(p^l) with integer-encoded elements.

An element of GF(p^l) is the integer in [0, q) whose base-p digits are the
coefficients of its residue polynomial, least significant digit = constant
coefficient.  For p = 2 this makes addition a XOR and reproduces the usual
hexadecimal notation for binary field elements.

Fields are interned: make_field returns the same object for the same
(p, l, modulus), so field references can be compared by identity and
elements of equal fields mix freely.  Exp/log tables are built eagerly for
q <= 2**16; larger fields fall back to polynomial reduction.
"""

from __future__ import annotations

from typing import Callable

from .errors import (
    FieldMismatch,
    NonDivisorDegree,
    NonPrimeCharacteristic,
    NonPrimitiveModulus,
    ReducibleModulus,
)

_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Decompose q = p^l with p prime, or None."""
    if q < 2:
        return None
    fs = prime_factors(q)
    if len(fs) != 1:
        return None
    p = fs[0]
    l = 0
    while q > 1:
        q //= p
        l += 1
    return p, l


# -- dense polynomials over GF(p): coefficient lists, ascending degree --

def _digits(n: int, p: int) -> list[int]:
    if n == 0:
        return [0]
    out = []
    while n:
        out.append(n % p)
        n //= p
    return out


def _undigits(c: list[int], p: int) -> int:
    n = 0
    for d in reversed(c):
        n = n * p + d
    return n


def _trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            f = (c * inv_lead) % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * m[j]) % p
    return _trim(a[:dm] or [0])


def _poly_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b != [0]:
        a, b = b, _poly_mod(a, b, p)
    return a


def _is_irreducible(m: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    l = len(m) - 1
    if l < 1:
        return False
    if l == 1:
        return True
    x = [0, 1]
    # x^(p^l) == x mod m
    xp = _poly_powmod(x, p ** l, m, p)
    if _trim([(xi - yi) % p for xi, yi in
              zip(xp + [0] * len(x), x + [0] * len(xp))]) != [0]:
        return False
    for r in prime_factors(l):
        xr = _poly_powmod(x, p ** (l // r), m, p)
        diff = _trim([(a - b) % p for a, b in
                      zip(xr + [0] * len(x), x + [0] * len(xr))])
        g = _poly_gcd(m, diff, p)
        if len(g) - 1 > 0:
            return False
    return True


class Field:
    """GF(p^l); construct through make_field."""

    def __init__(self, p: int, l: int, modulus: int):
        self.p = p
        self.l = l
        self.q = p ** l
        self.modulus = modulus
        self._mod_digits = _digits(modulus, p)
        self.exp: list[int] | None = None
        self.log: list[int] | None = None
        self.generator = 1
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    # bootstrap arithmetic, used before tables exist

    def _mul_raw(self, a: int, b: int) -> int:
        if self.l == 1:
            return (a * b) % self.p
        prod = _poly_mul(_digits(a, self.p), _digits(b, self.p), self.p)
        return _undigits(_poly_mod(prod, self._mod_digits, self.p), self.p)

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _has_full_order(self, a: int) -> bool:
        for r in prime_factors(self.q - 1):
            if self._pow_raw(a, (self.q - 1) // r) == 1:
                return False
        return True

    def _build_tables(self) -> None:
        q = self.q
        if q == 2:
            self.generator = 1
            self.exp = [1]
            self.log = [-1, 0]
            return
        g = next(a for a in range(2, q) if self._has_full_order(a))
        exp = [0] * (q - 1)
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, g)
        self.generator = g
        self.exp = exp
        self.log = log

    # element arithmetic on plain ints

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.l == 1:
            return (a + b) % self.p
        p, out, mult = self.p, 0, 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.l == 1:
            return (-a) % self.p
        p, out, mult = self.p, 0, 1
        while a:
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.exp is not None:
            return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.exp is not None:
            return self.exp[(-self.log[a]) % (self.q - 1)]
        return self._pow_raw(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of 0")
            return 0
        if self.exp is not None:
            return self.exp[(self.log[a] * e) % (self.q - 1)]
        if e < 0:
            return self._pow_raw(self.inv(a), -e)
        return self._pow_raw(a, e % (self.q - 1) if a else e)

    def elements(self) -> range:
        return range(self.q)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value % self.q)

    __call__ = element

    def primitive_element(self) -> int:
        """Smallest element encoding of multiplicative order q - 1."""
        if self.q == 2:
            return 1
        if self.exp is not None:
            return next(a for a in range(2, self.q)
                        if gcd(self.log[a], self.q - 1) == 1)
        return next(a for a in range(2, self.q) if self._has_full_order(a))

    def trace_to(self, k: int) -> Callable[[int], int]:
        """The trace onto the order-p^k subfield: x -> sum of x^(p^(k*j))."""
        if self.l % k != 0:
            raise NonDivisorDegree(f"{k} does not divide extension degree {self.l}")
        steps = self.l // k
        pk = self.p ** k

        def tr(x: int) -> int:
            acc = x
            y = x
            for _ in range(steps - 1):
                y = self.pow(y, pk)
                acc = self.add(acc, y)
            return acc

        return tr

    def subfield_elements(self, k: int) -> list[int]:
        """All elements of the order-p^k subfield, ascending."""
        if self.l % k != 0:
            raise NonDivisorDegree(f"{k} does not divide extension degree {self.l}")
        sub_q = self.p ** k
        if sub_q == self.q:
            return list(range(self.q))
        if self.exp is not None:
            step = (self.q - 1) // (sub_q - 1)
            return sorted([0] + [self.exp[j * step] for j in range(sub_q - 1)])
        return [x for x in range(self.q) if self.pow(x, sub_q) == x]

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.l, self.modulus)
                == (other.p, other.l, other.modulus))

    def __hash__(self):
        return hash((self.p, self.l, self.modulus))

    def __reduce__(self):
        return (make_field, (self.p, self.l, self.modulus))

    def __repr__(self):
        return f"GF({self.q}, modulus={self.modulus:#x})"


class FieldElement:
    """A field element wrapped with its owning field, for operator syntax."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return other % self.field.q
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.value, v))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.field.q}):{self.value}"


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


_FIELD_CACHE: dict[tuple[int, int, int], Field] = {}


def default_modulus(p: int, l: int) -> int:
    """Smallest-encoding monic irreducible polynomial of degree l over GF(p)."""
    for n in range(p ** l, 2 * p ** l):
        if _is_irreducible(_digits(n, p), p):
            return n
    raise AssertionError("unreachable: irreducibles of every degree exist")


def make_field(p: int, l: int = 1, modulus: int | None = None,
               require_primitive: bool = False) -> Field:
    """Construct (or fetch the interned) GF(p^l).

    When modulus is omitted a deterministic irreducible is chosen by
    exhaustive scan, smallest integer encoding first.  With
    require_primitive=True the residue class of the variable must generate
    the multiplicative group, otherwise NonPrimitiveModulus is raised.
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if l < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        modulus = default_modulus(p, l)
    else:
        digits = _digits(modulus, p)
        if len(digits) - 1 != l or digits[-1] != 1:
            raise ReducibleModulus(
                f"modulus {modulus:#x} is not monic of degree {l} over GF({p})")
        if not _is_irreducible(digits, p):
            raise ReducibleModulus(f"modulus {modulus:#x} factors over GF({p})")
    key = (p, l, modulus)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = Field(p, l, modulus)
        _FIELD_CACHE[key] = field
    if require_primitive:
        root = _undigits(_poly_mod([0, 1], _digits(modulus, p), p), p)
        order = field.q - 1
        for r in prime_factors(order) if order > 1 else []:
            if field.pow(root, order // r) == 1:
                raise NonPrimitiveModulus(
                    f"root of {modulus:#x} has order dividing {order // r}")
    return field


class SubfieldView:
    """GF(p^L) read as a vector space over a subfield GF(p^d).

    Coordinates are taken in the basis z^(m-1), ..., z, 1 where z is the
    residue class of the variable and m = L/d; the subfield scalars are
    re-encoded into the canonical small field via a root of its modulus.
    For a prime base field this makes the coordinate vector of x exactly
    the base-p digit string of its encoding, most significant digit first.
    """

    def __init__(self, big: Field, small: Field):
        if big.p != small.p or big.l % small.l != 0:
            raise NonDivisorDegree(
                f"GF({small.q}) is not a subfield of GF({big.q})")
        self.big = big
        self.small = small
        self.m = big.l // small.l
        p, L, d = big.p, big.l, small.l
        if d == 1:
            self._theta = 1
        else:
            self._theta = self._find_root()
        # F_p-matrix: column d*b + a holds the digits of theta^a * z^b
        z = p if L > 1 else 1
        cols = []
        for b in range(self.m):
            zb = big.pow(z, b)
            for a in range(d):
                e = big.mul(big.pow(self._theta, a), zb)
                cols.append(_digits(e, p) + [0] * (L - len(_digits(e, p))))
        self._solve = _invert_fp_matrix(cols, p)

    def _find_root(self) -> int:
        big, small = self.big, self.small
        mod_digits = _digits(small.modulus, big.p)
        for cand in big.subfield_elements(small.l):
            acc = 0
            for c in reversed(mod_digits):
                acc = big.add(big.mul(acc, cand), c % big.p)
            if acc == 0:
                return cand
        raise AssertionError("subfield contains a root of every degree-d modulus")

    def embed(self, a: int) -> int:
        """Small-field element -> its copy inside the big field."""
        if self.small.l == 1:
            return a
        out = 0
        for d in reversed(_digits(a, self.big.p)):
            out = self.big.add(self.big.mul(out, self._theta), d)
        return out

    def to_vector(self, x: int) -> tuple[int, ...]:
        p, L, d = self.big.p, self.big.l, self.small.l
        digits = _digits(x, p)
        digits += [0] * (L - len(digits))
        y = self._solve(digits)
        coords = []
        for b in range(self.m):
            coords.append(_undigits(y[d * b:d * (b + 1)], p))
        coords.reverse()
        return tuple(coords)

    def from_vector(self, coords) -> int:
        z = self.big.p if self.big.l > 1 else 1
        out = 0
        for b, c in enumerate(reversed(tuple(coords))):
            out = self.big.add(out, self.big.mul(self.embed(c), self.big.pow(z, b)))
        return out


def _invert_fp_matrix(cols: list[list[int]], p: int):
    """Return a solver y -> M^-1 y for the matrix whose columns are cols."""
    n = len(cols)
    # rows of [M | I]
    aug = [[cols[j][i] for j in range(n)] + [1 if k == i else 0 for k in range(n)]
           for i in range(n)]
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if aug[r][col]), None)
        if piv is None:
            raise AssertionError("basis matrix is singular")
        aug[row], aug[piv] = aug[piv], aug[row]
        f = pow(aug[row][col], p - 2, p)
        aug[row] = [(v * f) % p for v in aug[row]]
        for r in range(n):
            if r != row and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(a - c * b) % p for a, b in zip(aug[r], aug[row])]
        row += 1
    inv_rows = [r[n:] for r in aug]

    def solve(y: list[int]) -> list[int]:
        return [sum(ri * yi for ri, yi in zip(r, y)) % p for r in inv_rows]

    return solve


def subfield_view(big: Field, small: Field) -> SubfieldView:
    return SubfieldView(big, small)
