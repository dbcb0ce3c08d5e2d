"""Embedded multispread and partition instances from published computations.

Every entry is rebuilt from its compact description (orbit generators,
digit strings, or exponents of a primitive root) and verified against its
declared parameters on first access; a verification failure raises
immediately, since the data is the regression baseline for everything
else.  Binary vectors use the hexadecimal integer form, ternary ones
base-3 digit strings.
"""

from __future__ import annotations

from .core import Multispread, MultifoldPartition, verify, verify_partition
from .errors import InternalVerifyFailed
from .gf import make_field, prime_factors
from .linalg import Subspace, span, span_ints

# generators of the S3 x C2 symmetry shared by the four (5,3;3,5)_2 instances
_AUT_GENS = (
    ((1, 0, 0, 0, 0), (0, 0, 1, 0, 0), (0, 1, 1, 0, 0), (0, 0, 0, 0, 1), (0, 0, 0, 1, 1)),
    ((1, 0, 0, 0, 0), (0, 0, 1, 0, 0), (0, 1, 0, 0, 0), (0, 0, 0, 0, 1), (0, 0, 0, 1, 0)),
    ((1, 0, 0, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0)),
)

_A1_X_ORBIT_GENERATORS = {
    "A1-X1": (("00001 00010 10000", "00101 01010 10000"), "B"),
    "A1-X2": (("00001 00100 10000",), "B"),
    "A1-X3": (("10110 11001 10000",), "Bp"),
    "A1-X4": (("00111 01110 10000", "00101 01010 10000"), "Bp"),
}
_A1_COMMON_A = ("00001 00010", "10110 11001")
_A1_B = "00111 01110 11111"
_A1_BP = "10001 10010 11111"

_A1_20_4_DIM2 = """
00101,00012 10220,01002 10011,01010 12010,00120 10120,01211
10021,01200 10020,01210 10210,01021 01000,00111 10012,00112
"""
_A1_20_4_DIM3 = """
10021,01022,00120 10002,01020,00111 10102,01100,00010 10002,01012,00121
10022,01001,00121 10100,01001,00011 10022,01011,00121 10000,01010,00001
11100,00010,00001 10100,01200,00001 10010,01002,00101 10202,01101,00011
10010,01012,00121 10000,01102,00010 10022,01020,00102 10001,01022,00102
10002,01021,00100 10011,01011,00102 10012,01001,00100 10202,01202,00010
10022,01020,00100 10001,01001,00100 10100,01110,00001 10000,01011,00112
10200,01102,00011 10000,01000,00122 10010,01022,00102 10001,01022,00110
"""

_A1_12_5_DIM2 = """
10112,01210 01011,00111 10201,01111 12010,00001 10000,01110 11000,00102
"""
_A1_12_5_DIM3 = """
10100,01002,00010 10202,01001,00011 10010,00120,00001 10202,01002,00011
10011,01011,00120 10021,01022,00110 10001,01202,00010 10002,00100,00012
10010,01021,00110 10020,01000,00110 10002,01000,00111 10002,01002,00011
10020,01022,00120 10022,01001,00111 10001,01000,00121 10022,01012,00121
10021,01022,00101 10010,01000,00101 10010,01020,00101 10102,01001,00012
01100,00010,00001 10001,01202,00011 10002,01000,00102 10020,01001,00101
10000,01002,00121 11001,00100,00010 10022,01021,00102 10012,01012,00112
10012,01020,00122 10002,01020,00100 10001,01010,00112 10201,01202,00012
12000,00101,00012 10022,01002,00122 10011,01021,00112 10012,01012,00100
10102,01201,00010 10022,01001,00100 10021,01020,00112 10000,01011,00122
10001,01010,00120
"""

_A1_9_3_DIM3 = """
40,20,10 41,22,14 42,2d,1c 45,2c,13 49,2e,12 52,24,0e 62,16,09 65,08,03 23,19,04
"""
_A1_9_3_DIM4 = """
42,25,15,0d 43,21,13,08 43,27,12,0c 44,25,16,0e 46,25,11,0a 47,23,14,0c
40,21,1a,07 48,20,11,06 48,22,11,06 4a,21,19,07 4c,28,1a,01 43,32,0a,05
45,34,0d,02 54,34,0c,01 41,10,0a,05 44,15,09,02 28,04,02,01
"""

# F_2^9 = GF(512) with modulus z^9 + z^4 + 1; alpha = class of z
_A2_MODULUS = 0x211

_A2_PARTITION_I = (0, 1, 4, 10, 11, 14, 19, 21, 22, 23, 24, 25, 26, 30,
                   32, 37, 39, 44, 49, 50, 52, 53, 55, 61, 62, 63, 70, 72)
_A2_PARTITION_V = ((59, 184, 363, 378), (3, 81, 235, 332), (36, 64, 307, 361))

_A2_13_2_I = (8, 11, 19, 20, 23, 34, 35, 37, 43, 44, 50, 51, 62)
_A2_13_2_V = ((0, 1, 2, 3), (7, 9, 453, 167), (12, 159, 89, 178),
              (0, 78, 448, 158), (3, 442, 225, 86), (2, 372, 17, 164),
              (5, 83, 453, 382), (1, 150, 444, 374))

_A2_12_3_I = (0, 2, 4, 25, 32, 36, 50, 56, 62, 66, 68, 72)
_A2_12_3_V = ((12, 13, 191, 346), (27, 63, 64, 326), (20, 25, 26, 287),
              (54, 55, 96, 487), (15, 16, 186, 423), (27, 28, 99, 394),
              (2, 48, 59, 378), (24, 121, 226, 354), (63, 85, 179, 237),
              (31, 41, 97, 362), (59, 85, 327, 482), (21, 50, 104, 477),
              (18, 30, 93, 280))


def _apply(matrix, vec):
    return tuple(
        sum(matrix[i][j] * vec[j] for j in range(len(vec))) % 2
        for i in range(len(vec)))


def subspace_orbit(sub: Subspace, matrices=_AUT_GENS) -> set[Subspace]:
    """Closure of a subspace under the given invertible matrices."""
    seen = {sub}
    frontier = [sub]
    while frontier:
        s = frontier.pop()
        for mat in matrices:
            img = span(s.field, s.m, [_apply(mat, b) for b in s.basis])
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return seen


def _bits_sub(field, m, words: str) -> Subspace:
    return span(field, m, [tuple(int(c) for c in w) for w in words.split()])


def _digit_members(field, m, blob: str) -> list[Subspace]:
    out = []
    for item in blob.split():
        out.append(span(field, m, [tuple(int(c) for c in gen)
                                   for gen in item.split(",")]))
    return out


def _hex_members(field, m, blob: str) -> list[Subspace]:
    out = []
    for item in blob.split():
        out.append(span_ints(field, m, [int(tok, 16) for tok in item.split(",")]))
    return out


def _a2_field():
    big = make_field(2, 9, _A2_MODULUS)
    # the loaders below index powers of the class of z, which must generate
    alpha = 2
    for r in prime_factors(big.q - 1):
        if big.pow(alpha, (big.q - 1) // r) == 1:
            raise InternalVerifyFailed("modulus root is not primitive in GF(512)")
    return big, alpha


def _a2_members(i_list, v_list):
    # GF(512) does the arithmetic; element encodings double as F_2^9 vectors
    big, alpha = _a2_field()
    field = make_field(2)
    members = []
    coset_q = 8  # order of the fixed subfield F_8, exponent step 73
    for i in i_list:
        vecs = [big.pow(alpha, i + 73 * j) for j in range(coset_q - 1)]
        members.append(span_ints(field, 9, vecs))
    betas = [big.pow(alpha, 73 * j) for j in range(coset_q - 1)]
    for exps in v_list:
        gens = [big.pow(alpha, e) for e in exps]
        for beta in betas:
            members.append(span_ints(field, 9,
                                      [big.mul(beta, g) for g in gens]))
    return field, members


def _check(ms: Multispread, lam, mu, dim_counts) -> Multispread:
    got = {}
    for sub, mult in ms.members.items():
        got[sub.dim] = got.get(sub.dim, 0) + mult
    if (ms.lam, ms.mu) != (lam, mu) or got != dim_counts:
        raise InternalVerifyFailed(
            f"catalog entry verified as {ms.params} with dims {got}, "
            f"expected ({lam},{mu}) with {dim_counts}")
    return ms


def _build_a1_x(name: str) -> Multispread:
    field = make_field(2)
    own, b_kind = _A1_X_ORBIT_GENERATORS[name]
    members: set[Subspace] = set()
    for words in _A1_COMMON_A:
        members |= subspace_orbit(_bits_sub(field, 5, words))
    members |= subspace_orbit(
        _bits_sub(field, 5, _A1_B if b_kind == "B" else _A1_BP))
    for words in own:
        members |= subspace_orbit(_bits_sub(field, 5, words))
    return _check(verify(list(members), field, 5, 3), 5, 3, {2: 5, 3: 9})


def _build_20_4() -> Multispread:
    field = make_field(3)
    members = (_digit_members(field, 5, _A1_20_4_DIM2)
               + _digit_members(field, 5, _A1_20_4_DIM3))
    return _check(verify(members, field, 5, 3), 20, 4, {2: 10, 3: 28})


def _build_12_5() -> Multispread:
    field = make_field(3)
    members = (_digit_members(field, 5, _A1_12_5_DIM2)
               + _digit_members(field, 5, _A1_12_5_DIM3))
    return _check(verify(members, field, 5, 3), 12, 5, {2: 6, 3: 41})


def _build_9_3() -> Multispread:
    field = make_field(2)
    members = (_hex_members(field, 7, _A1_9_3_DIM3)
               + _hex_members(field, 7, _A1_9_3_DIM4))
    return _check(verify(members, field, 7, 4), 9, 3, {3: 9, 4: 17})


def _build_partition_9() -> MultifoldPartition:
    field, members = _a2_members(_A2_PARTITION_I, _A2_PARTITION_V)
    dims = sorted(s.dim for s in members)
    if dims != [3] * 28 + [4] * 21:
        raise InternalVerifyFailed("partition member dimensions are off")
    part = verify_partition(members, field, 9)
    if part.nu != 1:
        raise InternalVerifyFailed(f"partition fold {part.nu} != 1")
    return part


def _build_28_2() -> Multispread:
    field, members = _a2_members(_A2_PARTITION_I, _A2_PARTITION_V)
    weighted = [(s, 1 if s.dim == 3 else 2) for s in members]
    return _check(verify(weighted, field, 9, 4), 28, 2, {3: 28, 4: 42})


def _build_13_2() -> Multispread:
    field, members = _a2_members(_A2_13_2_I, _A2_13_2_V)
    return _check(verify(members, field, 9, 4), 13, 2, {3: 13, 4: 56})


def _build_12_3() -> Multispread:
    field, members = _a2_members(_A2_12_3_I, _A2_12_3_V)
    return _check(verify(members, field, 9, 4), 12, 3, {3: 12, 4: 91})


_BUILDERS = {
    "A1-X1": lambda: _build_a1_x("A1-X1"),
    "A1-X2": lambda: _build_a1_x("A1-X2"),
    "A1-X3": lambda: _build_a1_x("A1-X3"),
    "A1-X4": lambda: _build_a1_x("A1-X4"),
    "A1-20-4": _build_20_4,
    "A1-12-5": _build_12_5,
    "A1-9-3": _build_9_3,
    "A2-partition-9": _build_partition_9,
    "A2-28-2": _build_28_2,
    "A2-13-2": _build_13_2,
    "A2-12-3": _build_12_3,
}

_CACHE: dict[str, Multispread | MultifoldPartition] = {}


def catalog_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def catalog_entry(name: str) -> Multispread | MultifoldPartition:
    if name not in _BUILDERS:
        raise KeyError(f"no catalog entry {name!r}")
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


def appendix_catalog() -> dict[str, Multispread | MultifoldPartition]:
    """All embedded instances, verified."""
    return {name: catalog_entry(name) for name in _BUILDERS}
