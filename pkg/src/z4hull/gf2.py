"""Bit-packed F2[x] arithmetic and small Galois-field machinery.

Binary polynomials are plain ints, little-endian (bit i = coefficient of
x^i), the same convention SageMath and most F2 libraries use for packed
words.  On top of the ring operations this module builds GF(2^m) as
F2[y]/(p(y)) for an irreducible p found by exhaustive search, locates
elements of prescribed multiplicative order, and computes minimal
polynomials over F2.  All of it is deterministic, so repeated runs and
different processes produce identical factor tables.
"""

from __future__ import annotations

from functools import lru_cache

from . import arith

X = 0b10  # the polynomial x

# 8 -> 16 bit spread table: squaring over F2 interleaves zero bits.
_SQ8 = tuple(
    sum(((b >> i) & 1) << (2 * i) for i in range(8)) for b in range(256)
)


def degree(a: int) -> int:
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product."""
    if a < b:
        a, b = b, a
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def sqr(a: int) -> int:
    """Square (bit spread, no reduction)."""
    out = 0
    shift = 0
    while a:
        out |= _SQ8[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return out


def mod(a: int, p: int) -> int:
    if p == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dp = p.bit_length()
    da = a.bit_length()
    while da >= dp:
        a ^= p << (da - dp)
        da = a.bit_length()
    return a


def divmod_(a: int, p: int):
    if p == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dp = p.bit_length()
    q = 0
    da = a.bit_length()
    while da >= dp:
        q |= 1 << (da - dp)
        a ^= p << (da - dp)
        da = a.bit_length()
    return q, a


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def mulmod(a: int, b: int, p: int) -> int:
    return mod(mul(a, b), p)


def sqrmod(a: int, p: int) -> int:
    return mod(sqr(a), p)


def powmod(a: int, e: int, p: int) -> int:
    acc = 1
    a = mod(a, p)
    while e:
        if e & 1:
            acc = mulmod(acc, a, p)
        a = sqrmod(a, p)
        e >>= 1
    return acc


def is_irreducible(p: int) -> bool:
    """Deterministic irreducibility test over F2.

    p is irreducible iff x^(2^m) = x mod p and gcd(x^(2^(m/q)) - x, p) = 1
    for every prime q dividing m = deg p.
    """
    m = degree(p)
    if m <= 0:
        return False
    if not p & 1:
        return p == X  # x is the only irreducible with zero constant term
    if m == 1:
        return True
    need = {m // q for q in arith.factorint(m)}
    r = X
    for i in range(1, m + 1):
        r = sqrmod(r, p)
        # quick rejection: a factor of degree <= 4 shows up early
        if (i <= 4 or i in need) and i < m:
            if gcd(r ^ X, p) != 1:
                return False
    return r == X


@lru_cache(maxsize=None)
def find_irreducible(m: int) -> int:
    """Smallest monic irreducible of degree m (by packed value)."""
    if m < 1:
        raise ValueError("degree must be positive")
    if m == 1:
        return 0b11  # y + 1
    for tail in range(1, 1 << m, 2):
        p = (1 << m) | tail
        if is_irreducible(p):
            return p
    raise RuntimeError(f"no irreducible of degree {m} found")  # unreachable


@lru_cache(maxsize=None)
def root_field(j: int):
    """(m, modulus, zeta) with zeta of multiplicative order j in GF(2^m).

    m = ord_j(2) is the least extension containing a j-th root of unity.
    zeta is deterministic: candidates are exponentiated in increasing
    packed order until one of exact order j appears.
    """
    if j < 1 or j % 2 == 0:
        raise ValueError("order must be odd and positive")
    m = arith.ord2(j)
    p = find_irreducible(m)
    if j == 1:
        return m, p, 1
    e = ((1 << m) - 1) // j
    checks = [j // q for q in arith.factorint(j)]
    for cand in range(2, 1 << m):
        eta = powmod(cand, e, p)
        if eta != 1 and all(powmod(eta, c, p) != 1 for c in checks):
            return m, p, eta
    raise RuntimeError(f"no element of order {j} in GF(2^{m})")  # unreachable


def minimal_poly(eta: int, d: int, p: int) -> int:
    """Minimal polynomial (packed) of a field element of known degree d.

    Finds the unique monic dependency among 1, eta, ..., eta^d by Gaussian
    elimination on the F2 coordinate rows.
    """
    pivots = {}  # leading bit position -> (reduced row, combination mask)
    power = 1
    for k in range(d + 1):
        v, c = power, 1 << k
        while v:
            hb = v.bit_length()
            if hb not in pivots:
                break
            pv, pc = pivots[hb]
            v ^= pv
            c ^= pc
        if v == 0:
            if k != d:
                raise ArithmeticError(
                    f"element has degree {k}, expected {d}"
                )
            return c
        pivots[v.bit_length()] = (v, c)
        power = mulmod(power, eta, p)
    raise ArithmeticError("powers unexpectedly independent")


def orbit_product_poly(eta: int, orbit_size: int, p: int) -> int:
    """prod_{i<orbit_size} (x - eta^(2^i)) computed in GF(2^m)[x].

    Quadratic in the orbit size; retained as an independent cross-check of
    minimal_poly for small inputs.
    """
    coeffs = [1]  # little-endian, elements of GF(2^m)
    r = eta
    for _ in range(orbit_size):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= mulmod(c, r, p)
        coeffs = nxt
        r = sqrmod(r, p)
    bits = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):
            raise ArithmeticError("orbit product left the prime subfield")
        if c:
            bits |= 1 << i
    return bits
