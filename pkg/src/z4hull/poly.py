"""Exact polynomial arithmetic over Z4 and F2.

Polynomials are immutable value objects.  A PolyZ4 holds a little-endian
tuple of residues 0..3: index i is the coefficient of x^i, the zero
polynomial is the empty tuple, and the highest stored coefficient is
nonzero.  Inputs written with negative coefficients (x-1) canonicalize
to residues (x+3).

A PolyF2 packs its bit coefficients into a single int, least significant
bit first; ``coeffs`` exposes the same little-endian view as PolyZ4.

Two text forms are accepted by :meth:`PolyZ4.parse`: comma-separated
little-endian coefficients ("3,1,2,1") and human form ("x^3+2x^2+x+3",
"x^3+2x^2+x-1").  ``str()`` always emits the human form with
coefficients canonicalized to 0..3.
"""

from __future__ import annotations

import re

_TERM_RE = re.compile(r"^([+-]?)(\d*)(x(?:\^(\d+))?)?$")


def _normalize(coeffs):
    c = [x & 3 for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class PolyZ4:
    """A polynomial over Z4 as a normalized little-endian coefficient tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _normalize(coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if isinstance(other, PolyZ4):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("PolyZ4", self.coeffs))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __repr__(self):
        return f"PolyZ4({str(self)!r})"

    def __str__(self):
        return format_z4(self)

    @classmethod
    def parse(cls, text: str) -> "PolyZ4":
        """Parse comma-separated coefficients or human form."""
        s = text.strip().replace("−", "-").replace("–", "-")
        if "x" in s:
            return cls(_parse_human(s))
        if "," in s:
            return cls(int(t) for t in s.split(","))
        return cls([int(s)])

    @classmethod
    def x_pow(cls, k: int, c: int = 1) -> "PolyZ4":
        """The monomial c*x^k."""
        return cls([0] * k + [c])

    @classmethod
    def x_pow_n_minus_1(cls, n: int) -> "PolyZ4":
        """x^n - 1, the ambient modulus for length n."""
        return cls([3] + [0] * (n - 1) + [1])


def _parse_human(s: str):
    s = s.replace(" ", "").replace("**", "^").replace("*", "")
    if not s:
        raise ValueError("empty polynomial text")
    coeffs = {}
    for term in re.findall(r"[+-]?[^+-]+", s):
        m = _TERM_RE.match(term)
        if not m or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial term {term!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return out


def format_z4(p: PolyZ4) -> str:
    """Human form, highest degree first, coefficients in 0..3."""
    if p.is_zero():
        return "0"
    terms = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            x = "x" if e == 1 else f"x^{e}"
            terms.append(x if c == 1 else f"{c}{x}")
    return "+".join(terms)


def add(a: PolyZ4, b: PolyZ4) -> PolyZ4:
    """Coefficientwise sum mod 4."""
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] = (out[i] + c) & 3
    return PolyZ4(out)


def neg(a: PolyZ4) -> PolyZ4:
    return PolyZ4((-c) & 3 for c in a.coeffs)


def sub(a: PolyZ4, b: PolyZ4) -> PolyZ4:
    return add(a, neg(b))


def mul(a: PolyZ4, b: PolyZ4) -> PolyZ4:
    """Convolution product with coefficients mod 4."""
    if a.is_zero() or b.is_zero():
        return PolyZ4()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] = (out[i + j] + ca * cb) & 3
    return PolyZ4(out)


def mul_mod(a: PolyZ4, b: PolyZ4, n: int) -> PolyZ4:
    """Product in Z4[x]/(x^n - 1): exponents wrap mod n."""
    if n < 1:
        raise ValueError("modulus length must be >= 1")
    if a.is_zero() or b.is_zero():
        return PolyZ4()
    out = [0] * n
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            k = (i + j) % n
            out[k] = (out[k] + ca * cb) & 3
    return PolyZ4(out)


def fold_mod(a: PolyZ4, n: int) -> PolyZ4:
    """Reduce by x^n ≡ 1 (wrap exponents mod n)."""
    if a.degree < n:
        return a
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i % n] = (out[i % n] + c) & 3
    return PolyZ4(out)


def divrem_monic(a: PolyZ4, b: PolyZ4):
    """Division with remainder by a monic divisor; returns (q, r)."""
    if not b.is_monic():
        raise ValueError("divisor must be monic")
    r = list(a.coeffs)
    db = b.degree
    q = [0] * max(len(r) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            q[i - db] = c
            for j, cb in enumerate(b.coeffs):
                r[i - db + j] = (r[i - db + j] - c * cb) & 3
    return PolyZ4(q), PolyZ4(r)


def reciprocal(f: PolyZ4) -> PolyZ4:
    """a0^-1 * x^deg(f) * f(1/x) for monic f with unit constant term."""
    if not f.is_monic():
        raise ValueError("reciprocal requires a monic polynomial")
    a0 = f.coeffs[0]
    if a0 not in (1, 3):
        raise ValueError("reciprocal requires a unit constant term")
    inv = a0  # 1 and 3 are self-inverse in Z4
    return PolyZ4((inv * c) & 3 for c in reversed(f.coeffs))


def cyclic_conjugate(v: PolyZ4, n: int) -> PolyZ4:
    """x^n * v(1/x) reduced by x^n ≡ 1, defined for every v with deg < n.

    This extends the reciprocal to arbitrary length-n vectors: for a monic
    unit-constant v it differs from reciprocal(v) only by a unit factor
    x^(n-deg v), so both detect the same annihilators mod x^n - 1.
    """
    v = fold_mod(v, n)
    out = [0] * n
    for i, c in enumerate(v.coeffs):
        out[-i % n] = c
    return PolyZ4(out)


def mu(f: PolyZ4) -> "PolyF2":
    """Coefficientwise reduction mod 2 (the map sending 0,2 -> 0 and 1,3 -> 1)."""
    bits = 0
    for i, c in enumerate(f.coeffs):
        if c & 1:
            bits |= 1 << i
    return PolyF2.from_bits(bits)


class PolyF2:
    """A polynomial over F2, bit-packed little-endian."""

    __slots__ = ("bits",)

    def __init__(self, coeffs=()):
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        self.bits = bits

    @classmethod
    def from_bits(cls, bits: int) -> "PolyF2":
        if bits < 0:
            raise ValueError("negative bit pattern")
        p = cls.__new__(cls)
        p.bits = bits
        return p

    @property
    def coeffs(self):
        return tuple((self.bits >> i) & 1 for i in range(self.bits.bit_length()))

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def __eq__(self, other):
        if isinstance(other, PolyF2):
            return self.bits == other.bits
        return NotImplemented

    def __hash__(self):
        return hash(("PolyF2", self.bits))

    def __repr__(self):
        return f"PolyF2({str(self)!r})"

    def __str__(self):
        if self.bits == 0:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            if (self.bits >> e) & 1:
                terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
        return "+".join(terms)


def f2_add(a: PolyF2, b: PolyF2) -> PolyF2:
    return PolyF2.from_bits(a.bits ^ b.bits)


def f2_mul(a: PolyF2, b: PolyF2) -> PolyF2:
    from . import gf2

    return PolyF2.from_bits(gf2.mul(a.bits, b.bits))


def f2_divrem(a: PolyF2, b: PolyF2):
    from . import gf2

    if b.bits == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = gf2.divmod_(a.bits, b.bits)
    return PolyF2.from_bits(q), PolyF2.from_bits(r)
