"""Factor x^n - 1 over F2 and lift to Z4, assembling the grouped table.

For odd n the factorization over Z4 has the shape

    x^n - 1 = prod g_i(x) * prod f_j(x) f_j*(x)

with s self-reciprocal basic irreducibles g_i and t reciprocal pairs
(f_j, f_j*).  Factors are found per divisor j of n: GF(2^m) with
m = ord_j(2) contains an element zeta of order j, and the irreducible
factors attributed to j are the minimal polynomials of zeta^u for u
running over the doubling orbits of the units mod j.  Each F2 factor is
then Hensel-lifted to Z4 by the Graeffe even/odd split.

Canonical ordering: divisors ascending, factors within a divisor sorted
by little-endian coefficient tuple; in each reciprocal pair the
lexicographically smaller member is stored first.  All downstream results
are order-independent sets, but the fixed order keeps factor ids and
emitted tables reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd as _gcd

from . import arith, gf2
from .poly import PolyF2, PolyZ4, divrem_monic, mu, mul, reciprocal


@lru_cache(maxsize=None)
def _factor_bits_for_divisor(j: int) -> tuple:
    """Packed F2 minimal polynomials of the elements of order exactly j."""
    if j == 1:
        return (0b11,)  # x + 1
    m, p, zeta = gf2.root_field(j)
    out = []
    seen = set()
    for u in range(1, j):
        if _gcd(u, j) != 1 or u in seen:
            continue
        orbit = {u}
        x = 2 * u % j
        while x != u:
            orbit.add(x)
            x = 2 * x % j
        seen |= orbit
        if len(orbit) != m:
            raise ArithmeticError(f"orbit of unit {u} mod {j} has size {len(orbit)} != {m}")
        out.append(gf2.minimal_poly(gf2.powmod(zeta, u, p), m, p))
    out.sort(key=_bit_tuple)
    return tuple(out)


def _bit_tuple(bits: int) -> tuple:
    return tuple((bits >> i) & 1 for i in range(bits.bit_length()))


def factor_f2(n: int) -> list:
    """All distinct monic irreducible factors of x^n + 1 over F2,
    grouped by divisor ascending."""
    arith._require_odd(n)
    return [
        PolyF2.from_bits(b)
        for j in arith.divisors(n)
        for b in _factor_bits_for_divisor(j)
    ]


def hensel_lift(k: PolyF2, n: int) -> PolyZ4:
    """The unique monic basic irreducible over Z4 dividing x^n - 1 with
    mod-2 reduction k.

    Uses the Graeffe split k(x) = e(x^2) + x*o(x^2): the lift K satisfies
    K(x^2) = +-(e(x^2)^2 - x^2*o(x^2)^2) over Z4, sign chosen monic.  The
    result is post-verified (monic, reduces to k, divides x^n - 1 mod 4);
    failure of the verification is a hard internal error.
    """
    arith._require_odd(n)
    if k.is_zero():
        raise ValueError("cannot lift the zero polynomial")
    xn1 = PolyF2.from_bits((1 << n) | 1)
    _, rem = _f2_divrem_bits(xn1.bits, k.bits)
    if rem != 0:
        raise ValueError(f"{k} does not divide x^{n}+1 over F2")

    d = k.degree
    even = [0] * (d + 1)
    odd = [0] * (d + 1)
    for i in range(d + 1):
        if (k.bits >> i) & 1:
            (even if i % 2 == 0 else odd)[i] = 1
    e2 = PolyZ4(even)            # e(x^2)
    xo2 = PolyZ4(odd)            # x * o(x^2)
    # e(x^2)^2 - (x*o(x^2))^2, a polynomial in x^2
    g2 = mul(e2, e2) - mul(xo2, xo2)
    if g2.degree != 2 * d:
        raise ArithmeticError(f"Graeffe square lost degree for {k}")
    if g2.coeffs[2 * d] == 3:
        g2 = PolyZ4((-c) & 3 for c in g2.coeffs)
    lifted = [0] * (d + 1)
    for i, c in enumerate(g2.coeffs):
        if i % 2 == 1 and c != 0:
            raise ArithmeticError(f"Graeffe square has odd-degree term for {k}")
        if i % 2 == 0:
            lifted[i // 2] = c
    out = PolyZ4(lifted)

    if not out.is_monic() or mu(out) != k:
        raise ArithmeticError(f"Hensel lift verification failed for {k}")
    _, r = divrem_monic(PolyZ4.x_pow_n_minus_1(n), out)
    if not r.is_zero():
        raise ArithmeticError(f"lift of {k} does not divide x^{n}-1 over Z4")
    return out


def _f2_divrem_bits(a: int, b: int):
    return gf2.divmod_(a, b)


class FactorTable:
    """Grouped Z4 factorization of x^n - 1 with reciprocal classification.

    factors  : flat tuple of all basic irreducible PolyZ4 factors
    divisor  : divisor[i] is the j whose order-j roots factor i kills
    partner  : partner[i] is the reciprocal's index (i itself if self-reciprocal)
    selfrec  : list of (j, g) for the s self-reciprocal factors
    pairs    : list of (j, f, fstar) for the t reciprocal pairs, f the
               lexicographically smaller member
    """

    __slots__ = (
        "n", "factors", "divisor", "partner",
        "selfrec", "pairs", "selfrec_indices", "pair_indices", "s", "t",
    )

    def __init__(self, n: int):
        arith._require_odd(n)
        self.n = n
        entries = []
        for j in arith.divisors(n):
            for bits in _factor_bits_for_divisor(j):
                entries.append((j, hensel_lift(PolyF2.from_bits(bits), n)))
        entries.sort(key=lambda e: (e[0], e[1].coeffs))
        self.factors = tuple(p for _, p in entries)
        self.divisor = tuple(j for j, _ in entries)

        index_of = {p.coeffs: i for i, (_, p) in enumerate(entries)}
        partner = []
        for i, p in enumerate(self.factors):
            r = reciprocal(p)
            k = index_of.get(r.coeffs)
            if k is None:
                raise ArithmeticError(f"reciprocal of factor {p} missing from table")
            partner.append(k)
        self.partner = tuple(partner)

        selfrec, pairs, sr_idx, pr_idx = [], [], [], []
        for i, p in enumerate(self.factors):
            k = self.partner[i]
            if k == i:
                selfrec.append((self.divisor[i], p))
                sr_idx.append(i)
            elif i < k:
                pairs.append((self.divisor[i], p, self.factors[k]))
                pr_idx.append((i, k))
        self.selfrec = selfrec
        self.pairs = pairs
        self.selfrec_indices = tuple(sr_idx)
        self.pair_indices = tuple(pr_idx)
        self.s = len(selfrec)
        self.t = len(pairs)
        self._verify()

    def _verify(self):
        profs = arith.divisor_profiles(self.n)
        if self.s != profs.s or self.t != profs.t:
            raise ArithmeticError(
                f"factor counts ({self.s},{self.t}) disagree with totient "
                f"counts ({profs.s},{profs.t}) at n={self.n}"
            )
        prod = PolyZ4([1])
        for p in self.factors:
            prod = mul(prod, p)
        if prod != PolyZ4.x_pow_n_minus_1(self.n):
            raise ArithmeticError(f"factor product is not x^{self.n}-1")

    def __len__(self):
        return len(self.factors)

    def sigma(self, i: int) -> int:
        """Index permutation induced by the reciprocal involution."""
        return self.partner[i]

    def indices_for_divisor(self, j: int) -> list:
        return [i for i, d in enumerate(self.divisor) if d == j]


@lru_cache(maxsize=None)
def factor_table(n: int) -> FactorTable:
    return FactorTable(n)
