"""Closed-form results: hull types, 2-dimension counts, fibers and E(n).

Per divisor j of n write d = ord_j(2).  The achievable hull types are

    k1 = sum over j not in N2 of d*a_j,          0 <= a_j <= beta(j)
    k2 = sum over j in N2 of d*b_j               0 <= b_j <= gamma(j)
       + sum over j not in N2 of d*c_j,          0 <= c_j <= 2*(beta(j)-a_j)

and the hull 2-dimensions are the values d*tri_j (tri <= gamma) plus
d*btri_j (btri <= 2 beta).  Counting codes by hull 2-dimension is a
product of per-factor weight polynomials: each self-reciprocal factor of
degree d contributes 2 + x^d (weights 2 - tri at tri = 0, 1), each
reciprocal pair contributes 2 + 4x^d + 3x^(2d) (the quadratic
-3/2 b^2 + 7/2 b + 2 evaluated at b = 0, 1, 2).  Distributivity makes the
generating-function convolution identical to summing over the raw
solution sets, in polynomial instead of exponential time.

All averages are exact rationals; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .arith import divisor_profiles, b_n, is_in_n2
from .code import IN_F, IN_G, IN_H, CodeType, CyclicCode

_STATES = ((0, 0), (1, 0), (0, 1))  # the three (exponent, exponent) choices


def _mask_fold(mask: int, bound: int, weight: int) -> int:
    """OR of mask shifted by c*weight for c = 0..bound (subset-sum bitset)."""
    out = 0
    for c in range(bound + 1):
        out |= mask << (c * weight)
    return out


def _mask_bits(mask: int):
    k = 0
    while mask:
        if mask & 1:
            yield k
        mask >>= 1
        k += 1


def hull_type_set(n: int) -> set:
    """The exact set of hull types {(k1, k2)} for odd length n.

    Folds divisors one at a time keeping, per partial k1, the bitset of
    achievable k2 values; OR-merging bitsets of equal partial k1 is sound
    because shift-convolution distributes over OR.
    """
    profs = divisor_profiles(n)
    base = 1
    for p in profs:
        if p.in_n2:
            base = _mask_fold(base, p.gamma, p.ord2)
    states = {0: base}
    for p in profs:
        if p.in_n2:
            continue
        nxt: dict = {}
        for k1, mask in states.items():
            for a in range(p.beta + 1):
                key = k1 + p.ord2 * a
                grown = _mask_fold(mask, 2 * (p.beta - a), p.ord2)
                nxt[key] = nxt.get(key, 0) | grown
        states = nxt
    return {
        CodeType(k1, k2) for k1, mask in states.items() for k2 in _mask_bits(mask)
    }


def type_set_by_k1(n: int) -> dict:
    """{k1: sorted list of k2} grouping of hull_type_set, for display."""
    groups: dict = {}
    for k1, k2 in hull_type_set(n):
        groups.setdefault(k1, []).append(k2)
    return {k1: sorted(v) for k1, v in sorted(groups.items())}


def hull_dim2_set(n: int) -> set:
    """All achievable hull 2-dimensions for odd length n."""
    mask = 1
    for p in divisor_profiles(n):
        bound = p.gamma if p.in_n2 else 2 * p.beta
        mask = _mask_fold(mask, bound, p.ord2)
    return set(_mask_bits(mask))


def count_by_dim2(n: int) -> dict:
    """{2-dimension: number of codes whose hull attains it}; the counts sum
    to 3^(s+2t), the total number of cyclic codes of length n."""
    counts = [1]
    for p in divisor_profiles(n):
        d = p.ord2
        if p.in_n2:
            term = {0: 2, d: 1}
            reps = p.gamma
        else:
            term = {0: 2, d: 4, 2 * d: 3}
            reps = p.beta
        for _ in range(reps):
            counts = _convolve(counts, term)
    return {l: c for l, c in enumerate(counts) if c}


def _convolve(counts, term):
    out = [0] * (len(counts) + max(term))
    for i, c in enumerate(counts):
        if c:
            for off, w in term.items():
                out[i + off] += c * w
    return out


# Fiber tables: per-factor choices (as f/g/h assignments) of the codes whose
# hull realizes a given exponent profile.  Self-reciprocal factors are keyed
# by the hull's second-generator exponent D (the first-generator exponent A
# is forced to 1); pairs are keyed by the hull exponents (B, C, E, F) of
# (f, f*) in the first and second generator.  Profiles outside the tables
# admit no codes.
_SELF_FIBER = {
    (1, 1): (IN_H, IN_F),  # D = 1: factor sits in h or f
    (1, 0): (IN_G,),       # D = 0: factor sits in g
}
_PAIR_FIBER = {
    (1, 1, 1, 1): ((IN_H, IN_H), (IN_F, IN_F)),
    (1, 1, 0, 1): ((IN_G, IN_F), (IN_H, IN_G)),
    (1, 1, 1, 0): ((IN_G, IN_H), (IN_F, IN_G)),
    (1, 0, 1, 0): ((IN_F, IN_H),),
    (0, 1, 0, 1): ((IN_H, IN_F),),
    (1, 1, 0, 0): ((IN_G, IN_G),),
}


def codes_with_hull(d: CyclicCode) -> list:
    """Every cyclic code whose hull equals d (possibly none).

    Built per factor from the fiber tables above; the cartesian product of
    the per-factor choices enumerates the exact fiber.
    """
    table = d.table
    slots = []
    for i in table.selfrec_indices:
        a = d.assign[i]
        key = (1 if a != IN_H else 0, 1 if a == IN_F else 0)
        choices = _SELF_FIBER.get(key, ())
        if not choices:
            return []
        slots.append(((i,), tuple((c,) for c in choices)))
    for i, k in table.pair_indices:
        ai, ak = d.assign[i], d.assign[k]
        key = (
            1 if ai != IN_H else 0,
            1 if ak != IN_H else 0,
            1 if ai == IN_F else 0,
            1 if ak == IN_F else 0,
        )
        choices = _PAIR_FIBER.get(key, ())
        if not choices:
            return []
        slots.append(((i, k), choices))

    out = []
    for pick in product(*(choices for _, choices in slots)):
        assign = [IN_H] * len(table)
        for (idxs, _), values in zip(slots, pick):
            for pos, val in zip(idxs, values):
                assign[pos] = val
        out.append(CyclicCode(table, assign))
    return out


def average_dim2(n: int) -> Fraction:
    """E(n) = (5n - 2 B_n) / 9, exactly."""
    return Fraction(5 * n - 2 * b_n(n), 9)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    in_n2: bool
    e: Fraction
    lower: Fraction
    upper: Fraction
    tight: bool


def check_bounds(n: int) -> BoundsReport:
    """E(n) against its bounds: E(n) = n/3 exactly when n is in N2,
    otherwise 11n/27 <= E(n) < 5n/9 (strict above).

    A violated bound raises, since it would falsify either the closed
    forms or this implementation.
    """
    e = average_dim2(n)
    inside = is_in_n2(n)
    tight = e == Fraction(n, 3)
    if inside != tight:
        raise ArithmeticError(
            f"n={n}: E(n)={e} is {'=' if tight else '!='} n/3 but n is "
            f"{'in' if inside else 'not in'} N2"
        )
    if inside:
        return BoundsReport(n, True, e, e, e, True)
    lower, upper = Fraction(11 * n, 27), Fraction(5 * n, 9)
    if not (lower <= e < upper):
        raise ArithmeticError(f"n={n}: E(n)={e} violates [{lower}, {upper})")
    return BoundsReport(n, False, e, lower, upper, False)


@dataclass(frozen=True)
class ExpectationReport:
    selfrec: Fraction
    pair: Fraction


def expectation_checks() -> ExpectationReport:
    """Recompute the two per-factor expectations by exhausting the uniform
    cases: 1/3 for a self-reciprocal factor's 2-dimension weight, 10/9 for
    a reciprocal pair's.

    Also re-verifies, over all 9 pair cases, the identity
    2 - min - max - min - max = z + d, that the pair's k1 weight a lies in
    {0, 1}, that a = 1 forces z + d = 0, and that the pair's 2-dimension
    weight equals 2a + z + d.  Any mismatch raises.
    """
    tri_total = 0
    for u, b in _STATES:
        tri = 1 - max(u, 1 - u - b)
        if tri not in (0, 1):
            raise ArithmeticError("self-reciprocal weight out of range")
        tri_total += tri
    selfrec = Fraction(tri_total, len(_STATES))

    btri_total = 0
    cases = 0
    for v, z in _STATES:
        for w, d in _STATES:
            lo1 = min(1 - v - z, w)
            hi1 = max(w, 1 - v - z)
            lo2 = min(1 - w - d, v)
            hi2 = max(v, 1 - w - d)
            if 2 - lo1 - hi1 - lo2 - hi2 != z + d:
                raise ArithmeticError("pair identity 2-min-max-min-max = z+d fails")
            a = lo1 + lo2
            if a not in (0, 1):
                raise ArithmeticError("pair k1 weight outside {0,1}")
            if a == 1 and z + d != 0:
                raise ArithmeticError("a=1 must force z+d=0")
            btri = 2 + lo1 - hi2 + lo2 - hi1
            if btri != 2 * a + z + d:
                raise ArithmeticError("pair 2-dimension weight != 2a + z + d")
            btri_total += btri
            cases += 1
    pair = Fraction(btri_total, cases)

    if selfrec != Fraction(1, 3) or pair != Fraction(10, 9):
        raise ArithmeticError(f"expectations ({selfrec}, {pair}) != (1/3, 10/9)")
    return ExpectationReport(selfrec, pair)
