"""Number-theoretic support: orders, totients, cosets and N2 bookkeeping.

N2 is the set of positive integers dividing 2^i + 1 for some i >= 1; it
decides which irreducible factors of x^n - 1 are self-reciprocal.  The key
derived quantities are, per divisor j of n,

    gamma(j) = phi(j) / ord_j(2)        for j in N2
    beta(j)  = phi(j) / (2 ord_j(2))    for j not in N2

with totals s = sum gamma(j) (self-reciprocal factor count) and
t = sum beta(j) (reciprocal pair count), and

    B_n = sum of phi(j) over divisors j of n lying in N2.

Everything here is exact integer arithmetic; n is expected at desk scale
(<= ~10^6), so factorization is plain trial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=None)
def factorint(n: int) -> dict:
    """Prime factorization {p: e} by trial division."""
    if n < 1:
        raise ValueError("factorint expects a positive integer")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    step = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step  # 5, 7, 11, 13, ... (wheel mod 6)
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list:
    """Sorted list of divisors."""
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    """Euler's totient."""
    out = n
    for p in factorint(n):
        out -= out // p
    return out


@lru_cache(maxsize=None)
def ord2(j: int) -> int:
    """Multiplicative order of 2 modulo j, for odd j >= 1."""
    if j < 1 or j % 2 == 0:
        raise ValueError("order of 2 requires odd positive modulus")
    if j == 1:
        return 1
    e = phi(j)
    for q in factorint(e):
        while e % q == 0 and pow(2, e // q, j) == 1:
            e //= q
    return e


@lru_cache(maxsize=None)
def is_in_n2(l: int) -> bool:
    """Does l divide 2^i + 1 for some i >= 1?

    Equivalent order criterion: ord_l(2) is even and 2^(ord/2) = -1 mod l.
    The direct scan over i is kept in the tests as an independent check.
    """
    if l < 1 or l % 2 == 0:
        raise ValueError("N2 membership is defined for odd positive integers")
    if l == 1:
        return True
    e = ord2(l)
    return e % 2 == 0 and pow(2, e // 2, l) == l - 1


@dataclass(frozen=True)
class DivisorProfile:
    """Order/totient data for one divisor j of n."""

    j: int
    in_n2: bool
    ord2: int
    phi: int
    gamma: int | None  # phi/ord when j in N2
    beta: int | None   # phi/(2 ord) when j not in N2


@dataclass(frozen=True)
class DivisorProfiles:
    """All divisor profiles of n, with the s and t totals."""

    n: int
    profiles: tuple
    s: int
    t: int

    def __iter__(self):
        return iter(self.profiles)

    def __len__(self):
        return len(self.profiles)


def divisor_profiles(n: int) -> DivisorProfiles:
    """One profile per divisor of odd n; s counts self-reciprocal factors,
    t counts reciprocal pairs."""
    _require_odd(n)
    profs = []
    s = t = 0
    for j in divisors(n):
        e = ord2(j)
        ph = phi(j)
        if is_in_n2(j):
            if j > 1 and e % 2 != 0:
                raise ArithmeticError(f"odd order {e} for {j} in N2")
            g = ph // e
            assert g * e == ph
            profs.append(DivisorProfile(j, True, e, ph, g, None))
            s += g
        else:
            b = ph // (2 * e)
            assert 2 * b * e == ph, f"phi({j}) not divisible by 2*ord"
            profs.append(DivisorProfile(j, False, e, ph, None, b))
            t += b
    return DivisorProfiles(n, tuple(profs), s, t)


def b_n(n: int) -> int:
    """Sum of phi(j) over divisors j of n lying in N2."""
    _require_odd(n)
    return sum(phi(j) for j in divisors(n) if is_in_n2(j))


@dataclass(frozen=True)
class N2Factorization:
    """Coprime split n = d_prime * prod d_alpha by N2 class of the primes.

    d_prime collects prime powers p^e with p not in N2; d_alpha[a] collects
    those whose prime p is in N2 with 2^a exactly dividing ord_p(2).
    Absent map entries mean d_alpha = 1.
    """

    n: int
    d_prime: int
    d_alpha: dict

    def d(self, alpha: int) -> int:
        return self.d_alpha.get(alpha, 1)


def n2_factorization(n: int) -> N2Factorization:
    _require_odd(n)
    d_prime = 1
    d_alpha: dict = {}
    for p, e in factorint(n).items():
        if is_in_n2(p):
            a = _two_adic(ord2(p))
            if a == 0:
                # p > 1 in N2 forces an even order
                raise ArithmeticError(f"prime {p} in N2 with odd order")
            d_alpha[a] = d_alpha.get(a, 1) * p**e
        else:
            d_prime *= p**e
    return N2Factorization(n, d_prime, d_alpha)


def b_n_via_n2(n: int, fact: N2Factorization | None = None) -> int:
    """B_n from the N2-factorization: d_1 + sum over alpha>=2 of (d_alpha - 1).

    Only valid when n is not in N2 (the closed form's hypothesis).
    """
    _require_odd(n)
    if is_in_n2(n):
        raise ValueError(f"{n} is in N2; the closed form requires n outside N2")
    if fact is None:
        fact = n2_factorization(n)
    return fact.d(1) + sum(d - 1 for a, d in fact.d_alpha.items() if a >= 2)


def cyclotomic_cosets(n: int) -> list:
    """Orbits of i -> 2i on Z/nZ, each a tuple in orbit order from its
    smallest member; the list is sorted by that representative."""
    _require_odd(n)
    seen = [False] * n
    out = []
    for a in range(n):
        if seen[a]:
            continue
        orbit = [a]
        seen[a] = True
        x = 2 * a % n
        while x != a:
            orbit.append(x)
            seen[x] = True
            x = 2 * x % n
        out.append(tuple(orbit))
    return out


def _two_adic(k: int) -> int:
    a = 0
    while k % 2 == 0:
        k //= 2
        a += 1
    return a


def _require_odd(n: int):
    if n < 1 or n % 2 == 0:
        raise ValueError(f"length must be odd and positive, got {n}")
