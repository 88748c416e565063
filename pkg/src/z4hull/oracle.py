"""Brute-force codeword-level ground truth for small lengths.

Codes are materialized as sets of vectors packed 2 bits per coordinate;
duals come from an exhaustive orthogonality scan over all of Z4^n and
hulls from plain set intersection.  Nothing here shares logic with the
assignment-level algebra in :mod:`z4hull.code`, which is the point: the
two routes must agree and the tests insist on it.

Size guards are hard errors, never silent truncation: span and
generator-set scans allow n <= 13, scanning a code given only by its
full word set allows n <= 9 (4^9 = 262144 candidates).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .code import CyclicCode
from .poly import PolyZ4

SPAN_MAX_N = 13
FULL_SCAN_MAX_N = 9


def pack(vec) -> int:
    """Pack a residue vector into an int, coordinate i at bits 2i, 2i+1."""
    out = 0
    for i, c in enumerate(vec):
        out |= (c & 3) << (2 * i)
    return out


def unpack(word: int, n: int) -> tuple:
    return tuple((word >> (2 * i)) & 3 for i in range(n))


def cyclic_shift(word: int, n: int) -> int:
    """(c0..c_{n-1}) -> (c_{n-1}, c0, ..), on packed words."""
    mask = (1 << (2 * n)) - 1
    return ((word << 2) & mask) | (word >> (2 * (n - 1)))


@dataclass(frozen=True)
class CodewordSet:
    """A set of packed codewords, with the generators used to build it
    (None when the set came from a scan rather than a span)."""

    n: int
    words: frozenset
    gens: tuple | None = None

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return word in self.words

    def vectors(self):
        return [unpack(w, self.n) for w in sorted(self.words)]


def span(gens, n: int) -> CodewordSet:
    """Smallest additive-and-shift-closed subset of Z4^n containing gens.

    Accepts residue vectors or packed ints.  Closing the generator list
    under shifts first makes the additive closure shift-closed as well.
    """
    if not 1 <= n <= SPAN_MAX_N:
        raise ValueError(f"span supports 1 <= n <= {SPAN_MAX_N}, got {n}")
    packed = []
    for g in gens:
        w = g if isinstance(g, int) else pack(g)
        for _ in range(n):
            packed.append(w)
            w = cyclic_shift(w, n)
    packed = tuple(dict.fromkeys(packed))  # dedupe, keep order
    words = kernels.closure(packed, n)
    return CodewordSet(n, frozenset(words), packed)


def brute_dual(c: CodewordSet) -> CodewordSet:
    """All v in Z4^n orthogonal to every codeword of c, by exhaustive scan
    of Z4^n against a generating set of c (or all of c if none is known)."""
    n = c.n
    if c.gens is not None:
        if not 1 <= n <= SPAN_MAX_N:
            raise ValueError(f"generator scan supports n <= {SPAN_MAX_N}, got {n}")
        gens = c.gens
    else:
        if not 1 <= n <= FULL_SCAN_MAX_N:
            raise ValueError(f"full-set scan supports n <= {FULL_SCAN_MAX_N}, got {n}")
        gens = tuple(sorted(c.words))
    words = kernels.dual_scan(gens, n)
    return CodewordSet(n, frozenset(words), None)


def brute_hull(c: CodewordSet) -> CodewordSet:
    """c intersected with its brute-force dual."""
    dual = brute_dual(c)
    return CodewordSet(c.n, c.words & dual.words, None)


def poly_vector(p: PolyZ4, n: int) -> tuple:
    """Length-n coefficient vector of p (deg p must be < n)."""
    if p.degree >= n:
        raise ValueError(f"degree {p.degree} does not fit in length {n}")
    return tuple(p.coeffs[i] if i < len(p.coeffs) else 0 for i in range(n))


def code_codewords(code: CyclicCode) -> CodewordSet:
    """Materialize a cyclic code: span of its two generators (and shifts)."""
    a, b = code.generators()
    from .poly import fold_mod

    n = code.n
    vec_a = poly_vector(fold_mod(a, n), n)
    vec_2b = tuple((2 * x) & 3 for x in poly_vector(fold_mod(b, n), n))
    return span([vec_a, vec_2b], n)


def all_shift_orthogonal(u, v, n: int) -> bool:
    """Reference check for shift-orthogonality: every cyclic shift of v
    must have zero dot product with u, mod 4."""
    uw = list(u)
    w = pack(v)
    for _ in range(n):
        vd = unpack(w, n)
        if sum(a * b for a, b in zip(uw, vd)) % 4 != 0:
            return False
        w = cyclic_shift(w, n)
    return True
