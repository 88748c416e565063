"""Cyclic codes over Z4 as factor assignments, with dual, hull and type.

A cyclic code of odd length n is the ideal <f(x)g(x), 2f(x)> of
Z4[x]/(x^n - 1), where f, g, h are monic pairwise coprime with
f g h = x^n - 1.  Since every polynomial in play is a product of distinct
basic irreducible factors of x^n - 1, a code is represented by assigning
each factor of the FactorTable to exactly one of f, g or h.  All gcd/lcm
work is then min/max on exponent vectors; no polynomial remainder
sequences are ever needed (Z4[x] is not a gcd domain).

Key assignment-level facts used below, writing sigma for the index
permutation induced by the reciprocal involution:

    dual:  factor i lies in f' iff sigma(i) lies in h, in g' iff
           sigma(i) lies in g, in h' iff sigma(i) lies in f
    hull:  factor i lies in F  iff i in f or sigma(i) in h
           factor i lies in H  iff i in h and sigma(i) in f
           (everything else lies in G)

and the type of a code is 4^k1 2^k2 with k1 = deg h, k2 = deg g.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .factor import FactorTable, factor_table
from .poly import PolyZ4, cyclic_conjugate, divrem_monic, mul, mul_mod

IN_F, IN_G, IN_H = 0, 1, 2
_LETTER = {IN_F: "f", IN_G: "g", IN_H: "h"}


class CodeType(NamedTuple):
    """Type 4^k1 2^k2; the code has 4^k1 * 2^k2 codewords."""

    k1: int
    k2: int


class GeneratorPair(NamedTuple):
    """Generators <a, 2b> of the ideal; a = f*g and b = f as plain products."""

    a: PolyZ4
    b: PolyZ4


class CyclicCode:
    """A cyclic code of odd length n over Z4, as a factor assignment."""

    __slots__ = ("table", "assign")

    def __init__(self, table: FactorTable, assign):
        assign = tuple(assign)
        if len(assign) != len(table):
            raise ValueError(
                f"assignment length {len(assign)} != factor count {len(table)}"
            )
        if any(a not in (IN_F, IN_G, IN_H) for a in assign):
            raise ValueError("assignment entries must be IN_F, IN_G or IN_H")
        self.table = table
        self.assign = assign

    @property
    def n(self) -> int:
        return self.table.n

    def __eq__(self, other):
        if isinstance(other, CyclicCode):
            return self.n == other.n and self.assign == other.assign
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.assign))

    def __repr__(self):
        letters = "".join(_LETTER[a] for a in self.assign)
        return f"CyclicCode(n={self.n}, assign={letters})"

    def factor_product(self, roles) -> PolyZ4:
        """Product of the factors assigned to any of the given roles."""
        out = PolyZ4([1])
        for i, a in enumerate(self.assign):
            if a in roles:
                out = mul(out, self.table.factors[i])
        return out

    def generators(self) -> GeneratorPair:
        """<a, 2b> with a the product of f- and g-assigned factors and b the
        product of f-assigned factors."""
        return GeneratorPair(
            self.factor_product((IN_F, IN_G)), self.factor_product((IN_F,))
        )

    def dual(self) -> "CyclicCode":
        """The dual code <h*g*, 2h*> as a new assignment."""
        sigma = self.table.partner
        swap = {IN_F: IN_H, IN_G: IN_G, IN_H: IN_F}
        return CyclicCode(
            self.table, (swap[self.assign[sigma[i]]] for i in range(len(self.table)))
        )

    def hull(self) -> "CyclicCode":
        """The hull, <lcm(fg, h*g*), 2 lcm(f, h*)>, as a new assignment."""
        sigma = self.table.partner
        a = self.assign
        out = []
        for i in range(len(self.table)):
            if a[i] == IN_F or a[sigma[i]] == IN_H:
                out.append(IN_F)
            elif a[i] == IN_H and a[sigma[i]] == IN_F:
                out.append(IN_H)
            else:
                out.append(IN_G)
        return CyclicCode(self.table, out)

    def type_of(self) -> CodeType:
        """Type read off the assignment: k1 = deg(h part), k2 = deg(g part)."""
        k1 = k2 = 0
        for i, a in enumerate(self.assign):
            if a == IN_H:
                k1 += self.table.factors[i].degree
            elif a == IN_G:
                k2 += self.table.factors[i].degree
        return CodeType(k1, k2)

    def dim2(self) -> int:
        """log2 of the cardinality: 2*k1 + k2."""
        t = self.type_of()
        return 2 * t.k1 + t.k2

    def factored_generator_strings(self):
        """((first, second)) display strings, e.g. ("(x+3)(x^3+...)", "2(x+3)").

        The first generator is the f*g product; when every factor lands in
        it the product is x^n - 1, which is 0 in the quotient ring, and the
        string collapses accordingly.  Empty products render as "1".
        """
        fg = [i for i, a in enumerate(self.assign) if a != IN_H]
        f = [i for i, a in enumerate(self.assign) if a == IN_F]
        first = "0" if len(fg) == len(self.table) else _product_string(self.table, fg)
        if len(f) == len(self.table):
            second = "0"
        elif not f:
            second = "2"
        else:
            second = "2" + _product_string(self.table, f)
        return first, second


def _product_string(table: FactorTable, indices) -> str:
    if not indices:
        return "1"
    return "".join(f"({table.factors[i]})" for i in indices)


def all_codes(table: FactorTable):
    """All 3^(s+2t) cyclic codes of length n, in deterministic order."""
    for assign in product((IN_F, IN_G, IN_H), repeat=len(table)):
        yield CyclicCode(table, assign)


def code_from_fg(table: FactorTable, f: PolyZ4, g: PolyZ4) -> CyclicCode:
    """Build a code from monic f and g, validating that each is a product
    of distinct table factors and that they share none (h is inferred)."""
    assign = [IN_H] * len(table)

    def absorb(p: PolyZ4, role: int, name: str):
        if p.is_zero():
            raise ValueError(f"{name} must not be the zero polynomial")
        if not p.is_monic():
            raise ValueError(f"{name} must be monic (a product of table factors)")
        rem = p
        for i, fac in enumerate(table.factors):
            if rem.degree < fac.degree:
                continue
            q, r = divrem_monic(rem, fac)
            if r.is_zero():
                if assign[i] != IN_H:
                    raise ValueError(
                        f"factor {fac} of {name} already used; f and g must be "
                        "coprime products of distinct factors"
                    )
                assign[i] = role
                rem = q
        if rem != PolyZ4([1]):
            raise ValueError(f"{name} is not a product of table factors")

    absorb(f, IN_F, "f")
    absorb(g, IN_G, "g")
    return CyclicCode(table, assign)


def poly_shift_orthogonal(u: PolyZ4, v: PolyZ4, n: int) -> bool:
    """Is u orthogonal to v and all of v's cyclic shifts?

    Equivalent to u(x) * v~(x) = 0 in Z4[x]/(x^n - 1), where v~ is the
    cyclic conjugate x^n v(1/x); for monic unit-constant v this agrees
    with the reciprocal up to a unit, and it is defined for every v.
    """
    from .poly import fold_mod

    return mul_mod(fold_mod(u, n), cyclic_conjugate(v, n), n).is_zero()


def example_code(n: int = 7) -> CyclicCode:
    """The worked length-7 code <(x^3+2x^2+x+3)(x^3+3x^2+2x+3), 2(x^3+2x^2+x+3)>."""
    table = factor_table(n)
    f = PolyZ4.parse("x^3+2x^2+x+3")
    g = PolyZ4.parse("x^3+3x^2+2x+3")
    return code_from_fg(table, f, g)
