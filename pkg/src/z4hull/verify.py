"""Cross-check suite behind ``z4hull verify`` and the acceptance tests.

Three levels:

  codeword  exhaustive codeword-level validation at small n: for every
            cyclic code, the brute-force hull equals the span of the
            structural hull generators, cardinalities match the type, and
            |C| * |C_dual| = 4^n
  tables    reproduction of the frozen reference tables (hull types up to
            35, averages up to 53), the worked length-7 example, counting
            consistency, fiber partitions, factor sweeps
  bounds    number-theory sweep: the closed form for B_n, the exactness
            criterion E(n) = n/3, and the 11n/27 <= E(n) < 5n/9 window

Every check returns a CheckResult; a False anywhere means either a broken
invariant of the implementation or a falsified formula, and the CLI turns
it into a nonzero exit code.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import refdata
from .analytics import (
    average_dim2,
    check_bounds,
    codes_with_hull,
    count_by_dim2,
    expectation_checks,
    hull_dim2_set,
    hull_type_set,
    type_set_by_k1,
)
from .arith import b_n, b_n_via_n2, divisor_profiles, is_in_n2, ord2
from .code import all_codes, example_code, poly_shift_orthogonal
from .factor import factor_table
from .gf2 import is_irreducible
from .oracle import (
    all_shift_orthogonal,
    brute_dual,
    brute_hull,
    code_codewords,
    span,
    poly_vector,
)
from .poly import PolyZ4, fold_mod, mu

CODEWORD_MAX = 9
STRUCTURAL_MAX = 35
SWEEP_MAX = 10_000
FACTOR_SWEEP_MAX = 201
HISTOGRAM_MAX = 15
FIBER_MAX = 9


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _result(name, ok, detail=""):
    return CheckResult(name, bool(ok), detail)


# ---------------------------------------------------------------------------
# codeword level
# ---------------------------------------------------------------------------

def checks_codeword(n_max: int = CODEWORD_MAX) -> list:
    if n_max > CODEWORD_MAX:
        raise ValueError(f"codeword-level checks support n <= {CODEWORD_MAX}")
    out = []
    rng = random.Random(20240413)
    for n in range(1, n_max + 1, 2):
        table = factor_table(n)
        bad = []
        total = 0
        for c in all_codes(table):
            total += 1
            words = code_codewords(c)
            t = c.type_of()
            if len(words) != 4**t.k1 * 2**t.k2:
                bad.append(f"|C| != 4^{t.k1} 2^{t.k2} for {c!r}")
                continue
            dual_words = brute_dual(words)
            if len(words) * len(dual_words) != 4**n:
                bad.append(f"|C|*|C_dual| != 4^{n} for {c!r}")
                continue
            structural_dual = code_codewords(c.dual())
            if structural_dual.words != dual_words.words:
                bad.append(f"dual mismatch for {c!r}")
                continue
            hull_words = code_codewords(c.hull())
            if hull_words.words != (words.words & dual_words.words):
                bad.append(f"hull mismatch for {c!r}")
        out.append(
            _result(
                f"codeword n={n}: hulls/duals/cardinalities over all {total} codes",
                not bad,
                bad[0] if bad else f"{total} codes verified",
            )
        )

        mismatches = 0
        trials = 50
        for _ in range(trials):
            u = PolyZ4([rng.randrange(4) for _ in range(n)])
            v = PolyZ4([rng.randrange(4) for _ in range(n)])
            lhs = poly_shift_orthogonal(u, v, n)
            rhs = all_shift_orthogonal(
                poly_vector(fold_mod(u, n), n), poly_vector(fold_mod(v, n), n), n
            )
            if lhs != rhs:
                mismatches += 1
        out.append(
            _result(
                f"codeword n={n}: shift-orthogonality criterion vs {trials} dot-product scans",
                mismatches == 0,
                f"{mismatches} mismatches",
            )
        )
    return out


# ---------------------------------------------------------------------------
# tables level
# ---------------------------------------------------------------------------

def checks_tables() -> list:
    out = []

    bad = [
        n
        for n, expected in refdata.HULL_TYPES.items()
        if type_set_by_k1(n) != expected
    ]
    out.append(
        _result(
            "hull-type table reproduction (odd 3..35)",
            not bad,
            f"mismatch at n={bad}" if bad else f"{len(refdata.HULL_TYPES)} rows",
        )
    )

    bad = []
    for n, (bn, (num, den)) in refdata.ETABLE.items():
        if b_n(n) != bn or average_dim2(n) != Fraction(num, den):
            bad.append(n)
    out.append(
        _result(
            "average 2-dimension table reproduction (odd 3..53)",
            not bad,
            f"mismatch at n={bad}" if bad else f"{len(refdata.ETABLE)} rows",
        )
    )

    out.append(_check_example7())

    bad = []
    for n in range(1, STRUCTURAL_MAX + 1, 2):
        counts = count_by_dim2(n)
        profs = divisor_profiles(n)
        if sum(counts.values()) != 3 ** (profs.s + 2 * profs.t):
            bad.append(f"count total at n={n}")
        if set(counts) != hull_dim2_set(n):
            bad.append(f"count support at n={n}")
        if {2 * k1 + k2 for k1, k2 in hull_type_set(n)} != hull_dim2_set(n):
            bad.append(f"type/dim2 consistency at n={n}")
        mean = Fraction(sum(l * c for l, c in counts.items()), sum(counts.values()))
        if mean != average_dim2(n):
            bad.append(f"count-weighted mean at n={n}")
    out.append(
        _result(
            f"counting consistency (odd n <= {STRUCTURAL_MAX})",
            not bad,
            bad[0] if bad else "totals, supports and means agree",
        )
    )

    bad = []
    for n in range(1, HISTOGRAM_MAX + 1, 2):
        table = factor_table(n)
        hist = Counter(c.hull().dim2() for c in all_codes(table))
        if dict(hist) != count_by_dim2(n):
            bad.append(f"histogram at n={n}")
        types = {c.hull().type_of() for c in all_codes(table)}
        if types != hull_type_set(n):
            bad.append(f"exhaustive type set at n={n}")
    out.append(
        _result(
            f"exhaustive hull histograms and type sets (odd n <= {HISTOGRAM_MAX})",
            not bad,
            bad[0] if bad else "enumerated ground truth matches",
        )
    )

    bad = []
    for n in range(1, FIBER_MAX + 1, 2):
        table = factor_table(n)
        codes = list(all_codes(table))
        assigned = Counter()
        for d in codes:
            for c in codes_with_hull(d):
                assigned[c.assign] += 1
        if len(assigned) != len(codes) or any(v != 1 for v in assigned.values()):
            bad.append(f"fiber partition at n={n}")
            continue
        for c in codes:
            if c not in codes_with_hull(c.hull()):
                bad.append(f"fiber round-trip at n={n}")
                break
    out.append(
        _result(
            f"hull fibers partition the code set (odd n <= {FIBER_MAX})",
            not bad,
            bad[0] if bad else "every code in exactly one fiber",
        )
    )

    try:
        expectation_checks()
        out.append(_result("per-factor expectations recompute to (1/3, 10/9)", True))
    except ArithmeticError as exc:
        out.append(_result("per-factor expectations recompute to (1/3, 10/9)", False, str(exc)))

    out.append(_check_factor_sweep())
    return out


def _check_example7():
    c = example_code(7)
    d = c.dual()
    h = c.hull()
    problems = []
    if d.factored_generator_strings() != (
        refdata.EXAMPLE7["dual_first"],
        refdata.EXAMPLE7["dual_second"],
    ):
        problems.append(f"dual generators {d.factored_generator_strings()}")
    if h.factored_generator_strings() != (
        refdata.EXAMPLE7["hull_first"],
        refdata.EXAMPLE7["hull_second"],
    ):
        problems.append(f"hull generators {h.factored_generator_strings()}")
    if h.type_of() != (0, 3) or h.dim2() != 3:
        problems.append(f"hull type {h.type_of()}")
    if len(code_codewords(h)) != 8 or len(brute_hull(code_codewords(c))) != 8:
        problems.append("hull cardinality != 8")
    return _result(
        "worked length-7 example end to end",
        not problems,
        "; ".join(problems) if problems else "generators, type (0,3), 8 codewords",
    )


def _check_factor_sweep(n_max: int = FACTOR_SWEEP_MAX):
    bad = []
    for n in range(1, n_max + 1, 2):
        try:
            table = factor_table(n)  # verifies product and counts on build
        except ArithmeticError as exc:
            bad.append(f"n={n}: {exc}")
            continue
        for p in table.factors:
            if not is_irreducible(mu(p).bits):
                bad.append(f"n={n}: mu({p}) reducible")
                break
        for i, p in enumerate(table.factors):
            j = table.divisor[i]
            if p.degree != ord2(j):
                bad.append(f"n={n}: factor degree != ord at j={j}")
                break
            if (table.partner[i] == i) != is_in_n2(j):
                bad.append(f"n={n}: self-reciprocal classification at j={j}")
                break
    return _result(
        f"factorization sweep (odd n <= {n_max}): product, irreducibility, counts",
        not bad,
        bad[0] if bad else "all tables verified",
    )


# ---------------------------------------------------------------------------
# bounds level
# ---------------------------------------------------------------------------

def checks_bounds(n_max: int = SWEEP_MAX - 1) -> list:
    if n_max > SWEEP_MAX:
        raise ValueError(f"bounds sweep supports n <= {SWEEP_MAX}")
    bad = []
    for n in range(1, n_max + 1, 2):
        inside = is_in_n2(n)
        if not inside and b_n_via_n2(n) != b_n(n):
            bad.append(f"closed form for B_n fails at n={n}")
            break
        try:
            rep = check_bounds(n)  # raises on any violated bound
        except ArithmeticError as exc:
            bad.append(str(exc))
            break
        if rep.tight != inside:
            bad.append(f"tightness/N2 mismatch at n={n}")
            break
    return [
        _result(
            f"number-theory sweep (odd n <= {n_max}): B_n closed form, "
            "E(n)=n/3 iff n in N2, 11n/27 <= E(n) < 5n/9",
            not bad,
            bad[0] if bad else "no violations",
        )
    ]


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

LEVELS = ("codeword", "tables", "bounds", "all")


def run_level(level: str, max_n: int | None = None) -> list:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}, expected one of {LEVELS}")
    out = []
    if level in ("codeword", "all"):
        out.extend(checks_codeword(min(max_n or CODEWORD_MAX, CODEWORD_MAX)))
    if level in ("tables", "all"):
        out.extend(checks_tables())
    if level in ("bounds", "all"):
        out.extend(checks_bounds(min(max_n or SWEEP_MAX - 1, SWEEP_MAX - 1)))
    return out
