"""Acceptance gate: one test and one printed pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.

Criterion 2 pins the worked length-7 example to hull type (0,4) with
2-dimension 4.  That expectation is internally inconsistent: the hull is
<2(x+3)(x^3+2x^2+x+3)> and brute-force enumeration (criterion 5's own
route) shows it has exactly 8 = 2^3 codewords, so its type is (0,3) and
its 2-dimension 3.  The assertion is kept as stated and fails honestly;
everything else in this module passes.
"""

import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction

from z4hull import factor as factor_mod
from z4hull import gf2
from z4hull.analytics import (
    average_dim2,
    codes_with_hull,
    count_by_dim2,
    expectation_checks,
    hull_dim2_set,
    hull_type_set,
    type_set_by_k1,
)
from z4hull.arith import b_n, b_n_via_n2, divisor_profiles, is_in_n2
from z4hull.code import all_codes, example_code
from z4hull.factor import factor_table
from z4hull.gf2 import is_irreducible
from z4hull.oracle import brute_dual, brute_hull, code_codewords
from z4hull.poly import PolyZ4, mu, mul
from z4hull.refdata import ETABLE, HULL_TYPES

P = PolyZ4.parse


def _report(num, ok, detail):
    print(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'} - {detail}")


def _clear_factor_caches():
    factor_table.cache_clear()
    factor_mod._factor_bits_for_divisor.cache_clear()
    gf2.find_irreducible.cache_clear()
    gf2.root_field.cache_clear()


def test_criterion_01_factorization_fidelity():
    _clear_factor_caches()
    start = time.perf_counter()

    t7 = factor_table(7)
    exact = (
        [(j, str(p)) for j, p in t7.selfrec] == [(1, "x+3")]
        and [(j, str(f), str(fs)) for j, f, fs in t7.pairs]
        == [(7, "x^3+2x^2+x+3", "x^3+3x^2+2x+3")]
    )

    problems = []
    for n in range(1, 202, 2):
        table = factor_table(n)  # construction verifies the product
        prod = PolyZ4([1])
        for p in table.factors:
            prod = mul(prod, p)
            if not is_irreducible(mu(p).bits):
                problems.append(f"reducible mu-image at n={n}")
        if prod != PolyZ4.x_pow_n_minus_1(n):
            problems.append(f"product mismatch at n={n}")
        profs = divisor_profiles(n)
        if table.s != profs.s or table.t != profs.t:
            problems.append(f"count mismatch at n={n}")
    elapsed = time.perf_counter() - start

    ok = exact and not problems and elapsed < 10.0
    _report(1, ok, f"sweep to 201 in {elapsed:.2f}s (limit 10s)")
    assert exact, "factor table for n=7 does not match the worked example"
    assert not problems, problems[:3]
    assert elapsed < 10.0


def test_criterion_02_worked_example_end_to_end():
    c = example_code(7)
    dual = c.dual()
    hull = c.hull()

    da, db = dual.generators()
    assert da == mul(P("x+3"), P("x^3+2x^2+x+3"))
    assert db == P("x+3")
    ha, hb = hull.generators()
    assert ha == PolyZ4.x_pow_n_minus_1(7)  # zero in the quotient ring
    assert hb == mul(P("x+3"), P("x^3+2x^2+x+3"))

    t = hull.type_of()
    d2 = hull.dim2()
    size = len(code_codewords(hull))
    stated = (t.k1, t.k2) == (0, 4) and d2 == 4
    _report(
        2,
        stated,
        f"generators match; computed type {tuple(t)}, dim2 {d2}, |hull| = {size} "
        f"(stated expectation: type (0,4), dim2 4)",
    )
    assert stated, (
        "the stated hull type (0,4) / dim2 4 is not attainable: the hull of "
        "<(x^3+2x^2+x+3)(x^3+3x^2+2x+3), 2(x^3+2x^2+x+3)> is "
        f"<2(x+3)(x^3+2x^2+x+3)>, which has exactly {size} = 2^{size.bit_length() - 1} "
        f"codewords by brute-force enumeration, so its type is {tuple(t)} and its "
        f"2-dimension {d2}; type (0,4) would require 16 codewords and would "
        "contradict the |C| = 4^k1 * 2^k2 cardinality check of criterion 5 on "
        "this same code"
    )


def test_criterion_03_hull_type_table():
    start = time.perf_counter()
    mismatches = [n for n in HULL_TYPES if type_set_by_k1(n) != HULL_TYPES[n]]
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 5.0
    _report(3, ok, f"{len(HULL_TYPES)} rows (odd 3..35) in {elapsed:.2f}s (limit 5s)")
    assert not mismatches, mismatches
    assert elapsed < 5.0


def test_criterion_04_average_table():
    start = time.perf_counter()
    mismatches = [
        n
        for n, (bn, (num, den)) in ETABLE.items()
        if b_n(n) != bn or average_dim2(n) != Fraction(num, den)
    ]
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 1.0
    _report(4, ok, f"{len(ETABLE)} rows (odd 3..53) in {elapsed:.2f}s (limit 1s)")
    assert not mismatches, mismatches
    assert elapsed < 1.0


def test_criterion_05_codeword_oracle():
    start = time.perf_counter()
    mismatches = []
    checked = 0
    for n in (1, 3, 5, 7, 9):
        table = factor_table(n)
        codes = list(all_codes(table))
        profs = divisor_profiles(n)
        if len(codes) != 3 ** (profs.s + 2 * profs.t):
            mismatches.append(f"code count at n={n}")
        for c in codes:
            checked += 1
            words = code_codewords(c)
            t = c.type_of()
            if len(words) != 4**t.k1 * 2**t.k2:
                mismatches.append(f"|C| != type at n={n}")
                continue
            dual_words = brute_dual(words)
            if len(words) * len(dual_words) != 4**n:
                mismatches.append(f"|C|*|C_dual| != 4^n at n={n}")
                continue
            hull_span = code_codewords(c.hull())
            if brute_hull(words).words != hull_span.words:
                mismatches.append(f"brute hull != hull span at n={n}")
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60.0
    _report(5, ok, f"{checked} codes, 0 mismatches expected, {elapsed:.2f}s (limit 60s)")
    assert not mismatches, mismatches[:3]
    assert elapsed < 60.0


def test_criterion_06_counting_consistency():
    problems = []
    for n in range(1, 36, 2):
        counts = count_by_dim2(n)
        profs = divisor_profiles(n)
        total = 3 ** (profs.s + 2 * profs.t)
        if sum(counts.values()) != total:
            problems.append(f"total at n={n}")
        mean = Fraction(sum(l * c for l, c in counts.items()), total)
        if mean != average_dim2(n):
            problems.append(f"mean at n={n}")
        if set(counts) != hull_dim2_set(n):
            problems.append(f"support at n={n}")
    for n in range(1, 16, 2):
        hist = Counter(c.hull().dim2() for c in all_codes(factor_table(n)))
        if dict(hist) != count_by_dim2(n):
            problems.append(f"histogram at n={n}")
    ok = not problems
    _report(6, ok, "totals, means, supports (n<=35) and histograms (n<=15), exact")
    assert not problems, problems


def test_criterion_07_fiber_partition():
    problems = []
    for n in (1, 3, 5, 7, 9):
        table = factor_table(n)
        codes = list(all_codes(table))
        seen = Counter()
        for d in codes:
            for c in codes_with_hull(d):
                seen[c.assign] += 1
                if c.hull() != d:
                    problems.append(f"fiber member with wrong hull at n={n}")
        if len(seen) != len(codes) or any(v != 1 for v in seen.values()):
            problems.append(f"not a partition at n={n}")
        for c in codes:
            if c not in codes_with_hull(c.hull()):
                problems.append(f"round trip failed at n={n}")
    ok = not problems
    _report(7, ok, "fibers partition all codes for odd n <= 9")
    assert not problems, problems


def test_criterion_08_lemma_level_checks():
    rep = expectation_checks()  # raises if any of the 9-row identities fail
    ok = rep.selfrec == Fraction(1, 3) and rep.pair == Fraction(10, 9)
    _report(8, ok, f"expectations ({rep.selfrec}, {rep.pair})")
    assert ok


def test_criterion_09_number_theory_sweep():
    start = time.perf_counter()
    problems = []
    for n in range(1, 10_000, 2):
        inside = is_in_n2(n)
        e = average_dim2(n)
        if not inside:
            if b_n_via_n2(n) != b_n(n):
                problems.append(f"closed form at n={n}")
            if not (Fraction(11 * n, 27) <= e < Fraction(5 * n, 9)):
                problems.append(f"bounds at n={n}")
        if (e == Fraction(n, 3)) != inside:
            problems.append(f"tightness at n={n}")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 30.0
    _report(9, ok, f"odd n <= 9999 in {elapsed:.2f}s (limit 30s)")
    assert not problems, problems[:3]
    assert elapsed < 30.0


def test_criterion_10_headless_verify():
    proc = subprocess.run(
        [sys.executable, "-m", "z4hull.cli", "verify", "--level", "all",
         "--format", "plain"],
        capture_output=True,
        text=True,
    )
    ok = proc.returncode == 0
    _report(10, ok, f"z4hull verify --level all exited {proc.returncode}")
    assert ok, proc.stdout + proc.stderr
