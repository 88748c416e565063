import random

import pytest

from z4hull.code import all_codes, example_code
from z4hull.factor import factor_table
from z4hull.kernels import _pure
from z4hull.oracle import (
    CodewordSet,
    all_shift_orthogonal,
    brute_dual,
    brute_hull,
    code_codewords,
    cyclic_shift,
    pack,
    span,
    unpack,
)

try:
    from z4hull.kernels import _core
except ImportError:
    _core = None


# ---------------------------------------------------------------------------
# packing and spans
# ---------------------------------------------------------------------------

def test_pack_unpack_round_trip():
    vec = (3, 0, 2, 1, 1)
    assert unpack(pack(vec), 5) == vec


def test_cyclic_shift():
    assert unpack(cyclic_shift(pack((1, 2, 3)), 3), 3) == (3, 1, 2)


def test_span_of_zero():
    s = span([(0, 0, 0)], 3)
    assert s.words == {0}


def test_span_of_unit_vector_is_everything():
    s = span([(1, 0, 0)], 3)
    assert len(s) == 64


def test_span_guard():
    with pytest.raises(ValueError):
        span([(0,) * 15], 15)


def test_span_is_shift_and_addition_closed():
    s = code_codewords(example_code(7))
    low = sum(1 << (2 * j) for j in range(7))
    words = list(s.words)
    rng = random.Random(7)
    for _ in range(200):
        a, b = rng.choice(words), rng.choice(words)
        assert ((a ^ b) ^ (((a & b) & low) << 1)) in s
        assert cyclic_shift(a, 7) in s


# ---------------------------------------------------------------------------
# brute dual and hull
# ---------------------------------------------------------------------------

def test_brute_dual_of_zero_code():
    s = span([(0, 0, 0)], 3)
    assert len(brute_dual(s)) == 4**3


def test_brute_dual_full_scan_matches_generator_scan():
    s = code_codewords(example_code(7))
    no_gens = CodewordSet(7, s.words, None)
    assert brute_dual(no_gens).words == brute_dual(s).words


def test_full_scan_guard():
    s = CodewordSet(11, frozenset({0}), None)
    with pytest.raises(ValueError):
        brute_dual(s)


def test_example_cardinalities():
    c = example_code(7)
    words = code_codewords(c)
    assert len(words) == 32
    dual = brute_dual(words)
    assert len(words) * len(dual) == 4**7
    hull = brute_hull(words)
    assert len(hull) == 8
    assert hull.words == code_codewords(c.hull()).words


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_duality_of_cardinality_all_codes(n):
    for c in all_codes(factor_table(n)):
        words = code_codewords(c)
        t = c.type_of()
        assert len(words) == 4**t.k1 * 2**t.k2
        assert len(words) * len(brute_dual(words)) == 4**n


def test_two_rn_is_self_orthogonal():
    # 2*R_n: all doubled vectors; contained in its own dual since 2*2 = 0
    n = 5
    s = span([(2, 0, 0, 0, 0)], n)
    assert len(s) == 2**n
    assert brute_hull(s).words == s.words


# ---------------------------------------------------------------------------
# shift orthogonality reference
# ---------------------------------------------------------------------------

def test_all_shift_orthogonal_matches_structural():
    from z4hull.code import poly_shift_orthogonal
    from z4hull.poly import PolyZ4

    rng = random.Random(99)
    for n in (3, 5, 7, 9):
        for _ in range(100):
            u = [rng.randrange(4) for _ in range(n)]
            v = [rng.randrange(4) for _ in range(n)]
            assert all_shift_orthogonal(u, v, n) == poly_shift_orthogonal(
                PolyZ4(u), PolyZ4(v), n
            )


# ---------------------------------------------------------------------------
# kernel backends
# ---------------------------------------------------------------------------

@pytest.mark.skipif(_core is None, reason="compiled kernel not built")
def test_backends_agree():
    rng = random.Random(5)
    for n in (1, 2, 3, 4, 5):
        gens = [rng.randrange(1 << (2 * n)) for _ in range(3)]
        assert sorted(_core.dual_scan(gens, n)) == sorted(_pure.dual_scan(gens, n))
        assert sorted(_core.closure(gens, n)) == sorted(_pure.closure(gens, n))


def test_pure_kernel_guards():
    with pytest.raises(ValueError):
        _pure.dual_scan([0], 14)
    with pytest.raises(ValueError):
        _pure.closure([0], 0)
