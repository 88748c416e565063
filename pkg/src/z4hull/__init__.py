"""Hulls of cyclic codes of odd length over Z4.

Exact-arithmetic library: factorization of x^n - 1 over Z4 via Hensel
lifting, cyclic codes as factor assignments with duals, hulls, types and
2-dimensions, closed-form analytics (achievable hull types, counts per
2-dimension, the exact average E(n) = (5n - 2 B_n)/9 with its bounds),
and a brute-force codeword oracle for small lengths.
"""

from .analytics import (
    BoundsReport,
    ExpectationReport,
    average_dim2,
    check_bounds,
    codes_with_hull,
    count_by_dim2,
    expectation_checks,
    hull_dim2_set,
    hull_type_set,
    type_set_by_k1,
)
from .arith import (
    DivisorProfile,
    DivisorProfiles,
    N2Factorization,
    b_n,
    b_n_via_n2,
    cyclotomic_cosets,
    divisor_profiles,
    is_in_n2,
    n2_factorization,
    ord2,
    phi,
)
from .code import (
    IN_F,
    IN_G,
    IN_H,
    CodeType,
    CyclicCode,
    GeneratorPair,
    all_codes,
    code_from_fg,
    example_code,
    poly_shift_orthogonal,
)
from .factor import FactorTable, factor_f2, factor_table, hensel_lift
from .oracle import (
    CodewordSet,
    brute_dual,
    brute_hull,
    code_codewords,
    pack,
    span,
    unpack,
)
from .poly import (
    PolyF2,
    PolyZ4,
    add,
    cyclic_conjugate,
    divrem_monic,
    f2_add,
    f2_divrem,
    f2_mul,
    mu,
    mul,
    mul_mod,
    reciprocal,
)

__version__ = "0.1.0"
