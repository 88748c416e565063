"""Frozen reference values used by the verification suite and the tests.

HULL_TYPES: for each odd length 3..35, the achievable hull types grouped
as {k1: sorted k2 list}.  ETABLE: for each odd length 3..53, the pair
(B_n, E(n)) with E(n) as an exact (numerator, denominator).  Both tables
were fixed independently of the code in this package and act as the
ground truth the library must reproduce.
"""

HULL_TYPES = {
    3: {0: [0, 1, 2, 3]},
    5: {0: [0, 1, 4, 5]},
    7: {0: [0, 1, 3, 4, 6, 7], 3: [0, 1]},
    9: {0: [0, 1, 2, 3, 6, 7, 8, 9]},
    11: {0: [0, 1, 10, 11]},
    13: {0: [0, 1, 12, 13]},
    15: {0: list(range(16)), 4: list(range(8))},
    17: {0: [0, 1, 8, 9, 16, 17]},
    19: {0: [0, 1, 18, 19]},
    21: {
        0: list(range(22)),
        3: [0, 1, 2, 3, 6, 7, 8, 9, 12, 13, 14, 15],
        6: list(range(10)),
        9: [0, 1, 2, 3],
    },
    23: {0: [0, 1, 11, 12, 22, 23], 11: [0, 1]},
    25: {0: [0, 1, 4, 5, 20, 21, 24, 25]},
    27: {0: [0, 1, 2, 3, 6, 7, 8, 9, 18, 19, 20, 21, 24, 25, 26, 27]},
    29: {0: [0, 1, 28, 29]},
    31: {
        0: [0, 1, 5, 6, 10, 11, 15, 16, 20, 21, 25, 26, 30, 31],
        5: [0, 1, 5, 6, 10, 11, 15, 16, 20, 21],
        10: [0, 1, 5, 6, 10, 11],
        15: [0, 1],
    },
    33: {0: [0, 1, 2, 3, 10, 11, 12, 13, 20, 21, 22, 23, 30, 31, 32, 33]},
    35: {
        0: [0, 1, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20,
            22, 23, 24, 25, 27, 28, 29, 30, 31, 32, 34, 35],
        3: [0, 1, 4, 5, 12, 13, 16, 17, 24, 25, 28, 29],
        12: [0, 1, 3, 4, 5, 6, 7, 8, 10, 11],
        15: [0, 1, 4, 5],
    },
}

ETABLE = {
    3: (3, (1, 1)),
    5: (5, (5, 3)),
    7: (1, (11, 3)),
    9: (9, (3, 1)),
    11: (11, (11, 3)),
    13: (13, (13, 3)),
    15: (7, (61, 9)),
    17: (17, (17, 3)),
    19: (19, (19, 3)),
    21: (3, (11, 1)),
    23: (1, (113, 9)),
    25: (25, (25, 3)),
    27: (27, (9, 1)),
    29: (29, (29, 3)),
    31: (1, (17, 1)),
    33: (33, (11, 1)),
    35: (5, (55, 3)),
    37: (37, (37, 3)),
    39: (15, (55, 3)),
    41: (41, (41, 3)),
    43: (43, (43, 3)),
    45: (13, (199, 9)),
    47: (1, (233, 9)),
    49: (1, (27, 1)),
    51: (19, (217, 9)),
    53: (53, (53, 3)),
}

# The worked length-7 example: code, dual and hull generator displays,
# canonicalized to coefficients 0..3.
EXAMPLE7 = {
    "f": "x^3+2x^2+x+3",
    "g": "x^3+3x^2+2x+3",
    "h": "x+3",
    "dual_first": "(x+3)(x^3+2x^2+x+3)",
    "dual_second": "2(x+3)",
    "hull_first": "0",
    "hull_second": "2(x+3)(x^3+2x^2+x+3)",
}
