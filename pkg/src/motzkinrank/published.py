"""Embedded reference data.

Transcriptions of published values for the all-ones specs: the first
ten counts for ranks 2..4, the algebraic equations satisfied by the
rank 1..4 generating functions, and the seven-term rank-2 recurrence.
Everything here is re-derived from scratch by the test suite and by the
``reproduce`` CLI command; this module is the comparison target, never
a computation shortcut.

Polynomials are coefficient tuples, lowest degree first (see intpoly).
"""

# Counts of length-n paths for n = 1..10 (the n = 0 count is 1).
# Rank 1 is the classical Motzkin sequence (OEIS A001006); rank 2 is
# OEIS A104184.
TABLES = {
    1: (1, 2, 4, 9, 21, 51, 127, 323, 835, 2188),
    2: (1, 3, 9, 32, 120, 473, 1925, 8034, 34188, 147787),
    3: (1, 4, 16, 78, 404, 2208, 12492, 72589, 430569, 2596471),
    4: (1, 5, 25, 155, 1025, 7167, 51945, 387000, 2944860, 22791189),
}

# Annihilating equations sum_i a_i(x) y^i = 0 for the all-ones
# generating functions y = A(x); coeffs[i] multiplies y^i.
# Rank 2 has two forms: the sextic produced by elimination and the
# quartic factor that actually vanishes on the series (the sextic is
# (1 + x*y)^2 times the quartic).
RANK1_QUADRATIC = (
    (1,),
    (-1, 1),
    (0, 0, 1),
)

RANK2_SEXTIC = (
    (1,),
    (-1, 1),
    (),
    (0, 0, 2),
    (),
    (0, 0, 0, 0, -1, 1),
    (0, 0, 0, 0, 0, 0, 1),
)

RANK2_QUARTIC = (
    (1,),
    (-1, -1),
    (0, 2, 1),
    (0, 0, -1, -1),
    (0, 0, 0, 0, 1),
)

RANK3_OCTIC = (
    (1,),
    (-1, -1),
    (0, 2),
    (),
    (0, 0, 1, -2),
    (),
    (0, 0, 0, 0, 0, 2),
    (0, 0, 0, 0, 0, 0, -1, -1),
    (0, 0, 0, 0, 0, 0, 0, 0, 1),
)

RANK4_DEGREE16 = (
    (1,),                                       # 1
    (-1, 1),                                    # x - 1
    (0, -2),                                    # -2x
    (0, 2, -1, -1),                             # -x(x+2)(x-1)
    (0, 0, 4, 0, -1),                           # -x^2(x-2)(x+2)
    (0, 0, -1, 1),                              # x^2(x-1)
    (0, 0, 0, -2, -3, 0, 1),                    # x^3(x-2)(x+1)^2
    (0, 0, 0, 0, 1, -1, -1, 1),                 # x^4(x+1)(x-1)^2
    (0, 0, 0, 0, 0, 4, 3, -2),                  # -x^5(2x^2-3x-4)
    (0, 0, 0, 0, 0, 0, 1, -1, -1, 1),           # x^6(x+1)(x-1)^2
    (0, 0, 0, 0, 0, 0, 0, -2, -3, 0, 1),        # x^7(x-2)(x+1)^2
    (0, 0, 0, 0, 0, 0, 0, 0, -1, 1),            # x^8(x-1)
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, -1),   # -x^10(x-2)(x+2)
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, -1, -1),  # -x^11(x+2)(x-1)
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2),   # -2x^13
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1),  # x^14(x-1)
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),  # x^16
)

EQUATIONS = {
    1: (RANK1_QUADRATIC,),
    2: (RANK2_SEXTIC, RANK2_QUARTIC),
    3: (RANK3_OCTIC,),
    4: (RANK4_DEGREE16,),
}

# Seven-term recurrence for the rank-2 all-ones counts (Prodinger's
# relation): sum_i PRODINGER[i](n) * m_{n+i} = 0 for all n >= 0.
# PRODINGER[i] is p_i as a coefficient tuple in n.
PRODINGER = (
    (3750, 6875, 3750, 625),        # 625(n+1)(n+2)(n+3)
    (-20250, -22125, -7750, -875),  # -125(n+2)(n+3)(7n+27)
    (-3450, -4750, -1950, -250),    # -50(n+3)(5n^2+24n+23)
    (41890, 30860, 7540, 610),      # 610n^3+7540n^2+30860n+41890
    (-6844, -5151, -1214, -91),     # -(91n^3+1214n^2+5151n+6844)
    (-6832, -3083, -462, -23),      # -(n+7)(23n^2+301n+976)
    (1456, 614, 86, 4),             # 2(2n+13)(n+7)(n+8)
)
