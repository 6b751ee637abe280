"""Frozen reference values shared by several test modules."""

# (u, a, b) -> multiplicity, all 30 nonzero Betti numbers of (2,5,4)
BETTI_254 = {
    (0, 9, 0): 1, (0, 8, 1): 2, (0, 7, 2): 3, (0, 6, 3): 4, (0, 5, 4): 4,
    (0, 4, 5): 4, (0, 3, 6): 3, (0, 2, 7): 3, (0, 1, 8): 2, (0, 0, 9): 1,
    (1, 9, 1): 2, (1, 8, 2): 4, (1, 7, 3): 6, (1, 6, 4): 7, (1, 5, 5): 7,
    (1, 4, 6): 6, (1, 3, 7): 5, (1, 2, 8): 4, (1, 1, 9): 2,
    (2, 9, 2): 1, (2, 8, 3): 2, (2, 7, 4): 3, (2, 6, 5): 3, (2, 5, 6): 3,
    (2, 4, 7): 2, (2, 3, 8): 2, (2, 2, 9): 1,
}

# two non-collinear points (5, 2): level -> {(a, b): mult}
NONCOLLINEAR_52 = {
    0: {(7, 0): 1, (6, 1): 2, (5, 2): 3, (4, 3): 3, (3, 4): 3, (2, 5): 3, (1, 6): 2, (0, 7): 1},
    1: {(7, 1): 2, (6, 2): 4, (5, 3): 5, (4, 4): 5, (3, 5): 5, (2, 6): 4, (1, 7): 2},
    2: {(7, 2): 1, (6, 3): 2, (5, 4): 2, (4, 5): 2, (3, 6): 2, (2, 7): 1},
}

PHI_TUPLES = {
    1: (1, 0, 0),
    2: (1, 1, 1, 0, 0),
    3: (1, 1, 2, 1, 1, 0),
    4: (1, 1, 2, 2, 2, 1, 1, 0),
    7: (1, 1, 2, 2, 3, 3, 4, 3, 3, 2, 2, 1, 1, 0),
}
PHI7_MINUS_PHI4 = (0, 0, 0, 0, 1, 2, 3, 3, 3, 2, 2, 1, 1, 0)
PHI_7_4 = (1, 2, 3, 3, 3, 2, 2, 1, 1, 0)
PHI_4_M3 = (0, 0, 0, 1, 1, 2, 2, 2, 1, 1, 0)
PHI_5_3 = (1, 2, 2, 2, 1, 1, 0)

# rows indexed by the second coordinate b, columns by a
DELTA_CANDIDATE = (
    (1, 1, 1, 1, 1, 1, 1, 0),
    (1, 1, 1, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 0, 0, 0, 0),
    (1, 1, 1, -1, 0, 0, 0, 0),
    (1, 1, -2, 0, 0, 0, 0, 0),
    (1, -1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0),
)
# first difference of (3,2,4), same layout
DELTA_324 = (
    (1, 1, 1, 1, 1, 1, 1, 0),
    (1, 1, 1, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 0, 0, 0, 0),
    (1, 1, 1, -1, 0, 0, 0, 0),
    (1, 1, -1, 0, 0, 0, 0, 0),
    (1, -1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0),
)
