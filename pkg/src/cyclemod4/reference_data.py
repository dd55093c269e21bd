"""Published combined-cycle rules and feasibility rows, transcribed verbatim.

Used only for comparison; nothing here feeds back into the computations.
Row layouts follow the printed column order: types (i, j, k), then the
parity columns, then the derived combined types.
"""

# (t1, t2) -> (type for an even intersection, type for an odd one)
CC_TABLES = {
    "012": {(0, 0): (0, 2), (0, 1): (1, 3), (0, 2): (2, 0),
            (1, 1): (2, 0), (1, 2): (3, 1), (2, 2): (0, 2)},
    "013": {(0, 0): (0, 2), (0, 1): (1, 3), (0, 3): (3, 1),
            (1, 1): (2, 0), (1, 3): (0, 2), (3, 3): (2, 0)},
    "023": {(0, 0): (0, 2), (0, 2): (2, 0), (0, 3): (3, 1),
            (2, 2): (0, 2), (2, 3): (1, 3), (3, 3): (2, 0)},
    "123": {(1, 1): (2, 0), (1, 2): (3, 1), (1, 3): (0, 2),
            (2, 2): (0, 2), (2, 3): (1, 3), (3, 3): (2, 0)},
}

# Later reprints of the same rules, kept to detect transcription errata.
CC_REPRINTS = {
    "013": {(0, 0): (0, 2), (0, 1): (1, 3), (0, 3): (3, 1),
            (1, 1): (2, 0), (1, 3): (0, 2), (3, 3): (2, 0)},
    "023": {(0, 0): (0, 2), (0, 2): (2, 0), (0, 3): (3, 1),
            (2, 2): (0, 2), (2, 3): (4, 3), (3, 3): (2, 0)},
}

# (family, shape) -> rows of (i, j, k, *parities, *derived types)
FEASIBLE_ROWS = {
    ("012", "A"): [],
    ("012", "B"): [(0, 1, 2, 0, 1, 1, 0, 1), (1, 2, 0, 1, 0, 1, 1, 2)],
    ("012", "C"): [(0, 1, 2, 0, 1, 1, 1, 1), (0, 2, 1, 0, 1, 2, 1, 1), (1, 0, 2, 0, 1, 1, 0, 1)],
    ("012", "E"): [(0, 1, 2, 0, 1, 1, 1, 1), (0, 2, 1, 0, 1, 2, 1, 1), (1, 0, 2, 0, 1, 1, 0, 1)],
    ("012", "F"): [(0, 1, 2, 0, 1, 0, 1, 1, 2, 1), (0, 2, 1, 0, 1, 0, 2, 1, 1, 1)],
    ("013", "A"): [(0, 1, 3, 0, 1, 3, 0)],
    ("013", "B"): [(0, 1, 3, 0, 0, 1, 3, 0), (0, 1, 3, 1, 0, 3, 3, 0), (0, 3, 1, 0, 0, 3, 1, 0),
                   (0, 3, 1, 1, 0, 1, 1, 0), (1, 3, 0, 0, 0, 0, 1, 3), (1, 3, 0, 0, 1, 0, 3, 1)],
    ("013", "C"): [(0, 1, 3, 0, 0, 1, 0, 0), (0, 3, 1, 0, 0, 3, 0, 0), (1, 0, 3, 0, 0, 1, 3, 0),
                   (1, 0, 3, 1, 1, 3, 1, 0)],
    ("013", "E"): [(0, 1, 3, 0, 0, 1, 0, 0), (0, 3, 1, 0, 0, 3, 0, 0), (1, 0, 3, 0, 0, 1, 3, 0),
                   (1, 0, 3, 1, 1, 3, 1, 0)],
    ("013", "F"): [(0, 1, 3, 0, 0, 0, 1, 0, 3, 0), (0, 1, 3, 1, 0, 1, 3, 0, 1, 0),
                   (0, 3, 1, 1, 0, 1, 1, 0, 3, 0)],
    ("023", "A"): [],
    ("023", "B"): [(0, 3, 2, 0, 1, 3, 0, 3), (2, 3, 0, 1, 0, 3, 2, 3)],
    ("023", "C"): [(0, 2, 3, 0, 1, 2, 3, 3), (0, 3, 2, 0, 1, 3, 3, 3), (2, 0, 3, 1, 0, 0, 3, 3)],
    ("023", "E"): [(0, 2, 3, 0, 1, 2, 3, 3), (0, 3, 2, 0, 1, 3, 3, 3), (2, 0, 3, 1, 0, 0, 3, 3)],
    ("023", "F"): [(0, 2, 3, 0, 1, 0, 2, 3, 3, 3), (0, 3, 2, 0, 1, 0, 3, 3, 2, 3)],
    ("123", "A"): [(1, 2, 3, 1, 1, 2, 3)],
    ("123", "B"): [(1, 2, 3, 0, 1, 3, 2, 3), (1, 2, 3, 1, 1, 1, 2, 3), (1, 3, 2, 1, 0, 2, 3, 1),
                   (1, 3, 2, 1, 1, 2, 1, 3), (2, 3, 1, 0, 1, 1, 1, 2), (2, 3, 1, 1, 1, 3, 1, 2)],
    ("123", "C"): [(1, 2, 3, 0, 0, 3, 1, 2), (1, 2, 3, 1, 1, 1, 3, 2), (1, 3, 2, 1, 1, 2, 3, 2),
                   (2, 1, 3, 1, 1, 1, 2, 2)],
    ("123", "E"): [(1, 2, 3, 0, 0, 3, 1, 2), (1, 2, 3, 1, 1, 1, 3, 2), (1, 3, 2, 1, 1, 2, 3, 2),
                   (2, 1, 3, 1, 1, 1, 2, 2)],
    ("123", "F"): [(1, 2, 3, 0, 1, 1, 3, 3, 2, 2), (1, 2, 3, 1, 0, 1, 1, 1, 2, 2),
                   (1, 3, 2, 1, 0, 1, 2, 1, 1, 2)],
}

# Branch counts drawn for the first expansion level of two shape-A cases.
FIRST_LEVEL_COUNTS = {
    ("013", "A", (0, 1, 3), (0,)): 17,
    ("123", "A", (1, 2, 3), (1,)): 17,
}

# Stop sets stated for dividing one cycle of a shape-A configuration:
# (family, types, parities, index of divided cycle) -> {(t1, t2, parity)}
STATED_STOP_SETS = {
    ("123", (1, 2, 3), (1,), 1): {(1, 1, 0), (3, 3, 0), (1, 3, 1), (3, 1, 1), (2, 2, 1)},
    ("013", (0, 1, 3), (0,), 0): {(0, 0, 1), (1, 3, 1), (3, 1, 1), (1, 1, 0), (3, 3, 0)},
}

# The minimum (p, q) stated for the smallest member of each family.
STATED_MIN_ORDER = {"012": (8, 10), "013": (6, 8), "023": (8, 10), "123": (9, None)}
