"""Defining polynomials for the finite-field towers.

Generated by scripts/gen_tower_table.py; do not edit by hand.

TOWER_POLY[(p, n)] is the coefficient tuple (ascending, monic) of the
defining polynomial of GF(p^n).  Every entry is primitive, and the
family is norm-compatible: for m | n the power x**((p**n-1)//(p**m-1))
of the degree-n generator is a root of the degree-m entry, which is
what makes the canonical tower embeddings commute.
"""

TOWER_POLY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 1, 0, 0, 1, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 1, 0, 1, 1, 0, 1, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 1, 2, 2, 0, 1, 1),
    (3, 8): (2, 0, 1, 2, 0, 1, 1, 0, 1),
    (3, 9): (1, 2, 0, 2, 1, 1, 2, 0, 0, 1),
    (3, 10): (2, 2, 1, 1, 2, 0, 0, 0, 1, 0, 1),
    (3, 11): (1, 1, 2, 0, 0, 0, 0, 0, 0, 1, 2, 1),
    (3, 12): (2, 2, 0, 1, 1, 2, 1, 2, 1, 1, 1, 1, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 4, 3, 1),
    (5, 4): (2, 3, 0, 1, 1),
    (5, 5): (3, 0, 4, 1, 3, 1),
    (5, 6): (2, 2, 0, 0, 1, 0, 1),
    (5, 7): (3, 3, 1, 0, 0, 1, 2, 1),
    (5, 8): (2, 4, 0, 2, 0, 2, 0, 2, 1),
    (5, 9): (3, 1, 4, 2, 3, 4, 0, 1, 3, 1),
    (5, 10): (2, 2, 2, 2, 2, 2, 2, 4, 2, 3, 1),
    (5, 11): (3, 3, 0, 0, 0, 2, 3, 0, 0, 0, 4, 1),
    (5, 12): (2, 1, 0, 4, 1, 3, 1, 1, 2, 3, 4, 1, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 6, 5, 1),
    (7, 4): (3, 5, 4, 6, 1),
    (7, 5): (4, 4, 4, 5, 4, 1),
    (7, 6): (3, 6, 5, 0, 0, 0, 1),
    (7, 7): (4, 3, 2, 0, 4, 0, 5, 1),
    (7, 8): (3, 2, 6, 1, 2, 0, 3, 0, 1),
    (7, 9): (4, 0, 3, 1, 6, 6, 3, 1, 2, 1),
    (7, 10): (3, 5, 0, 1, 0, 2, 3, 1, 4, 5, 1),
    (7, 11): (4, 2, 1, 2, 5, 0, 0, 2, 3, 3, 6, 1),
    (7, 12): (3, 5, 1, 2, 6, 4, 0, 3, 5, 6, 5, 3, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 4, 1),
    (11, 3): (9, 5, 1, 1),
    (11, 4): (2, 1, 0, 0, 1),
    (11, 5): (9, 4, 4, 6, 2, 1),
    (11, 6): (2, 7, 1, 10, 5, 4, 1),
    (11, 7): (9, 1, 0, 3, 0, 3, 0, 1),
    (11, 8): (2, 2, 0, 3, 8, 10, 5, 8, 1),
    (11, 9): (9, 1, 7, 9, 2, 3, 0, 6, 5, 1),
    (11, 10): (2, 0, 9, 2, 5, 7, 1, 9, 8, 7, 1),
    (11, 11): (9, 9, 3, 3, 8, 4, 0, 10, 6, 2, 1, 1),
    (11, 12): (2, 4, 0, 10, 2, 0, 8, 3, 3, 10, 5, 10, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 7, 1),
    (13, 3): (11, 9, 1, 1),
    (13, 4): (2, 9, 4, 9, 1),
    (13, 5): (11, 2, 9, 8, 0, 1),
    (13, 6): (2, 0, 4, 12, 6, 8, 1),
    (13, 7): (11, 9, 9, 1, 7, 6, 1, 1),
    (13, 8): (2, 11, 3, 4, 7, 7, 7, 4, 1),
    (13, 9): (11, 3, 5, 0, 8, 5, 2, 8, 3, 1),
    (13, 10): (2, 3, 1, 6, 12, 8, 6, 11, 9, 10, 1),
    (13, 11): (11, 9, 9, 8, 9, 7, 3, 12, 0, 0, 0, 1),
    (13, 12): (2, 2, 3, 7, 7, 11, 7, 5, 0, 1, 12, 1, 1),
}
