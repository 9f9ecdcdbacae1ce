"""Published counts used as golden data.

``N_G[g]`` is the number of numerical semigroups of genus g, ``N_PRIME_G[g]``
the number of those with conductor at most three times the multiplicity,
and ``N_GM[m][g]`` the number of genus g and multiplicity m.
"""

N_G = (1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857)

N_PRIME_G = (1, 1, 2, 4, 6, 11, 20, 33, 57, 99, 168, 287, 487, 824, 1395, 2351)

N_GM = {
    1: (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    2: (0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    3: (0, 0, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5),
    4: (0, 0, 0, 1, 3, 4, 6, 7, 9, 11, 13, 15, 18, 20, 23),
    5: (0, 0, 0, 0, 1, 4, 7, 10, 13, 16, 22, 24, 32, 35, 43),
    6: (0, 0, 0, 0, 0, 1, 5, 11, 17, 27, 37, 49, 66, 85, 106),
}


def golden_mismatches(table) -> list[str]:
    """Cells where a computed CountTable disagrees with the published values."""
    out = []
    for g in range(min(table.max_genus + 1, len(N_G))):
        if table.total[g] != N_G[g]:
            out.append(f"n_{g}: computed {table.total[g]}, published {N_G[g]}")
        if table.generic[g] != N_PRIME_G[g]:
            out.append(f"n'_{g}: computed {table.generic[g]}, published {N_PRIME_G[g]}")
    for m, row in N_GM.items():
        if m > table.max_multiplicity:
            continue
        for g in range(min(table.max_genus + 1, len(row))):
            got = table.count(g, m)
            if got != row[g]:
                out.append(f"n_{{{g},{m}}}: computed {got}, published {row[g]}")
    return out
