"""Brute-force reference implementations on plain lists and sets.

Nothing here imports the package's algorithms; tables are lists of rows.
"""
from itertools import combinations, permutations, product


def assoc_violations(t):
    n = len(t)
    return [(i, j, k) for i in range(n) for j in range(n) for k in range(n)
            if t[t[i][j]][k] != t[i][t[j][k]]]


def is_assoc(t):
    return not assoc_violations(t)


def left_quotient(t, a, B):
    return {x for x in range(len(t)) if t[a][x] in B}


def delta(t, A):
    return {x for x in range(len(t)) if any(t[x][a] in A for a in A)}


def cov(t, A):
    """(minimum size, lexicographically first optimal X) or None if undefined."""
    n = len(t)
    S = set(range(n))
    for size in range(1, n + 1):
        for X in combinations(range(n), size):
            if set().union(*(left_quotient(t, k, A) for k in X)) == S:
                return size, X
    return None


def relabel(t, perm):
    n = len(t)
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            new[perm[i]][perm[j]] = perm[t[i][j]]
    return new


def canonical(t):
    return min(tuple(v for row in relabel(t, p) for v in row)
               for p in permutations(range(len(t))))


def classes_by_brute_force(n):
    """Number of isomorphism classes of semigroups of order n from all n**(n*n) tables."""
    keys = set()
    for flat in product(range(n), repeat=n * n):
        t = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if is_assoc(t):
            keys.add(canonical(t))
    return len(keys)


def set_partitions(elements):
    """All set partitions of a list, as lists of sets (independent of RGS codes)."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for p in set_partitions(rest):
        yield [{first}] + p
        for i in range(len(p)):
            yield p[:i] + [p[i] | {first}] + p[i + 1:]
