"""Enumeration of small semigroups up to isomorphism.

Tables are filled cell by cell in row-major order.  After each assignment
every associativity triple whose four cells are all known and which
involves the new cell is checked, so each completed table is associative.
A completed table is emitted only if it is the lexicographically smallest
member of its isomorphism class (its own canonical key), which keeps the
stream free of duplicates without storing previously seen classes.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from .algebra import CayleyTable

MAX_ENUM_ORDER = 6
MAX_CANON_ORDER = 8


@lru_cache(maxsize=None)
def _perm_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    inv = np.argsort(perms, axis=1)
    return perms, inv


def _relabelings(rows: np.ndarray) -> np.ndarray:
    """Every relabeled copy of the table, flattened row-major; shape ``(n!, n*n)``."""
    n = rows.shape[0]
    if n > MAX_CANON_ORDER:
        raise ValueError(f"canonical forms are limited to order {MAX_CANON_ORDER}")
    perms, inv = _perm_arrays(n)
    # copy under p has entry p[t[q[i], q[j]]] at (i, j), where q = p^-1
    inner = rows[inv[:, :, None], inv[:, None, :]]
    out = np.take_along_axis(perms, inner.reshape(len(perms), -1), axis=1)
    return out


def _lex_min(flat: np.ndarray) -> np.ndarray:
    order = np.lexsort(flat.T[::-1])
    return flat[order[0]]


def canonical_key(table: CayleyTable) -> bytes:
    """Lexicographically smallest row-major byte string over all relabelings."""
    return bytes(_lex_min(_relabelings(table.array)).astype(np.uint8).tolist())


def _has_smaller(copies: np.ndarray, flat: np.ndarray) -> bool:
    diff = copies != flat
    has = diff.any(axis=1)
    first = diff.argmax(axis=1)
    rows = np.arange(len(copies))
    return bool(np.any(has & (copies[rows, first] < flat[first])))


def is_canonical(table: CayleyTable, anti: bool = False) -> bool:
    """True iff the table is its own canonical key (with ``anti``: also beats its transpose's class)."""
    arr = table.array
    flat = arr.reshape(-1)
    if _has_smaller(_relabelings(arr), flat):
        return False
    return not (anti and _has_smaller(_relabelings(arr.T.copy()), flat))


def _prefix_beaten(perms_ext: np.ndarray, inv: np.ndarray, T: np.ndarray, n: int, p: int) -> bool:
    """True if some relabeling is already smaller on the first ``p`` cells.

    ``T`` is the partial flat table with ``-1`` for unassigned cells; a
    relabeled cell is known only when its source cell is assigned.  Since
    the known cells never change below this node, no completion can be
    the lexicographic minimum of its class.
    """
    src = T.reshape(n, n)[inv[:, :, None], inv[:, None, :]].reshape(len(inv), -1)[:, :p]
    copies = np.take_along_axis(perms_ext, src, axis=1)  # -1 maps to -1
    f = T[:p]
    diff = copies != f
    has = diff.any(axis=1)
    first = diff.argmax(axis=1)
    val = copies[np.arange(len(copies)), first]
    return bool(np.any(has & (val >= 0) & (val < f[first])))


def associative_tables(order: int, lex_leader: bool = False) -> Iterator[list[int]]:
    """Every associative table of ``order`` as a flat row-major list.

    With ``lex_leader`` the search skips partial tables that some
    relabeling already beats, so (a superset of) the class-minimal tables
    are produced.  The yielded list is reused; copy it to keep it.
    """
    n = order
    size = n * n
    T = [-1] * size
    # pre[b] lists the assigned cells (x, y) with x*y == b
    pre: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    if lex_leader:
        perms, inv = _perm_arrays(n)
        perms_ext = np.concatenate([perms, -np.ones((len(perms), 1), dtype=np.int64)], axis=1)
        Tarr = np.full(size, -1, dtype=np.int64)

    def consistent(i: int, j: int) -> bool:
        v = T[i * n + j]
        for k in range(n):
            # (i j) k = i (j k)
            a = T[v * n + k]
            b = T[j * n + k]
            if a >= 0 and b >= 0:
                c = T[i * n + b]
                if c >= 0 and a != c:
                    return False
            # (k i) j = k (i j)
            ki = T[k * n + i]
            if ki >= 0:
                a = T[ki * n + j]
                c = T[k * n + v]
                if a >= 0 and c >= 0 and a != c:
                    return False
        # (x y) j = x (y j) where x y = i
        for x, y in pre[i]:
            b = T[y * n + j]
            if b >= 0:
                c = T[x * n + b]
                if c >= 0 and c != v:
                    return False
        # i (y z) = (i y) z where y z = j
        for y, z in pre[j]:
            iy = T[i * n + y]
            if iy >= 0:
                a = T[iy * n + z]
                if a >= 0 and a != v:
                    return False
        return True

    def fill(p: int):
        if p == size:
            yield T
            return
        i, j = divmod(p, n)
        for v in range(n):
            T[p] = v
            pre[v].append((i, j))
            if consistent(i, j):
                if lex_leader:
                    Tarr[p] = v
                    if _prefix_beaten(perms_ext, inv, Tarr, n, p + 1):
                        pre[v].pop()
                        continue
                yield from fill(p + 1)
            pre[v].pop()
        T[p] = -1
        if lex_leader:
            Tarr[p] = -1

    yield from fill(0)


def enumerate_semigroups(order: int, up_to_iso: bool = True,
                         include_anti_iso_dedup: bool = False) -> Iterator[CayleyTable]:
    """Stream semigroups of ``order``, one per isomorphism class by default.

    With ``include_anti_iso_dedup`` a table and its transpose count as one
    class.  Each emitted table is the lexicographically smallest row-major
    table of its class; emission order is deterministic (ascending).
    """
    if not 1 <= order <= MAX_ENUM_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ENUM_ORDER}, got {order}")
    for flat in associative_tables(order, lex_leader=up_to_iso):
        table = CayleyTable.from_flat(order, flat)
        if not up_to_iso or is_canonical(table, include_anti_iso_dedup):
            yield table
