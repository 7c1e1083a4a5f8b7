"""Finite semigroups as Cayley tables, subsets as integer bit masks.

Elements are the dense indices ``0..order-1``.  A subset is a plain Python
``int`` whose bit ``i`` is set when element ``i`` belongs to it, so masks of
any width up to ``MAX_ORDER`` share one code path.
"""
from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 4096


# -- masks -------------------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def members(mask: int) -> list[int]:
    """Elements of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_mask(order: int) -> int:
    return (1 << order) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


# -- tables ------------------------------------------------------------------

class CayleyTable:
    """Multiplication table of a finite magma; ``rows[i][j]`` is ``i*j``.

    Construction checks shape and range only.  Associativity is checked
    separately by :func:`validate_table` so that broken tables can still be
    loaded and diagnosed.
    """

    def __init__(self, rows: Sequence[Sequence[int]]):
        n = len(rows)
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
        checked = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            row = tuple(int(v) for v in row)
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise ValueError(f"entry ({i},{j}) = {v} out of range 0..{n - 1}")
            checked.append(row)
        self.order = n
        self.rows = tuple(checked)

    @classmethod
    def from_flat(cls, order: int, products: Sequence[int]) -> "CayleyTable":
        if len(products) != order * order:
            raise ValueError(f"expected {order * order} products, got {len(products)}")
        return cls([products[i * order:(i + 1) * order] for i in range(order)])

    @classmethod
    def from_function(cls, order: int, op) -> "CayleyTable":
        return cls([[op(i, j) for j in range(order)] for i in range(order)])

    def mul(self, i: int, j: int) -> int:
        return self.rows[i][j]

    @property
    def products(self) -> tuple[int, ...]:
        """Row-major flat product list."""
        return tuple(v for row in self.rows for v in row)

    @property
    def full(self) -> int:
        return full_mask(self.order)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    @cached_property
    def fibers(self) -> tuple[tuple[int, ...], ...]:
        """``fibers[k][b]`` is the mask of ``x`` with ``k*x == b``."""
        n = self.order
        out = []
        for row in self.rows:
            f = [0] * n
            for x, b in enumerate(row):
                f[b] |= 1 << x
            out.append(tuple(f))
        return tuple(out)

    def transpose(self) -> "CayleyTable":
        """The opposite semigroup ``x*'y = y*x``."""
        return CayleyTable(list(zip(*self.rows)))

    def relabel(self, perm: Sequence[int]) -> "CayleyTable":
        """Isomorphic copy in which element ``i`` is renamed ``perm[i]``."""
        n = self.order
        new = [[0] * n for _ in range(n)]
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                new[perm[i]][perm[j]] = perm[v]
        return CayleyTable(new)

    def __eq__(self, other):
        return isinstance(other, CayleyTable) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"CayleyTable({[list(r) for r in self.rows]})"


# -- small constructions -----------------------------------------------------

def cyclic_group(n: int) -> CayleyTable:
    return CayleyTable.from_function(n, lambda i, j: (i + j) % n)


def left_zero_semigroup(n: int) -> CayleyTable:
    return CayleyTable.from_function(n, lambda i, j: i)


def right_zero_semigroup(n: int) -> CayleyTable:
    return CayleyTable.from_function(n, lambda i, j: j)


def direct_product(s: CayleyTable, t: CayleyTable) -> CayleyTable:
    """Pairs ``(a, b)`` are numbered ``a + s.order * b``."""
    m = s.order

    def op(x, y):
        return s.rows[x % m][y % m] + m * t.rows[x // m][y // m]

    return CayleyTable.from_function(m * t.order, op)


def full_transformation_monoid(n: int) -> CayleyTable:
    """All maps ``{0..n-1} -> itself`` under ``(f*g)(x) = g(f(x))``."""
    maps = list(product(range(n), repeat=n))
    index = {f: i for i, f in enumerate(maps)}
    return CayleyTable.from_function(
        len(maps), lambda i, j: index[tuple(maps[j][maps[i][x]] for x in range(n))]
    )


# -- associativity -----------------------------------------------------------

def _cubic_violation(table: CayleyTable):
    t = table.rows
    n = table.order
    for i in range(n):
        ti = t[i]
        for j in range(n):
            tij = t[ti[j]]
            tj = t[j]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def generated_by(table: CayleyTable, generators: Iterable[int]) -> int:
    """Mask of the subsemigroup generated by ``generators``."""
    gens = list(generators)
    closure = mask_of(gens)
    frontier = list(gens)
    t = table.rows
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                for p in (t[x][g], t[g][x]):
                    if not closure >> p & 1:
                        closure |= 1 << p
                        nxt.append(p)
        frontier = nxt
    return closure


def light_test(table: CayleyTable, generators: Iterable[int]) -> bool:
    """Light's test: ``(x*g)*y == x*(g*y)`` for all ``x, y`` and generators ``g``.

    Conclusive only when ``generators`` generate the whole table; the
    caller is responsible for that.
    """
    t = table.rows
    n = table.order
    for g in generators:
        tg = t[g]
        for x in range(n):
            txg = t[t[x][g]]
            tx = t[x]
            for y in range(n):
                if txg[y] != tx[tg[y]]:
                    return False
    return True


def validate_table(table: CayleyTable, generators: Iterable[int] | None = None):
    """Return ``None`` if the table is associative, else the first bad triple.

    The triple ``(i, j, k)`` is lexicographically first with
    ``(i*j)*k != i*(j*k)``.  Light's test over ``generators`` (all elements
    by default) runs first; the cubic scan only runs on failure or when the
    hint does not generate the table.
    """
    gens = range(table.order) if generators is None else list(generators)
    if generated_by(table, gens) == table.full and light_test(table, gens):
        return None
    return _cubic_violation(table)


def is_associative(table: CayleyTable) -> bool:
    return validate_table(table) is None


# -- translations ------------------------------------------------------------

def left_quotient(a: int, b_mask: int, table: CayleyTable) -> int:
    """``a^-1 B = {x : a*x in B}``."""
    fib = table.fibers[a]
    out = 0
    for b in members(b_mask):
        out |= fib[b]
    return out


def set_quotient(a_mask: int, b_mask: int, table: CayleyTable) -> int:
    """``A^-1 B``, the union of ``a^-1 B`` over ``a`` in ``A``."""
    out = 0
    for a in members(a_mask):
        out |= left_quotient(a, b_mask, table)
    return out


def subset_product(a_mask: int, b_mask: int, table: CayleyTable) -> int:
    """``AB = {a*b : a in A, b in B}``."""
    bs = members(b_mask)
    out = 0
    for a in members(a_mask):
        row = table.rows[a]
        for b in bs:
            out |= 1 << row[b]
    return out


def find_left_zeros(table: CayleyTable) -> int:
    return mask_of(a for a, row in enumerate(table.rows) if all(v == a for v in row))


def find_right_zeros(table: CayleyTable) -> int:
    t = table.rows
    return mask_of(a for a in range(table.order) if all(row[a] == a for row in t))


def find_idempotents(table: CayleyTable) -> int:
    return mask_of(e for e, row in enumerate(table.rows) if row[e] == e)
