"""Minimal right ideals of finite semigroups and their right-group structure.

A minimal right ideal ``R`` of a finite semigroup is a right group: it is
isomorphic to ``G x E`` with ``G`` a group and ``E`` a right-zero
semigroup.  :func:`decompose_right_group` does not assume this; it builds
the pieces and checks every structural claim against the table, raising
:class:`StructureError` when one fails.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    CayleyTable,
    find_idempotents,
    mask_of,
    members,
    subset_product,
)


class StructureError(RuntimeError):
    """A structural fact that must hold for a minimal right ideal did not."""


@dataclass(frozen=True)
class GroupStructure:
    identity: int
    inverse: dict[int, int]


def principal_right_ideal(x: int, table: CayleyTable) -> int:
    """``{x} | xS``, the smallest right ideal containing ``x``."""
    return (1 << x) | mask_of(table.rows[x])


def is_right_ideal(mask: int, table: CayleyTable) -> bool:
    return mask != 0 and subset_product(mask, table.full, table) & ~mask == 0


def _sort_key(mask: int):
    return (mask.bit_count(), members(mask))


def minimal_right_ideal(table: CayleyTable) -> int:
    """An inclusion-minimal right ideal.

    Every minimal right ideal of a finite semigroup is principal, so the
    scan over principal ideals is complete.  Picks the smallest one by
    cardinality, ties broken by the sorted element list.
    """
    ideals = {principal_right_ideal(x, table) for x in range(table.order)}
    minimal = [r for r in ideals if not any(o != r and o & ~r == 0 for o in ideals)]
    return min(minimal, key=_sort_key)


def group_structure(table: CayleyTable, mask: int | None = None) -> GroupStructure | None:
    """Identity and inverses if ``mask`` (default: all of S) is a group, else None.

    Raises ``ValueError`` if ``mask`` is not closed under multiplication.
    """
    if mask is None:
        mask = table.full
    elems = members(mask)
    if not elems:
        raise ValueError("empty subset")
    t = table.rows
    for x in elems:
        for y in elems:
            if not mask >> t[x][y] & 1:
                raise ValueError(f"subset not closed: {x}*{y} = {t[x][y]}")
    identity = next(
        (e for e in elems if all(t[e][x] == x and t[x][e] == x for x in elems)), None
    )
    if identity is None:
        return None
    inverse = {}
    for x in elems:
        y = next((y for y in elems if t[x][y] == identity and t[y][x] == identity), None)
        if y is None:
            return None
        inverse[x] = y
    return GroupStructure(identity, inverse)


def is_group(table: CayleyTable, mask: int | None = None) -> bool:
    return group_structure(table, mask) is not None


@dataclass(frozen=True)
class RightGroupDecomposition:
    R: int
    r: int
    E: int
    a: int
    H: int
    identity: int
    inverse: dict[int, int]
    # idempotent_of[x] is the unique e in E with x*e == x
    idempotent_of: dict[int, int]

    def coordinates(self, x: int, table: CayleyTable) -> tuple[int, int]:
        """``x -> (x*a, e_x)`` in ``H x E``."""
        return table.rows[x][self.a], self.idempotent_of[x]


def decompose_right_group(R: int, table: CayleyTable) -> RightGroupDecomposition:
    """Split a minimal right ideal ``R`` into ``H = Ra`` and its idempotents ``E``.

    ``r`` is the smallest element of ``R`` and ``a`` the smallest idempotent.
    """
    t = table.rows
    relems = members(R)
    if not relems:
        raise StructureError("R is empty")
    for x in relems:
        if mask_of(t[x]) != R:
            raise StructureError(f"xS != R for x = {x}; R is not a minimal right ideal")

    E = find_idempotents(table) & R
    es = members(E)
    if not es:
        raise StructureError("R contains no idempotent")
    for e in es:
        for f in es:
            if t[e][f] != f:
                raise StructureError(f"idempotents not right-zero: {e}*{f} = {t[e][f]}")

    a = es[0]
    H = mask_of(t[x][a] for x in relems)
    try:
        grp = group_structure(table, H)
    except ValueError as exc:
        raise StructureError(f"H = Ra not closed: {exc}") from None
    if grp is None or grp.identity != a:
        raise StructureError("H = Ra is not a group with identity a")

    idempotent_of = {}
    for x in relems:
        fixing = [e for e in es if t[x][e] == x]
        if len(fixing) != 1:
            raise StructureError(f"x = {x} is fixed by {len(fixing)} idempotents, expected 1")
        idempotent_of[x] = fixing[0]

    coords = {(t[x][a], idempotent_of[x]) for x in relems}
    if len(coords) != len(relems) or len(relems) != H.bit_count() * len(es):
        raise StructureError("x -> (xa, e_x) is not a bijection R -> H x E")
    for x in relems:
        for y in relems:
            xy = t[x][y]
            if t[xy][a] != t[t[x][a]][t[y][a]]:
                raise StructureError(f"(xy)a != (xa)(ya) for x={x}, y={y}")
            if idempotent_of[xy] != idempotent_of[y]:
                raise StructureError(f"e_xy != e_y for x={x}, y={y}")
    for x in relems:
        xa = t[x][a]
        for u in members(H):
            if t[x][u] != t[xa][u]:
                raise StructureError(f"x*u != (x*a)*u for x={x}, u={u}")

    return RightGroupDecomposition(
        R=R, r=relems[0], E=E, a=a, H=H,
        identity=grp.identity, inverse=grp.inverse, idempotent_of=idempotent_of,
    )
