"""Set partitions of ``{0..order-1}`` and their restricted-growth codes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import full_mask, members


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint nonempty cells (bit masks) covering the ground set."""

    cells: tuple[int, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        seen = 0
        for c in self.cells:
            if c == 0:
                raise ValueError("partition cells must be nonempty")
            if c & seen:
                raise ValueError("partition cells overlap")
            seen |= c
        if seen != full_mask(self.order):
            raise ValueError("partition cells do not cover the ground set")

    @property
    def n(self) -> int:
        return len(self.cells)

    @classmethod
    def from_code(cls, code: Sequence[int]) -> "Partition":
        """Cells in order of first appearance of their label."""
        code = normalize_code(code)
        cells = [0] * (max(code) + 1)
        for i, label in enumerate(code):
            cells[label] |= 1 << i
        return cls(tuple(cells), len(code))

    def code(self) -> tuple[int, ...]:
        """Label of each element's cell, using the cell order of this partition."""
        out = [0] * self.order
        for label, cell in enumerate(self.cells):
            for i in members(cell):
                out[i] = label
        return tuple(out)

    def relabel(self, perm: Sequence[int]) -> "Partition":
        """Image under the element renaming ``i -> perm[i]``, cell order kept."""
        cells = []
        for c in self.cells:
            m = 0
            for i in members(c):
                m |= 1 << perm[i]
            cells.append(m)
        return Partition(tuple(cells), self.order)


def is_restricted_growth(code: Sequence[int]) -> bool:
    top = -1
    for label in code:
        if label < 0 or label > top + 1:
            return False
        top = max(top, label)
    return len(code) > 0


def normalize_code(code: Sequence[int]) -> tuple[int, ...]:
    """Relabel blocks by first appearance, e.g. ``(2, 2, 0)`` -> ``(0, 0, 1)``."""
    if not code:
        raise ValueError("empty partition code")
    names: dict[int, int] = {}
    return tuple(names.setdefault(label, len(names)) for label in code)


def restricted_growth_strings(order: int, n: int | None = None) -> Iterator[tuple[int, ...]]:
    """All restricted-growth strings of length ``order``, lexicographically.

    With ``n`` given, only those using exactly ``n`` labels.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if n is not None and not 1 <= n <= order:
        raise ValueError(f"cell count must be in 1..{order}")
    code = [0] * order

    def rec(i: int, top: int):
        if i == order:
            if n is None or top + 1 == n:
                yield tuple(code)
            return
        # labels still to open cannot exceed remaining positions
        if n is not None and n - (top + 1) > order - i:
            return
        hi = top + 1 if n is None else min(top + 1, n - 1)
        for label in range(hi + 1):
            code[i] = label
            yield from rec(i + 1, max(top, label))

    yield from rec(1, 0)


def enumerate_partitions(order: int, n: int | str = "all") -> Iterator[Partition]:
    """Every partition with exactly ``n`` cells, or every partition for ``"all"``.

    ``"all"`` runs ``n = 1..order`` in turn.
    """
    if n == "all":
        for k in range(1, order + 1):
            yield from enumerate_partitions(order, k)
        return
    for code in restricted_growth_strings(order, int(n)):
        yield Partition.from_code(code)
