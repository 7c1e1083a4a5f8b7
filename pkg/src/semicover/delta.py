"""Delta sets, covering numbers and cover certificates.

For a subset ``A`` of a finite semigroup ``S``:

* ``delta(A) = {x : xA meets A}``;
* ``cov(A)`` is the least ``|X|`` with ``S = X^-1 A``, defined only when
  every ``Sx`` meets ``A``.

A :class:`CoverCertificate` names a partition cell ``A`` and a set ``K``
claiming ``S = K^-1 delta(A)``; :func:`verify_cover` checks the claim
directly from the table.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    CayleyTable,
    left_quotient,
    mask_of,
    members,
    subset_product,
)
from .partitions import Partition

PROVENANCES = ("theorem1", "theorem2", "theorem3", "exact-solver", "external")


def delta(a_mask: int, table: CayleyTable) -> int:
    """``{x : xA meets A}``; empty for empty ``A``."""
    out = 0
    for x in range(table.order):
        if subset_product(1 << x, a_mask, table) & a_mask:
            out |= 1 << x
    return out


def delta_by_quotients(a_mask: int, table: CayleyTable) -> int:
    """The same set via ``{x : x^-1 A meets A}``."""
    out = 0
    for x in range(table.order):
        if left_quotient(x, a_mask, table) & a_mask:
            out |= 1 << x
    return out


# -- covering numbers --------------------------------------------------------

@dataclass(frozen=True)
class CovResult:
    defined: bool
    value: Optional[int] = None
    witness: Optional[int] = None  # mask of an optimal (or greedy) X

    def __post_init__(self):
        if self.defined != (self.value is not None) or self.defined != (self.witness is not None):
            raise ValueError("value and witness must be present exactly when defined")
        if self.defined and self.witness.bit_count() != self.value:
            raise ValueError("witness size differs from value")

    @property
    def witness_elements(self) -> list[int]:
        return members(self.witness) if self.defined else []


UNDEFINED = CovResult(False)


def cover_rows(a_mask: int, table: CayleyTable) -> list[int]:
    """``rows[k] = k^-1 A``, the points covered by choosing ``k``."""
    return [left_quotient(k, a_mask, table) for k in range(table.order)]


def is_cov_defined(a_mask: int, table: CayleyTable) -> bool:
    """True iff ``Sx`` meets ``A`` for every ``x``."""
    union = 0
    for row in cover_rows(a_mask, table):
        union |= row
    return union == table.full


def greedy_cover(rows: list[int], universe: int) -> list[int]:
    """Classical greedy set cover, ties to the smallest index.

    Assumes the rows cover ``universe``.
    """
    chosen = []
    left = universe
    while left:
        best, gain = -1, 0
        for k, row in enumerate(rows):
            g = (row & left).bit_count()
            if g > gain:
                best, gain = k, g
        chosen.append(best)
        left &= ~rows[best]
    return sorted(chosen)


def _reduced_candidates(rows: list[int], universe: int) -> list[int]:
    # drop empty rows, duplicates (keep lowest index) and rows strictly
    # contained in another row; enough for the optimum size, not the witness
    seen = {}
    for k, row in enumerate(rows):
        row &= universe
        if row and row not in seen:
            seen[row] = k
    distinct = list(seen)
    keep = []
    for row in distinct:
        if not any(other != row and row & ~other == 0 for other in distinct):
            keep.append(row)
    return keep


def min_cover_size(rows: list[int], universe: int, upper: int) -> int:
    """Exact minimum number of rows covering ``universe`` (branch and bound).

    ``upper`` is the size of a known cover, used as the initial incumbent.
    Branches on the uncovered point with the fewest candidate rows.
    """
    cands = _reduced_candidates(rows, universe)
    best = upper
    biggest = max(c.bit_count() for c in cands)

    def search(left: int, used: int):
        nonlocal best
        if not left:
            best = min(best, used)
            return
        # each further row covers at most `biggest` new points
        need = -(-left.bit_count() // biggest)
        if used + need >= best:
            return
        options = None
        rest = left
        while rest:
            low = rest & -rest
            rest ^= low
            opts = [c for c in cands if c & low]
            if options is None or len(opts) < len(options):
                options = opts
                if len(opts) <= 1:
                    break
        options.sort(key=lambda c: -(c & left).bit_count())
        for c in options:
            search(left & ~c, used + 1)

    search(universe, 0)
    return best


def lex_first_cover(rows: list[int], universe: int, size: int) -> list[int]:
    """Lexicographically smallest ascending index list of ``size`` covering rows.

    Returns an empty list if no such cover exists.
    """
    n = len(rows)
    # suffix_union[k] = union of rows[k:]
    suffix_union = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix_union[k] = suffix_union[k + 1] | rows[k]
    sizes = [r.bit_count() for r in rows]
    suffix_big = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix_big[k] = max(suffix_big[k + 1], sizes[k])

    picked: list[int] = []

    def search(start: int, left: int) -> bool:
        if not left:
            return True
        slots = size - len(picked)
        if slots == 0 or left & ~suffix_union[start]:
            return False
        if suffix_big[start] * slots < left.bit_count():
            return False
        for k in range(start, n):
            if rows[k] & left:
                picked.append(k)
                if search(k + 1, left & ~rows[k]):
                    return True
                picked.pop()
            if left & ~suffix_union[k + 1]:
                return False
        return False

    return list(picked) if search(0, universe) else []


def cov(a_mask: int, table: CayleyTable, mode: str = "exact") -> CovResult:
    """Covering number of ``A`` in ``table``.

    ``mode="exact"`` returns the minimum with the lexicographically smallest
    optimal witness; ``mode="greedy-upper"`` returns the greedy cover size,
    an upper bound with a valid witness.
    """
    if mode not in ("exact", "greedy-upper"):
        raise ValueError(f"unknown mode {mode!r}")
    rows = cover_rows(a_mask, table)
    universe = table.full
    union = 0
    for row in rows:
        union |= row
    if union != universe:
        return UNDEFINED
    greedy = greedy_cover(rows, universe)
    if mode == "greedy-upper":
        return CovResult(True, len(greedy), mask_of(greedy))
    size = min_cover_size(rows, universe, len(greedy))
    witness = lex_first_cover(rows, universe, size)
    return CovResult(True, size, mask_of(witness))


# -- certificates ------------------------------------------------------------

@dataclass(frozen=True)
class CoverCertificate:
    cell_index: int
    K: tuple[int, ...]
    bound_claimed: int
    provenance: str = "external"

    def __post_init__(self):
        object.__setattr__(self, "K", tuple(sorted(set(self.K))))
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def to_dict(self) -> dict:
        return {
            "cell_index": self.cell_index,
            "K": list(self.K),
            "bound_claimed": self.bound_claimed,
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CoverCertificate":
        return cls(int(d["cell_index"]), tuple(d["K"]), int(d["bound_claimed"]), d["provenance"])


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certificate check; truthy when the certificate holds."""

    ok: bool
    uncovered: tuple[int, ...] = ()
    reason: str = ""

    def __bool__(self):
        return self.ok


def uncovered_points(k_elems, target: int, table: CayleyTable) -> list[int]:
    """Points ``x`` with no ``k`` in ``k_elems`` such that ``k*x`` is in ``target``."""
    covered = 0
    for k in k_elems:
        covered |= left_quotient(k, target, table)
    return members(table.full & ~covered)


def verify_cover(cert: CoverCertificate, partition: Partition, table: CayleyTable) -> Verdict:
    """Check ``S = K^-1 delta(A)`` for the certified cell ``A`` and the size bound."""
    if not 0 <= cert.cell_index < partition.n:
        return Verdict(False, reason=f"cell index {cert.cell_index} out of range")
    if any(not 0 <= k < table.order for k in cert.K):
        return Verdict(False, reason="K contains an element outside S")
    if len(cert.K) > cert.bound_claimed:
        return Verdict(False, reason=f"|K| = {len(cert.K)} exceeds claimed bound {cert.bound_claimed}")
    target = delta(partition.cells[cert.cell_index], table)
    missing = uncovered_points(cert.K, target, table)
    if missing:
        return Verdict(False, tuple(missing), f"x = {missing[0]} is not covered")
    return Verdict(True)


@dataclass
class CellReport:
    cells: list[int]
    deltas: list[int]
    covs: list[CovResult]
    best_cell: Optional[int]
    n: int

    @property
    def best_value(self) -> Optional[int]:
        return None if self.best_cell is None else self.covs[self.best_cell].value

    @property
    def passes(self) -> bool:
        """Some cell has ``cov delta(A) <= n``."""
        return self.best_value is not None and self.best_value <= self.n


def min_cov_over_cells(partition: Partition, table: CayleyTable, cache: dict | None = None) -> CellReport:
    """Exact ``cov delta(A)`` for every cell; best is the smallest defined value.

    ``cache`` maps a subset mask to its ``CovResult`` and may be shared
    across partitions of the same table.
    """
    deltas, covs = [], []
    for cell in partition.cells:
        d = delta(cell, table)
        if cache is not None and d in cache:
            res = cache[d]
        else:
            res = cov(d, table)
            if cache is not None:
                cache[d] = res
        deltas.append(d)
        covs.append(res)
    best = None
    for i, res in enumerate(covs):
        if res.defined and (best is None or res.value < covs[best].value):
            best = i
    return CellReport(list(partition.cells), deltas, covs, best, partition.n)
