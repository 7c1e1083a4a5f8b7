"""Certificate-producing versions of the three partition covering theorems.

Each ``witness_*`` function returns a :class:`CoverCertificate` that has
already been checked with :func:`verify_cover`; a failed check raises
:class:`SoundnessError`, which can only mean a bug here or a table that is
not a semigroup.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import (
    CayleyTable,
    find_left_zeros,
    find_right_zeros,
    mask_of,
    members,
    set_quotient,
    subset_product,
)
from .delta import CoverCertificate, delta, uncovered_points, verify_cover
from .partitions import Partition
from .structure import decompose_right_group, minimal_right_ideal


class SoundnessError(AssertionError):
    """A produced certificate or a proof invariant failed to verify."""


# -- the f(n, m) recursion -----------------------------------------------------

@dataclass(frozen=True)
class FBound:
    n: int
    m: int
    value: int

    @property
    def closed_form(self) -> int:
        """``2**(2**(n-1) - 1) * m**(2**(n-1))``, an upper bound on ``value``."""
        return f_closed_form(self.n, self.m)


def f_bound(n: int, m: int) -> FBound:
    """``f(1, m) = m`` and ``f(n+1, m) = f(n, m + m*m)``."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    value = m
    for _ in range(n - 1):
        value = value + value * value
    return FBound(n, m, value)


def f_closed_form(n: int, m: int) -> int:
    e = 1 << (n - 1)
    return (1 << (e - 1)) * m**e


# -- first theorem: the (F, cells) induction ---------------------------------------

@dataclass(frozen=True)
class TraceStep:
    case: str  # "base", "case1" or "case2"
    cell_index: int  # original index of the cell at the head of the list
    g: Optional[int]  # the case-1 element, None otherwise
    size_before: int
    size_after: int

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "cell_index": self.cell_index,
            "g": self.g,
            "size_before": self.size_before,
            "size_after": self.size_after,
        }


@dataclass
class WitnessTrace:
    steps: list[TraceStep] = field(default_factory=list)
    certificate: Optional[CoverCertificate] = None

    def to_dict(self) -> dict:
        return {
            "steps": [s.to_dict() for s in self.steps],
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def _union(cells) -> int:
    out = 0
    for c in cells:
        out |= c
    return out


def cover_from(F: Sequence[int], cells: Sequence[int], table: CayleyTable,
               indices: Sequence[int] | None = None) -> tuple[int, list[int], list[TraceStep]]:
    """Find a cell ``A_i`` and ``K`` with ``S = K^-1 delta(A_i)``, given ``S = F^-1(A_1 | ... | A_n)``.

    Returns ``(original cell index, sorted K, trace)``.  ``|K| <= f(n, |F|)``.
    At each step, if some ``g`` has ``g A_1`` inside ``F^-1(A_2 | ...)``
    (smallest such ``g``), ``F`` grows to ``F | FgF`` and ``A_1`` is
    dropped; otherwise ``F`` itself covers ``delta(A_1)``.
    """
    cells = list(cells)
    indices = list(range(len(cells))) if indices is None else list(indices)
    if not cells:
        raise ValueError("need at least one cell")
    t = table.rows
    F = sorted(set(F))
    if set_quotient(mask_of(F), _union(cells), table) != table.full:
        raise ValueError("precondition S = F^-1(A_1 | ... | A_n) fails")
    steps = []
    while True:
        if set_quotient(mask_of(F), _union(cells), table) != table.full:
            raise SoundnessError("S = F^-1(union of remaining cells) does not hold")
        m = len(F)
        if len(cells) == 1:
            steps.append(TraceStep("base", indices[0], None, m, m))
            return indices[0], F, steps
        head, rest = cells[0], _union(cells[1:])
        target = set_quotient(mask_of(F), rest, table)
        g = next(
            (g for g in range(table.order)
             if subset_product(1 << g, head, table) & ~target == 0),
            None,
        )
        if g is None:
            steps.append(TraceStep("case2", indices[0], None, m, m))
            return indices[0], F, steps
        grown = set(F)
        for h in F:
            hg = t[h][g]
            for f in F:
                grown.add(t[hg][f])
        if len(grown) > m + m * m:
            raise SoundnessError("F | FgF grew beyond m + m^2")
        steps.append(TraceStep("case1", indices[0], g, m, len(grown)))
        F = sorted(grown)
        cells, indices = cells[1:], indices[1:]


def witness_theorem1(partition: Partition, table: CayleyTable) -> WitnessTrace:
    """Certificate with ``|K| <= f(n, 1) <= 2**(2**(n-1) - 1)``, starting from ``F = {0}``."""
    index, K, steps = cover_from([0], partition.cells, table)
    bound = f_bound(partition.n, 1).value
    cert = CoverCertificate(index, tuple(K), bound, "theorem1")
    check = verify_cover(cert, partition, table)
    if not check:
        raise SoundnessError(f"theorem-1 certificate failed: {check.reason}")
    return WitnessTrace(steps, cert)


# -- second theorem: minimal right ideal, group cover, lift -------------------

def group_translate_cover(H: int, B: int, inverse: dict[int, int], table: CayleyTable) -> list[int]:
    """``K_H`` with ``H = K_H^-1 delta_H(B)``, for ``B`` a nonempty subset of a group ``H``.

    Greedily collects ``F`` in ascending order so that the translates
    ``fB`` are pairwise disjoint; maximality makes every ``xB`` meet some
    ``fB``, i.e. ``f^-1 x`` lies in ``delta_H(B)``.  Disjointness of
    same-size translates gives ``|F| <= |H| / |B|``.
    """
    F, used = [], 0
    for h in members(H):
        tr = subset_product(1 << h, B, table)
        if tr & used == 0:
            F.append(h)
            used |= tr
    return sorted({inverse[f] for f in F})


def witness_theorem2(partition: Partition, table: CayleyTable) -> CoverCertificate:
    """Certificate with ``|K| <= n`` for a finite semigroup.

    Works in a minimal right ideal ``R``: with ``H = Ra`` a group, the
    largest trace ``A_j & H`` gets a group cover ``K_H`` of size at most the
    number of cells meeting ``H``, lifted to ``S`` as ``K = K_H r``.
    """
    R = minimal_right_ideal(table)
    dec = decompose_right_group(R, table)
    traces = [(i, cell & dec.H) for i, cell in enumerate(partition.cells) if cell & dec.H]
    j, B = max(traces, key=lambda p: (p[1].bit_count(), -p[0]))
    K_H = group_translate_cover(dec.H, B, dec.inverse, table)
    if len(K_H) > len(traces):
        raise SoundnessError("group cover exceeds the number of cells meeting H")
    K = {table.rows[z][dec.r] for z in K_H}
    cert = CoverCertificate(j, tuple(K), partition.n, "theorem2")
    check = verify_cover(cert, partition, table)
    if not check:
        raise SoundnessError(f"theorem-2 certificate failed: {check.reason}")
    return cert


# -- third theorem: zeros ----------------------------------------------------

def theorem3_cover(a_mask: int, table: CayleyTable) -> Optional[tuple[int, ...]]:
    """``K`` of size 1 with ``S = K^-1 delta(A)`` when ``A`` holds a left or right zero.

    Left zero ``a``: ``K = {a}``.  Right zero only: ``delta(A) = S`` and
    ``K = {0}``.  Returns None when ``A`` holds neither.
    """
    left = find_left_zeros(table) & a_mask
    if left:
        K = (members(left)[0],)
    elif find_right_zeros(table) & a_mask:
        K = (0,)
    else:
        return None
    if uncovered_points(K, delta(a_mask, table), table):
        raise SoundnessError("zero shortcut produced an invalid cover")
    return K


def witness_theorem3(a_mask: int, table: CayleyTable, cell_index: int = 0) -> Optional[CoverCertificate]:
    """Size-1 certificate for a single subset ``A``, or None if not applicable."""
    if a_mask == 0:
        raise ValueError("A must be nonempty")
    K = theorem3_cover(a_mask, table)
    if K is None:
        return None
    return CoverCertificate(cell_index, K, 1, "theorem3")


def theorem3_cells(partition: Partition, table: CayleyTable) -> list[int]:
    """Indices of cells containing a left or right zero."""
    zeros = find_left_zeros(table) | find_right_zeros(table)
    return [i for i, c in enumerate(partition.cells) if c & zeros]


def witness_theorem3_partition(partition: Partition, table: CayleyTable) -> Optional[CoverCertificate]:
    """Certificate for the first cell containing a zero, or None."""
    for i in theorem3_cells(partition, table):
        cert = witness_theorem3(partition.cells[i], table, i)
        check = verify_cover(cert, partition, table)
        if not check:
            raise SoundnessError(f"theorem-3 certificate failed: {check.reason}")
        return cert
    return None
