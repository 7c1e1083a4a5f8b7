import random
from math import comb

import pytest

import oracles
from conftest import LZ2, RZ2, Z3, Z4, small_semigroups
from semicover.algebra import CayleyTable, validate_table
from semicover.delta import min_cov_over_cells
from semicover.enumeration import (
    associative_tables,
    canonical_key,
    enumerate_semigroups,
    is_canonical,
)
from semicover.partitions import (
    Partition,
    enumerate_partitions,
    is_restricted_growth,
    normalize_code,
    restricted_growth_strings,
)

# published counts of semigroups up to isomorphism / up to iso or anti-iso
ISO_COUNTS = {1: 1, 2: 5, 3: 24, 4: 188}
ISO_ANTI_COUNTS = {1: 1, 2: 4, 3: 18, 4: 126}
LABELED_COUNTS = {1: 1, 2: 8, 3: 113, 4: 3492}


def stirling2(n, k):
    return sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1)) // \
        _factorial(k)


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def test_order1():
    assert [t.rows for t in enumerate_semigroups(1)] == [((0,),)]


def test_order2_matches_brute_force():
    assert sum(1 for _ in enumerate_semigroups(2)) == oracles.classes_by_brute_force(2) == 5


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_class_counts(order):
    assert sum(1 for _ in enumerate_semigroups(order)) == ISO_COUNTS[order]
    anti = sum(1 for _ in enumerate_semigroups(order, include_anti_iso_dedup=True))
    assert anti == ISO_ANTI_COUNTS[order]


@pytest.mark.slow
def test_class_counts_order5():
    assert sum(1 for _ in enumerate_semigroups(5)) == 1915
    assert sum(1 for _ in enumerate_semigroups(5, include_anti_iso_dedup=True)) == 1160


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_labeled_counts(order):
    assert sum(1 for _ in associative_tables(order)) == LABELED_COUNTS[order]
    assert sum(1 for _ in enumerate_semigroups(order, up_to_iso=False)) == LABELED_COUNTS[order]


def test_order_bounds():
    with pytest.raises(ValueError):
        next(enumerate_semigroups(0))
    with pytest.raises(ValueError):
        next(enumerate_semigroups(7))


def test_every_emitted_table_is_associative_and_canonical():
    for t in small_semigroups(4):
        assert validate_table(t) is None
        assert canonical_key(t) == bytes(t.products)


def test_stream_is_deterministic():
    a = [t.products for t in enumerate_semigroups(4)]
    b = [t.products for t in enumerate_semigroups(4)]
    assert a == b and a == sorted(a)


def test_canonical_key_relabel_invariance():
    rng = random.Random(3)
    for t in small_semigroups(4)[::5]:
        perm = list(range(t.order))
        rng.shuffle(perm)
        assert canonical_key(t.relabel(perm)) == canonical_key(t)


def test_canonical_key_examples():
    assert canonical_key(LZ2) != canonical_key(RZ2)
    assert canonical_key(LZ2.relabel([1, 0])) == canonical_key(LZ2)
    keys = {canonical_key(Z3.relabel(p)) for p in
            [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]}
    assert len(keys) == 1
    assert canonical_key(Z3) == bytes(oracles.canonical([list(r) for r in Z3.rows]))


def test_is_canonical_with_anti():
    assert is_canonical(LZ2) and is_canonical(RZ2)
    # LZ2 = 0 0 1 1 beats its transpose RZ2 = 0 1 0 1
    assert is_canonical(LZ2, anti=True)
    assert not is_canonical(RZ2, anti=True)


def test_covering_is_isomorphism_invariant():
    rng = random.Random(5)
    for t in small_semigroups(4)[::9]:
        perm = list(range(t.order))
        rng.shuffle(perm)
        u = t.relabel(perm)
        for p in enumerate_partitions(t.order):
            a = min_cov_over_cells(p, t)
            b = min_cov_over_cells(p.relabel(perm), u)
            assert [c.value for c in a.covs] == [c.value for c in b.covs]
            assert a.best_value == b.best_value


# -- partitions ------------------------------------------------------------

def test_partition_counts():
    assert sum(1 for _ in enumerate_partitions(4)) == 15
    assert sum(1 for _ in oracles.set_partitions(list(range(4)))) == 15
    assert [p.code() for p in enumerate_partitions(3, 3)] == [(0, 1, 2)]
    assert len(list(enumerate_partitions(3, 2))) == 3


@pytest.mark.parametrize("order", range(1, 8))
def test_partitions_match_independent_generator(order):
    ours = {frozenset(p.cells) for p in enumerate_partitions(order)}
    theirs = {frozenset(sum(1 << e for e in block) for block in q)
              for q in oracles.set_partitions(list(range(order)))}
    assert ours == theirs
    for k in range(1, order + 1):
        assert len(list(enumerate_partitions(order, k))) == stirling2(order, k)


def test_partition_invariants():
    for p in enumerate_partitions(5):
        assert is_restricted_growth(p.code())
        assert p.code()[0] == 0
    with pytest.raises(ValueError):
        Partition((0b01, 0b01), 2)
    with pytest.raises(ValueError):
        Partition((0b01,), 2)
    with pytest.raises(ValueError):
        Partition((0b11, 0), 2)


def test_restricted_growth_strings():
    assert list(restricted_growth_strings(3)) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert normalize_code([2, 2, 0, 1]) == (0, 0, 1, 2)
    with pytest.raises(ValueError):
        list(restricted_growth_strings(3, 4))


def test_cell_count_exact_n_invariant():
    for p in enumerate_partitions(5, 3):
        assert p.n == 3


def test_partition_relabel():
    p = Partition.from_code([0, 0, 1])
    q = p.relabel([2, 1, 0])
    assert q.cells == (0b110, 0b001)


def test_z4_fixture_table():
    assert Z4 == CayleyTable([[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]])
