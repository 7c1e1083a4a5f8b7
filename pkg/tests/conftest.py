import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semicover.algebra import (  # noqa: E402
    CayleyTable,
    cyclic_group,
    direct_product,
    full_transformation_monoid,
    left_zero_semigroup,
    right_zero_semigroup,
)
from semicover.enumeration import enumerate_semigroups  # noqa: E402

LZ2 = left_zero_semigroup(2)
RZ2 = right_zero_semigroup(2)
Z3 = cyclic_group(3)
Z4 = cyclic_group(4)
CONST2 = CayleyTable([[0, 0], [0, 0]])
# (g, i) numbered g + 2*i: 0=(0,a), 1=(1,a), 2=(0,b), 3=(1,b)
Z2_RZ2 = direct_product(cyclic_group(2), right_zero_semigroup(2))


def small_semigroups(max_order=3):
    """One representative per isomorphism class, for every order up to max_order."""
    return [t for n in range(1, max_order + 1) for t in enumerate_semigroups(n)]


_S3 = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
_S3_INDEX = {p: i for i, p in enumerate(_S3)}


def _monogenic(k, order, period):
    # a^k in <a | a^(order+1) = a^(order+1-period)>
    index = order - period + 1
    if k <= order:
        return k
    return index + (k - index) % period


# order <= 8 instances for solver cross-checks
MEDIUM_SEMIGROUPS = {
    "Z8": cyclic_group(8),
    "Z2xZ4": direct_product(cyclic_group(2), cyclic_group(4)),
    "Z3xRZ2": direct_product(cyclic_group(3), right_zero_semigroup(2)),
    "Z2xLZ3": direct_product(cyclic_group(2), left_zero_semigroup(3)),
    "T2xZ2": direct_product(full_transformation_monoid(2), cyclic_group(2)),
    "RZ2xLZ2xZ2": direct_product(direct_product(right_zero_semigroup(2), left_zero_semigroup(2)),
                                 cyclic_group(2)),
    "S3": CayleyTable.from_function(
        6, lambda i, j: _S3_INDEX[tuple(_S3[j][_S3[i][x]] for x in range(3))]),
    "monogenic_7_3": CayleyTable.from_function(
        7, lambda i, j: _monogenic(i + 1 + j + 1, 7, 3) - 1),
}


@pytest.fixture(scope="session")
def order3_semigroups():
    return small_semigroups(3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
