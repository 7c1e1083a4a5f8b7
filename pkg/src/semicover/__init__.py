"""Covering numbers of difference-like sets for partitions of finite semigroups."""
from .algebra import (
    CayleyTable,
    cyclic_group,
    direct_product,
    find_idempotents,
    find_left_zeros,
    find_right_zeros,
    left_quotient,
    left_zero_semigroup,
    mask_of,
    members,
    right_zero_semigroup,
    set_quotient,
    subset_product,
    validate_table,
)
from .delta import (
    CoverCertificate,
    CovResult,
    cov,
    delta,
    min_cov_over_cells,
    verify_cover,
)
from .enumeration import canonical_key, enumerate_semigroups
from .partitions import Partition, enumerate_partitions
from .structure import (
    decompose_right_group,
    group_structure,
    is_group,
    minimal_right_ideal,
    principal_right_ideal,
)
from .theorems import (
    f_bound,
    witness_theorem1,
    witness_theorem2,
    witness_theorem3,
)

__version__ = "0.1.0"
