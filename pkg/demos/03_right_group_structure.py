"""
Minimal right ideals as right groups
====================================

A minimal right ideal R of a finite semigroup splits as E x H where E is a
right zero band of idempotents and H = Ra is a group.
"""

from semicover.algebra import (
    cyclic_group,
    direct_product,
    full_transformation_monoid,
    left_zero_semigroup,
    members,
)
from semicover.structure import decompose_right_group, minimal_right_ideal

for name, s in [
    ("Z2 x LZ3", direct_product(cyclic_group(2), left_zero_semigroup(3))),
    ("T3", full_transformation_monoid(3)),
]:
    R = minimal_right_ideal(s)
    d = decompose_right_group(R, s)
    print(name)
    R, E, H = members(d.R), members(d.E), members(d.H)
    print("   |S| =", s.order, " |R| =", len(R), " |E| =", len(E), " |H| =", len(H))
    print("   a =", d.a, " H =", H)
    # each x in R is written as (x a, e_x)
    print("   coordinates:", [d.coordinates(x, s) for x in R[:4]], "...")
