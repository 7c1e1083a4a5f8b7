"""
Constructive covers and their certificates
==========================================

For a partition of a finite semigroup into n cells, three constructions
return a cell A together with a set K whose translates k^-1 A cover S.
Every construction hands back a certificate that is checked independently.
"""

import json

from semicover import Partition, cyclic_group, verify_cover
from semicover.algebra import direct_product, right_zero_semigroup
from semicover.theorems import f_bound, witness_theorem1, witness_theorem2, witness_theorem3_partition

s = direct_product(cyclic_group(3), right_zero_semigroup(2))
p = Partition.from_code([0, 1, 2, 0, 1, 1])
print("order", s.order, "cells", p.n)

# the doubling construction: |K| never exceeds f(n, 1)
trace = witness_theorem1(p, s)
for step in trace.steps:
    print("  ", step)
cert = trace.certificate
print("translate doubling:", cert.K, "bound", f_bound(p.n, 1).value)

# the group construction: |K| <= n, found inside a maximal subgroup of
# the minimal right ideal and lifted back to S
cert2 = witness_theorem2(p, s)
print("group route:", json.dumps(cert2.to_dict()))
print("verified:", bool(verify_cover(cert2, p, s)))

# with a one-sided zero a single translate suffices; here there is none
print("zero route:", witness_theorem3_partition(p, s))

# tamper with a certificate and the verifier explains what went wrong
bad = type(cert2)(cert2.cell_index, cert2.K[:1], cert2.bound_claimed)
print(verify_cover(bad, p, s))
