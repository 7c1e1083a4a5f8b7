"""
Difference sets and covering numbers
====================================

Build a few small semigroups, compute Delta(A) = {x : xA meets A} and the
smallest number of left translates k^-1 A needed to cover the whole semigroup.
"""

from semicover import CayleyTable, cov, cyclic_group, delta, mask_of, members
from semicover.algebra import left_quotient, left_zero_semigroup

# the cyclic group of order 4, written additively as 0, 1, 2, 3
z4 = cyclic_group(4)
print(z4.array)

# in a group Delta(A) is A A^-1; the even residues give back the even residues
evens = mask_of([0, 2])
print("Delta({0,2}) =", members(delta(evens, z4)))

# two translates are needed to cover Z4 by copies of {0,2}
result = cov(delta(evens, z4), z4)
print("cov =", result.value, "witness", result.witness_elements)

# a quotient is the preimage of a set under left multiplication
print("1^-1 {0,2} =", members(left_quotient(1, evens, z4)))

# in a left zero semigroup xy = x, so any nonempty A has Delta(A) = A
lz3 = left_zero_semigroup(3)
A = mask_of([1])
print("LZ3: Delta({1}) =", members(delta(A, lz3)), "cov", cov(delta(A, lz3), lz3))

# a table that is not total under quotients: cov is undefined
null2 = CayleyTable([[0, 0], [0, 0]])
print("null semigroup, cov of {1}:", cov(mask_of([1]), null2))
