"""GL(2) invariants on V x V* and the support criterion for compactness.

Invariants are polynomials in the pairing p = v*(v). Modulo p^N only N of
them survive, while the full ring has one in every even degree.
"""

from satake_gl2 import (
    classify_invariant_support, gl2_invariants_bidegree, invariants_of_Z_quotient, support_lattice,
)

print("bidegree  dim")
for d1 in range(3):
    for d2 in range(3):
        print("  (%d,%d)    %d" % (d1, d2, gl2_invariants_bidegree(d1, d2)[0]))

for N in (1, 2, 3):
    print("O/(p^%d): %s" % (N, invariants_of_Z_quotient(N, 10)))
print("full ring:", invariants_of_Z_quotient(None, 10))

print("\nclosed invariant subsets:")
for label in support_lattice():
    print("  %-20s %s" % (label.name, classify_invariant_support(label)))
