"""The graded C[a, c]-modules M(lam, mu) and their annihilators.

c acts through the matrix T(a) = [[0, 1], [0, 2a]] in V(lam, mu); its
characteristic polynomial splits with roots a * s for s in the S-set.
"""

from satake_gl2 import annihilator_polynomial, char_poly_in_c, s_set, standard_module, verify_conjugation

print("T(a) is conjugate to S(a) = [[a, 1], [a^2, a]]:", verify_conjugation())

for pair in [(0, 0), (1, 1), (2, 0), (3, -1)]:
    M = standard_module(pair)
    print()
    print("M%s  degrees %s  S-set %s" % (pair, list(M.basis_degrees), s_set(pair)))
    for row in M.C():
        print("   ", [str(x) for x in row])
    chi = char_poly_in_c(M.C())
    print("  char poly:", chi, " matches product formula:", chi == annihilator_polynomial(pair))
