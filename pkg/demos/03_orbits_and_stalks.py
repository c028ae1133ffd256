"""Orbits on the affine Grassmannian and stalks of a level-k convolution.

The stalk at the label (m, l) is a point exactly at iota(k, lam); elsewhere
it vanishes. The rational computation is checked against a character sum
over F_q[z]/z^k.
"""

from satake_gl2 import character_sum_oracle, classify_stalk, iota, orbit

k, lam, q = 2, (1, -1), 5
centre = iota(k, lam)
o = orbit(centre.m, centre.l)
print("iota(%d, %s) = (%d, %d), orbit dimension %d" % (k, lam, centre.m, centre.l, o.dim))

print("\n   m  l   stalk                              sum over F_%d" % q)
for m in range(centre.m - 1, centre.m + 2):
    for l in range(centre.l - 1, centre.l + 2):
        r = classify_stalk(k, lam, m, l).to_json()
        s = character_sum_oracle(k, lam, m, l, q)
        print("  %2d %2d   %-34s %s" % (m, l, r, "nonzero" if not s.is_zero() else "0"))
