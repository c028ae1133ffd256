"""The P-equivariant side: restricting O (x) V(lam, mu) to the line y = -1.

The stabilizer of (2a, -1) in Lie(P) is spanned by [[0, 1], [0, 2a]], which
is how c acquires its action; the result is M(lam, mu) on the nose.
"""

from satake_gl2.coherent import apply_lie_p, descends_to_line
from satake_gl2 import stabilizer_check, standard_module, tilde_F

print("stabilizer of (2a, -1) is the line of [[0,1],[0,2a]]:", stabilizer_check())
image = apply_lie_p((0, 0), 1, 0, {(0, 1, 0): 1})
print("y under (u, v) = (1, 0):", {k: str(v) for k, v in image.items()}, " i.e. -x")

for pair in [(0, 0), (1, 1), (2, 0), (4, 2)]:
    M = tilde_F(pair)
    print("tilde_F%s == M%s: %s   c descends mod (y+1): %s"
          % (pair, pair, M == standard_module(pair), descends_to_line(pair)))
