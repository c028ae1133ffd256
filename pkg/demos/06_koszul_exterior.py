"""The exterior algebra E = Lambda(V) (x) Lambda(V*) and the regrading trick."""

from satake_gl2 import build_E, decompose_E_character, regrade, simple_equivariant_modules
from satake_gl2.koszul import regraded_generators

E = build_E()
layers, _ = E.radical_layers()
print("dim E =", E.dim, " radical layers", layers)
for part in ("V", "V*", "E"):
    dec = decompose_E_character(part)
    print("Lambda(%s)" % part if part != "E" else "E", "=",
          " + ".join("%dV(%d,%d)" % (m, p.lam, p.mu) for p, m in dec.items()))

before, after = regraded_generators()
print("generators (t-degree, z-weight) before:", before)
print("                              after: ", after)

r = simple_equivariant_modules(4)
print("simple equivariant modules match the V(lam, mu):", r.ok)
