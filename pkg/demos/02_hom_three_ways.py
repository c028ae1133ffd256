"""Hom between two modules computed three independent ways.

1. closed form: cyclic, generated in one degree, Hilbert series t^g (1 - t^2k)/(1 - t^2)^2
2. brute force: degree-by-degree linear algebra over C[a, c]
3. the coherent side: P-invariants in C[x, y] (x) V* (x) V'
"""

from satake_gl2 import equivariant_hom_graded, hom_formula, hom_oracle, standard_module

for p, q in [((1, 1), (1, -1)), ((2, 0), (2, 2)), ((0, 0), (0, 2)), ((3, 1), (1, 1))]:
    f = hom_formula(p, q, 16)
    oracle = hom_oracle(standard_module(p), standard_module(q), 16)
    coh = equivariant_hom_graded(p, q, 16)
    series = {d: v for (d,), v in f.hilbert_series.items()}
    print("%s -> %s" % (p, q))
    if f.is_zero:
        print("  zero (S-sets disjoint)")
    else:
        print("  k = %d, generated in degree %d, annihilator %s" % (f.k, f.generator_degree, f.annihilator))
    print("  formula  ", series)
    print("  oracle   ", oracle.dims)
    print("  P-side   ", coh)
    print("  agree:", series == oracle.dims == coh)
