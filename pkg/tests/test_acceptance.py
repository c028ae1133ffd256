"""Acceptance criteria, one test each; each prints a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for just the summary lines.
"""

import time

from satake_gl2.coherent import (
    classify_invariant_support, equivariant_hom_graded, gl2_invariants_bidegree,
    invariants_of_Z_quotient, pairing, support_lattice, tilde_F,
)
from satake_gl2.convolution import (
    POINT, character_sum_oracle, classify_stalk, rational_point_is_unit_one,
)
from satake_gl2.exact import BivarPoly, Laurent, char_poly_in_c
from satake_gl2.koszul import (
    build_E, generator_shift_check, regrade, regrade_multiplicative,
    simple_equivariant_modules,
)
from satake_gl2.modules import check_hom_pair, hom_formula, standard_module
from satake_gl2.orbits import (
    DominantGL2Coweight, check_support_dimension_conditions, closure_intersection,
    iota, orbit, s_set,
)
from satake_gl2.rep import valid_pairs, verify_conjugation

RESULTS = {}


def report(n, title, ok, detail=""):
    line = "criterion %d %-36s %s%s" % (n, title, "PASS" if ok else "FAIL",
                                       "  (%s)" % detail if detail else "")
    RESULTS[n] = line
    print(line)
    return ok


def test_1_annihilators():
    t = time.perf_counter()
    bad = []
    for p in valid_pairs(10, 10):
        expected = BivarPoly.const(1)
        for i in range(p.lam + 1):
            expected = expected * (BivarPoly.c() - BivarPoly.a() * (2 * i + p.mu - p.lam))
        if char_poly_in_c(standard_module(p).C()) != expected:
            bad.append(p)
    dt = time.perf_counter() - t
    assert report(1, "annihilator identity", not bad, "%d bad, %.1fs" % (len(bad), dt))


def test_2_conjugation():
    assert report(2, "conjugation identity", verify_conjugation())


def test_3_three_way_hom():
    t = time.perf_counter()
    pairs = valid_pairs(4, 4)
    bad = []
    for p in pairs:
        for q in pairs:
            f = hom_formula(p, q, 20)
            formula = {d: v for (d,), v in f.hilbert_series.items() if v and d <= 20}
            p_side = equivariant_hom_graded(p, q, 20)
            # oracle dims vs formula, generator cyclicity and annihilator
            problems = check_hom_pair(p, q, 20)
            if problems or formula != p_side:
                bad.append((p, q))
    dt = time.perf_counter() - t
    ok = not bad and dt < 180
    assert report(3, "three-way Hom agreement", ok,
                  "%d pairs, %d bad, %.1fs" % (len(pairs) ** 2, len(bad), dt))


def test_4_tilde_F():
    bad = [p for p in valid_pairs(6, 6) if tilde_F(p) != standard_module(p)]
    assert report(4, "tilde_F keystone", not bad, "%d bad" % len(bad))


def test_5_orbits():
    fails = 0
    for k in range(1, 6):
        r = check_support_dimension_conditions(k, 5)
        fails += len(r["failures"])
        # supports(k) <=> 2m - l >= k, stated directly
        for m in range(-5, 6):
            for l in range(-k - 12, 2 * m + 1):
                if orbit(m, l).supports(k) != (2 * m - l >= k):
                    fails += 1
        for n1 in range(-5, 6):
            for n2 in range(-5, n1 + 1):
                lam = DominantGL2Coweight(n1, n2)
                x0 = orbit(*_t(iota(k, (0, 0))))
                if x0.dim != k or x0.dim + (n1 - n2) != orbit(*_t(iota(k, lam))).dim:
                    fails += 1
    assert report(5, "orbit conditions", not fails, "%d failures" % fails)


def _t(label):
    return label.m, label.l


def test_6_stalks():
    t = time.perf_counter()
    bad = cases = 0
    for k in (1, 2, 3):
        for q in (3, 5, 7):
            for gap in range(4):
                for n2 in range(-2, 3):
                    lam = (n2 + gap, n2)
                    c = iota(k, lam)
                    for m in range(c.m - 6, c.m + 7):
                        for l in range(c.l - 6, c.l + 7):
                            cases += 1
                            r = classify_stalk(k, lam, m, l)
                            nz = not character_sum_oracle(k, lam, m, l, q).is_zero()
                            if (r.kind == POINT) != nz:
                                bad += 1
                            elif r.kind == POINT and not rational_point_is_unit_one(r, k):
                                bad += 1
    dt = time.perf_counter() - t
    assert report(6, "stalks vs finite fields", not bad and dt < 120,
                  "%d cases, %d bad, %.1fs" % (cases, bad, dt))


def test_7_closure_intersection():
    bad = 0
    pairs = valid_pairs(8, 8)
    for p in pairs:
        for q in pairs:
            common = sorted(set(s_set(p)) & set(s_set(q)))
            r = closure_intersection(p, q)
            if not ((r is None and not common) or (r is not None and s_set(r) == common)):
                bad += 1
    assert report(7, "closure intersection", not bad, "%d bad" % bad)


def test_8_invariants():
    bad = 0
    for d in range(9):
        for e in range(9):
            dim, basis = gl2_invariants_bidegree(d, e)
            if dim != int(d == e):
                bad += 1
            elif dim:
                p = pairing() ** d
                ex, c = next(iter(p.items()))
                if basis[0] * c != p * basis[0].coeff(ex):
                    bad += 1
    for N in range(1, 5):
        if sum(invariants_of_Z_quotient(N, 2 * N + 4).values()) != N:
            bad += 1
    for label in support_lattice():
        r = classify_invariant_support(label)
        if r["contained_in_Z"] != (r["intersection_with_S_dim"] <= 0):
            bad += 1
    assert report(8, "invariant theory and compactness", not bad, "%d bad" % bad)


def test_9_koszul():
    E = build_E()
    layers, _ = E.radical_layers()
    ok = E.dim == 16 and layers == [1, 4, 6, 4, 1] and E.ideal_power(5) == 0
    ok = ok and simple_equivariant_modules(6).ok
    chars = [Laurent({(0, -1): 1}), Laurent({(1, -1): 1}), Laurent({(0, 1): 2}),
             Laurent({(0, 0): 1})]
    ok = ok and regrade_multiplicative(chars) and generator_shift_check()
    ok = ok and regrade(Laurent({(0, -1): 1})) == Laurent({(-1, -1): 1})
    assert report(9, "Koszul shadows", ok)


if __name__ == "__main__":
    import sys
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
