"""Verification suites: deterministic case lists, one record per case.

A record is a dict with keys ``case_id``, ``inputs``, ``expected``,
``computed`` and ``pass``; every value is plain JSON.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import coherent, convolution, koszul, orbits
from .exact import Laurent, char_poly_in_c, poly_to_json
from .modules import annihilator_polynomial, check_hom_pair, hom_formula, hom_oracle, standard_module
from .rep import CoweightPair, valid_pairs, verify_conjugation

SUITES = ("hom-agreement", "annihilators", "orbits", "stalks",
          "coherent-side", "invariant-theory", "koszul")

STALK_WINDOW = 6


@dataclass
class SweepConfig:
    lam_max: int = None
    mu_bound: int = None
    max_degree: int = 20
    k_max: int = None
    primes: tuple = (3, 5, 7)
    output_format: str = "json"
    output_path: str = None
    jobs: int = 1

    def __post_init__(self):
        for name in ("lam_max", "mu_bound", "max_degree", "k_max", "jobs"):
            v = getattr(self, name)
            if v is not None and v < (0 if name in ("lam_max", "mu_bound") else 1):
                raise ValueError("%s must be positive, got %r" % (name, v))
        for q in self.primes:
            if not convolution._is_prime(q):
                raise ValueError("%r is not prime" % (q,))
        if self.output_format not in ("json", "csv"):
            raise ValueError("format must be json or csv")

    def get(self, name, default):
        v = getattr(self, name)
        return default if v is None else v


def _record(case_id, inputs, expected, computed, ok=None):
    return {
        "case_id": case_id,
        "inputs": inputs,
        "expected": expected,
        "computed": computed,
        "pass": bool(expected == computed if ok is None else ok),
    }


def _series(h, bound):
    return [[d, v] for (d,), v in sorted(h.items()) if v and d <= bound]


# -- case functions (module level so worker processes can pickle them) -----

def case_annihilator(lam, mu):
    p = CoweightPair(lam, mu)
    exp = poly_to_json(annihilator_polynomial(p))
    got = poly_to_json(char_poly_in_c(standard_module(p).C()))
    return _record("annihilator(%d,%d)" % (lam, mu), {"lam": lam, "mu": mu}, exp, got)


def case_hom(p, p2, max_degree):
    p, p2 = CoweightPair(*p), CoweightPair(*p2)
    formula = _series(hom_formula(p, p2, max_degree).hilbert_series, max_degree)
    oracle = sorted([d, v] for d, v in hom_oracle(standard_module(p), standard_module(p2),
                                                   max_degree).dims.items() if d <= max_degree)
    p_side = sorted([d, v] for d, v in coherent.equivariant_hom_graded(p, p2, max_degree).items())
    problems = check_hom_pair(p, p2, max_degree)
    ok = formula == oracle == p_side and not problems
    return _record("hom(%d,%d)->(%d,%d)" % (p.lam, p.mu, p2.lam, p2.mu),
                   {"source": [p.lam, p.mu], "target": [p2.lam, p2.mu], "max_degree": max_degree},
                   formula, {"oracle": oracle, "p_side": p_side, "problems": problems}, ok)


def case_orbits(k, lam_range):
    r = orbits.check_support_dimension_conditions(k, lam_range)
    return _record("orbits(k=%d)" % k, {"k": k, "lam_range": lam_range},
                   {"dim_X0": k, "failures": 0},
                   {"dim_X0": r["dim_X0"], "failures": len(r["failures"])})


def case_closure(p, bound):
    p = CoweightPair(*p)
    bad = []
    for p2 in valid_pairs(bound, bound):
        inter = set(orbits.s_set(p)) & set(orbits.s_set(p2))
        res = orbits.closure_intersection(p, p2)
        got = set() if res is None else set(orbits.s_set(res))
        if got != inter:
            bad.append([p2.lam, p2.mu])
    return _record("closure(%d,%d)" % (p.lam, p.mu), {"pair": [p.lam, p.mu], "bound": bound},
                   [], bad)


def case_bijection(bound):
    return _record("s-set-bijection", {"bound": bound}, True,
                   orbits.fixed_point_bijection_check(bound))


def stalk_labels(k, lam):
    centre = orbits.iota(k, lam)
    return [(m, l)
            for m in range(centre.m - STALK_WINDOW, centre.m + STALK_WINDOW + 1)
            for l in range(centre.l - STALK_WINDOW, centre.l + STALK_WINDOW + 1)]


def case_stalks(k, lam, q):
    """classify_stalk is Point exactly where the character sum is nonzero."""
    by_rule, by_sum, not_unit = [], [], []
    for m, l in stalk_labels(k, lam):
        res = convolution.classify_stalk(k, lam, m, l)
        if res.kind == convolution.POINT:
            by_rule.append([m, l])
            if not convolution.rational_point_is_unit_one(res, k):
                not_unit.append([m, l])
        if not convolution.character_sum_oracle(k, lam, m, l, q).is_zero():
            by_sum.append([m, l])
    return _record("stalks(k=%d,lam=(%d,%d),q=%d)" % (k, lam[0], lam[1], q),
                   {"k": k, "lam": list(lam), "q": q, "window": STALK_WINDOW},
                   by_rule, by_sum, by_rule == by_sum and not not_unit)


def case_tilde_F(lam, mu):
    p = CoweightPair(lam, mu)
    got = coherent.tilde_F(p)
    exp = standard_module(p)

    def js(M):
        return {"degrees": list(M.basis_degrees),
                "c": [[poly_to_json(x) for x in row] for row in M.c_matrix]}

    return _record("tilde_F(%d,%d)" % (lam, mu), {"lam": lam, "mu": mu}, js(exp), js(got))


def case_stabilizer():
    got = {"generic": coherent.stabilizer_check(), "a=0": coherent.stabilizer_check(0),
           "a=3": coherent.stabilizer_check(3), "tangent": coherent.tangent_span_check(),
           "conjugation": verify_conjugation()}
    return _record("stabilizer", {}, {k: True for k in got}, got)


def case_bidegree(d1, d2):
    dim, basis = coherent.gl2_invariants_bidegree(d1, d2)
    exp_dim = int(d1 == d2)
    ok = dim == exp_dim
    if ok and dim:
        # the basis vector is a multiple of p^d
        b, target = basis[0], coherent.pairing() ** d1
        e0, c0 = next(iter(target.items()))
        ok = b * c0 == target * b.coeff(e0)
    return _record("bidegree(%d,%d)" % (d1, d2), {"d1": d1, "d2": d2}, exp_dim, dim, ok)


def case_quotient(N, dmax):
    table = coherent.invariants_of_Z_quotient(N, dmax)
    return _record("quotient(N=%d)" % N, {"N": N, "dmax": dmax}, N, sum(table.values()))


def case_full_ring(dmax):
    table = coherent.invariants_of_Z_quotient(None, dmax)
    exp = [[d, 1] for d in range(0, dmax + 1, 2)]
    return _record("full-ring", {"dmax": dmax}, exp, sorted([d, v] for d, v in table.items()))


def case_support(orbit_ids):
    label = coherent.InvariantSupportLabel(frozenset(orbit_ids))
    c = coherent.classify_invariant_support(label)
    ok = c["contained_in_Z"] == (c["intersection_with_S_dim"] <= 0)
    return _record("support(%s)" % label.name, {"orbits": sorted(orbit_ids)},
                   "contained <=> dim <= 0", c, ok)


def case_koszul(name, max_lam):
    E = koszul.build_E()
    if name == "E":
        layers, powers = E.radical_layers()
        return _record("E-structure", {}, {"dim": 16, "layers": [1, 4, 6, 4, 1], "I5": 0},
                       {"dim": E.dim, "layers": layers, "I5": E.ideal_power(5)})
    if name == "decomposition":
        a = koszul.decompose_E_character()
        b = koszul.highest_weight_multiplicities()
        js = lambda d: sorted([p.lam, p.mu, m] for p, m in d.items())
        dims = sum((p.lam + 1) * m for p, m in a.items())
        return _record("E-decomposition", {}, js(b), js(a), js(a) == js(b) and dims == 16)
    if name == "regrade":
        chars = [Laurent({(0, 0): 1}), Laurent({(0, -1): 1}), Laurent({(1, -1): 2}),
                 Laurent({(0, 1): 2, (2, 3): -1}), Laurent({(-1, 2): 1, (3, 0): 4})]
        got = koszul.regrade_multiplicative(chars) and koszul.generator_shift_check()
        return _record("regrade", {}, True, got)
    if name == "simples":
        r = koszul.simple_equivariant_modules(max_lam)
        return _record("simples(max_lam=%d)" % max_lam, {"max_lam": max_lam}, True, r.ok)
    raise ValueError(name)


# -- suite assembly ---------------------------------------------------------

def suite_cases(name, config):
    """List of (function, args) in deterministic order."""
    if name == "annihilators":
        lm, mb = config.get("lam_max", 10), config.get("mu_bound", 10)
        return [(case_annihilator, (p.lam, p.mu)) for p in valid_pairs(lm, mb)]
    if name == "hom-agreement":
        lm, mb = config.get("lam_max", 4), config.get("mu_bound", 4)
        ps = [(p.lam, p.mu) for p in valid_pairs(lm, mb)]
        return [(case_hom, (p, p2, config.max_degree)) for p in ps for p2 in ps]
    if name == "orbits":
        km, lm = config.get("k_max", 5), config.get("lam_max", 5)
        cb = config.get("mu_bound", 8)
        cases = [(case_orbits, (k, lm)) for k in range(1, km + 1)]
        cases += [(case_closure, ((p.lam, p.mu), cb)) for p in valid_pairs(cb, cb)]
        cases.append((case_bijection, (cb,)))
        return cases
    if name == "stalks":
        km, gap = config.get("k_max", 3), config.get("lam_max", 3)
        lams = [(n2 + d, n2) for d in range(gap + 1) for n2 in range(-2, 3)]
        return [(case_stalks, (k, lam, q))
                for k in range(1, km + 1) for q in config.primes for lam in lams
                if not (q == 2 and k == 1)]
    if name == "coherent-side":
        lm, mb = config.get("lam_max", 6), config.get("mu_bound", 6)
        return [(case_stabilizer, ())] + [(case_tilde_F, (p.lam, p.mu)) for p in valid_pairs(lm, mb)]
    if name == "invariant-theory":
        dm = 8
        cases = [(case_bidegree, (d1, d2)) for d1 in range(dm + 1) for d2 in range(dm + 1)]
        cases += [(case_quotient, (N, 2 * N + 2)) for N in range(1, 5)]
        cases.append((case_full_ring, (8,)))
        cases += [(case_support, (tuple(sorted(l.orbits)),)) for l in coherent.support_lattice()]
        return cases
    if name == "koszul":
        ml = config.get("lam_max", 6)
        return [(case_koszul, (n, ml)) for n in ("E", "decomposition", "regrade", "simples")]
    raise KeyError(name)


def _call(job):
    fn, args = job
    return fn(*args)


@dataclass
class VerificationReport:
    suite: str
    config: dict
    records: list = field(default_factory=list)
    duration_seconds: float = None

    @property
    def summary(self):
        passed = sum(r["pass"] for r in self.records)
        return {"cases": len(self.records), "passed": passed,
                "failed": len(self.records) - passed}

    @property
    def ok(self):
        return self.summary["failed"] == 0

    def to_json(self):
        out = {"suite": self.suite, "config": self.config, "summary": self.summary,
               "records": self.records}
        if self.duration_seconds is not None:
            out["duration_seconds"] = self.duration_seconds
        return out


def run_suite(name, config):
    if name not in SUITES:
        raise KeyError(name)
    jobs = suite_cases(name, config)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(_call, jobs, chunksize=max(1, len(jobs) // (4 * config.jobs))))
    else:
        records = [_call(j) for j in jobs]
    cfg = {"lam_max": config.lam_max, "mu_bound": config.mu_bound,
           "max_degree": config.max_degree, "k_max": config.k_max,
           "primes": list(config.primes)}
    return VerificationReport(name, cfg, records)
