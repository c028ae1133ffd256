"""Graded C[a, c]-modules M(lam, mu) and their Hom spaces.

M(lam, mu) is free over C[a] on the weight basis of V(lam, mu), the basis
vector v_j sitting in degree lam - 2j, and c acts by pi_{lam,mu}(T(a)).

Hom is graded by how much a map raises degree: a degree-d map sends the
basis vector of degree delta to something of degree delta + d. Hom spaces
are computed two ways, by the closed form (``hom_formula``) and by exact
linear algebra degree by degree (``hom_oracle``).
"""

from dataclasses import dataclass, field
from .exact import (
    BivarPoly, Laurent, PolyA, char_poly_in_c, kernel, mat_mul, mat_scale, rank,
)
from .orbits import closure_intersection, s_set
from .rep import CoweightPair, T_matrix, act, irrep, valid_pairs


@dataclass(frozen=True)
class FreeCModel:
    """Graded C[a, c]-module, free of finite rank over C[a].

    ``c_matrix[i][j]`` is the coefficient of b_i in c * b_j.
    """

    basis_degrees: tuple
    c_matrix: tuple = field(repr=False)

    def __post_init__(self):
        n = len(self.basis_degrees)
        if len(self.c_matrix) != n or any(len(r) != n for r in self.c_matrix):
            raise ValueError("c_matrix must be square of size %d" % n)
        for i in range(n):
            for j in range(n):
                for e in self.c_matrix[i][j].terms:
                    if self.basis_degrees[i] + 2 * e != self.basis_degrees[j] + 2:
                        raise ValueError("c_matrix entry (%d, %d) is not of degree 2" % (i, j))

    @classmethod
    def build(cls, degrees, C):
        return cls(tuple(degrees), tuple(tuple(row) for row in C))

    @property
    def rank(self):
        return len(self.basis_degrees)

    def C(self):
        return [list(row) for row in self.c_matrix]

    def degree_piece(self, d):
        """Monomial basis (e, i) of the degree-d piece: a^e b_i."""
        return [((d - deg) // 2, i) for i, deg in enumerate(self.basis_degrees)
                if d >= deg and (d - deg) % 2 == 0]


def _pair(p):
    return p if isinstance(p, CoweightPair) else CoweightPair(*p)


def standard_module(pair):
    pair = _pair(pair)
    rep = irrep(pair)
    return FreeCModel.build(rep.weights, act(rep, T_matrix()))


def annihilator_polynomial(pair):
    """prod_{i=0}^{lam} (c - a(2i + mu - lam))."""
    pair = _pair(pair)
    return _product_of_linear(2 * i + pair.mu - pair.lam for i in range(pair.lam + 1))


def _product_of_linear(points):
    out = BivarPoly.const(1)
    for s in points:
        out = out * (BivarPoly.c() - BivarPoly.a() * s)
    return out


def _flatten(vectors):
    """Column vectors of PolyA -> sparse rows keyed by (index, a-exponent)."""
    keys = {}
    rows = []
    for vec in vectors:
        row = {}
        for i, p in enumerate(vec):
            for e, v in p.terms.items():
                row[keys.setdefault((i, e), len(keys))] = v
        rows.append(row)
    return rows, len(keys)


def generator_check(pair):
    """Whether the lowest-degree basis vector generates M(lam, mu).

    Checks, in every degree -lam..lam, that the span of a^i c^j v_lowest
    fills the whole graded piece. Every basis vector has degree <= lam, so
    these degrees suffice.
    """
    pair = _pair(pair)
    M = standard_module(pair)
    C = M.C()
    n = M.rank
    low = max(range(n), key=lambda i: -M.basis_degrees[i])
    v = [[PolyA.const(1) if i == low else PolyA()] for i in range(n)]
    powers = [v]
    for _ in range(pair.lam):
        powers.append(mat_mul(C, powers[-1]))
    for d in range(-pair.lam, pair.lam + 1, 2):
        steps = (d - M.basis_degrees[low]) // 2
        vecs = []
        for j in range(steps + 1):
            a_pow = PolyA.a(steps - j)
            vecs.append([row[0] * a_pow for row in powers[j]])
        rows, ncols = _flatten(vecs)
        if rank(rows, ncols) != len(M.degree_piece(d)):
            return False
    return True


def twist(M, mu0):
    """Tensor with V(0, mu0): adds mu0 * a to the diagonal of c."""
    if mu0 % 2:
        raise ValueError("twist needs an even central weight, got %d" % mu0)
    C = M.C()
    shift = PolyA.a() * mu0
    for i in range(M.rank):
        C[i][i] = C[i][i] + shift
    return FreeCModel.build(M.basis_degrees, C)


# -- Hom: closed form -------------------------------------------------------

def hilbert_of_quotient(generator_degree, k, bound):
    """t^g (1 - t^{2k}) / (1 - t^2)^2 expanded through degree ``bound``."""
    series = {}
    n = 0
    while generator_degree + 2 * n <= bound:
        series[generator_degree + 2 * n] = n + 1
        n += 1
    out = dict(series)
    for d, v in series.items():
        if d + 2 * k <= bound:
            out[d + 2 * k] = out.get(d + 2 * k, 0) - v
    return Laurent({d: v for d, v in out.items() if v})


@dataclass(frozen=True)
class HomDescription:
    is_zero: bool
    k: int
    generator_degree: object  # int, or None when is_zero
    annihilator: BivarPoly
    hilbert_series: Laurent
    bound: int
    source: CoweightPair = None
    target: CoweightPair = None

    @property
    def ext_degree(self):
        """Generator degree in the Ext normalisation 2(lam' + 1 - k)."""
        if self.is_zero:
            return None
        return self.generator_degree + self.target.lam - self.source.lam

    def dim(self, d):
        return self.hilbert_series.coeff(d)


def default_max_degree(p, p2):
    return 2 * (p.lam + p2.lam + 4)


def hom_formula(p, p2, bound=None):
    p, p2 = _pair(p), _pair(p2)
    if bound is None:
        bound = default_max_degree(p, p2)
    inter = closure_intersection(p, p2)
    if inter is None:
        return HomDescription(True, 0, None, BivarPoly(), Laurent(), bound, p, p2)
    common = s_set(inter)
    k = len(common)
    g = p.lam + p2.lam - 2 * inter.lam
    return HomDescription(False, k, g, _product_of_linear(common),
                          hilbert_of_quotient(g, k, bound), bound, p, p2)


# -- Hom: degree-by-degree oracle ------------------------------------------

@dataclass
class HomOracleResult:
    dims: dict
    generator_degree: object = None
    generator: list = None

    def dim(self, d):
        return self.dims.get(d, 0)


def _hom_system(M, M2, d):
    """Unknowns Phi_ij = x_ij a^e_ij of degree d and the rows of Phi C - C' Phi."""
    unknowns = {}
    for i, di in enumerate(M2.basis_degrees):
        for j, dj in enumerate(M.basis_degrees):
            twice = dj + d - di
            if twice >= 0 and twice % 2 == 0:
                unknowns[(i, j)] = (len(unknowns), twice // 2)
    rows = {}

    def put(key, col, v):
        row = rows.setdefault(key, {})
        s = row.get(col, 0) + v
        if s:
            row[col] = s
        else:
            row.pop(col, None)

    C, C2 = M.c_matrix, M2.c_matrix
    for (i, j), (col, e) in unknowns.items():
        for j2 in range(M.rank):
            for p, v in C[j][j2].terms.items():
                put((i, j2, e + p), col, v)
        for i0 in range(M2.rank):
            for p, v in C2[i0][i].terms.items():
                put((i0, j, e + p), col, -v)
    return unknowns, [r for r in rows.values() if r]


def hom_in_degree(M, M2, d):
    """Basis of degree-d homomorphisms M -> M2 as PolyA matrices."""
    unknowns, rows = _hom_system(M, M2, d)
    if not unknowns:
        return []
    basis = kernel(rows, len(unknowns))
    out = []
    for vec in basis:
        Phi = [[PolyA() for _ in range(M.rank)] for _ in range(M2.rank)]
        for (i, j), (col, e) in unknowns.items():
            if vec[col]:
                Phi[i][j] = PolyA({e: vec[col]})
        out.append(Phi)
    return out


def hom_oracle(M, M2, max_degree):
    """Graded dimensions of Hom_{C[a,c]}(M, M2) up to ``max_degree``.

    Also returns a basis element of the lowest nonzero degree.
    """
    dmin = min(M2.basis_degrees) - max(M.basis_degrees)
    result = HomOracleResult({})
    for d in range(dmin, max_degree + 1):
        basis = hom_in_degree(M, M2, d)
        if basis:
            result.dims[d] = len(basis)
            if result.generator is None:
                result.generator_degree = d
                result.generator = _normalise(basis[0])
    return result


def _normalise(Phi):
    """Scale so the first nonzero coefficient is 1 (deterministic output)."""
    for row in Phi:
        for x in row:
            if x:
                lead = x.terms[min(x.terms)]
                return [[y * (1 / lead) for y in r] for r in Phi]
    return Phi


def cyclic_dims(Phi, g, M2, max_degree):
    """Graded dims of the C[a, c]-span of a degree-g map Phi, c acting by M2's c."""
    C2 = M2.C()
    dims = {}
    cpow = [Phi]
    for d in range(g, max_degree + 1, 2):
        n = (d - g) // 2
        while len(cpow) <= n:
            cpow.append(mat_mul(C2, cpow[-1]))
        vecs = []
        for j in range(n + 1):
            A = mat_scale(cpow[j], PolyA.a(n - j))
            vecs.append([x for row in A for x in row])
        rows, ncols = _flatten(vecs)
        r = rank(rows, ncols)
        if r:
            dims[d] = r
    return dims


def annihilates(f, Phi, M2):
    """Whether f(a, c) kills Phi, c acting by post-composition."""
    return all(not x for row in mat_mul(f.evaluate_at_matrix(M2.C()), Phi) for x in row)


def check_hom_pair(p, p2, max_degree):
    """Compare formula and oracle for one ordered pair; returns failure strings."""
    p, p2 = _pair(p), _pair(p2)
    M, M2 = standard_module(p), standard_module(p2)
    formula = hom_formula(p, p2, max_degree)
    oracle = hom_oracle(M, M2, max_degree)
    failures = []
    degrees = set(oracle.dims) | {d for (d,) in formula.hilbert_series.terms}
    for d in sorted(degrees):
        if d <= max_degree and oracle.dim(d) != formula.dim(d):
            failures.append("%s->%s degree %d: oracle %d formula %d"
                            % (tuple_of(p), tuple_of(p2), d, oracle.dim(d), formula.dim(d)))
    if formula.is_zero:
        if oracle.generator is not None:
            failures.append("%s->%s: formula zero, oracle nonzero" % (tuple_of(p), tuple_of(p2)))
        return failures
    if oracle.generator is None:
        if formula.generator_degree <= max_degree:
            failures.append("%s->%s: oracle found no map" % (tuple_of(p), tuple_of(p2)))
        return failures
    if oracle.generator_degree != formula.generator_degree:
        failures.append("%s->%s: generator degree %d vs %d" % (
            tuple_of(p), tuple_of(p2), oracle.generator_degree, formula.generator_degree))
    if not annihilates(formula.annihilator, oracle.generator, M2):
        failures.append("%s->%s: annihilator does not kill generator" % (tuple_of(p), tuple_of(p2)))
    span = cyclic_dims(oracle.generator, oracle.generator_degree, M2, max_degree)
    if span != {d: v for d, v in oracle.dims.items() if d <= max_degree}:
        failures.append("%s->%s: generator is not cyclic" % (tuple_of(p), tuple_of(p2)))
    return failures


def tuple_of(p):
    return (p.lam, p.mu)


def verify_hom_agreement(lam_max, mu_bound, max_degree):
    """Sweep ``check_hom_pair`` over all ordered pairs in range."""
    pairs = valid_pairs(lam_max, mu_bound)
    failures = []
    checked = 0
    for p in pairs:
        for p2 in pairs:
            failures.extend(check_hom_pair(p, p2, max_degree))
            checked += 1
    return {"pairs_checked": checked, "failures": failures, "ok": not failures}


def verify_annihilator(pair):
    pair = _pair(pair)
    return char_poly_in_c(standard_module(pair).C()) == annihilator_polynomial(pair)


def compose(Phi2, Phi1):
    return mat_mul(Phi2, Phi1)


def is_homogeneous_c(M):
    """Degree-2 homogeneity of c (re-checked independently of construction)."""
    for i, row in enumerate(M.c_matrix):
        for j, x in enumerate(row):
            for e in x.terms:
                if M.basis_degrees[i] + 2 * e != M.basis_degrees[j] + 2:
                    return False
    return True


__all__ = [
    "FreeCModel", "HomDescription", "HomOracleResult", "annihilator_polynomial",
    "annihilates", "check_hom_pair", "compose", "cyclic_dims", "default_max_degree",
    "generator_check", "hilbert_of_quotient", "hom_formula", "hom_in_degree",
    "hom_oracle", "standard_module", "twist", "verify_annihilator",
    "verify_hom_agreement",
]
