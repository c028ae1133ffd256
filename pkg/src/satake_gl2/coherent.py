"""The coherent side: P-equivariant modules over C[x, y], invariant theory on V x V*.

P is the stabilizer of (1, 0) in GL(2), matrices [[1, alpha], [0, beta]],
acting on points (x, y) of V* through (g^t)^-1. Its Lie algebra is spanned
by U = [[0, 1], [0, 0]] and W = [[0, 0], [0, 1]]; the matrix A = u U + v W
moves the point (x, y) in the direction (0, -u x - v y).

On functions the coordinates x, y transform like the basis e_1, e_2 of V,
so the representation of Lie(P) on C[x, y] (x) V(lam, mu) is

    rho(A) = (u x + v y) d/dy (x) 1 + 1 (x) pi_{lam,mu}(A).

Polynomial degree counts x and y in degree 2. The combined degree of
x^i y^b (x) v_j is 2(i + b) - 2 * (torus weight) + mu, where the torus is
diag(1, beta) inside P; with this offset the restriction to y = -1 lands on
the grading of M(lam, mu).
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    MPoly, PolyA, kernel, monomials, poly_gcd, rank,
)
from .modules import FreeCModel
from .rep import CoweightPair, act, irrep

U_GEN = (1, 0)
W_GEN = (0, 1)


@dataclass(frozen=True)
class PGroupData:
    """Lie(P) basis and the torus used for gradings."""

    lie_basis = (("U", U_GEN), ("W", W_GEN))

    @staticmethod
    def matrix(u, v):
        return [[0, u], [0, v]]

    @staticmethod
    def point_action(u, v, point):
        x, y = point
        return (0 * x, -u * x - v * y)

    @staticmethod
    def group_point_action(alpha, beta, point):
        """(g^t)^-1 (x, y) for g = [[1, alpha], [0, beta]]."""
        x, y = point
        return (x, (y - alpha * x) / beta)


def _pair(p):
    return p if isinstance(p, CoweightPair) else CoweightPair(*p)


def _pi(rep, u, v):
    """pi_{lam,mu}([[0, u], [0, v]]) as a rational matrix."""
    M = act(rep, [[0, u], [0, v]])
    return [[x.coeff(0) for x in row] for row in M]


def _wt2(pair, j):
    # weight of v_j under diag(1, beta)
    return (pair.mu - pair.lam + 2 * j) // 2


@dataclass(frozen=True)
class PEquivFreeModule:
    """O_{V*} (x) V(lam, mu) with the diagonal P-action."""

    pair: CoweightPair

    @classmethod
    def of(cls, pair):
        return cls(_pair(pair))

    @property
    def rep(self):
        return irrep(self.pair)

    def piece_basis(self, n):
        """x^i y^(n-i) (x) v_j for monomial degree n, as (i, n - i, j)."""
        return [(i, n - i, j) for i in range(n, -1, -1) for j in range(self.pair.lam + 1)]

    def torus_weight(self, elt):
        i, b, j = elt
        return b + _wt2(self.pair, j)

    def combined_degree(self, elt):
        i, b, j = elt
        return 2 * (i + b) - 2 * self.torus_weight(elt) + self.pair.mu


def lie_p_action(module, u, v, degree):
    """Matrix of A = [[0, u], [0, v]] on the monomial-degree piece ``degree``.

    Convention: the polynomial factor is moved by the vector field of A,
    y -> -u x - v y, and the representation factor by -pi(A). This is
    -rho(A): an anti-homomorphism of Lie(P) with the same joint kernels.
    Returns ``(basis, matrix)`` with ``matrix[row][col]``.
    """
    module = module if isinstance(module, PEquivFreeModule) else PEquivFreeModule.of(module)
    u, v = Fraction(u), Fraction(v)
    basis = module.piece_basis(degree)
    index = {b: k for k, b in enumerate(basis)}
    pi = _pi(module.rep, u, v)
    M = [[Fraction(0)] * len(basis) for _ in basis]
    for col, (i, b, j) in enumerate(basis):
        if b:
            if u:
                M[index[(i + 1, b - 1, j)]][col] -= u * b
            if v:
                M[index[(i, b, j)]][col] -= v * b
        for r in range(len(pi)):
            if pi[r][j]:
                M[index[(i, b, r)]][col] -= pi[r][j]
    return basis, M


def apply_lie_p(module, u, v, element):
    """Apply ``lie_p_action`` to a dict {(i, b, j): coeff} of one monomial degree."""
    if not element:
        return {}
    n = sum(next(iter(element))[:2])
    basis, M = lie_p_action(module, u, v, n)
    index = {b: k for k, b in enumerate(basis)}
    out = {}
    for elt, c in element.items():
        col = index[elt]
        for row in range(len(basis)):
            if M[row][col]:
                out[basis[row]] = out.get(basis[row], 0) + M[row][col] * c
    return {k: x for k, x in out.items() if x}


# -- equivariant Hom ---------------------------------------------------------

def _hom_rho(p, p2, u, v, basis, index):
    """rho(A) on C[x,y]_n (x) V(p)* (x) V(p2) as sparse rows {out_index: {col: coeff}}."""
    pi, pi2 = _pi(irrep(p), u, v), _pi(irrep(p2), u, v)
    rows = {}

    def put(r, c, x):
        if x:
            row = rows.setdefault(r, {})
            row[c] = row.get(c, 0) + x

    for col, (i, b, j, r) in enumerate(basis):
        if b:
            put(index[(i + 1, b - 1, j, r)], col, u * b)
            put(index[(i, b, j, r)], col, v * b)
        # dual factor: A . phi_j = -sum_k pi[j][k] phi_k
        for k in range(len(pi)):
            put(index[(i, b, k, r)], col, -pi[j][k])
        for s in range(len(pi2)):
            put(index[(i, b, j, s)], col, pi2[s][r])
    return rows


def _hom_basis(p, p2, n):
    return [(i, n - i, j, r)
            for i in range(n, -1, -1)
            for j in range(p.lam + 1)
            for r in range(p2.lam + 1)]


def equivariant_hom_piece(p, p2, n):
    """Basis of P-invariants in C[x,y]_n (x) V(p)* (x) V(p2), as coefficient dicts."""
    p, p2 = _pair(p), _pair(p2)
    basis = _hom_basis(p, p2, n)
    index = {b: k for k, b in enumerate(basis)}
    w_rows = _hom_rho(p, p2, Fraction(0), Fraction(1), basis, index)
    for r, row in w_rows.items():
        if any(c != r for c in row if row[c]):
            raise AssertionError("torus generator is not diagonal")
    weight_zero = [c for c in range(len(basis)) if not w_rows.get(c, {}).get(c, 0)]
    if not weight_zero:
        return []
    u_rows = _hom_rho(p, p2, Fraction(1), Fraction(0), basis, index)
    local = {c: k for k, c in enumerate(weight_zero)}
    rows = []
    for row in u_rows.values():
        r = {local[c]: x for c, x in row.items() if c in local and x}
        if r:
            rows.append(r)
    out = []
    for vec in kernel(rows, len(weight_zero)):
        out.append({basis[weight_zero[k]]: x for k, x in enumerate(vec) if x})
    return out


def equivariant_hom_graded(p, p2, max_degree):
    """Graded dims of Hom_{O_{V*} x| P}(O (x) V(p), O (x) V(p2)) through ``max_degree``.

    An invariant of monomial degree n has combined degree 2n + mu' - mu.
    """
    p, p2 = _pair(p), _pair(p2)
    shift = p2.mu - p.mu
    dims = {}
    n = 0
    while 2 * n + shift <= max_degree:
        dim = len(equivariant_hom_piece(p, p2, n))
        if dim:
            dims[2 * n + shift] = dim
        n += 1
    return dims


# -- restriction to the line y = -1 ----------------------------------------

def _restrict(element):
    """Set y = -1 in {(i, b, j): coeff}; returns {(i, j): coeff}."""
    out = {}
    for (i, b, j), c in element.items():
        key = (i, j)
        out[key] = out.get(key, 0) + c * (-1) ** b
    return {k: v for k, v in out.items() if v}


def c_operator(module, element):
    """rho(U) + x rho(W) applied to an element {(i, b, j): coeff}.

    This is the Lie(P)-valued function (x, y) -> [[0, 1], [0, x]], which at
    (2a, -1) is the stabilizer generator [[0, 1], [0, 2a]].
    """
    pair = module.pair
    rep = module.rep
    piU, piW = _pi(rep, 1, 0), _pi(rep, 0, 1)
    out = {}

    def put(k, c):
        if c:
            out[k] = out.get(k, 0) + c

    for (i, b, j), c in element.items():
        # rho(U): y -> x on the polynomial, pi(U) on the vector
        if b:
            put((i + 1, b - 1, j), c * b)
        for r in range(pair.lam + 1):
            put((i, b, r), c * piU[r][j])
        # x rho(W): x * (y d/dy + pi(W))
        if b:
            put((i + 1, b, j), c * b)
        for r in range(pair.lam + 1):
            put((i + 1, b, r), c * piW[r][j])
    return {k: v for k, v in out.items() if v}


def tilde_F(pair):
    """Restrict O_{V*} (x) V(lam, mu) to y = -1 and read off the C[a, c]-module.

    a acts by x/2 and c by ``c_operator``; the quotient is free over C[x] on
    1 (x) v_j, placed in combined degree.
    """
    module = PEquivFreeModule.of(pair)
    n = module.pair.lam + 1
    degrees = [module.combined_degree((0, 0, j)) for j in range(n)]
    C = [[PolyA() for _ in range(n)] for _ in range(n)]
    for j in range(n):
        image = _restrict(c_operator(module, {(0, 0, j): Fraction(1)}))
        for (i, r), coeff in image.items():
            # x = 2a
            C[r][j] = C[r][j] + PolyA({i: coeff * 2 ** i})
    return FreeCModel.build(degrees, C)


def descends_to_line(pair, max_degree=3):
    """c_operator maps (y + 1) M into (y + 1) M on monomial degrees <= max_degree."""
    module = PEquivFreeModule.of(pair)
    for n in range(max_degree + 1):
        for (i, b, j) in module.piece_basis(n):
            elt = {(i, b + 1, j): Fraction(1), (i, b, j): Fraction(1)}
            if _restrict(c_operator(module, elt)):
                return False
    return True


# -- stabilizer of (2a, -1) --------------------------------------------------

def _action_matrix_at(point):
    """(u, v) -> A (x, y) at ``point`` as a 2x2 matrix over PolyA."""
    x, y = point
    zero = PolyA()
    # A(x, y) = (0, -u x - v y)
    return [[zero, zero], [-x, -y]]


def stabilizer_check(a_value=None):
    """Lie stabilizer of (2a, -1) in Lie(P) is the line of [[0, 1], [0, 2a]].

    With ``a_value`` the point is specialised first.
    """
    a = PolyA.a() if a_value is None else PolyA.const(Fraction(a_value))
    point = (2 * a, PolyA.const(-1))
    M = _action_matrix_at(point)
    nonzero_rows = [row for row in M if any(row)]
    if len(nonzero_rows) != 1:
        return False
    p, q = nonzero_rows[0]
    g = poly_gcd(p, q) if (p or q) else PolyA.const(1)
    gen = (q.divmod(g)[0], -p.divmod(g)[0])
    if any(sum((row[k] * gen[k] for k in range(2)), PolyA()) for row in M):
        return False
    # normalise to u = 1
    if not gen[0]:
        return False
    u0 = gen[0]
    if u0.degree() != 0:
        return False
    scale = 1 / u0.coeff(0)
    u, v = gen[0] * scale, gen[1] * scale
    return u == PolyA.const(1) and v == 2 * a


def tangent_span_check(a_value=None):
    """Orbit directions of Lie(P) plus the line direction span T V* at (2a, -1)."""
    a = PolyA.a() if a_value is None else PolyA.const(Fraction(a_value))
    point = (2 * a, PolyA.const(-1))
    M = _action_matrix_at(point)
    # columns: U-direction, W-direction, d/dx along the line y = -1
    cols = [[M[0][0], M[1][0]], [M[0][1], M[1][1]], [PolyA.const(1), PolyA()]]
    for c1 in range(3):
        for c2 in range(c1 + 1, 3):
            det = cols[c1][0] * cols[c2][1] - cols[c1][1] * cols[c2][0]
            if det and det.degree() == 0:
                return True
    return False


# -- GL(2) invariants on V x V* ---------------------------------------------

def _bideg_basis(d1, d2):
    return [va + wb for va in monomials(2, d1) for wb in monomials(2, d2)]


def _gl2_derivation_rows(basis, r, s):
    """E_rs acting on functions of (v, w): -v_s d/dv_r + w_r d/dw_s."""
    index = {b: k for k, b in enumerate(basis)}
    rows = {}

    def put(out, col, x):
        if x:
            row = rows.setdefault(index[out], {})
            row[col] = row.get(col, 0) + x

    for col, e in enumerate(basis):
        e = list(e)
        if e[r]:
            out = e[:]
            out[r] -= 1
            out[s] += 1
            put(tuple(out), col, -e[r])
        if e[2 + s]:
            out = e[:]
            out[2 + s] -= 1
            out[2 + r] += 1
            put(tuple(out), col, e[2 + s])
    return rows


def gl2_generator_rows(basis):
    return [_gl2_derivation_rows(basis, r, s) for r in range(2) for s in range(2)]


def pairing():
    """v*(v) = v1 w1 + v2 w2 in variables (v1, v2, w1, w2)."""
    return MPoly({(1, 0, 1, 0): 1, (0, 1, 0, 1): 1})


def gl2_invariants_bidegree(d1, d2):
    """GL(2)-invariant polynomials of bidegree (d1, d2) on V x V*.

    Returns ``(dim, basis)`` with basis elements as MPoly.
    """
    if d1 < 0 or d2 < 0:
        raise ValueError("bidegree must be non-negative")
    basis = _bideg_basis(d1, d2)
    rows = [row for gen in gl2_generator_rows(basis) for row in gen.values()]
    kern = kernel(rows, len(basis))
    polys = [MPoly({basis[k]: x for k, x in enumerate(vec) if x}) for vec in kern]
    return len(polys), polys


def invariants_of_Z_quotient(N, dmax):
    """Graded dims of GL(2)-invariants of O(V x V*) / (p^N), p = v*(v).

    Keyed by total degree d1 + d2 <= dmax. ``N=None`` means the full ring.
    Invariants of the quotient are computed inside the quotient: x counts
    when every generator sends it into the ideal.
    """
    p_pow = pairing() ** N if N is not None else None
    table = {}
    for total in range(dmax + 1):
        dim_total = 0
        for d1 in range(total + 1):
            d2 = total - d1
            basis = _bideg_basis(d1, d2)
            index = {b: k for k, b in enumerate(basis)}
            ideal = []
            if p_pow is not None and d1 >= N and d2 >= N:
                for e in _bideg_basis(d1 - N, d2 - N):
                    prod = p_pow * MPoly.monomial(e)
                    ideal.append({index[m]: x for m, x in prod.items()})
            dim_ideal = rank(ideal, len(basis)) if ideal else 0
            # functionals vanishing on the ideal
            quotient_map = kernel(ideal, len(basis)) if ideal else [
                [Fraction(int(i == j)) for i in range(len(basis))] for j in range(len(basis))]
            rows = []
            for gen in gl2_generator_rows(basis):
                # (q . D)[col] = sum_r q[r] D[r][col]
                for q in quotient_map:
                    row = {}
                    for r, drow in gen.items():
                        if q[r]:
                            for col, x in drow.items():
                                row[col] = row.get(col, 0) + q[r] * x
                    row = {c: x for c, x in row.items() if x}
                    if row:
                        rows.append(row)
            stable = len(basis) - (rank(rows, len(basis)) if rows else 0)
            dim_total += stable - dim_ideal
        if dim_total:
            table[total] = dim_total
    return table


# -- invariant supports ------------------------------------------------------

# GL(V) x C^x orbits on V x V*, C^x dilating V*:
#   0: the origin, 1: v != 0 = w, 2: v = 0 != w,
#   3: v, w != 0 with w(v) = 0, 4: w(v) != 0
ORBIT_CLOSURES = {0: {0}, 1: {0, 1}, 2: {0, 2}, 3: {0, 1, 2, 3}, 4: {0, 1, 2, 3, 4}}

_NAMES = {
    frozenset(): "EMPTY",
    frozenset({0}): "ORIGIN",
    frozenset({0, 1}): "V_STAR_ZERO",
    frozenset({0, 2}): "V_ZERO",
    frozenset({0, 1, 2}): "V_ZERO|V_STAR_ZERO",
    frozenset({0, 1, 2, 3}): "Z_V",
    frozenset({0, 1, 2, 3, 4}): "FULL",
}


@dataclass(frozen=True)
class InvariantSupportLabel:
    """Closed GL(V)- and dilation-invariant subset, as the set of orbits it contains."""

    orbits: frozenset

    def __post_init__(self):
        for o in self.orbits:
            if not ORBIT_CLOSURES[o] <= self.orbits:
                raise ValueError("orbit set %r is not closed" % (sorted(self.orbits),))

    @classmethod
    def closure_of(cls, *orbit_ids):
        out = set()
        for o in orbit_ids:
            out |= ORBIT_CLOSURES[o]
        return cls(frozenset(out))

    def __or__(self, other):
        return InvariantSupportLabel(self.orbits | other.orbits)

    def __and__(self, other):
        return InvariantSupportLabel(self.orbits & other.orbits)

    @property
    def name(self):
        return _NAMES[self.orbits]

    def __repr__(self):
        return "InvariantSupportLabel(%s)" % self.name


EMPTY = InvariantSupportLabel(frozenset())
ORIGIN = InvariantSupportLabel.closure_of(0)
V_STAR_ZERO = InvariantSupportLabel.closure_of(1)
V_ZERO = InvariantSupportLabel.closure_of(2)
Z_V = InvariantSupportLabel.closure_of(3)
FULL = InvariantSupportLabel.closure_of(4)


def support_lattice():
    """Every closed invariant subset: unions of orbit closures."""
    labels = {EMPTY}
    frontier = [EMPTY]
    generators = [InvariantSupportLabel.closure_of(o) for o in ORBIT_CLOSURES]
    while frontier:
        nxt = []
        for lab in frontier:
            for g in generators:
                u = lab | g
                if u not in labels:
                    labels.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(labels, key=lambda l: (len(l.orbits), sorted(l.orbits)))


def _orbit_equations(v, w):
    """(equations, groups-not-all-zero) cutting out each orbit at the point (v, w)."""
    p = v[0] * w[0] + v[1] * w[1]
    return {
        0: ([v[0], v[1], w[0], w[1]], []),
        1: ([w[0], w[1]], [[v[0], v[1]]]),
        2: ([v[0], v[1]], [[w[0], w[1]]]),
        3: ([p], [[v[0], v[1]], [w[0], w[1]]]),
        4: ([], [[p]]),
    }


def _gcd_all(polys):
    g = PolyA()
    for f in polys:
        g = poly_gcd(g, f) if g else (f.monic() if f else g)
    return g


def _locus_dim(equations, groups):
    """Dimension of {x : all equations vanish, each group not all zero} in the x-line."""
    excluded = PolyA.const(1)
    for group in groups:
        excluded = excluded * _gcd_all(group)
    if not excluded:
        return -1
    g = _gcd_all(equations)
    if not g:
        return 1
    h = g
    while h.degree() > 0:
        d = poly_gcd(h, excluded)
        if d.degree() <= 0:
            break
        h = h.divmod(d)[0]
    return 0 if h.degree() > 0 else -1


def intersection_with_S(label):
    """Dimension of label cap S, S = {v = (1, 0), v* = (x, -1)}; -1 when empty."""
    x = PolyA.a()
    v = (PolyA.const(1), PolyA())
    w = (x, PolyA.const(-1))
    eqs = _orbit_equations(v, w)
    return max((_locus_dim(*eqs[o]) for o in label.orbits), default=-1)


def classify_invariant_support(label):
    """Whether the support lies in Z_V, and the dimension of its intersection with S."""
    return {
        "contained_in_Z": label.orbits <= Z_V.orbits,
        "intersection_with_S_dim": intersection_with_S(label),
    }


def orbit_of_point(v, w):
    """Orbit id of a rational point (v, w) of V x V*."""
    v = [Fraction(x) for x in v]
    w = [Fraction(x) for x in w]
    p = v[0] * w[0] + v[1] * w[1]
    vz, wz = not any(v), not any(w)
    if p:
        return 4
    if vz and wz:
        return 0
    if wz:
        return 1
    if vz:
        return 2
    return 3
