"""Irreducible GL(2)-representations V(lam, mu) in an explicit weight basis.

Basis convention: v_0, ..., v_lam with

    h v_j = (lam - 2j) v_j,   f v_j = v_{j+1},   e v_j = j (lam + 1 - j) v_{j-1},

so that V(1, 1) is literally the defining representation. Matrices act on
column vectors; column ``j`` holds the image of ``v_j``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .exact import (
    Laurent, PolyA, identity_matrix, mat_add, mat_eq, mat_mul, mat_scale,
    mat_sub, zero_matrix,
)


@dataclass(frozen=True, order=True)
class CoweightPair:
    """Index (lam, mu) of V(lam, mu); requires lam >= 0 and lam = mu mod 2."""

    lam: int
    mu: int

    def __post_init__(self):
        if not isinstance(self.lam, int) or not isinstance(self.mu, int):
            raise TypeError("lam and mu must be integers")
        if self.lam < 0:
            raise ValueError("lam must be non-negative, got %d" % self.lam)
        if (self.lam - self.mu) % 2:
            raise ValueError(
                "no representation V(%d, %d): lam - mu must be even" % (self.lam, self.mu))


def valid_pairs(lam_max, mu_bound):
    """All valid pairs with lam <= lam_max and |mu| <= mu_bound, sorted."""
    return [CoweightPair(l, m)
            for l in range(lam_max + 1)
            for m in range(-mu_bound, mu_bound + 1)
            if (l - m) % 2 == 0]


@dataclass(frozen=True)
class WeightRep:
    pair: CoweightPair
    e: tuple = field(repr=False)
    f: tuple = field(repr=False)
    h: tuple = field(repr=False)
    one: tuple = field(repr=False)

    @property
    def dim(self):
        return self.pair.lam + 1

    @property
    def weights(self):
        lam = self.pair.lam
        return [lam - 2 * j for j in range(lam + 1)]

    def matrices(self):
        return {"e": self.e, "f": self.f, "h": self.h, "id": self.one}


def _frozen(M):
    return tuple(tuple(row) for row in M)


def irrep(pair):
    """Construct V(lam, mu) with rational e, f, h and identity matrices."""
    if not isinstance(pair, CoweightPair):
        pair = CoweightPair(*pair)
    n = pair.lam + 1
    e = zero_matrix(n, n)
    f = zero_matrix(n, n)
    h = zero_matrix(n, n)
    for j in range(n):
        h[j][j] = Fraction(pair.lam - 2 * j)
        if j + 1 < n:
            f[j + 1][j] = Fraction(1)
        if j > 0:
            e[j - 1][j] = Fraction(j * (pair.lam + 1 - j))
    one = [[Fraction(pair.mu) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return WeightRep(pair, _frozen(e), _frozen(f), _frozen(h), _frozen(one))


def commutation_ok(rep):
    """[e,f] = h, [h,e] = 2e, [h,f] = -2f and the centre acts by a scalar."""
    e, f, h = (list(map(list, m)) for m in (rep.e, rep.f, rep.h))

    def br(x, y):
        return mat_sub(mat_mul(x, y), mat_mul(y, x))

    return (mat_eq(br(e, f), h)
            and mat_eq(br(h, e), mat_scale(e, 2))
            and mat_eq(br(h, f), mat_scale(f, -2)))


# -- 2x2 matrices over PolyA ------------------------------------------------

def _p(x):
    return x if isinstance(x, PolyA) else PolyA.const(x)


def gl2_element(rows):
    """Coerce a 2x2 nested sequence to a PolyA matrix."""
    M = [[_p(x) for x in row] for row in rows]
    if len(M) != 2 or any(len(r) != 2 for r in M):
        raise ValueError("expected a 2x2 matrix")
    return M


def S_matrix():
    a = PolyA.a()
    return gl2_element([[a, 1], [a * a, a]])


def T_matrix():
    return gl2_element([[0, 1], [0, 2 * PolyA.a()]])


def g_matrix():
    return gl2_element([[1, 0], [-PolyA.a(), 1]])


def g_inverse():
    return gl2_element([[1, 0], [PolyA.a(), 1]])


def _lift(M):
    return [[PolyA.const(x) for x in row] for row in M]


def act(rep, A):
    """Image of a gl_2 element with PolyA entries under V(lam, mu).

    A = q e + r f + (p - s)/2 h + (p + s)/2 id for A = [[p, q], [r, s]];
    the identity goes to the central scalar mu.
    """
    A = gl2_element(A)
    (p, q), (r, s) = A
    half = Fraction(1, 2)
    E, F, H, I = (_lift(m) for m in (rep.e, rep.f, rep.h, rep.one))
    out = mat_scale(E, q)
    out = mat_add(out, mat_scale(F, r))
    out = mat_add(out, mat_scale(H, (p - s) * half))
    out = mat_add(out, mat_scale(I, (p + s) * half))
    return out


def exp_nilpotent(N):
    """exp(N) for a nilpotent square matrix over PolyA (finite sum)."""
    n = len(N)
    total = identity_matrix(n, PolyA)
    term = identity_matrix(n, PolyA)
    for k in range(1, n + 1):
        term = mat_mul(term, N)
        if all(not x for row in term for x in row):
            break
        total = mat_add(total, mat_scale(term, Fraction(1, factorial(k))))
    return total


def group_lower_unipotent(rep, t):
    """Image of [[1, 0], [t, 1]] = exp(t f) in the group representation."""
    F = _lift(rep.f)
    return exp_nilpotent(mat_scale(F, _p(t)))


def verify_conjugation(a_value=None):
    """Check g(a)^{-1} S(a) g(a) = T(a) exactly.

    With ``a_value`` the three matrices are specialised at that rational
    number first.
    """
    S, T, g, gi = S_matrix(), T_matrix(), g_matrix(), g_inverse()
    if a_value is not None:
        sub = lambda M: [[PolyA.const(x.evaluate(Fraction(a_value))) for x in r] for r in M]
        S, T, g, gi = sub(S), sub(T), sub(g), sub(gi)
    if not mat_eq(mat_mul(gi, g), identity_matrix(2, PolyA)):
        return False
    return mat_eq(mat_mul(mat_mul(gi, S), g), T)


def character(rep):
    """sum over the basis of t^weight z^mu, as a two-variable Laurent polynomial."""
    return Laurent({(w, rep.pair.mu): 1 for w in rep.weights})


def character_of_pair(lam, mu):
    return Laurent({(lam - 2 * j, mu): 1 for j in range(lam + 1)})
