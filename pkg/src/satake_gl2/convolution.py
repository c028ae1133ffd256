"""Stalks of the convolution F^0_! * IC^lam at the point labelled (m, l).

For x = [[z^-n, a z^(-n-k)], [0, 1]] with a a unit of O / z^k,

    x^-1 g = [[z^(n+m), z^(n+l-m) - a z^(-k-m)], [0, z^-m]]

lies in the closure of Gr^lam, lam = (n1, n2), n = n1 + n2, iff n + m >= n2,
-m >= n2 and z^(n+l) - a z^-k lies in z^(n2+m) O. The last condition is a
set of affine-linear equations on the coefficients a_0, ..., a_(k-1).

The stalk is computed over Q by exact solving (``classify_stalk``) and
checked against a brute-force character sum over F_q (``character_sum_oracle``).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from .exact import PolyA, solve
from .orbits import DominantGL2Coweight

POINT = "point"
ZERO = "zero"

# reasons for a zero stalk
LATTICE = "lattice"
FREE_TOP = "free_top_coefficient"


def _coweight(lam):
    return lam if isinstance(lam, DominantGL2Coweight) else DominantGL2Coweight(*lam)


@dataclass(frozen=True)
class TruncatedUnit:
    """a_0 + a_1 z + ... + a_(k-1) z^(k-1) with a_0 invertible."""

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients or not self.coefficients[0]:
            raise ValueError("a truncated unit needs a_0 != 0")

    @property
    def k(self):
        return len(self.coefficients)


@dataclass(frozen=True)
class StalkConditionSystem:
    k: int
    lam: DominantGL2Coweight
    m: int
    l: int
    lattice_ok: bool
    # rows over a_0..a_(k-1): sum coeffs[i] a_i = rhs
    equations: tuple = field(default=())
    constrained: tuple = field(default=())
    # the membership fails for every a (a pure z^(n+l) term below the bound)
    inconsistent: bool = False

    @property
    def order_bound(self):
        return self.lam.n2 + self.m


@dataclass(frozen=True)
class StalkResult:
    kind: str
    shift: object = None
    reason: object = None
    solution: object = None

    def to_json(self):
        if self.kind == POINT:
            return {"kind": POINT, "shift": self.shift}
        return {"kind": ZERO, "reason": self.reason}


def build_conditions(k, lam, m, l):
    """Encode x^-1 g in closure(Gr^lam) as linear constraints on a_0..a_(k-1).

    The coefficient of z^j in z^(n+l) - sum_i a_i z^(i-k) must vanish for all
    j < n2 + m. When that window misses [-k, -1] no a_i is involved.
    """
    if k < 1:
        raise ValueError("level k must be positive")
    lam = _coweight(lam)
    n = lam.n
    lattice_ok = n + m >= lam.n2 and -m >= lam.n2
    bound = lam.n2 + m
    equations = []
    inconsistent = False
    if lattice_ok:
        # only exponents j in [-k, -1] involve a; bound <= 0 on this branch
        for j in range(-k, min(bound, 0)):
            row = [0] * k
            row[j + k] = 1
            equations.append((tuple(row), 1 if j == n + l else 0))
        if n + l < bound and not -k <= n + l < 0:
            inconsistent = True
    constrained = tuple(sorted(r.index(1) for r, _ in equations))
    return StalkConditionSystem(k, lam, m, l, lattice_ok, tuple(equations),
                                constrained, inconsistent)


def _solve_rational(system):
    """Affine solution set over Q as (particular, kernel), or None."""
    if not system.lattice_ok or system.inconsistent:
        return None
    k = system.k
    if not system.equations:
        return [Fraction(0)] * k, [[Fraction(int(i == j)) for i in range(k)] for j in range(k)]
    rows = [list(r) for r, _ in system.equations]
    rhs = [b for _, b in system.equations]
    return solve(rows, rhs, k)


def classify_stalk(k, lam, m, l):
    """Point with shift dim X_lam = k + n1 - n2, or Zero with a reason."""
    lam = _coweight(lam)
    system = build_conditions(k, lam, m, l)
    sol = _solve_rational(system)
    if sol is None:
        return StalkResult(ZERO, reason=LATTICE)
    particular, kern = sol
    # the unit condition a_0 != 0 fails on the whole solution set
    if all(v[0] == 0 for v in kern) and particular[0] == 0:
        return StalkResult(ZERO, reason=LATTICE)
    if any(v[k - 1] for v in kern):
        return StalkResult(ZERO, reason=FREE_TOP)
    if kern:
        # constrained top coefficient with other free directions: does not occur
        raise AssertionError("unexpected solution family for %r" % ((k, lam, m, l),))
    return StalkResult(POINT, shift=k + lam.n1 - lam.n2, solution=tuple(particular))


def point_rule(k, lam, m, l):
    """The closed-form criterion -m = n2 and n + l = -k."""
    lam = _coweight(lam)
    return -m == lam.n2 and lam.n + l == -k


# -- finite-field oracle ----------------------------------------------------

def _is_prime(q):
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def _unit_mul(x, y, q, k):
    out = [0] * k
    for i, xi in enumerate(x):
        if xi:
            for j in range(k - i):
                out[i + j] = (out[i + j] + xi * y[j]) % q
    return tuple(out)


def _primitive_root(q):
    for g in range(2, q):
        seen, x = set(), 1
        for _ in range(q - 1):
            x = x * g % q
            seen.add(x)
        if len(seen) == q - 1:
            return g
    return 1


@lru_cache(maxsize=None)
def conductor_character(q, k):
    """Character of (F_q[z]/z^k)^x nontrivial on 1 + z^(k-1), values in Q/Z.

    For k = 1 the character is nontrivial on F_q^x. Built by extending a
    faithful character of the cyclic subgroup generated by h = 1 + z^(k-1)
    (resp. a primitive root) one generator at a time: if g^r is the first
    power of g inside the current subgroup K, set chi(g) = chi(g^r) / r.
    Returns a dict unit -> Fraction in [0, 1).
    """
    if not _is_prime(q):
        raise ValueError("q must be prime, got %r" % (q,))
    if q ** k > 10 ** 6:
        raise ValueError("q^k too large to enumerate")
    one = (1,) + (0,) * (k - 1)
    if k == 1:
        if q == 2:
            raise ValueError("F_2^x is trivial: no character of conductor 1 over F_2")
        h = (_primitive_root(q),)
    else:
        h = tuple(1 if i in (0, k - 1) else 0 for i in range(k))

    def mul(x, y):
        return _unit_mul(x, y, q, k)

    # cyclic subgroup of h with a faithful character
    x, powers = h, [one]
    while x != one:
        powers.append(x)
        x = mul(x, h)
    order = len(powers)
    chi = {p: Fraction(i, order) for i, p in enumerate(powers)}

    units = [u for u in product(range(q), repeat=k) if u[0]]
    for g in units:
        if g in chi:
            continue
        r, x = 1, g
        while x not in chi:
            x = mul(x, g)
            r += 1
        value_g = (chi[x] / r) % 1
        new = dict(chi)
        gj, vj = one, Fraction(0)
        for _ in range(r):
            for u, val in chi.items():
                new[mul(u, gj)] = (val + vj) % 1
            gj = mul(gj, g)
            vj = (vj + value_g) % 1
        chi = new
    return chi


def _cyclotomic(n):
    """n-th cyclotomic polynomial as a PolyA (variable reused as x)."""
    poly = PolyA({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            poly = poly.divmod(_cyclotomic(d))[0]
    return poly


@dataclass(frozen=True)
class CyclotomicSum:
    """sum of exp(2 pi i theta) over a multiset of angles theta in Q/Z."""

    counts: tuple  # sorted (theta, multiplicity)

    @property
    def conductor(self):
        den = 1
        for theta, _ in self.counts:
            den = den * theta.denominator // gcd(den, theta.denominator)
        return den

    def as_poly(self):
        N = self.conductor
        return N, PolyA({int(theta * N): c for theta, c in self.counts})

    def is_zero(self):
        N, p = self.as_poly()
        return not p.divmod(_cyclotomic(N))[1]

    def is_one(self):
        N, p = self.as_poly()
        return not (p - 1).divmod(_cyclotomic(N))[1]

    def to_json(self):
        return [[t.numerator, t.denominator, c] for t, c in self.counts]


def satisfies_mod_q(system, a, q):
    if not system.lattice_ok or system.inconsistent:
        return False
    return all(sum(c * x for c, x in zip(row, a)) % q == rhs % q
               for row, rhs in system.equations)


def solutions_mod_q(system, q):
    """All units a of F_q[z]/z^k meeting the membership conditions."""
    if not system.lattice_ok or system.inconsistent:
        return []
    k = system.k
    fixed = {}
    for row, rhs in system.equations:
        fixed[row.index(1)] = rhs % q
    ranges = [(fixed[i],) if i in fixed else range(q) for i in range(k)]
    return [a for a in product(*ranges) if a[0] and satisfies_mod_q(system, a, q)]


def character_sum_oracle(k, lam, m, l, q):
    """sum of psi(a) over the solution units, psi of conductor exactly k."""
    chi = conductor_character(q, k)
    system = build_conditions(k, lam, m, l)
    counts = {}
    for a in solutions_mod_q(system, q):
        counts[chi[a]] = counts.get(chi[a], 0) + 1
    return CyclotomicSum(tuple(sorted(counts.items())))


def rational_point_is_unit_one(result, k):
    """The Point solution is exactly a_0 = 1, a_j = 0 for 0 < j < k."""
    return result.solution == tuple(Fraction(int(i == 0)) for i in range(k))


__all__ = [
    "CyclotomicSum", "FREE_TOP", "LATTICE", "POINT", "ZERO", "StalkConditionSystem",
    "StalkResult", "TruncatedUnit", "build_conditions", "character_sum_oracle",
    "classify_stalk", "conductor_character", "point_rule", "rational_point_is_unit_one",
    "solutions_mod_q",
]
