"""
Exact arithmetic: rationals, sparse polynomials and fraction-free kernels.

Rationals are ``fractions.Fraction``. Polynomials are immutable sparse maps
from exponents to coefficients with zero coefficients never stored:

* ``PolyA``     -- univariate in the symbol ``a`` (degree 2 in the grading)
* ``BivarPoly`` -- polynomials in ``a`` and ``c``, keys ``(i, j)`` for a^i c^j
* ``Laurent``   -- integer Laurent polynomials in one or more variables
"""

from fractions import Fraction
from functools import reduce
from math import gcd

Rational = Fraction


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("cannot convert %r to an exact rational" % (x,))


class _Sparse:
    """Shared arithmetic for the sparse polynomial types."""

    __slots__ = ("_terms", "_hash")

    _coerce = staticmethod(as_fraction)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, v in terms.items():
                e = self._check_exp(e)
                v = self._coerce(v)
                if v:
                    clean[e] = clean.get(e, 0) + v
                    if not clean[e]:
                        del clean[e]
        self._terms = clean
        self._hash = None

    # subclasses override
    @staticmethod
    def _check_exp(e):
        return e

    @staticmethod
    def _add_exp(e1, e2):
        raise NotImplementedError

    @classmethod
    def _zero_exp(cls):
        raise NotImplementedError

    @classmethod
    def _from_clean(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value):
        return cls({cls._zero_exp(): value})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, e):
        return self._terms.get(e, self._coerce(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, _Sparse):
            return type(self) is type(other) and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return self.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, v in other._terms.items():
            s = out.get(e, 0) + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({e: -v for e, v in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self._from_clean({})
            return self._from_clean({e: v * other for e, v in self._terms.items()})
        if not isinstance(other, type(self)):
            return NotImplemented
        out = {}
        add = self._add_exp
        for e1, v1 in self._terms.items():
            for e2, v2 in other._terms.items():
                e = add(e1, e2)
                s = out.get(e, 0) + v1 * v2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return self._from_clean(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = self.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def _fmt_coeff(v, first):
    sign = "-" if v < 0 else ("" if first else "+")
    return sign, abs(v)


class PolyA(_Sparse):
    """Univariate polynomial in ``a`` with rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _check_exp(e):
        e = int(e)
        if e < 0:
            raise ValueError("PolyA exponents must be non-negative")
        return e

    @staticmethod
    def _add_exp(e1, e2):
        return e1 + e2

    @classmethod
    def _zero_exp(cls):
        return 0

    @classmethod
    def a(cls, power=1):
        return cls({power: 1})

    def degree(self):
        return max(self._terms) if self._terms else -1

    def lowest(self):
        return min(self._terms) if self._terms else -1

    def evaluate(self, x):
        return sum((v * x ** e for e, v in self._terms.items()), Fraction(0))

    def leading(self):
        return self._terms[self.degree()]

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = {}, dict(self._terms)
        dg, lc = other.degree(), other.leading()
        while r and max(r) >= dg:
            top = max(r)
            f = r[top] / lc
            q[top - dg] = f
            for e, v in other._terms.items():
                s = r.get(e + top - dg, 0) - f * v
                if s:
                    r[e + top - dg] = s
                else:
                    r.pop(e + top - dg, None)
        return PolyA(q), PolyA(r)

    def monic(self):
        return self * (1 / self.leading()) if self else self

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            sign, v = _fmt_coeff(self._terms[e], not parts)
            mono = "" if e == 0 else ("a" if e == 1 else "a^%d" % e)
            if mono and v == 1:
                parts.append(sign + mono)
            else:
                parts.append(sign + str(v) + ("*" + mono if mono else ""))
        return "".join(parts)

    def __repr__(self):
        return "PolyA(%s)" % self


def poly_gcd(p, q):
    """Monic gcd of two univariate polynomials (Euclid)."""
    while q:
        p, q = q, p.divmod(q)[1]
    return p.monic()


class BivarPoly(_Sparse):
    """Polynomial in ``a`` and ``c``; key ``(i, j)`` is the monomial a^i c^j."""

    __slots__ = ()

    @staticmethod
    def _check_exp(e):
        i, j = e
        if i < 0 or j < 0:
            raise ValueError("BivarPoly exponents must be non-negative")
        return (int(i), int(j))

    @staticmethod
    def _add_exp(e1, e2):
        return (e1[0] + e2[0], e1[1] + e2[1])

    @classmethod
    def _zero_exp(cls):
        return (0, 0)

    @classmethod
    def a(cls):
        return cls({(1, 0): 1})

    @classmethod
    def c(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_poly_a(cls, p, c_power=0):
        return cls({(e, c_power): v for e, v in p.terms.items()})

    def c_degree(self):
        return max((j for _, j in self._terms), default=-1)

    def c_coefficient(self, j):
        """Coefficient of c^j as a PolyA."""
        return PolyA({i: v for (i, jj), v in self._terms.items() if jj == j})

    def is_homogeneous(self):
        return len({i + j for i, j in self._terms}) <= 1

    def evaluate(self, a, c):
        return sum((v * a ** i * c ** j for (i, j), v in self._terms.items()),
                   Fraction(0))

    def evaluate_at_matrix(self, C):
        """Substitute ``c := C`` (a square PolyA matrix); returns a PolyA matrix."""
        n = len(C)
        result = zero_matrix(n, n, PolyA())
        power = identity_matrix(n, PolyA)
        for j in range(self.c_degree() + 1):
            cj = self.c_coefficient(j)
            if cj:
                result = mat_add(result, mat_scale(power, cj))
            power = mat_mul(power, C)
        return result

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j) in sorted(self._terms, key=lambda e: (-(e[0] + e[1]), -e[1])):
            sign, v = _fmt_coeff(self._terms[(i, j)], not parts)
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("a" if i == 1 else "a^%d" % i),
                    "" if j == 0 else ("c" if j == 1 else "c^%d" % j),
                ) if s
            )
            if mono and v == 1:
                parts.append(sign + mono)
            else:
                parts.append(sign + str(v) + ("*" + mono if mono else ""))
        return "".join(parts)

    def __repr__(self):
        return "BivarPoly(%s)" % self


class MPoly(_Sparse):
    """Polynomial in ``nvars`` variables with rational coefficients.

    Exponents are tuples of non-negative integers of equal length.
    """

    __slots__ = ()

    @staticmethod
    def _check_exp(e):
        e = tuple(int(x) for x in e)
        if any(x < 0 for x in e):
            raise ValueError("MPoly exponents must be non-negative")
        return e

    @staticmethod
    def _add_exp(e1, e2):
        return tuple(x + y for x, y in zip(e1, e2))

    @classmethod
    def _zero_exp(cls):
        raise TypeError("use MPoly.one(nvars)")

    @classmethod
    def one(cls, nvars):
        return cls({(0,) * nvars: 1})

    @classmethod
    def var(cls, i, nvars):
        return cls({tuple(int(j == i) for j in range(nvars)): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({tuple(exps): coeff})

    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            n = self.nvars
            return MPoly({(0,) * (n or 0): other}) if n else MPoly()
        return None

    @property
    def nvars(self):
        for e in self._terms:
            return len(e)
        return None

    def const(self, value):  # instance-level: nvars is per object
        return MPoly({(0,) * (self.nvars or 1): value})

    def diff(self, i):
        out = {}
        for e, v in self._terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[e2] = v * e[i]
        return MPoly(out)

    def substitute(self, values):
        """Replace each variable by a value from ``values`` (any ring elements)."""
        total = None
        for e, v in self._terms.items():
            term = v
            for x, k in zip(values, e):
                if k:
                    term = (x ** k) * term
            total = term if total is None else total + term
        return total

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            other = self._lift(other)
        if isinstance(other, MPoly):
            return self._terms == other._terms
        return NotImplemented

    __hash__ = _Sparse.__hash__

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join("%s*%s" % (v, e) for e, v in sorted(self._terms.items(), reverse=True))

    def __repr__(self):
        return "MPoly(%s)" % self


def monomials(nvars, degree):
    """Exponent tuples of total degree ``degree`` in lexicographically descending order."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


class Laurent(_Sparse):
    """Integer Laurent polynomial; exponents are tuples of fixed length ``nvars``.

    One-variable instances also accept plain ``int`` exponents on input.
    """

    __slots__ = ()

    _coerce = staticmethod(int)

    @staticmethod
    def _check_exp(e):
        if isinstance(e, int):
            return (e,)
        return tuple(int(x) for x in e)

    @staticmethod
    def _add_exp(e1, e2):
        return tuple(x + y for x, y in zip(e1, e2))

    @classmethod
    def _zero_exp(cls):
        raise TypeError("use Laurent.one(nvars)")

    @classmethod
    def one(cls, nvars=1):
        return cls({(0,) * nvars: 1})

    @classmethod
    def monomial(cls, *exps, coeff=1):
        return cls({tuple(exps): coeff})

    @property
    def nvars(self):
        for e in self._terms:
            return len(e)
        return None

    def _lift(self, other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int):
            n = self.nvars or 1
            return Laurent({(0,) * n: other})
        return None

    def const(self, value):  # noqa: D401 -- instance-level because nvars varies
        return Laurent({(0,) * (self.nvars or 1): value})

    def __mul__(self, other):
        if isinstance(other, Fraction):
            if other.denominator != 1:
                raise TypeError("Laurent coefficients are integers")
            other = int(other)
        return _Sparse.__mul__(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = self.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._lift(other)
        if isinstance(other, Laurent):
            return self._terms == other._terms
        return NotImplemented

    __hash__ = _Sparse.__hash__

    def coeff(self, *e):
        if len(e) == 1 and isinstance(e[0], tuple):
            e = e[0]
        return self._terms.get(tuple(e), 0)

    def evaluate(self, *values):
        total = Fraction(0)
        for e, v in self._terms.items():
            term = Fraction(v)
            for x, k in zip(values, e):
                term *= Fraction(x) ** k
            total += term
        return total

    def map_exponents(self, fn):
        out = {}
        for e, v in self._terms.items():
            e2 = tuple(fn(e))
            out[e2] = out.get(e2, 0) + v
        return Laurent(out)

    def truncate(self, index, bound):
        """Drop terms whose ``index``-th exponent exceeds ``bound``."""
        return Laurent({e: v for e, v in self._terms.items() if e[index] <= bound})

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join("%d*%s" % (v, e) for e, v in sorted(self._terms.items()))

    def __repr__(self):
        return "Laurent(%s)" % self


LaurentInT = Laurent


# -- matrices over a commutative ring (lists of lists) ----------------------

def zero_matrix(rows, cols, zero=Fraction(0)):
    return [[zero for _ in range(cols)] for _ in range(rows)]


def identity_matrix(n, ring=Fraction):
    one = ring.const(1) if isinstance(ring, type) and issubclass(ring, _Sparse) else ring(1)
    zero = one * 0
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    if A and len(A[0]) != m:
        raise ValueError("shape mismatch %dx%d * %dx%d" % (n, len(A[0]), m, p))
    zero = (A[0][0] * 0) if A and m else Fraction(0)
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(p):
            s = zero
            for k in range(m):
                x = Ai[k]
                if x:
                    y = B[k][j]
                    if y:
                        s = s + x * y
            row.append(s)
        out.append(row)
    return out


def mat_add(A, B):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, s):
    return [[x * s for x in row] for row in A]


def mat_eq(A, B):
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(A, B))


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def trace(A):
    return reduce(lambda s, i: s + A[i][i], range(1, len(A)), A[0][0]) if A else 0


def mat_is_zero(A):
    return all(not x for row in A for x in row)


def map_matrix(A, fn):
    return [[fn(x) for x in row] for row in A]


# -- fraction-free sparse elimination ---------------------------------------

def _int_row(row):
    """Clear denominators of a sparse row {col: rational} -> {col: int}."""
    items = [(c, as_fraction(v)) for c, v in row.items() if v]
    if not items:
        return {}
    den = reduce(lambda x, y: x * y // gcd(x, y), (v.denominator for _, v in items), 1)
    out = {c: int(v * den) for c, v in items}
    return _primitive(out)


def _primitive(row):
    g = reduce(gcd, (abs(v) for v in row.values()), 0)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _eliminate(row, col, prow):
    """row := p*row - r*prow so that ``col`` vanishes; integer arithmetic."""
    p, r = prow[col], row[col]
    g = gcd(p, r)
    p, r = p // g, r // g
    out = {c: v * p for c, v in row.items()}
    for c, v in prow.items():
        s = out.get(c, 0) - r * v
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    return _primitive(out)


class Echelon:
    """Reduced fraction-free echelon form of a sparse row set.

    ``pivots`` maps a pivot column to its integer row; every pivot row is
    zero in every other pivot column (Gauss-Jordan), so kernel and solution
    read-offs need no back substitution.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}

    def reduce(self, row):
        row = _int_row(row) if not all(isinstance(v, int) for v in row.values()) else _primitive(
            {c: v for c, v in row.items() if v})
        for c in [c for c in row if c in self.pivots]:
            if c in row:
                row = _eliminate(row, c, self.pivots[c])
        return row

    def add(self, row):
        """Insert a row; returns True if it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        col = min(row)
        if row[col] < 0:
            row = {c: -v for c, v in row.items()}
        for pc, prow in list(self.pivots.items()):
            if col in prow:
                self.pivots[pc] = _eliminate(prow, col, row)
        self.pivots[col] = row
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def kernel(self):
        return _kernel_from(self.pivots, self.ncols)


def _kernel_from(pivots, ncols):
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for pc, prow in pivots.items():
            if f in prow:
                v[pc] = Fraction(-prow[f], prow[pc])
        basis.append(v)
    return basis


def _as_sparse_rows(M):
    rows = []
    for r in M:
        if isinstance(r, dict):
            rows.append(r)
        else:
            rows.append({j: v for j, v in enumerate(r) if v})
    return rows


def _ncols(M, ncols):
    if ncols is not None:
        return ncols
    for r in M:
        if not isinstance(r, dict):
            return len(r)
    raise ValueError("ncols is required for sparse or empty input")


def echelon(M, ncols=None):
    ech = Echelon(_ncols(M, ncols))
    for r in _as_sparse_rows(M):
        ech.add(r)
    return ech


def kernel(M, ncols=None):
    """Exact basis of the null space of ``M``.

    ``M`` is a list of dense rows or of sparse ``{col: value}`` rows; for
    sparse or empty input pass ``ncols``.

    >>> kernel([[1, 1]])
    [[Fraction(-1, 1), Fraction(1, 1)]]
    """
    return echelon(M, ncols).kernel()


def rank(M, ncols=None):
    if not M:
        return 0
    return echelon(M, ncols).rank


def solve(M, b, ncols=None):
    """Affine solution set of ``M x = b``.

    Returns ``(particular, kernel_basis)`` or ``None`` when inconsistent.
    """
    n = _ncols(M, ncols)
    ech = Echelon(n + 1)
    for r, rhs in zip(_as_sparse_rows(M), b):
        r = dict(r)
        if rhs:
            r[n] = rhs
        ech.add(r)
    if n in ech.pivots:
        return None
    x = [Fraction(0)] * n
    for pc, prow in ech.pivots.items():
        x[pc] = Fraction(prow.get(n, 0), prow[pc])
    return x, _kernel_from(ech.pivots, n)


def char_poly_in_c(C):
    """det(c*Id - C) for a square PolyA matrix, via Faddeev-LeVerrier.

    >>> str(char_poly_in_c([[PolyA(), PolyA.const(1)], [PolyA(), PolyA.a(1) * 2]]))
    'c^2-2*a*c'
    """
    n = len(C)
    coeffs = {n: PolyA.const(1)}
    Mk = zero_matrix(n, n, PolyA())
    ident = identity_matrix(n, PolyA)
    for k in range(1, n + 1):
        Mk = mat_add(mat_mul(C, Mk), mat_scale(ident, coeffs[n - k + 1]))
        CM = mat_mul(C, Mk)
        tr = sum((CM[i][i] for i in range(n)), PolyA())
        coeffs[n - k] = tr * Fraction(-1, k)
    out = BivarPoly()
    for j, p in coeffs.items():
        out = out + BivarPoly.from_poly_a(p, j)
    return out


# -- lossless serialization -------------------------------------------------

def poly_to_json(p):
    """Polynomials as sorted ``[a_exp, c_exp, num, den]`` quadruples."""
    if isinstance(p, PolyA):
        return [[e, 0, v.numerator, v.denominator] for e, v in p.items()]
    if isinstance(p, BivarPoly):
        return [[i, j, v.numerator, v.denominator] for (i, j), v in p.items()]
    raise TypeError(type(p))


def poly_from_json(data, kind=BivarPoly):
    if kind is PolyA:
        if any(q[1] for q in data):
            raise ValueError("PolyA has no c-exponent")
        return PolyA({q[0]: Fraction(q[2], q[3]) for q in data})
    return BivarPoly({(q[0], q[1]): Fraction(q[2], q[3]) for q in data})


def matrix_to_json(M):
    return [[poly_to_json(x) for x in row] for row in M]


def matrix_from_json(data):
    return [[poly_from_json(x, PolyA) for x in row] for row in data]
