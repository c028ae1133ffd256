"""Regrading of bigraded characters and the exterior algebra E = Lambda(V) (x) Lambda(V*).

Characters are two-variable Laurent polynomials. For bigraded characters the
exponents are (t-degree, z-weight); for gl_2-characters they are
(h-weight, central weight), as in ``rep.character``.

E has odd generators e1, e2 (basis of V) and f1, f2 (dual basis of V*),
stored as bits 0..3 of a mask. A basis monomial is the ordered product of
the generators in its mask.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Laurent, kernel, rank
from .rep import CoweightPair, character_of_pair, irrep, valid_pairs

# (h-weight, central weight) of e1, e2, f1, f2
GENERATOR_WEIGHTS = ((1, 1), (-1, 1), (-1, -1), (1, -1))
NGEN = 4
GENERATOR_NAMES = ("e1", "e2", "f1", "f2")


def BigradedCharacter(entries=None):
    """{(t_degree, z_weight): multiplicity} as a Laurent polynomial."""
    return Laurent(dict(entries or {}))


def regrade(ch):
    """Move every (d, w) entry to (d + w, w)."""
    return ch.map_exponents(lambda e: (e[0] + e[1], e[1]))


def unregrade(ch):
    return ch.map_exponents(lambda e: (e[0] - e[1], e[1]))


def regraded_generators():
    """Generators of Sym(V*) (x) Lambda(V*[-1]) before and after regrading.

    Polynomial generators sit in old degree 0, exterior ones in old degree 1;
    all four have central weight -1.
    """
    poly = [(0, -1), (0, -1)]
    ext = [(1, -1), (1, -1)]
    before = {"polynomial": poly, "exterior": ext}
    after = {k: [next(iter(regrade(Laurent({e: 1})).items()))[0] for e in v]
             for k, v in before.items()}
    return before, after


def generator_shift_check():
    """Each generator moves by its central weight, and the exterior-minus-polynomial
    gap in t-degree is preserved."""
    before, after = regraded_generators()
    for kind in before:
        for (d, w), (d2, w2) in zip(before[kind], after[kind]):
            if w2 != w or d2 - d != w:
                return False
    gap_before = before["exterior"][0][0] - before["polynomial"][0][0]
    gap_after = after["exterior"][0][0] - after["polynomial"][0][0]
    return gap_before == gap_after == 1


# -- the exterior algebra ---------------------------------------------------

def _popcount(m):
    return bin(m).count("1")


def _sign(a, b):
    """Sign of reordering mask a followed by mask b into increasing order."""
    swaps = 0
    for i in range(NGEN):
        if b >> i & 1:
            swaps += _popcount(a >> (i + 1))
    return -1 if swaps % 2 else 1


def _gl2_on_generator(r, s, g):
    """E_rs applied to generator g: e_s -> e_r, f_r -> -f_s. Returns (coeff, gen) or None."""
    if g < 2:
        return (1, r) if g == s else None
    if g - 2 == r:
        return (-1, 2 + s)
    return None


@dataclass(frozen=True)
class ExteriorAlgebraE:
    """16-dimensional algebra on the masks 0..15 with gl_2 acting by derivations."""

    generators: tuple = field(default=(0b0001, 0b0010, 0b0100, 0b1000))

    @property
    def dim(self):
        return 1 << NGEN

    def basis(self):
        return list(range(self.dim))

    def mul_basis(self, a, b):
        """(sign, mask) of the product of two basis monomials, or None when zero."""
        if a & b:
            return None
        return _sign(a, b), a | b

    def mul(self, x, y):
        """Product of elements given as {mask: coeff}."""
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                r = self.mul_basis(a, b)
                if r:
                    s, m = r
                    out[m] = out.get(m, 0) + s * ca * cb
        return {m: c for m, c in out.items() if c}

    def derivation(self, r, s, mask):
        """E_rs acting on a basis monomial, expanded as {mask: coeff}."""
        out = {}
        gens = [g for g in range(NGEN) if mask >> g & 1]
        for pos, g in enumerate(gens):
            img = _gl2_on_generator(r, s, g)
            if img is None:
                continue
            c, g2 = img
            # replace the factor at position pos; even derivation, no Koszul sign
            word = gens[:pos] + [g2] + gens[pos + 1:]
            if len(set(word)) < len(word):
                continue
            sgn = _word_sign(word)
            m = sum(1 << x for x in word)
            out[m] = out.get(m, 0) + c * sgn
        return {m: c for m, c in out.items() if c}

    def derivation_matrix(self, r, s, masks=None):
        masks = self.basis() if masks is None else masks
        index = {m: i for i, m in enumerate(masks)}
        M = [[Fraction(0)] * len(masks) for _ in masks]
        for col, m in enumerate(masks):
            for m2, c in self.derivation(r, s, m).items():
                M[index[m2]][col] += c
        return M

    def weight(self, mask):
        h = sum(GENERATOR_WEIGHTS[g][0] for g in range(NGEN) if mask >> g & 1)
        z = sum(GENERATOR_WEIGHTS[g][1] for g in range(NGEN) if mask >> g & 1)
        return h, z

    def character(self, masks=None):
        masks = self.basis() if masks is None else masks
        out = {}
        for m in masks:
            w = self.weight(m)
            out[w] = out.get(w, 0) + 1
        return Laurent(out)

    def ideal_power(self, k):
        """Rank of I^k, I the augmentation ideal, from products of k generators with E."""
        if k == 0:
            return self.dim
        words = [{0: 1}]
        for _ in range(k):
            words = [self.mul(w, {g: 1}) for w in words for g in self.generators]
            words = [w for w in words if w]
        rows = []
        for w in words:
            for b in self.basis():
                p = self.mul(w, {b: 1})
                if p:
                    rows.append(p)
        return rank(rows, self.dim) if rows else 0

    def radical_layers(self):
        """dim I^k / I^(k+1) for k = 0, 1, ... until I^k = 0."""
        dims = []
        k = 0
        while True:
            dims.append(self.ideal_power(k))
            if dims[-1] == 0:
                break
            k += 1
        return [dims[i] - dims[i + 1] for i in range(len(dims) - 1)], dims


def build_E():
    return ExteriorAlgebraE()


def _word_sign(word):
    inv = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return -1 if inv % 2 else 1


def derivations_form_gl2(E=None, masks=None):
    """[E_ij, E_kl] = d_jk E_il - d_li E_kj for the derivation matrices."""
    E = E or build_E()
    D = {(r, s): E.derivation_matrix(r, s, masks) for r in range(2) for s in range(2)}
    n = len(next(iter(D.values())))

    def mm(A, B):
        return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]

    for (i, j) in D:
        for (k, l) in D:
            lhs = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(mm(D[i, j], D[k, l]), mm(D[k, l], D[i, j]))]
            rhs = [[Fraction(0)] * n for _ in range(n)]
            if j == k:
                rhs = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(rhs, D[i, l])]
            if l == i:
                rhs = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(rhs, D[k, j])]
            if lhs != rhs:
                return False
    return True


# -- decompositions ---------------------------------------------------------

def decompose_character(ch):
    """Peel off irreducible characters by highest weight. Returns {CoweightPair: mult}."""
    rest = dict(ch.items())
    out = {}
    while rest:
        h, z = max(rest, key=lambda e: (e[0], e[1]))
        mult = rest[(h, z)]
        if h < 0 or mult < 0:
            raise ValueError("not the character of a representation")
        pair = CoweightPair(h, z)
        out[pair] = out.get(pair, 0) + mult
        for e, c in character_of_pair(h, z).items():
            rest[e] = rest.get(e, 0) - mult * c
            if not rest[e]:
                del rest[e]
    return dict(sorted(out.items()))


def highest_weight_multiplicities(E=None, masks=None):
    """Oracle: multiplicity of V(h, z) is dim ker(E_12) on the (h, z) weight space."""
    E = E or build_E()
    masks = E.basis() if masks is None else masks
    by_weight = {}
    for m in masks:
        by_weight.setdefault(E.weight(m), []).append(m)
    out = {}
    for (h, z), ms in by_weight.items():
        if h < 0:
            continue
        index = {m: i for i, m in enumerate(ms)}
        rows = {}
        for col, m in enumerate(ms):
            for m2, c in E.derivation(0, 1, m).items():
                rows.setdefault(m2, {})[col] = c
        dim = len(kernel(list(rows.values()), len(ms))) if rows else len(ms)
        if dim:
            out[CoweightPair(h, z)] = dim
    return dict(sorted(out.items()))


LAMBDA_V = [m for m in range(16) if not m & 0b1100]
LAMBDA_V_STAR = [m for m in range(16) if not m & 0b0011]


def decompose_E_character(part="E"):
    """Decomposition of E (or "V" / "V*" for one exterior factor) into V(lam, mu)."""
    E = build_E()
    masks = {"E": None, "V": LAMBDA_V, "V*": LAMBDA_V_STAR}[part]
    return decompose_character(E.character(masks))


# -- simple equivariant modules ---------------------------------------------

def _commutant_dim(pair):
    rep = irrep(pair)
    n = rep.dim
    rows = []
    for g in (rep.e, rep.f, rep.h):
        # X g - g X = 0 on the n*n entries of X
        for i in range(n):
            for j in range(n):
                row = {}
                for k in range(n):
                    if g[k][j]:
                        row[i * n + k] = row.get(i * n + k, 0) + g[k][j]
                    if g[i][k]:
                        row[k * n + j] = row.get(k * n + j, 0) - g[i][k]
                row = {c: x for c, x in row.items() if x}
                if row:
                    rows.append(row)
    return n * n - rank(rows, n * n)


def radical_submodule_of_tensor(pair):
    """J (E (x) V) inside E (x) V(pair): returns (dim J M, dim M, gl_2-stable)."""
    E = build_E()
    n = pair.lam + 1
    dim_M = E.dim * n
    # J M is spanned by products g * (b (x) v) with g a generator
    rows = []
    for g in E.generators:
        for b in E.basis():
            r = E.mul_basis(g, b)
            if r:
                s, m = r
                for j in range(n):
                    rows.append({m * n + j: s})
    dim_JM = rank(rows, dim_M)
    span = {c for row in rows for c in row}
    # gl_2 acts by derivation (x) 1 + 1 (x) pi; check the span is stable
    rep = irrep(pair)
    mats = {(0, 1): rep.e, (1, 0): rep.f}
    stable = True
    for (r, s), pim in mats.items():
        for col in span:
            m, j = divmod(col, n)
            for m2 in E.derivation(r, s, m):
                if m2 * n + j not in span:
                    stable = False
            for i in range(n):
                if pim[i][j] and m * n + i not in span:
                    stable = False
    return dim_JM, dim_M, stable


@dataclass
class SimpleModuleReport:
    max_lam: int
    E_not_simple: bool
    tensor_checks: dict
    commutant_dims: dict
    index_sets_match: bool

    @property
    def ok(self):
        return (self.E_not_simple
                and all(0 < jm < m and st for jm, m, st in self.tensor_checks.values())
                and all(d == 1 for d in self.commutant_dims.values())
                and self.index_sets_match)


def simple_equivariant_modules(max_lam, mu_bound=None):
    """Simple GL(2)-equivariant E-modules are the V(lam, mu) with J acting by 0.

    Checks, for lam <= max_lam: J M is a proper nonzero equivariant submodule
    of M = E (x) V(lam, mu) (so J acts by 0 on a simple module), V(lam, mu)
    has scalar commutant, and the highest weights of these simples are the
    valid pairs.
    """
    mu_bound = max_lam if mu_bound is None else mu_bound
    E = build_E()
    layers, _ = E.radical_layers()
    E_not_simple = 0 < E.ideal_power(1) < E.dim
    pairs = valid_pairs(max_lam, mu_bound)
    tensor_checks, commutant = {}, {}
    highest = set()
    for p in pairs:
        tensor_checks[(p.lam, p.mu)] = radical_submodule_of_tensor(p)
        commutant[(p.lam, p.mu)] = _commutant_dim(p)
        (hw,) = decompose_character(character_of_pair(p.lam, p.mu))
        highest.add(hw)
    return SimpleModuleReport(max_lam, E_not_simple and layers[0] == 1, tensor_checks,
                              commutant, highest == set(pairs))


def regrade_multiplicative(chars):
    """regrade(a * b) == regrade(a) * regrade(b) and unregrade inverts, on all pairs."""
    for a in chars:
        if unregrade(regrade(a)) != a:
            return False
        for b in chars:
            if regrade(a * b) != regrade(a) * regrade(b):
                return False
    return True


__all__ = [
    "BigradedCharacter", "ExteriorAlgebraE", "build_E", "decompose_E_character",
    "decompose_character", "derivations_form_gl2", "generator_shift_check",
    "highest_weight_multiplicities", "regrade", "regrade_multiplicative",
    "regraded_generators", "simple_equivariant_modules", "unregrade",
]
