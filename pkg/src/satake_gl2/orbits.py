"""Orbit combinatorics on the affine Grassmannians of SL(2) and GL(2).

O^x-orbits on Gr_SL(2) are labelled by (m, l) with l - 2m <= 0; the orbit of
the label has dimension 2m - l, which is also the level of its stabilizer
1 + z^(2m-l) O.
"""

from dataclasses import dataclass

from .rep import CoweightPair, valid_pairs


@dataclass(frozen=True, order=True)
class OrbitLabel:
    m: int
    l: int

    def __post_init__(self):
        if self.l - 2 * self.m > 0:
            raise ValueError("(m, l) = (%d, %d) is not an orbit label: l - 2m > 0"
                             % (self.m, self.l))


@dataclass(frozen=True)
class OrbitData:
    label: OrbitLabel
    dim: int
    stabilizer_level: int

    def supports(self, k):
        """Whether a character sheaf of level k lives on this orbit."""
        return self.stabilizer_level >= k


@dataclass(frozen=True, order=True)
class DominantGL2Coweight:
    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < self.n2:
            raise ValueError("(%d, %d) is not dominant" % (self.n1, self.n2))

    @property
    def n(self):
        return self.n1 + self.n2

    @property
    def gr_dim(self):
        # dim of the GL(2) Schubert cell Gr^lam
        return self.n1 - self.n2


def orbit(m, l):
    label = OrbitLabel(m, l)
    level = 2 * m - l
    return OrbitData(label, level, level)


def _coweight(lam):
    return lam if isinstance(lam, DominantGL2Coweight) else DominantGL2Coweight(*lam)


def iota(k, lam):
    """The orbit label carrying the level-k object attached to lam = (n1, n2)."""
    if k <= 0:
        raise ValueError("level k must be positive")
    lam = _coweight(lam)
    return OrbitLabel(-lam.n2, -k - lam.n1 - lam.n2)


def iota_preimage(k, label):
    """Inverse of ``iota(k, .)`` on its image; None off the image."""
    n2 = -label.m
    n1 = -k - label.l - n2
    if n1 < n2:
        return None
    return DominantGL2Coweight(n1, n2)


def _pair(p):
    return p if isinstance(p, CoweightPair) else CoweightPair(*p)


def s_set(pair):
    """[mu - lam, mu - lam + 2, ..., mu + lam]: the C^x-fixed points of the closure."""
    pair = _pair(pair)
    return list(range(pair.mu - pair.lam, pair.mu + pair.lam + 1, 2))


def pair_from_s_set(points):
    """The pair whose S-set is the given contiguous even-step progression."""
    lo, hi = min(points), max(points)
    return CoweightPair((hi - lo) // 2, (hi + lo) // 2)


def closure_intersection(p, p2):
    """(lam'', mu'') with S'' = S cap S', or None when the closures are disjoint."""
    common = sorted(set(s_set(p)) & set(s_set(p2)))
    if not common:
        return None
    result = pair_from_s_set(common)
    if s_set(result) != common:
        raise AssertionError("intersection %r is not an S-set" % (common,))
    return result


def fixed_point_bijection_check(bound):
    """S-sets are sets of even integers and determine their pair."""
    seen = {}
    for pair in valid_pairs(bound, bound):
        pts = s_set(pair)
        if len(pts) != pair.lam + 1 or pts[-1] - pts[0] != 2 * pair.lam:
            return False
        if any(x % 2 for x in pts):
            return False
        key = tuple(pts)
        if key in seen:
            return False
        seen[key] = pair
    return True


def check_support_dimension_conditions(k, lam_range):
    """Sweep the orbit-dimension identities for level k.

    Returns a dict with one boolean per condition, the failures found and
    the number of orbits examined.
    """
    if k < 1:
        raise ValueError("level k must be positive")
    failures = []
    x0 = orbit(*_astuple(iota(k, (0, 0))))
    if x0.dim != k:
        failures.append(("dim X_0", x0.dim, k))

    lams = [DominantGL2Coweight(n1, n2)
            for n1 in range(-lam_range, lam_range + 1)
            for n2 in range(-lam_range, n1 + 1)]
    for lam in lams:
        xl = orbit(*_astuple(iota(k, lam)))
        if xl.dim != k + lam.n1 - lam.n2:
            failures.append(("dim X_lam", lam, xl.dim))
        if x0.dim + lam.gr_dim != xl.dim:
            failures.append(("dim X_0 + dim Gr^lam", lam, xl.dim))
        if not xl.supports(k):
            failures.append(("image supports level k", lam, xl.label))

    # image characterisation on the window of labels the range can reach;
    # the image is enumerated over a wider box so every preimage is inside it
    wide = 3 * lam_range + 2 * k
    image = {iota(k, DominantGL2Coweight(n1, n2))
             for n1 in range(-wide, wide + 1) for n2 in range(-wide, n1 + 1)}
    examined = 0
    for m in range(-lam_range, lam_range + 1):
        for l in range(-k - 2 * lam_range - 2, -k + 2 * lam_range + 3):
            if l - 2 * m > 0:
                continue
            examined += 1
            o = orbit(m, l)
            if o.supports(k) != (o.label in image):
                failures.append(("supports iff in image", o.label, o.supports(k)))
            if o.supports(k) and o.dim < k:
                failures.append(("supporting orbit has dim >= k", o.label, o.dim))
    return {
        "k": k,
        "lam_range": lam_range,
        "dim_X0": x0.dim,
        "orbits_examined": examined,
        "failures": failures,
        "ok": not failures,
    }


def _astuple(label):
    return (label.m, label.l)
