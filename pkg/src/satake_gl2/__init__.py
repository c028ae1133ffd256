"""Exact computations around the geometric Satake equivalence for GL(2).

Graded C[a, c]-modules M(lam, mu) and their Hom spaces, orbit combinatorics
on the affine Grassmannian, stalks of convolutions with character sheaves,
the P-equivariant coherent side, and the exterior algebra Lambda(V) (x) Lambda(V*).
"""

from .coherent import (
    InvariantSupportLabel, PEquivFreeModule, PGroupData, classify_invariant_support,
    equivariant_hom_graded, gl2_invariants_bidegree, invariants_of_Z_quotient,
    lie_p_action, stabilizer_check, support_lattice, tilde_F,
)
from .convolution import StalkResult, character_sum_oracle, classify_stalk, conductor_character
from .exact import BivarPoly, Laurent, MPoly, PolyA, char_poly_in_c, kernel, rank, solve
from .koszul import (
    BigradedCharacter, ExteriorAlgebraE, build_E, decompose_E_character, regrade,
    simple_equivariant_modules,
)
from .modules import (
    FreeCModel, HomDescription, annihilator_polynomial, generator_check, hom_formula,
    hom_oracle, standard_module, twist,
)
from .orbits import (
    DominantGL2Coweight, OrbitData, OrbitLabel, check_support_dimension_conditions,
    closure_intersection, iota, orbit, s_set,
)
from .rep import CoweightPair, act, character, irrep, valid_pairs, verify_conjugation

__version__ = "0.1.0"
