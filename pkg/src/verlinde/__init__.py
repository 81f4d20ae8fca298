"""Exact computations around the Verlinde algebra of SU(2).

Two independent constructions of the same ring at each level k:

* the fusion ring V_k(SU(2)) from the truncated Clebsch-Gordan rule
  (:mod:`verlinde.fusion`), and
* the twisted equivariant K-theory of SU(2) acting on itself by
  conjugation, computed from a Mayer-Vietoris sequence as a quotient of the
  representation ring (:mod:`verlinde.twisted_k`),

plus :mod:`verlinde.theorem`, which compares them level by level.
"""

from .finite_sector import FiniteAbelianGroup, KGGRing, abelian_groups, kgg_ring
from .fusion import (
    FusionRing,
    OracleDisagreement,
    SMatrix,
    build_fusion_ring,
    fusion_coeff,
    s_matrix,
    verlinde_coeff_numeric,
)
from .induction import induce, induce_monomial
from .laurent import ALPHA, CoefficientOverflowError, LaurentPoly, laurent_add, laurent_mul, weyl_involution
from .rep_ring import ONE, SIGMA, NotWeylSymmetricError, RepRingElem, char_of_irrep, chi, decompose, rep_mul, restrict
from .theorem import TheoremReport, verify_level, verify_range
from .twisted_k import (
    MVMap,
    QuotientPresentation,
    TheoremViolation,
    TwistClass,
    certify_injective,
    cokernel,
    mv_map,
    quotient_mul,
    twisted_k_theory,
)

__version__ = "0.1.0"
