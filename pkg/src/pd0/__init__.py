"""Exact computations with PD0 invariant data of 2-d fermionic SPT phases.

Groups are Cayley tables, U(1) is Q/Z written additively, and coefficients are
doubled pairs ``(plus, minus)`` on which ``a: G -> Z2`` acts by swapping.
"""

__version__ = "0.1.0"

from .coefficients import (CANONICAL_LIFT, Doubled, Phase, bit_dot, lift_eighth, lift_quarter,
                           pair_inv, pair_mul, phase_arith, sign_of_bits, swap_pow)
from .cochains import (BIT, PHASE, Cochain, coboundary, cochain_combine, linearize,
                       normalize_cochain, obstruction_rhs, random_cochain)
from .crt import (CRTPentuple, ReductionCertificate, build_m, check_claim_identities, reduce,
                  reduction_chain, synthesize_pentuple, validate_crt)
from .errors import (ConstraintViolation, ConventionDiscrepancy, InternalInconsistency,
                     InvalidGroupError, ParseError, Violation)
from .groups import (FiniteGroup, Z2Hom, all_z2_homs, check_axioms, inverse_of, load_group,
                     make_cyclic, make_dihedral, make_direct_product)
from .invariant import (EquivCertificate, PD0Triple, apply_move, classify_all, classify_sector,
                        coboundary_membership, equiv, is_diagonal, is_in_diagonal_class,
                        random_triple, solve_kappa_move, validate_triple)
from .io import read_bundle, write_bundle
