"""idealcover: exact covers of finite nonunital rings by proper ideals.

Builds finite F_p-algebras from structure constants, computes Jacobson
radicals two independent ways, enumerates ideal lattices, finds provably
minimal covers by left/right/two-sided ideals, and tests whether covering
numbers drop under proper quotients.
"""

from .cover import (INFINITY, CoverResult, ElementaryReport, covering_number,
                    forced_ideals, is_eta_elementary, minimal_cover)
from .errors import (AssociativityError, DecompositionError, EngineError,
                     ExchangeFormatError, GuardExceeded, Guards, SideError,
                     UncoverableError, DEFAULT_GUARDS)
from .families import (AugmentedMatrixRing, build_augmented_ring,
                       build_null_ring, canonical_cover,
                       covering_number_formula, line_annihilator_ideal,
                       line_count, vector_graph_ideal)
from .gf import FieldSpec, field_inv, field_mul, make_field
from .ideals import (IdealBasis, enumerate_ideals, ideal_closure,
                     ideal_from_rows, ideal_membership, maximal_ideals)
from .radical import (Decomposition, circle, jacobson_radical,
                      left_quasi_inverse, left_quasi_regular,
                      radical_dorroh_oracle, sj_and_k, wedderburn_complement)
from .ring import (RingPresentation, direct_product, dorroh, identity_flags,
                   make_ring, matrix_algebra, opposite, quotient, ring_mul)
from .verify import (Fingerprint, ScanResult, VerificationRecord,
                     fingerprint, fingerprint_scan, records_to_csv,
                     verify_covering_formula, verify_null_family)

__version__ = "0.1.0"
