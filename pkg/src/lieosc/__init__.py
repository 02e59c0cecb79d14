"""Exact-arithmetic toolkit for orbit osculating spaces of compact groups.

Root systems, strongly orthogonal root cascades, the Dadok invariant,
weight multiplicities, explicit highest weight modules with spanning
condition checks, and the candidate elimination pipelines, all over
rational numbers.
"""

from .chevmod import (CONDITIONS, MODULE_DIM_CAP, build_module,
                      chevalley_basis, check_condition, verify_prop_d)
from .classify import (CandidateRecord, HermitianPairData, bms_tables,
                       canonical_composite, composite, composite_pipeline,
                       descriptor, enumerate_k4_real, hermitian_cases,
                       hermitian_redundancy, parse_descriptor, scan_pools,
                       simple_pipeline, taut_composites)
from .dadok import COMPLEX, QUATERNIONIC, REAL, KValue, k_invariant, repr_type
from .osc import (SCAN_DIM_CAP, SCAN_TYPES, FilterVerdict, classify_C_tables,
                  sphere_transitive)
from .rootsys import (RootDatum, build_root_datum, canonical_labels,
                      dominant_and_dual)
from .sorth import build_sorth
from .weights import (DimCapExceeded, decomposition_count, is_weight_of,
                      weight_system, weyl_dim, zero_weight_mult)

__version__ = "0.1.0"
