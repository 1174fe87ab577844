"""Exact computations with finite subgroups of PGL(2, F_p).

The package certifies pairs of subgroups sharing a regular orbit with
trivial intersection (each passing pair witnesses a plane rational curve
of degree |G| with two outer Galois points), replays the bundled reference
computations for characteristics 11, 23 and 59, searches for new pairs,
and emits explicit quotient-map parametrizations of the curves.
"""

from .cases import LABELS, PRIMES, ReferenceCase, case_subgroups, load_case
from .criterion import (PairCertificate, check_pair, check_pair_all_basepoints,
                        reverify, subgroups_from_dict)
from .errors import (ClosureCapExceeded, DegenerateInvariant, EvaluationAtPole,
                     GaloisPairsError, IrregularOrbit, ModulusMismatch,
                     NotBlockPreserving, NotFound, ResultantVanishes,
                     SingularMatrix, UnknownCase, ZeroInverse)
from .field import PrimeField, is_prime
from .implicitize import implicit_degree
from .models import recognize_by_isomorphism
from .polys import INFINITY, Poly, RationalFunction
from .projline import (ProjectiveLine, ProjectiveMatrix, ProjectivePoint,
                       projective_line)
from .quotient import (CurveParametrization, emit_parametrization, fibers,
                       invariant_generator, is_invariant_under, moebius_adjust,
                       parametrization_from_dict)
from .search import (SearchConfig, find_cyclic_regular, find_scaling_conjugates,
                     random_pair_search, run_search)
from .subgroups import (GroupKind, Partition, Subgroup, block_action, conjugate,
                        generate_closure, intersect, is_faithful_on_blocks,
                        orbit, order_multiset, parse_kind, recognize,
                        stabilizer, trivial_subgroup)
from .verify import VerificationReport, verify_prime

__version__ = "0.1.0"
