"""Effect algebras, their state spaces, and exact convex analysis over them."""
from .algebra import (
    AssociativityViolation, CommutativityViolation, ComplementViolation, DegenerateAlgebra,
    EffectAlgebra, EffectAlgebraError, InconsistentSum, MvStructure, NotMv, NotSubalgebra,
    OrderRelation, RdpWitness, SizeBoundExceeded, SubalgebraEmbedding, ValidationError,
    ZeroOneViolation, check_rdp, derive_order, enumerate_subalgebras, is_lattice,
    is_subalgebra, to_mv, validate_effect_algebra,
)
from .enumeration import canonical_form, enumerate_effect_algebras, is_isomorphic
from .estimators import StateExtender, StateSpaceDecomposer
from .extension import (
    ExtensionProblem, ExtensionResult, NotAState, extend_state, restrict_state,
    validate_state_on_subalgebra,
)
from .io import fixture_names, load_fixture, parse_algebra_file, parse_file, parse_group_file
from .pogroup import (
    IntervalInfinite, LexPresentation, NotInGroup, NotStrict, PoGroupError,
    SearchBoundExceeded, UnitalPoGroupPresentation, cone_membership, evaluate_group_state,
    gamma_effect_algebra, group_state_polytope, interval_elements, lex_state_space,
)
from .representation import (
    DecompositionResult, DiscreteMeasure, decompose_state, unique_decomposition,
    verify_integral,
)
from .statespace import (
    EmptyStateSpace, PointNotInPolytope, SimplexClassification, StatePolytope,
    StateSpaceError, classify_state_space, is_state, mv_extremal_check, order_determining,
    state_polytope,
)

__all__ = ["AssociativityViolation", "CommutativityViolation", "ComplementViolation",
           "DecompositionResult", "DegenerateAlgebra", "DiscreteMeasure", "EffectAlgebra",
           "EffectAlgebraError", "EmptyStateSpace", "ExtensionProblem", "ExtensionResult",
           "InconsistentSum", "IntervalInfinite", "LexPresentation", "MvStructure",
           "NotAState", "NotInGroup", "NotMv", "NotStrict", "NotSubalgebra", "OrderRelation",
           "PoGroupError", "PointNotInPolytope", "RdpWitness", "SearchBoundExceeded",
           "SimplexClassification", "SizeBoundExceeded", "StateExtender", "StatePolytope",
           "StateSpaceDecomposer", "StateSpaceError", "SubalgebraEmbedding",
           "UnitalPoGroupPresentation", "ValidationError", "ZeroOneViolation",
           "canonical_form", "check_rdp", "classify_state_space", "cone_membership",
           "decompose_state", "derive_order", "enumerate_effect_algebras",
           "enumerate_subalgebras", "evaluate_group_state", "extend_state", "fixture_names",
           "gamma_effect_algebra", "group_state_polytope", "interval_elements",
           "is_isomorphic", "is_lattice", "is_state", "is_subalgebra", "lex_state_space",
           "load_fixture", "mv_extremal_check", "order_determining", "parse_algebra_file",
           "parse_file", "parse_group_file", "restrict_state", "state_polytope", "to_mv",
           "unique_decomposition", "validate_effect_algebra", "validate_state_on_subalgebra",
           "verify_integral"]

__version__ = "0.1.0"
