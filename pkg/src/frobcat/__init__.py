"""Finite strict monoidal categories with chosen duals, checked concretely.

The library represents small monoidal categories (explicit tables, or the
computable Boolean matrix backend), finds and verifies left/right duals,
builds the duality functors with their comparison maps and the adjoint
equivalence between them, and then checks — by direct evaluation of both
sides of every coherence diagram on every declared instantiation — the
full ladder of functor-level structure: monoidal, comonoidal, Frobenius,
autonomous, and linear functor pairs, together with the collapse maps
relating them and two six-way equivalence adjudications.

Every check produces a :class:`~frobcat.report.Report` whose rows name the
equation, the instantiation, the verdict, and a reproducible witness for
each failure.
"""

from .autonomy import (
    AutonomyWitness,
    build_witness,
    check_autonomous,
    check_left_right_agreement,
    check_mates,
    kappa_from_frobenius,
    kappa_transf,
    lambda_transf,
    mate_kappa,
    mate_lambda,
)
from .boolmat import (
    BoolMat,
    BoolMatCategory,
    all_mats,
    cap,
    compose_mats,
    cup,
    identity_mat,
    invert_mat,
    is_permutation,
    kron,
    mat_from_entries,
    perm_mat,
    swap_mat,
)
from .boolmat import transpose as transpose_mat
from .core import (
    CategoryView,
    FinCategory,
    TableCategory,
    as_view,
    validate_category,
)
from .duality import (
    AdjointEquivalence,
    DualityAssignment,
    DualityContext,
    assign_all_duals,
    build_adjoint_equivalence,
    build_duality_context,
    build_duality_functor,
    check_doctrinal_right_structure,
    check_s2,
    check_snakes,
    check_transpose_characterization,
    doctrinal_s2,
    dual_candidates_iso,
    find_left_dual,
    find_right_dual,
    solve_s2,
    solved_s2,
    transpose,
)
from .errors import (
    CoherenceFailure,
    CommonCompositeMismatch,
    FrobcatError,
    FrobeniusFailure,
    HintInvalid,
    InverseFailure,
    MalformedTable,
    MissingStructure,
    NotFound,
    NotInvertible,
    ScopeTooLarge,
    SnakeFailure,
    StructuresDisagree,
    TypeMismatch,
    UnboundRef,
)
from .expr import (
    EMPTY_ENV,
    Compose,
    Env,
    FMap,
    Id,
    MorphExpr,
    Named,
    NatComponent,
    Tensor,
    check_equation,
    comp,
    eval_expr,
    expr_type,
    render_expr,
    tens,
)
from .instances import (
    BoolMatrixInstance,
    CatalogEntry,
    FunctorInstance,
    LinearInstance,
    build_bool_matrix,
    build_discrete_group,
    build_posetal_nat,
    catalog_entries,
    cyclic_context,
    posetal_linear,
    resolve_builtin,
)
from .linear import (
    LinearDualityWitness,
    LinearFunctorData,
    adjudicate_when_lin_frob,
    build_Omega,
    check_closedness_equations,
    check_linear,
    cop_linear,
    frobenius_from_equal_linear,
    linear_from_frobenius,
    op_linear,
    opcop_linear,
    search_mc_iso,
    unit_duals,
)
from .report import CheckEntry, EquationVerdict, Report, ReportBuilder
from .structures import (
    FunctorData,
    NatTransfData,
    StructureMaps,
    check_comonoidal,
    check_components_invertible,
    check_frobenius,
    check_functoriality,
    check_monoidal,
    check_nat_flavor,
    comonoidal_from_strong,
    compose_functors,
    cop_functor,
    identity_functor,
    op_functor,
    opcop_functor,
)
from .synthesis import (
    EquivalenceMatrix,
    SynthesisOutputs,
    adjudicate_cor_frob,
    build_sigma_tau,
    resolve_witness,
    search_kappa,
    sigma_transf,
    synthesize_comonoidal,
    tau_transf,
    unique_completion_search,
)

__version__ = "0.1.0"
