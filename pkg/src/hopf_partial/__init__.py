"""hopf-partial: exact structure-constant toolkit for partial, lax and
weak (co)actions of finite-dimensional Hopf algebras, their smash
products, Frobenius systems and the partial Galois correspondence."""

from .exactlin import (
    Field,
    FieldMismatchError,
    Matrix,
    QQ,
    ShapeError,
    Subspace,
    hstack,
    image_basis,
    inverse,
    kernel_basis,
    kron,
    kron_all,
    leg_perm,
    perm_cols,
    perm_rows,
    rank,
    rref,
    solve,
    unflatten,
    vstack,
)
from .report import AxiomReport, Check, InternalConsistencyError, PreconditionError
from .quotients import TensorOverSub, balanced_tensor
from .presentations import (
    AlgebraPresentation,
    BialgebraPresentation,
    CayleyTable,
    CoalgebraPresentation,
    HopfPresentation,
    build_sweedler4,
    cop,
    dual_hopf,
    group_algebra,
    op,
    solve_antipode,
    verify,
)
from .coactions import (
    COACTION_EQUATIONS,
    ClassificationVerdict,
    CoactionMap,
    CoringData,
    RelativeHopfModule,
    alpha_beta,
    build_coring,
    check_coaction_equation,
    check_relative_hopf_module,
    classify_coaction,
    grouplike_of,
    random_coaction_map,
    verify_coring_axioms,
)
from .actions import (
    ACTION_EQUATIONS,
    ActionMap,
    PartialGroupAction,
    SmashData,
    as_cayley_table,
    build_smash,
    check_action_equation,
    classify_action,
    group_to_kG,
    kG_to_group,
    trivial_action,
    verify_partial_group_action,
    zero_action,
)
from .duality import (
    DualRingData,
    KoppinenSmash,
    Prop410Iso,
    action_to_coaction,
    build_koppinen,
    coaction_to_action,
    dual_ring_of_coring,
    prop410_iso,
)
from .frobenius import (
    FrobeniusData,
    FrobeniusSystem,
    IntegralSpace,
    build_frobenius_system,
    check_cocommutativity_534,
    frobenius_pair,
    integrals,
)
from .galois import (
    CanonicalMapData,
    Coinvariants,
    GaloisReport,
    MoritaContext,
    ThetaData,
    canonical_map,
    coinvariants,
    galois_verdict,
    morita_context,
    tensor_over,
    theta_map,
)

__version__ = "0.1.0"
