"""Exact Clifford-algebra actions on Gaussian tori.

The package builds complex Clifford algebras with Gaussian-rational
coefficients, represents them by integer spinor matrices, lets the signed
blades act on torus quotients of the spinor space, and verifies the
translation, duality, and endomorphism structure of those actions. All
arithmetic is exact; nothing is floated.
"""

from ._version import __version__
from .action import (
    TranslationSystem,
    TwoTorsionReport,
    act,
    apply_matrix,
    group_lattice_matrix,
    lattice_matrix,
    preserves_lattice,
    translation_system,
    verify_two_torsion,
)
from .clifford import (
    CliffordElement,
    GeneratorGroupElement,
    Signature,
    basis_elements,
    blade_label,
    blade_mul,
    blade_square_sign,
    element_order,
    generator_group,
    grade_project,
    in_integer_subring,
    reversion_sign,
    star,
)
from .endo import (
    DecompositionWitness,
    EndoLattice,
    SubringIndex,
    automorphism_containment,
    decomposition_witness,
    endo_lattice,
    endo_rank,
    rational_representation,
    realify,
    representation_determinants_match,
    subring_index,
    transport_multiplication,
    transport_table,
)
from .errors import (
    ArityMismatchError,
    EnumerationTooLargeError,
    IndexOutOfRangeError,
    InvalidScalarError,
    LatticeMismatchError,
    LatticeNotPreservedError,
    NonUnimodularError,
    NotIntegralError,
    NotPrincipalError,
    NotUnitVectorError,
    ParseError,
    SignatureMismatchError,
    SpinTorusError,
    WitnessFailedError,
)
from .exprs import (
    ElementExpr,
    bundle_source,
    element_source,
    evaluate,
    evaluate_element,
    parse_bundle,
    parse_element,
    parse_gaussian,
    parse_point,
    parse_rational,
    point_source,
)
from .matrices import (
    Matrix,
    integer_rows,
    mat_rank,
    rank_of_rows,
    smith_form,
    solve_mod1,
)
from .picard import (
    BundleClass,
    BundleSystem,
    bundle_action,
    bundle_system,
    bundle_to_point,
    point_to_bundle,
    two_torsion_bundle_check,
)
from .scalars import GaussianRational, Rational, as_gaussian, format_rational
from .spinrep import (
    IsoReport,
    RepresentationTable,
    UnitaryReport,
    build_generators,
    verify_algebra_iso,
    verify_spin_preserves_form,
    verify_unitary,
)
from .suite import (
    ALL_SUITES,
    Failure,
    SuiteConfig,
    SuiteResult,
    VerificationReport,
    emit_report,
    report_document,
    report_from_document,
    run_suite,
)
from .torus import (
    DEFAULT_ENUMERATION_CAP,
    LatticeSpec,
    PolarizationData,
    RiemannReport,
    TorusPoint,
    hermitian_value,
    is_principal,
    polarization_type,
    riemann_check,
    torsion_count,
    torsion_points,
)

__all__ = [
    "__version__",
    "ALL_SUITES",
    "ArityMismatchError",
    "BundleClass",
    "BundleSystem",
    "CliffordElement",
    "DEFAULT_ENUMERATION_CAP",
    "DecompositionWitness",
    "ElementExpr",
    "EndoLattice",
    "EnumerationTooLargeError",
    "Failure",
    "GaussianRational",
    "GeneratorGroupElement",
    "IndexOutOfRangeError",
    "InvalidScalarError",
    "IsoReport",
    "LatticeMismatchError",
    "LatticeNotPreservedError",
    "LatticeSpec",
    "Matrix",
    "NonUnimodularError",
    "NotIntegralError",
    "NotPrincipalError",
    "NotUnitVectorError",
    "ParseError",
    "PolarizationData",
    "Rational",
    "RepresentationTable",
    "RiemannReport",
    "Signature",
    "SignatureMismatchError",
    "SpinTorusError",
    "SubringIndex",
    "SuiteConfig",
    "SuiteResult",
    "TorusPoint",
    "TranslationSystem",
    "TwoTorsionReport",
    "UnitaryReport",
    "VerificationReport",
    "WitnessFailedError",
    "act",
    "apply_matrix",
    "as_gaussian",
    "automorphism_containment",
    "basis_elements",
    "blade_label",
    "blade_mul",
    "blade_square_sign",
    "build_generators",
    "bundle_action",
    "bundle_source",
    "bundle_system",
    "bundle_to_point",
    "decomposition_witness",
    "element_order",
    "element_source",
    "emit_report",
    "endo_lattice",
    "endo_rank",
    "evaluate",
    "evaluate_element",
    "format_rational",
    "generator_group",
    "grade_project",
    "group_lattice_matrix",
    "hermitian_value",
    "in_integer_subring",
    "integer_rows",
    "is_principal",
    "lattice_matrix",
    "mat_rank",
    "parse_bundle",
    "parse_element",
    "parse_gaussian",
    "parse_point",
    "parse_rational",
    "point_source",
    "point_to_bundle",
    "polarization_type",
    "preserves_lattice",
    "rank_of_rows",
    "rational_representation",
    "realify",
    "report_document",
    "report_from_document",
    "representation_determinants_match",
    "reversion_sign",
    "riemann_check",
    "run_suite",
    "smith_form",
    "solve_mod1",
    "star",
    "subring_index",
    "torsion_count",
    "torsion_points",
    "translation_system",
    "transport_multiplication",
    "transport_table",
    "two_torsion_bundle_check",
    "verify_algebra_iso",
    "verify_spin_preserves_form",
    "verify_two_torsion",
    "verify_unitary",
]
