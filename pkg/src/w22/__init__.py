"""Exact-arithmetic toolkit for the W-algebra W(2,2).

The package implements the algebra itself (brackets, gradings, Virasoro
copies), normal ordering in its universal envelope, Verma modules with a
singular-vector search, the catalog of weight modules with
one-dimensional weight spaces, and finite-window constraint systems that
pin down the possible I-actions on weight modules.  All arithmetic is
over ``fractions.Fraction``; nothing here floats.
"""

from .rationals import rat, rat_str
from .liecore import (
    C,
    C1,
    C1_KIND,
    C_KIND,
    I,
    I_KIND,
    X_KIND,
    ZERO,
    BasisElement,
    LieElement,
    basis_window,
    bracket,
    jacobi_check,
    pair_bracket,
    term_key,
    vir_embed,
    x,
)
from .pbw import (
    HighestWeightActor,
    HighestWeightParams,
    UEAElement,
    act_on_highest,
    is_normal_ordered,
    monomial_degree,
    monomial_from_json,
    monomial_key,
    monomial_to_json,
    multiply,
    normal_order,
)
from .verma import (
    IrreducibilityReport,
    SingularVectorReport,
    VermaVector,
    character_dims,
    criterion_roots,
    criterion_value,
    find_singular,
    is_verma_irreducible,
    joint_kernel,
    level_basis,
    raising_matrix,
)
from .intermediate import (
    FAMILIES,
    ModuleSpec,
    ProbeReport,
    act,
    act_element,
    action_table_rows,
    bracket_compatibility_check,
    coefficient,
    simple_subquotient,
    simplicity_probe,
)
from .constraints import (
    EXT_TYPES,
    ConstraintSystem,
    SolutionSpace,
    build_f_system,
    build_matrix_system,
    c1_is_forced_zero,
    check_quadratic,
    export_triplets,
    f_family_assignment,
    make_x_matrices,
    matrix_family_assignment,
    report,
    solve_linear,
    verify_x_action,
)

__version__ = "0.1.0"

__all__ = [
    "rat",
    "rat_str",
    "BasisElement",
    "LieElement",
    "ZERO",
    "C",
    "C1",
    "I",
    "x",
    "X_KIND",
    "I_KIND",
    "C_KIND",
    "C1_KIND",
    "term_key",
    "basis_window",
    "bracket",
    "pair_bracket",
    "jacobi_check",
    "vir_embed",
    "UEAElement",
    "normal_order",
    "multiply",
    "is_normal_ordered",
    "monomial_degree",
    "monomial_key",
    "monomial_to_json",
    "monomial_from_json",
    "HighestWeightParams",
    "HighestWeightActor",
    "act_on_highest",
    "level_basis",
    "character_dims",
    "VermaVector",
    "SingularVectorReport",
    "IrreducibilityReport",
    "raising_matrix",
    "joint_kernel",
    "find_singular",
    "criterion_value",
    "criterion_roots",
    "is_verma_irreducible",
    "FAMILIES",
    "ModuleSpec",
    "ProbeReport",
    "simple_subquotient",
    "coefficient",
    "act",
    "act_element",
    "bracket_compatibility_check",
    "simplicity_probe",
    "action_table_rows",
    "EXT_TYPES",
    "ConstraintSystem",
    "SolutionSpace",
    "build_f_system",
    "build_matrix_system",
    "make_x_matrices",
    "verify_x_action",
    "solve_linear",
    "check_quadratic",
    "c1_is_forced_zero",
    "report",
    "f_family_assignment",
    "matrix_family_assignment",
    "export_triplets",
]
