"""Exact Schubert calculus for Lagrangian and orthogonal degeneracy loci.

Qtilde/Ptilde polynomial families, Weyl-group divided differences (types
B, C, D), Gysin push-forward formulas, and generators for the
degeneracy-locus class formulas, all in exact rational arithmetic.
"""

from .partitions import (
    Partition,
    horizontal_strips,
    pieri_multiplicity,
    rho,
    rho_complement,
)
from .polyring import (
    NonExactDivision,
    Poly,
    complete_homogeneous,
    elementary_symmetric,
    exact_divide,
    negate_vars,
)
from .symfunc import (
    BasisVector,
    basis_convert,
    factor_doubles,
    linearity_expand,
    pfaffian_oracle,
    pieri,
    ptilde,
    qrho_determinant_identity,
    qtilde,
    qtilde_raising_ops,
    schur_q_classical,
    schur_s,
    skew_qtilde,
)
from .weyl import (
    SignedPerm,
    apply_dd,
    dd_prime,
    divided_difference,
    ideal_membership,
    jacobi_symmetrizer,
    length,
    nabla,
    reduced_word,
    symmetrizer_max,
)
from .gysin import (
    identity_5_11,
    orthogonality_check,
    push_partial_flag,
    push_partial_flag_even,
    push_qtilde_closed,
    push_schur_closed,
    s_bracket2,
)
from .loci import (
    ChernExpr,
    ClassFormula,
    RootAssignment,
    class_maximal_isotropic,
    class_single_condition,
    class_two_conditions,
    diagonal_class,
    flag_push_s,
    qtilde_chern,
    specialize_to_roots,
)
from .schubpoly import c_top, c_w

__version__ = "0.1.0"

__all__ = [
    "Partition", "horizontal_strips", "pieri_multiplicity", "rho",
    "rho_complement", "NonExactDivision", "Poly", "complete_homogeneous",
    "elementary_symmetric", "exact_divide", "negate_vars", "BasisVector",
    "basis_convert", "factor_doubles", "linearity_expand", "pfaffian_oracle",
    "pieri", "ptilde", "qrho_determinant_identity", "qtilde",
    "qtilde_raising_ops", "schur_q_classical", "schur_s", "skew_qtilde",
    "SignedPerm", "apply_dd", "dd_prime", "divided_difference",
    "ideal_membership", "jacobi_symmetrizer", "length", "nabla",
    "reduced_word", "symmetrizer_max", "identity_5_11",
    "orthogonality_check", "push_partial_flag", "push_partial_flag_even",
    "push_qtilde_closed", "push_schur_closed", "s_bracket2", "ChernExpr",
    "ClassFormula", "RootAssignment", "class_maximal_isotropic",
    "class_single_condition", "class_two_conditions", "diagonal_class",
    "flag_push_s", "qtilde_chern", "specialize_to_roots", "c_top", "c_w",
]
