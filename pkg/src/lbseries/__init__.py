"""Exact Lie-Butcher series over planar forests.

Forests are balanced-parentheses strings; coefficients are ``Fraction`` values.
"""
from .errors import (
    BadConstantTerm,
    BadRepresentation,
    EmptyForest,
    IllegalCharacter,
    LBError,
    MalformedWord,
    NoSolution,
    NotATree,
    NotConsistent,
    NotInfinitesimal,
    OrderMismatch,
)
from .forest import DOT, EMPTY, Forest, Tree, enumerate_forests, forests_of_order, parse, render, trees_of_order
from .series import (
    Endomorphism,
    Series,
    commutator,
    concat_product,
    exponential,
    gl_product,
    graft,
    logarithm,
    pairing,
    render_series,
    shuffle_product,
)
from .hopf import (
    HopfStructure,
    TensorSeries,
    antipode_generic,
    antipode_shuffle,
    convolve_functionals,
    coproduct_deconcat,
    coproduct_deshuffle,
    coproduct_dn,
    exp_star,
    is_character,
    is_infinitesimal_character,
    log_star,
    render_tensor,
)
from .cuts import admissible_cuts, coproduct_dn_cuts, elementary_cuts, left_admissible_cuts, prune
from .idempotents import (
    BellElement,
    bell,
    bell_part,
    dynkin,
    dynkin_projection,
    eulerian,
    grading_Y,
    grading_Y_inverse,
    q_operator,
    q_polynomial,
)
from .substitution import solve_substitution, substitute, substitute_dual
from .flows import (
    FlowRepresentation,
    alpha_exact,
    backward_error,
    convert,
    gamma_exact,
    method_euler,
    method_midpoint,
    midpoint_sigma,
)

__version__ = "0.1.0"
