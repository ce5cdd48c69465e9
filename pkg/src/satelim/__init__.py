"""Elimination of variables from polynomial ideals and submodules through
homogenization and saturation, with a block-order route as cross-check."""

__version__ = "0.1.0"

from .coeff import QQ, Coefficient, FieldSpec, field_arith, parse_coefficient
from .errors import (
    BudgetError,
    ExponentOverflowError,
    FieldArithmeticError,
    ParseError,
    SatelimError,
    UsageError,
)
from .groebner import (
    Budget,
    IdealBasis,
    ModuleBasis,
    SyzygyBasis,
    buchberger,
    groebner_basis,
    ideal_equal,
    ideal_membership,
    normal_form,
    reduce_basis,
    s_polynomial,
    syzygies,
)
from .idealops import (
    EliminationProblem,
    degree_zero_part,
    eliminate_block,
    eliminate_saturation,
    homogenize_ideal,
    quotient,
    saturate,
)
from .orders import DEGLEX, DEGREVLEX, LEX, ModuleOrder, ModuleScheme, MonomialOrder, is_elimination_order
from .parser import parse_polynomial, parse_problem, read_problem
from .polyring import (
    Polynomial,
    RingSpec,
    VectorPoly,
    dehomogenize_poly,
    homogenize_poly,
    homogenize_vector,
    poly_arith,
    substitute_zero,
    weighted_degree,
)
