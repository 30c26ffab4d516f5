"""Exact checks for quantum quasi-shuffle algebras, Rota-Baxter and tridendriform
structures, quantum multi-brace algebras and Yetter-Drinfeld bosonization."""

from .braided_algebra import BraidedAlgebraDef, check_braided_algebra, solve_compatible_products, unitalize
from .braided_space import BraidedSpace, apply_beta, braid_lift, check_braid_lifts, check_ybe
from .errors import (
    DegreeOverflow,
    NoUnitDesignated,
    NotASubalgebra,
    ParseError,
    QshError,
    UnknownLetter,
    ValidationError,
    WrongWeight,
    ZeroDegreeOperand,
)
from .fileformat import load_definitions, parse_definition
from .kernel import IMPLEMENTATION
from .qmb import QMBDef, check_qmb_axioms, qmb_global_product
from .quasi_shuffle import check_filtration, check_qsh_associativity, classical_qsh_oracle, qsh_product
from .report import Report, Witness
from .rota_baxter import RBAlgebra, check_rota_baxter, diamond_product, operator_P, operator_P1, operator_P2
from .scalar import Scalar, parse_scalar, q, substitute_q
from .tensor import TensorElement
from .tridendriform import check_tri_suite, tri_ops
from .yd import Bosonization, HopfAlgebraDef, YDModuleDef, check_bosonization_rb, check_yd_module, natural_braiding

__version__ = "0.1.0"
