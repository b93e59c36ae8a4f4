"""Hochschild invariants of monomial algebras ``kQ/<Z>`` and their trivial extensions."""

from .alt import dim_alt, dim_hom_da_a, is_neat, neat_classes, psi_matrix
from .basis import build_automaton, enumerate_basis, is_finite_dimensional, is_nonzero
from .circuits import (
    circuit_of,
    classify,
    cyclic_pairs,
    enumerate_W,
    period_multiplicity,
)
from .errors import (
    InfiniteDimensional,
    InternalCrossCheckFailure,
    PresentationError,
    PresentationSyntaxError,
    QHHError,
    ValidationError,
)
from .fields import CharSpec, ExactField
from .hh1 import dim_hh1, hh1_vanishes, total_hh1
from .presentation import (
    Arrow,
    Path,
    Presentation,
    ValidatedPresentation,
    connected_components,
    is_tree_without_double_arrows,
    parse_presentation,
    serialize_presentation,
    validate,
)
from .report import Analysis, compute_report, minimality_check, serialize_report

__version__ = "0.1.0"
