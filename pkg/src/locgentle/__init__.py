"""Weighted Cartan matrices of locally gentle quivers.

Exact rational-function Cartan matrices, their determinants, the Koszul
dual, reduction of cycles with full relations, and the secant
configurations that produce critical quivers.
"""
from .polynomial import Monomial, Polynomial, parse_monomial, parse_polynomial
from .rational import NonExpandable, RationalFunction, TruncatedSeries, series_expand
from .linalg import determinant, smith_invariants, smith_normal_form
from .quiver import (
    Arrow,
    AxiomViolation,
    CycleKind,
    LocallyGentleQuiver,
    MalformedQuiver,
    MalformedRelation,
    MinimalCycle,
    Quiver,
    QuiverError,
    WeightFunction,
    corpus,
    dual,
    is_connected,
    is_critical,
    is_gentle,
    minimal_cycles,
    random_locally_gentle,
    validate,
)
from .quiverio import QuiverParseError, format_quiver, load_quiver, parse_quiver
from .cartan import (
    CartanMatrix,
    Corollaries,
    NotGentle,
    PreconditionViolated,
    ReductionOutcome,
    cartan_exact,
    cartan_series_oracle,
    det_elimination,
    det_formula,
    q_cartan_determinant,
    reduce_step,
    reduction_candidates,
    specialize_corollaries,
    verify_diagonalization,
    verify_duality,
)
from .koszul import GradedResolution, euler_characteristic_check, gldim_finite, resolution
from .configurations import (
    SecantConfiguration,
    count_closed,
    count_closed_up_to_dihedral,
    critical_quiver_from,
    enumerate_Pn,
    enumerate_Pn_prime,
    hz_a_n1,
    hz_polynomial_check,
    is_closed,
)

__version__ = "0.1.0"
