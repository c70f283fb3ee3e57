"""Recurrent sequences over finite fields: generation, algebraic
certificates, kernel automata and continued fractions over F_q(T)."""

from .automata import (
    DFAO,
    AutomaticityReport,
    KernelResult,
    ShiftRelation,
    automaticity_report,
    detect_shift_relation,
    export_dot,
    kernel_explore,
    run_dfao,
    synthesize_dfao,
)
from .christol import (
    GapWitness,
    HyperquadraticCertificate,
    RationalityReport,
    compute_ABC,
    rationality_gap_witness,
    rationality_report,
    theta_series,
    verify_hyperquadratic,
)
from .contfrac import (
    ContinuedFraction,
    cf_expand,
    cf_of_rational,
    cf_to_series,
    convergents,
    detect_ultimate_periodicity,
    omega_series,
    quadratic_form_check,
)
from .field import FieldCtx, FieldElement, make_field
from .laurent import LaurentSeries, Poly, RationalFunction, frobenius_power, series_inv
from .recurrences import (
    CFSequenceSpec,
    HyperquadraticSpec,
    PowerRecurrenceSpec,
    TermOracle,
    generate,
    spec_from_cf_params,
    validate_spec,
)
from .sampling import (
    hyperquadratic_sweep,
    irrational_cf_spec,
    random_cf_spec,
    random_hyperquadratic_spec,
    random_power_spec,
    rational_cf_spec,
)
from .specfile import load_spec, spec_to_dict

__all__ = [name for name in dir() if not name.startswith("_")]
