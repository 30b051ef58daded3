"""Certified enclosures of zeta and alternating-zeta tails, and the integer parts of their inverses."""

from .bounds import (
    BoundClaim,
    BoundReport,
    ClaimKind,
    Status,
    aligned_even_bound,
    check_bound,
    epsilon_threshold,
    h_tight,
    sweep_bounds,
)
from .enclosure import (
    Determined,
    Enclosure,
    Precision,
    Straddles,
    decimal_bounds,
    enc_add,
    enc_div,
    enc_exact,
    enc_exp,
    enc_floor_status,
    enc_inverse,
    enc_log,
    enc_mul,
    enc_pow,
    enc_sub,
)
from .errors import (
    DivisionByIntervalContainingZero,
    DomainError,
    EpsilonOutOfRange,
    NonPositiveBase,
    OutOfValidityRange,
    ParityError,
    UnsupportedS,
    WidthNotReached,
    ZeroStraddle,
    ZetaTailError,
)
from .floors import (
    ExclusionReport,
    FloorCertificate,
    FloorStatus,
    Mode,
    certify_floor,
    exclusion_checks,
    known_integer_floor,
    never_perfect_power,
    predicted_floor_critical,
    predicted_floor_zeta_form,
)
from .gadgets import (
    Gadget,
    GadgetKind,
    ScanReport,
    eval_gadget,
    eval_gadget_exact,
    gadget_limit,
    gadget_limit_check,
    gadget_sign_scan,
    spot_value_checks,
)
from .tails import (
    Agree,
    Disagree,
    Method,
    OracleConfig,
    TailEvaluation,
    TailQuery,
    a_value,
    ab_value,
    b_value,
    compare,
    cross_validate,
    cvz_weights,
    eta_factor,
    eta_tail,
    inverse_enclosure,
    partial_sums,
    zeta_tail,
)

__version__ = "0.1.0"
