"""eisenzero: completed zeta functions for Q and the class-number-one
imaginary quadratic fields, constant terms of the associated Eisenstein
series, certified localization of their zeros on the critical line, and the
critical truncation constants a* by three independent routes."""

__version__ = "0.1.0"

from .backend import backend_name
from .constant_term import (
    ConstantTermSpec,
    HeckeSpec,
    c_scatter,
    cK_scatter,
    entire_phi0,
    entire_phiK,
    hecke_factor,
    maass_selberg_norm_line,
    maass_selberg_norm_real,
    phi0,
    phiK,
    real_zero_threshold,
    unit_constant_term,
)
from .errors import (
    AccuracyError,
    AmbiguousBracket,
    BoundaryNearZero,
    ConventionMismatch,
    DivisionError,
    DomainError,
    EisenzeroError,
    LadderMismatch,
    PhaseStepExceeded,
    PoleError,
    StepTooCoarse,
    UnsupportedAccuracy,
)
from .fields import (
    ALL_FIELDS,
    CLASS_NUMBER_ONE_D,
    FIELD_Q,
    QUADRATIC_FIELDS,
    FieldSpec,
    field_from_label,
)
from .special import (
    QuadraticCharacter,
    dedekind_eta,
    dedekind_eta_series,
    dirichlet_l,
    hurwitz_zeta,
    kronecker_symbol,
    log_gamma,
    zeta,
)
from .spectral import (
    AStarResult,
    Trajectory,
    astar_center_root,
    astar_kronecker,
    astar_spectral,
    chowla_selberg_delta,
    monotonicity_check,
    mu_from_zero,
    rho_track,
)
from .zerofind import (
    Rect,
    ScanConfig,
    ZeroRecord,
    certify_simple,
    count_rectangle,
    find_real_zero,
    line_function,
    scan_line,
    scan_line_auto,
)
from .zeta import (
    MemoCache,
    ZetaContext,
    lambda_completed,
    lambda_K,
    lattice_zeta_bruteforce,
    xi,
    xi_K,
)
