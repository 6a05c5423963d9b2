"""Wigner-Yanase-Dyson skew information and uncertainty-relation checks."""

from ._core import (
    DimensionMismatch,
    DomainError,
    InconsistencyError,
    InvalidArgument,
    K_alpha,
    L_alpha,
    NoConvergence,
    NonFiniteEntry,
    NotHermitian,
    NotPSD,
    SkewtraceError,
    W_alpha,
    ZeroTrace,
    check,
    compute_all,
    density_matrix,
    eigh,
    inequality_ids,
    is_conjecture,
    random_density,
    random_observable,
    replay_margin,
    reproduce_published_instance,
    run_campaign,
    scalar_F,
    search_violations,
    variance,
    wyd_I,
    wyd_I_eigensum,
    wyd_J,
    wyd_U,
)

__version__ = "0.1.0"
