"""Exact distributions of extreme values of simple random walks."""

from .asymptotics import Regime, catalan_constant, predict_moments, second_moment_probe, sech_limit_probe
from .cycles import CycleLaw, cycle_max_distribution, cycle_max_moments, knuth_asymptotic, record_of_copies_mean
from .errors import (
    BadBand,
    BadConstantTerm,
    InvalidParams,
    MethodDisagreement,
    RegimeMismatch,
    SeriesError,
    SymmetricUnsupported,
    TooLarge,
    WalkError,
    ZeroConstantTerm,
)
from .exactnum import PowerSeries, Rational, as_rational, binom, series_div, series_mul, series_sqrt, theta_series
from .extrema_joint import (
    cross_moment,
    exit_probability_psi,
    first_passage_C,
    joint_pmf,
    marginal_max_pmf,
    max_abs_pmf,
    symmetric_max_mean,
    symmetric_max_second_moment,
)
from .montecarlo import PersistentParams, SimConfig, SimResult, Statistic, simulate
from .oracle import WalkStatistic, enumerate_exact
from .reflect_strong import (
    ReflectChain,
    strong_gf_diagonal,
    strong_gf_tilde,
    strong_pmf,
    strong_pmf_matrix,
    strong_pmf_recurrence,
    strong_pmf_series,
)
from .reflect_weak import (
    weak_gf_diagonal,
    weak_gf_tilde,
    weak_pmf,
    weak_pmf_matrix,
    weak_pmf_recurrence,
    weak_pmf_series,
)
from .walkcore import JointPmf, Mode, Moments, Pmf, WalkParams, band_stay_probability, dominates, pmf_moments

__version__ = "0.1.0"
