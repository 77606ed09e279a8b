"""piforge: exact identity verification and certified convergence analysis
for series representations of pi, pi^2, ..., pi^6."""

from .closed_forms import (
    PiMultiple,
    beta_partial,
    beta_pi_coeff,
    pi_multiple_interval,
    zeta_partial,
    zeta_pi_coeff,
)
from .exact_core import ExactInt, ExactRational, binomial, factorial
from .exact_verifier import (
    IdentityCheck,
    reduce_exact,
    residual_numeric,
    verify_grid,
)
from .gupta_series import (
    FamilySpec,
    SeriesTerm,
    classical_partial,
    family_spec,
    inner_poly,
    partial_sum,
    prefactor,
    tail_bound,
    term,
)
from .numeric_engine import (
    CertifiedReal,
    IntervalDivisionError,
    PrecisionContext,
    TailedInterval,
)
from .prior_series import (
    HarmonicPair,
    KolbigWeights,
    MidBinomial,
    alzer_H_partial,
    alzer_h_partial,
    alzer_koumandos_partial,
    kolbig_partial,
)
from .special_numbers import (
    BernoulliTable,
    CacheError,
    EulerTable,
    TableDepthError,
    TableStore,
    bernoulli_numbers,
    euler_numbers,
    load_cache,
    save_cache,
)

__version__ = "0.1.0"
