"""exzero: a verification workbench for prime exponential sums, Goldbach
counts, Gauss-sum identities, and real-zero bounds of Dirichlet L-functions."""

__version__ = "0.1.0"

from .characters import (  # noqa: F401
    RealCharacter,
    gauss_sum,
    gauss_sum_reference,
    is_odd_squarefree,
    jacobi,
    real_character,
    totient,
)
from .chain import (  # noqa: F401
    ChainReport,
    beta_bound,
    beta_round_trip,
    full_chain,
    model_residuals,
    moment_chain,
    synthesize,
)
from .errors import (  # noqa: F401
    DomainError,
    ExzeroError,
    OutOfRangeError,
    ResourceLimitError,
    UnsupportedModulusError,
    VerificationError,
)
from .expsums import (  # noqa: F401
    MomentReport,
    geometric_sum,
    moment_sum,
    pair_count_mod,
    prime_exp_sum,
    ramanujan_moment,
    ramanujan_sum,
    twisted_gauss,
    twisted_ramanujan_sum,
)
from .goldbach import (  # noqa: F401
    GoldbachRecord,
    goldbach_count,
    goldbach_count_range,
    hl_prediction,
    lower_bound_check,
    singular_series,
    twin_prime_constant,
)
from .lfunc import (  # noqa: F401
    ZeroScanResult,
    hurwitz_zeta,
    l_value,
    scan_real_zeros,
    zero_bound,
)
from .primes import (  # noqa: F401
    PrimeTable,
    ResidueSpectrum,
    exceptional_integral,
    li,
    pi,
    pi_progression,
    residue_spectrum,
    sieve,
)
