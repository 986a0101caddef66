"""Simultaneous primitive roots z, f(z) modulo primes."""

from .arith import (
    DomainError,
    FactoredInteger,
    divisor_count,
    divisor_sum,
    euler_phi,
    factorize,
    is_prime,
    mul_mod,
    pow_mod,
    primes_in_range,
)
from .counting import (
    SweepSeries,
    TupleSpectrum,
    count_pi_f,
    prime_primitive_root_count,
    restricted_average_order,
    simultaneous_spectrum,
    symmetry_statistic,
    value_set_count,
)
from .densities import (
    DensityReport,
    artin_product,
    empirical_ak,
    empirical_cfp,
    empirical_delta,
    log_integral,
    main_term_Mfp,
    main_term_Mx,
)
from .expsums import decomposition_check, max_t_scan, t_sum_exact, t_sum_literal, vanishing_check_e0
from .poly import IntPolynomial, eval_mod, is_admissible_base, is_perfect_square, parse_poly
from .roots import (
    PrimeContext,
    discrete_log,
    enumerate_primitive_roots,
    is_primitive_root,
    least_primitive_root,
    multiplicative_order,
    psi_exact,
    psi_literal,
)

__version__ = "0.1.0"
