"""Spherical means on the Poincare ball."""

from ._hypmeans import (
    ConfigError,
    DomainError,
    admissible,
    apply_Am,
    apply_Am_product_form,
    apply_isometry,
    apply_Lk_radial,
    boost,
    decay_slope,
    eigen_shift,
    family_member,
    harmonic_dimension,
    hyperbolic_distance,
    indicial_exponents,
    kernel_mean,
    kernel_value,
    ladder_holds,
    mean,
    report_csv,
    rho_of_s,
    run_suite,
    s_of_rho,
    suite_names,
    transport_to,
)

__all__ = [name for name in dir() if not name.startswith("_")]
