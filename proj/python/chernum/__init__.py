"""Exact inversion polynomials, characteristic-number generating functions,
polytope face censuses, and Chern-number divisibility checks.

Polynomials come back as ``{partition: coefficient}`` dictionaries, with the
partition a tuple of weakly decreasing positive integers: ``(3, 1)`` stands
for the monomial ``t1 * t3``. Coefficients are exact (``int`` or
``fractions.Fraction``).
"""

from chernum._core import (
    bell_partial,
    catalog,
    consistency_check,
    convert_convention,
    cpn_normal,
    cpn_tangent,
    decompose_in_theta,
    del_pezzo_scan,
    dissection_census,
    duality_check,
    gcd_chern_numbers,
    hat_mult_inversion,
    hessenberg,
    hypersurface,
    hypersurface_scan,
    lagrange,
    mischenko_log,
    mult_inversion,
    ordered_partition_census,
    surface_verdict,
    theta_normal,
    theta_power,
    theta_tangent,
    toric_surface_scan,
    verify,
)

__all__ = [
    "bell_partial",
    "catalog",
    "consistency_check",
    "convert_convention",
    "cpn_normal",
    "cpn_tangent",
    "decompose_in_theta",
    "del_pezzo_scan",
    "dissection_census",
    "duality_check",
    "gcd_chern_numbers",
    "hat_mult_inversion",
    "hessenberg",
    "hypersurface",
    "hypersurface_scan",
    "lagrange",
    "mischenko_log",
    "mult_inversion",
    "ordered_partition_census",
    "surface_verdict",
    "theta_normal",
    "theta_power",
    "theta_tangent",
    "toric_surface_scan",
    "verify",
]
