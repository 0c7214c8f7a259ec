"""Exact 2-loop polynomial invariants of torus and cable knots.

Thin Python wrapper around the C++ core. All arithmetic is exact: scalar
values are `fractions.Fraction`, polynomial types keep exact rational
coefficients on the half-integer exponent lattice.
"""

from ._twoloop import (
    InvalidParamsError,
    KnotRecord,
    LaurentPolynomial,
    RationalFunction,
    RecordSyntaxError,
    ThetaPolynomial,
    TwoLoopError,
    ValidationError,
    alexander_second_derivative_at_one,
    builtin,
    cable,
    cable_alexander,
    cable_theta,
    cable_theta_hat,
    parse_record,
    pretty,
    reduce_theta_hat,
    render_domain_table,
    render_grid_table,
    run_verify,
    serialize_record,
    symmetrize,
    torus_alexander,
    torus_phi,
    torus_psi,
    torus_record,
    torus_theta,
    torus_theta_hat,
    torus_theta_hat_closed_form,
    unknot,
    v2,
    v3,
    v3_cable,
    v3_torus,
)

__version__ = "1.0.0"

__all__ = [
    "InvalidParamsError",
    "KnotRecord",
    "LaurentPolynomial",
    "RationalFunction",
    "RecordSyntaxError",
    "ThetaPolynomial",
    "TwoLoopError",
    "ValidationError",
    "alexander_second_derivative_at_one",
    "builtin",
    "cable",
    "cable_alexander",
    "cable_theta",
    "cable_theta_hat",
    "parse_record",
    "pretty",
    "reduce_theta_hat",
    "render_domain_table",
    "render_grid_table",
    "run_verify",
    "serialize_record",
    "symmetrize",
    "torus_alexander",
    "torus_phi",
    "torus_psi",
    "torus_record",
    "torus_theta",
    "torus_theta_hat",
    "torus_theta_hat_closed_form",
    "unknot",
    "v2",
    "v3",
    "v3_cable",
    "v3_torus",
]
