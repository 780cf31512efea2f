"""Exact and numerical checks for the sixth-order GJMS operator."""

import json
from fractions import Fraction

from . import _gjms6
from ._gjms6 import (
    UsageError,
    __version__,
    coefficient_A,
    coefficient_A_limit,
    factorization_ok,
    remainder_exponent,
    sobolev_quotient,
    y6_sphere,
)


def beta_ratio(a1, b1, a2, b2, n):
    return Fraction(_gjms6.beta_ratio(a1, b1, a2, b2, n))


def sphere_eigenvalues(n, ell_max):
    return [Fraction(s) for s in _gjms6.sphere_eigenvalues(n, ell_max)]


def q_sphere(n):
    return Fraction(_gjms6.q_sphere(n))


def psi4_coefficients(n, seed=1):
    return [Fraction(s) for s in _gjms6.psi4_coefficients(n, seed)]


def log_coefficient_n10(seed=1):
    d = _gjms6.log_coefficient_n10(seed)
    return {k: (v if isinstance(v, float) else Fraction(v)) for k, v in d.items()}


def limit_bracket(n):
    return Fraction(_gjms6.limit_bracket(n))


def run(subcommand, **options):
    """Run a subcommand in-process; returns the parsed JSON report."""
    return json.loads(_gjms6.run(subcommand, **options))
