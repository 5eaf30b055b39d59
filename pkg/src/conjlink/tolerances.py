"""Numerical tolerances shared across the package."""

#: power-iteration stop: ||Av - lambda v|| / ||v||
EIG_TOL = 1e-10
EIG_MAX_ITER = 100_000

#: max |X - X^T| accepted for results that must be symmetric
SYMMETRY_TOL = 1e-8

#: agreement between the grounded-solve resistance and independent oracles
RESISTANCE_TOL = 1e-9

#: closed-form walk sums are refused once alpha * lambda_max >= 1 - margin
CONVERGENCE_MARGIN = 1e-6

#: scores closer than this (relative) are treated as tied when ranking
RANK_RTOL = 1e-10
