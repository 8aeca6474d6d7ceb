"""Shared test oracles and reference data."""

import numpy as np


def de_casteljau(coeffs, x):
    """O(n^2) Bernstein evaluation; independent oracle for the Horner path."""
    b = np.array(coeffs, dtype=float)
    n = b.size - 1
    for r in range(1, n + 1):
        b[: n - r + 1] = (1.0 - x) * b[: n - r + 1] + x * b[1 : n - r + 2]
    return b[0]


def dense_from_banded(system):
    """Dense matrix of a BandedToeplitz, built entry by entry."""
    s = system.size
    a = np.zeros((s, s))
    for i in range(s):
        for j in range(s):
            d = j - i
            if -system.lower_bw <= d <= system.upper_bw:
                a[i, j] = system.diagonals[d + system.lower_bw]
    return a


def monomial_bernstein_coeffs(power_coeffs, n):
    """Degree-n Bernstein coefficients of sum_j a_j x^j (a = power_coeffs)."""
    from math import comb

    p = np.zeros(n + 1)
    for i in range(n + 1):
        p[i] = sum(
            a * comb(i, j) / comb(n, j)
            for j, a in enumerate(power_coeffs)
            if j <= i
        )
    return p


# Reference maximum errors over the 201-point grid for the five built-in
# examples at degrees 2..20 (see the benchmarks section of the README).
# Values below ~1e-13 are beyond double precision and are only asserted
# as "at most 1e-11" by the acceptance suite.
BENCHMARK_MAX_ERRORS = {
    1: {2: 5.58e-3, 3: 4.83e-3, 4: 5.28e-4, 5: 7.90e-5, 6: 4.98e-6,
        7: 1.56e-6, 8: 9.93e-8, 9: 2.05e-8, 10: 1.19e-9, 11: 4.56e-10,
        12: 1.27e-11, 13: 9.58e-12, 14: 2.82e-13, 15: 2.14e-13,
        16: 5.69e-15, 17: 5.00e-15, 18: 1.24e-16, 19: 1.19e-16, 20: 2.82e-18},
    2: {4: 8.11e-3, 5: 4.32e-4, 6: 1.51e-4, 7: 4.21e-6, 8: 3.55e-7,
        9: 9.85e-9, 10: 4.08e-10, 11: 1.29e-11, 12: 5.34e-13, 13: 2.21e-14,
        14: 1.04e-15, 15: 4.97e-17, 16: 2.41e-18, 17: 1.18e-19,
        18: 5.73e-21, 19: 2.79e-22, 20: 1.19e-23},
    3: {4: 2.88e-3, 5: 3.30e-4, 6: 3.30e-5, 7: 2.85e-6, 8: 2.17e-7,
        9: 1.47e-8, 10: 9.01e-10, 11: 5.03e-11, 12: 2.58e-12, 13: 1.23e-13,
        14: 5.42e-15, 15: 2.24e-16, 16: 8.71e-18, 17: 3.19e-19,
        18: 1.11e-20, 19: 3.64e-22, 20: 1.16e-23},
    4: {3: 3.40e-2, 4: 1.03e-2, 5: 1.64e-3, 6: 1.40e-4, 7: 6.81e-6,
        8: 5.88e-7, 9: 4.44e-8, 10: 2.83e-9, 11: 1.89e-10, 12: 1.78e-11,
        13: 9.10e-13, 14: 5.82e-14, 15: 4.63e-15, 16: 2.18e-16,
        17: 1.23e-17, 18: 8.66e-19, 19: 3.95e-20, 20: 2.05e-21},
    5: {2: 1.48e0, 3: 5.56e-1, 4: 1.94e-1, 5: 9.60e-2, 6: 9.18e-3,
        7: 3.21e-4, 8: 1.06e-4, 9: 1.15e-5, 10: 8.50e-7, 11: 4.59e-8,
        12: 1.52e-9, 13: 2.73e-11, 14: 5.76e-12, 15: 3.96e-13,
        16: 1.65e-14, 17: 4.59e-16, 18: 1.42e-17, 19: 3.45e-19, 20: 8.27e-20},
}

PRECISION_FLOOR = 1e-11
