"""Shared extended-precision context.

The iteration pipeline combines moment integrals with dual-basis connection
coefficients whose magnitudes grow roughly like 4^n.  Carrying that
combination in double precision amplifies rounding noise by the same factor,
so the inner kernels run at WORKING_DPS decimal digits (mpmath) and results
are rounded back to float64 at module boundaries.  At 40 digits the rounding
floor of the delivered double-precision coefficients stays below 1e-13 for
degrees up to roughly n - m = 45.
"""

from mpmath import mp

WORKING_DPS = 40


def workprec():
    """Context manager placing mpmath at the solver's working precision."""
    return mp.workdps(WORKING_DPS)
