"""Iterative Bernstein least-squares solution of two-point boundary value
problems on [0, 1].

For y^(m) = f(x, y, y', ..., y^(m-1)) with k derivative values prescribed at
x = 0 and l = m - k at x = 1, the degree-(m-1) seed polynomial is fixed by
the boundary data alone.  Each subsequent degree n raises the previous
iterate: the k + l outer Bernstein coefficients are recomputed from the
boundary data, and the n - m + 1 inner ones minimize the L2 residual of the
equation with the right-hand side frozen at the previous iterate, via dual
basis moments and one banded Toeplitz solve.  Cost per iteration is O(n^2),
dominated by the dual coefficient table.

The moment accumulation and dual combination run at extended precision (see
_mp); every iterate is an ordinary float64 BernsteinPoly.
"""

import math
from dataclasses import dataclass
from math import comb

import numpy as np
from mpmath import mpf, sqrt as mp_sqrt

from . import bandsolve
from ._mp import workprec
from .bernstein import BernsteinPoly, falling_factorial
from .dual import dual_coefficients
from .errors import EvaluationError, IterationError, SingularSystemError
from .expressions import evaluate as eval_expr, max_arg_index
from .quadrature import _moment_integrals_mp, gauss_rule

__all__ = ["BVProblem", "SolveOptions", "SolveReport",
           "outer_coefficients", "seed", "iterate", "solve"]


@dataclass(frozen=True)
class BVProblem:
    """Problem data: y^(m) = f(x, y, ..., y^(m-1)) on [0, 1] with
    y^(i)(0) = left_values[i] and y^(j)(1) = right_values[j].

    ``rhs`` is either a parsed expression over x, y0..y(m-1) or a callable
    f(x, y0, ..., y(m-1)).  Callables are invoked with mpf scalars during a
    solve, so they should stick to arithmetic the mpmath types support
    (+, -, *, /, integer powers) or route through mpmath functions.
    """

    left_values: tuple
    right_values: tuple
    rhs: object

    def __post_init__(self):
        left = tuple(float(v) for v in self.left_values)
        right = tuple(float(v) for v in self.right_values)
        object.__setattr__(self, "left_values", left)
        object.__setattr__(self, "right_values", right)
        if self.m < 1:
            raise ValueError("need at least one boundary condition (m >= 1)")
        if not all(np.isfinite(v) for v in left + right):
            raise ValueError("boundary values must be finite")
        idx = max_arg_index(self.rhs) if not callable(self.rhs) else -1
        if idx >= self.m:
            raise ValueError(
                f"rhs references y{idx} but the equation order is {self.m}"
            )

    @property
    def k(self):
        return len(self.left_values)

    @property
    def l(self):
        return len(self.right_values)

    @property
    def m(self):
        return self.k + self.l

    def rhs_value(self, x, args):
        if callable(self.rhs):
            return self.rhs(x, *args)
        return eval_expr(self.rhs, x, args)


@dataclass(frozen=True)
class SolveOptions:
    """Target degree and quadrature overrides.

    quad_order None means the per-iteration default max(n + 2, 20);
    record_iterates keeps every iterate w_(m-1)..w_N in the report.
    """

    degree: int
    quad_order: int = None
    quad_panels: int = 2
    record_iterates: bool = False


@dataclass(frozen=True)
class SolveReport:
    """Final polynomial, per-iteration L2 residuals, optional iterates."""

    solution: BernsteinPoly
    residuals: np.ndarray
    iterates: tuple = None

    def __post_init__(self):
        arr = np.asarray(self.residuals, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "residuals", arr)


def outer_coefficients(problem, n):
    """Bernstein coefficients of degree n pinned by the boundary data.

    Returns (left, right): left[i] is the coefficient at index i
    (i = 0..k-1) and right[j] the one at index n - j (j = 0..l-1).  Both
    recurrences peel the highest-order endpoint-derivative formula.  Staying
    in float64 is deliberate: each coefficient is computed from the already
    rounded earlier ones, so its own rounding compensates theirs and the
    boundary conditions verify more tightly than independently rounded exact
    values would.
    """
    k, l = problem.k, problem.l
    if n < max(k, l) - 1:
        raise ValueError(f"degree {n} too small for k={k}, l={l}")
    left = np.zeros(k)
    for i in range(k):
        terms = [problem.left_values[i] / falling_factorial(n, i)]
        terms += [-((-1.0) ** (i - h)) * comb(i, h) * left[h] for h in range(i)]
        left[i] = math.fsum(terms)
    right = np.zeros(l)
    for j in range(l):
        terms = [(-1.0) ** j * problem.right_values[j] / falling_factorial(n, j)]
        terms += [-((-1.0) ** h) * comb(j, h) * right[j - h] for h in range(1, j + 1)]
        right[j] = math.fsum(terms)
    return left, right


def seed(problem):
    """The degree m-1 starting polynomial; it satisfies all boundary
    conditions and involves no least-squares step."""
    m = problem.m
    left, right = outer_coefficients(problem, m - 1)
    return BernsteinPoly(_full_coeffs(m - 1, problem.k, problem.l,
                                      left, right, np.empty(0)))


def _full_coeffs(n, k, l, left, right, inner):
    p = np.empty(n + 1)
    p[:k] = left
    p[k:n - l + 1] = inner
    for j in range(l):
        p[n - j] = right[j]
    return p


def _eval_mp(coeffs, x):
    """Horner evaluation of a Bernstein coefficient list at an mpf node."""
    n = len(coeffs) - 1
    if x <= 0.5:
        s = 1 - x
        t = x / s
        acc = coeffs[n]
        for i in range(n - 1, -1, -1):
            acc = acc * t + coeffs[i] * comb(n, i)
        return acc * s**n
    u = (1 - x) / x
    acc = coeffs[0]
    for i in range(1, n + 1):
        acc = acc * u + coeffs[i] * comb(n, i)
    return acc * x**n


def _scaled_difference_rows(coeffs, degree, r_max):
    """Bernstein coefficients of derivatives 0..r_max of the polynomial with
    the given float coefficients, as exact mpf rows."""
    rows = [[mpf(c) for c in coeffs]]
    for _ in range(r_max):
        prev = rows[-1]
        rows.append([prev[j + 1] - prev[j] for j in range(len(prev) - 1)])
    out = []
    fac = 1
    for r in range(r_max + 1):
        if r > 0:
            fac *= degree - r + 1
        out.append([c * fac for c in rows[r]])
    return out


def _iterate_core(problem, prev_coeffs, n, rule):
    """One degree-raising step; returns (coefficients, L2 residual)."""
    if rule.nodes_mp is None:
        raise ValueError("quadrature rule must come from gauss_rule()")
    m, k, l = problem.m, problem.k, problem.l
    nu = n - m
    left, right = outer_coefficients(problem, n)
    with workprec():
        dcoefs = _scaled_difference_rows(prev_coeffs, n - 1, m - 1)

        def g(x):
            args = [_eval_mp(dc, x) for dc in dcoefs]
            return problem.rhs_value(x, args)

        moments, gvals = _moment_integrals_mp(g, nu, rule)
        duals = dual_coefficients(nu)
        v = bandsolve.assemble_rhs(n, m, k, l, duals, moments, (left, right))
        system = bandsolve.assemble_matrix(n, m, k, l).with_rhs(v)
        inner = bandsolve.solve(system)
        coeffs = _full_coeffs(n, k, l, left, right, inner)

        # L2 residual of the new iterate against the frozen right-hand side
        deriv_m = _scaled_difference_rows(coeffs, n, m)[m]
        res2 = mpf(0)
        for x, w, gx in zip(rule.nodes_mp, rule.weights_mp, gvals):
            diff = _eval_mp(deriv_m, x) - gx
            res2 += w * diff * diff
        residual = float(mp_sqrt(res2))
    return coeffs, residual


def _default_rule(n, options=None):
    order = options.quad_order if options and options.quad_order else max(n + 2, 20)
    panels = options.quad_panels if options else 2
    return gauss_rule(order, panels)


def iterate(problem, previous, n, rule=None):
    """Compute the degree-n iterate from the degree-(n-1) one.

    The outer coefficients come from the boundary data; the inner ones solve
    the banded Toeplitz system with the right-hand side frozen at
    ``previous``.  Numerical failures carry the iteration index.
    """
    if n < problem.m:
        raise ValueError(f"need n >= m = {problem.m}, got {n}")
    if previous.degree != n - 1:
        raise ValueError(
            f"previous iterate must have degree {n - 1}, got {previous.degree}"
        )
    if rule is None:
        rule = _default_rule(n)
    try:
        coeffs, _ = _iterate_core(problem, previous.coeffs, n, rule)
    except (EvaluationError, SingularSystemError) as exc:
        raise IterationError(n, exc) from exc
    return BernsteinPoly(coeffs)


def solve(problem, options):
    """Run the iteration from the seed up to degree options.degree.

    Deterministic for fixed inputs; residuals are recorded for every
    n = m..N, iterates only when options.record_iterates is set.
    """
    N = options.degree
    m = problem.m
    if N < m:
        raise ValueError(f"target degree {N} below equation order {m}")
    if options.quad_order is not None and options.quad_order < 1:
        raise ValueError("quad_order must be >= 1")
    if options.quad_panels < 1:
        raise ValueError("quad_panels must be >= 1")

    current = seed(problem)
    iterates = [current] if options.record_iterates else None
    residuals = []
    for n in range(m, N + 1):
        rule = _default_rule(n, options)
        try:
            coeffs, res = _iterate_core(problem, current.coeffs, n, rule)
        except (EvaluationError, SingularSystemError) as exc:
            raise IterationError(n, exc) from exc
        current = BernsteinPoly(coeffs)
        residuals.append(res)
        if iterates is not None:
            iterates.append(current)
    return SolveReport(
        solution=current,
        residuals=np.array(residuals),
        iterates=tuple(iterates) if iterates is not None else None,
    )
