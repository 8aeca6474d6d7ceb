#!/usr/bin/env python3
"""Regenerate the reference-solution fixtures shipped in bernbvp/data/.

The two built-in benchmark problems whose exact solutions involve special
functions (Airy products, Bessel functions of order 1/4) get their reference
values from mpmath evaluated at 50 decimal digits, written out to 17
significant digits (full double precision).  Run from the repository root:

    python scripts/make_reference_fixtures.py
"""

import datetime
import pathlib

import mpmath
from mpmath import mp, mpf

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "src" / "bernbvp" / "data"
GRID_M = 200

mp.dps = 50


def airy_product_solution():
    """y(x) = c1*Ai(x)^2 + c2*Ai(x)*Bi(x) + c3*Bi(x)^2 solving
    y''' = 4xy' + 2y with y(0)=1, y'(0)=0, y(1)=0."""
    ai1 = mpmath.airyai(1)
    bi1 = mpmath.airybi(1)
    c4 = mpf(3) ** (mpf(5) / 6) * mpmath.gamma(mpf(2) / 3) ** 2 / (
        3 * ai1**2 + bi1**2 - 2 * mpmath.sqrt(3) * ai1 * bi1
    )
    c1 = -3 * ai1 * bi1 * c4
    c2 = (3 * ai1**2 + bi1**2) * c4
    c3 = -ai1 * bi1 * c4

    def y(x):
        ai, bi = mpmath.airyai(x), mpmath.airybi(x)
        return c1 * ai**2 + c2 * ai * bi + c3 * bi**2

    return y


def bessel_quarter_solution():
    """y(x) = sqrt(x+2)*[J_{1/4}((x+2)^2/2) + Y_{1/4}((x+2)^2/2)] solving
    y'' = -(x+2)^2 y.  Returns (y, a0, a1) with a0 = y(0), a1 = y'(0)."""
    nu = mpf(1) / 4

    def y(x):
        z = (x + 2) ** 2 / 2
        return mpmath.sqrt(x + 2) * (mpmath.besselj(nu, z) + mpmath.bessely(nu, z))

    a0 = mpmath.sqrt(2) * (mpmath.besselj(nu, 2) + mpmath.bessely(nu, 2))
    a1 = 2 * mpmath.sqrt(2) * (
        mpmath.besselj(-mpf(3) / 4, 2) + mpmath.bessely(-mpf(3) / 4, 2)
    )
    return y, a0, a1


def write_fixture(path, y, header_lines):
    date = datetime.date.today().isoformat()
    lines = [
        f"# oracle: mpmath {mpmath.__version__} at mp.dps = 50; values rounded to 17 significant digits",
        f"# generated: {date} by scripts/make_reference_fixtures.py",
        f"# grid: x_i = i/{GRID_M} for i = 0..{GRID_M}",
    ]
    lines += header_lines
    for i in range(GRID_M + 1):
        x = mpf(i) / GRID_M
        lines.append(f"{float(x):.6f} {float(y(x)):.17g}")
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({GRID_M + 1} points)")


def main():
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    y4 = airy_product_solution()
    write_fixture(
        DATA_DIR / "example4_airy.txt",
        y4,
        ["# problem: y''' = 4xy' + 2y, y(0) = 1, y'(0) = 0, y(1) = 0",
         "# exact solution: quadratic form in Airy Ai, Bi (see scripts/make_reference_fixtures.py)"],
    )

    y5, a0, a1 = bessel_quarter_solution()
    write_fixture(
        DATA_DIR / "example5_bessel.txt",
        y5,
        ["# problem: y'' = -(x+2)^2 y, y(0) = a0, y'(0) = a1",
         "# exact solution: sqrt(x+2)*[J_{1/4}((x+2)^2/2) + Y_{1/4}((x+2)^2/2)]",
         f"# boundary a0 = {float(a0):.17g}",
         f"# boundary a1 = {float(a1):.17g}"],
    )


if __name__ == "__main__":
    main()
