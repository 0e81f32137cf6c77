"""Bracketed root isolation for the seed cubics, in extended precision.

Coefficients are exact rationals; endpoints may involve radicals and are held
as mpmath floats at WORKING_PREC bits (well above the 80-bit requirement).
The solver is deterministic: bisection to ~10 correct bits, then Newton,
falling back to pure bisection if an iterate escapes the bracket.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

WORKING_PREC = 160  # bits


class NoSignChange(ValueError):
    """The bracket endpoints do not straddle a root."""


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    return mp.mpf(x)


@dataclass(frozen=True)
class BracketedCubic:
    """A degree-<=3 polynomial with exact coefficients and a sign-change bracket.

    ``coeffs`` are Fractions in descending degree (c3, c2, c1, c0); ``lo`` and
    ``hi`` are the bracket endpoints (any mpmath-convertible value).
    """

    coeffs: tuple
    lo: object
    hi: object

    def __call__(self, x):
        acc = mp.mpf(0)
        for c in self.coeffs:
            acc = acc * x + _to_mpf(c)
        return acc

    def derivative(self, x):
        n = len(self.coeffs) - 1
        acc = mp.mpf(0)
        for i, c in enumerate(self.coeffs[:-1]):
            acc = acc * x + (n - i) * _to_mpf(c)
        return acc


def bracketed_root(cubic):
    """Unique-root refinement inside a sign-change bracket; returns an mpf.

    Raises NoSignChange if P(lo) and P(hi) have the same sign.  The result is
    strictly inside the bracket with |P(root)| at working-precision level.
    """
    with mp.workprec(WORKING_PREC):
        lo, hi = _to_mpf(cubic.lo), _to_mpf(cubic.hi)
        if lo == hi:  # zero-width bracket from an exact grid-point root
            return lo
        flo, fhi = cubic(lo), cubic(hi)
        if flo == 0:
            return lo
        if fhi == 0:
            return hi
        if mp.sign(flo) == mp.sign(fhi):
            raise NoSignChange(f"no sign change on [{lo}, {hi}]: "
                               f"P(lo)={flo}, P(hi)={fhi}")
        width0 = hi - lo
        a, b, fa = lo, hi, flo
        while b - a > width0 * mp.mpf(2) ** -10:
            mid = (a + b) / 2
            fm = cubic(mid)
            if fm == 0:
                return mid
            if mp.sign(fm) == mp.sign(fa):
                a, fa = mid, fm
            else:
                b = mid

        # Newton polish from the bisected midpoint, guarded by the bracket.
        x = (a + b) / 2
        ok = True
        for _ in range(WORKING_PREC):
            dfx = cubic.derivative(x)
            if dfx == 0:
                ok = False
                break
            step = cubic(x) / dfx
            x_new = x - step
            if not (lo < x_new < hi):
                ok = False
                break
            if abs(step) <= abs(x_new) * mp.mpf(2) ** (-WORKING_PREC + 6):
                x = x_new
                break
            x = x_new
        if ok:
            return x

        # fallback: pure bisection to full working precision
        while b - a > abs(b) * mp.mpf(2) ** (-WORKING_PREC + 4):
            mid = (a + b) / 2
            fm = cubic(mid)
            if fm == 0:
                return mid
            if mp.sign(fm) == mp.sign(fa):
                a, fa = mid, fm
            else:
                b = mid
        return (a + b) / 2


def isolate_roots(coeffs, lo, hi, steps=64):
    """Sign-change brackets of a polynomial on rational grid points of (lo, hi).

    Endpoints are Fractions and evaluation is exact, so the isolation itself is
    free of rounding.  Returns a list of BracketedCubic, one per sign change;
    exact grid-point roots are returned as zero-width brackets.
    """
    coeffs = tuple(Fraction(c) for c in coeffs)
    lo, hi = Fraction(lo), Fraction(hi)

    def val(x):
        acc = Fraction(0)
        for c in coeffs:
            acc = acc * x + c
        return acc

    grid = [lo + (hi - lo) * Fraction(k, steps) for k in range(steps + 1)]
    vals = [val(x) for x in grid]
    out = []
    for k in range(steps):
        if vals[k] == 0:
            out.append(BracketedCubic(coeffs, grid[k], grid[k]))
        elif vals[k] * vals[k + 1] < 0:
            out.append(BracketedCubic(coeffs, grid[k], grid[k + 1]))
    if vals[-1] == 0:
        out.append(BracketedCubic(coeffs, grid[-1], grid[-1]))
    return out
