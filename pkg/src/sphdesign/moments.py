"""Exact rational moment constants for the five spaces a design can live in.

Every verifier in this package compares empirical point-set averages against
the constants computed here.  All values are exact ``fractions.Fraction``
objects (big-integer arithmetic throughout), so the oracle itself contributes
no rounding error; callers convert to float only at comparison time.
"""

from collections import Counter
from fractions import Fraction
from math import comb, factorial

# A multi-index is a plain tuple of nonnegative ints, one entry per coordinate.


def _double_factorial(n):
    """n!! with the empty-product conventions (-1)!! = 0!! = 1."""
    if n <= 0:
        return 1
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def sphere_monomial_moment(d, alpha):
    """Mean of x^alpha over the unit sphere S^{d-1} (normalized surface measure).

    Zero when any exponent is odd; otherwise
    prod_i (alpha_i - 1)!! / prod_{j=0}^{|alpha|/2 - 1} (d + 2j).
    """
    alpha = tuple(alpha)
    if len(alpha) != d:
        raise ValueError(f"multi-index length {len(alpha)} != dimension {d}")
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if any(a < 0 for a in alpha):
        raise ValueError("exponents must be nonnegative")
    if any(a % 2 for a in alpha):
        return Fraction(0)
    total = sum(alpha)
    num = 1
    for a in alpha:
        num *= _double_factorial(a - 1)
    den = 1
    for j in range(total // 2):
        den *= d + 2 * j
    return Fraction(num, den)


def sphere_pair_constant(d, k):
    """Mean of (x . y)^k over independent uniform pairs on S^{d-1}.

    Equals the moment of x_1^k; used by the pair-sum design test.
    """
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    if k % 2:
        return Fraction(0)
    den = 1
    for j in range(k // 2):
        den *= d + 2 * j
    return Fraction(_double_factorial(k - 1), den)


def interval_moment(d, k):
    """k-th moment of the weight (1 - u^2)^(d-1) on [-1, 1], normalized.

    Beta-ratio closed form: (k-1)!! / ((2d+1)(2d+3)...(2d+k-1)) for even k.
    """
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    if k % 2:
        return Fraction(0)
    den = 1
    for j in range(k // 2):
        den *= 2 * d + 1 + 2 * j
    return Fraction(_double_factorial(k - 1), den)


def simplex_monomial_moment(d, k):
    """Mean of x^k over the standard simplex (normalized Lebesgue measure).

    (d-1)! * prod k_i! / (d - 1 + sum k_i)!.
    """
    k = tuple(k)
    if len(k) != d:
        raise ValueError(f"multi-index length {len(k)} != dimension {d}")
    if any(e < 0 for e in k):
        raise ValueError("exponents must be nonnegative")
    num = factorial(d - 1)
    for e in k:
        num *= factorial(e)
    return Fraction(num, factorial(d - 1 + sum(k)))


def cp_pair_constant(d, k):
    """Mean of |<x, y>|^{2k} over independent uniform lines in CP^{d-1}.

    1 / C(d + k - 1, k); the Welch-bound constants.
    """
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    return Fraction(1, comb(d + k - 1, k))


def toric_monomial_integral(a, b):
    """Haar integral of the projective-torus monomial m_{a,b}.

    1 when the index tuples agree as multisets (the monomial is constant),
    0 otherwise.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("index tuples must have equal length")
    return Fraction(1) if Counter(a) == Counter(b) else Fraction(0)


def dgs_lower_bound(d, t):
    """Delsarte-Goethals-Seidel lower bound on |X| for a spherical t-design."""
    if d < 1 or t < 1:
        raise ValueError("need d >= 1 and t >= 1")
    if t % 2 == 0:
        e = t // 2
        return comb(d + e - 1, d - 1) + comb(d + e - 2, d - 1)
    e = (t - 1) // 2
    return 2 * comb(d + e - 1, d - 1)
