"""Seven-point interval 5-designs for the weights (1 - u^2)^(d-1), and their verifier."""

import time
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from ._common import det_sum
from .moments import interval_moment
from .report import VerificationReport
from .roots import WORKING_PREC


@dataclass(frozen=True)
class QuadraticSurd:
    """Exact value rational + sign * sqrt(radicand), evaluated on demand."""

    rational: Fraction
    radicand: Fraction = Fraction(0)
    sign: int = 1

    def value(self, prec=WORKING_PREC):
        with mp.workprec(prec):
            root = mp.sqrt(mp.mpf(self.radicand.numerator) /
                           mp.mpf(self.radicand.denominator))
            rat = mp.mpf(self.rational.numerator) / mp.mpf(self.rational.denominator)
            return rat + self.sign * root

    def to_float(self):
        return float(self.value())


@dataclass(frozen=True)
class IntervalDesign:
    """Equal-weight quadrature nodes on (-1, 1) for the weight (1-u^2)^(d-1)."""

    d: int
    nodes: tuple
    weights: tuple
    strength: int = 5
    node_params: dict | None = None

    def __post_init__(self):
        if len(self.nodes) != len(self.weights):
            raise ValueError("nodes and weights differ in length")
        if any(not (-1.0 <= v <= 1.0) for v in self.nodes):
            raise ValueError("node outside [-1, 1]")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")


def interval5_design(d):
    """The 7 nodes {0, +-sqrt(A_d), +-sqrt(B_d), +-sqrt(C_d)} with equal weights.

    A_d = 1/(4(2d+1)); B_d, C_d are the roots of z^2 - T_d z + P_d with
    T_d = 13/(4(2d+1)) and P_d = (2d+171)/(16(2d+1)^2(2d+3)).
    """
    if d < 1:
        raise ValueError("need d >= 1")
    A = Fraction(1, 4 * (2 * d + 1))
    T = Fraction(13, 4 * (2 * d + 1))
    P = Fraction(2 * d + 171, 16 * (2 * d + 1) ** 2 * (2 * d + 3))
    disc = T * T - 4 * P          # = (330d - 177) / (16(2d+1)^2(2d+3)) > 0
    half_t = T / 2
    params = {
        "A": QuadraticSurd(A),
        "B": QuadraticSurd(half_t, disc / 4, +1),
        "C": QuadraticSurd(half_t, disc / 4, -1),
    }
    with mp.workprec(WORKING_PREC):
        mags = sorted(float(mp.sqrt(params[k].value())) for k in ("A", "B", "C"))
    nodes = tuple([-v for v in reversed(mags)] + [0.0] + mags)
    weights = (1.0 / 7.0,) * 7
    return IntervalDesign(d=d, nodes=nodes, weights=weights, strength=5,
                          node_params=params)


def verify_interval(design, t, tol=1e-11):
    """Compare the weighted node moments of degree <= t with the exact values."""
    start = time.perf_counter()
    if t < 0:
        raise ValueError("need t >= 0")
    nodes, weights = design.nodes, design.weights
    if any(not (-1.0 <= v <= 1.0) for v in nodes):
        raise ValueError("node outside [-1, 1]")
    total = det_sum(weights)
    residuals = {}
    for k in range(t + 1):
        avg = det_sum(w * v ** k for v, w in zip(nodes, weights)) / total
        residuals[f"deg{k}"] = abs(avg - float(interval_moment(design.d, k)))
    return VerificationReport.from_residuals(
        "interval-moments", residuals, tol,
        wall_time=time.perf_counter() - start)
