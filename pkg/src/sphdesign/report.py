"""Verification reports shared by all design verifiers."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a point set against exact moment constants.

    ``residuals`` maps a check label (usually a degree, e.g. ``"deg4"``) to the
    absolute difference between the empirical average and the exact value.
    ``passed`` is equivalent to ``worst <= tol``.
    """

    method: str
    residuals: dict = field(default_factory=dict)
    worst: float = 0.0
    tol: float = 0.0
    passed: bool = False
    wall_time: float = 0.0
    threads: int = 1

    @classmethod
    def from_residuals(cls, method, residuals, tol, wall_time=0.0, threads=1,
                       extra_failure=False):
        worst = max(residuals.values()) if residuals else 0.0
        passed = worst <= tol and not extra_failure
        return cls(method=method, residuals=dict(residuals), worst=worst, tol=tol,
                   passed=passed, wall_time=wall_time, threads=threads)

    def summary(self):
        lines = [f"method: {self.method}"]
        for label in sorted(self.residuals):
            lines.append(f"  {label}: residual {self.residuals[label]:.3e}")
        lines.append(f"worst residual {self.worst:.3e} vs tolerance {self.tol:.1e} "
                     f"-> {'PASS' if self.passed else 'FAIL'} "
                     f"({self.wall_time:.3f}s, {self.threads} thread(s))")
        return "\n".join(lines)

    def to_dict(self):
        return {
            "method": self.method,
            "residuals": dict(self.residuals),
            "worst": self.worst,
            "tol": self.tol,
            "passed": self.passed,
            "wall_time": self.wall_time,
            "threads": self.threads,
        }
