"""Shared plumbing: resource caps, deterministic summation, thread resolution."""

import math
import os


class CapExceeded(RuntimeError):
    """A construction or verification would exceed its configured resource cap."""


def det_sum(values):
    """Deterministic compensated sum (exactly rounded, order-independent)."""
    return math.fsum(values)


def resolve_threads(threads=None):
    """Thread count for parallel verifiers: arg > SPHDESIGN_THREADS > cpu count."""
    if threads is not None and threads > 0:
        return int(threads)
    env = os.environ.get("SPHDESIGN_THREADS")
    if env:
        try:
            n = int(env)
            if n > 0:
                return n
        except ValueError:
            pass
    return os.cpu_count() or 1
