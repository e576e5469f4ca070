"""Dirac inequality on PRV components of F_lambda (x) S(p^-), and the level scan.

For a Schmid module s the PRV component of F_lambda (x) F_{-s} has highest
weight (lambda - s)^+, and D^2 acts on it (tensored with the top spin line)
by ||(lambda - s)^+ + rho||^2 - ||lambda + rho||^2.  The scan walks Schmid
modules by level and reports which of the non-unitarity / unitarity
criteria the signs of these numbers certify.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import AlgebraMismatch
from .schmid import SchmidModule, _enumerate
from .weights import (
    Algebra,
    Weight,
    k_dominant,
    norm_sq,
    require_k_dominant_integral,
    rho,
)


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


FIRST_STRICT_FAILURE = "FirstStrictFailure"
ALL_STRICT_UP_TO = "AllStrictUpTo"
EQUALITY_AT = "EqualityAt"


def dirac_difference(lam: Weight, mu: Weight) -> Fraction:
    """||mu + rho||^2 - ||lam + rho||^2."""
    if lam.algebra != mu.algebra:
        raise AlgebraMismatch(f"{lam.algebra} vs {mu.algebra}")
    r = rho(lam.algebra)
    return norm_sq(mu + r) - norm_sq(lam + r)


def _sign(x) -> Sign:
    return Sign((x > 0) - (x < 0))


def dirac_test(lam: Weight, s: SchmidModule) -> Sign:
    """Sign of the Dirac difference at the PRV component (lam - s)^+."""
    require_k_dominant_integral(lam)
    if s.algebra != lam.algebra:
        raise AlgebraMismatch(f"{lam.algebra} vs {s.algebra}")
    return _sign(dirac_difference(lam, k_dominant(lam - s.weight)))


def default_bound(algebra: Algebra) -> int:
    m = algebra.schmid_rank
    return m * (m + 1)


@dataclass(frozen=True)
class DiracCertificate:
    variant: str
    bound: int
    schmid: Optional[SchmidModule] = None

    @property
    def level(self) -> Optional[int]:
        return None if self.schmid is None else self.schmid.level

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "level": self.level,
            "schmid_coeffs": None if self.schmid is None else list(self.schmid.coeffs),
            "bound": self.bound,
        }

    def __str__(self) -> str:
        if self.variant == ALL_STRICT_UP_TO:
            return f"{ALL_STRICT_UP_TO}({self.bound})"
        return f"{self.variant} at {self.schmid} (bound {self.bound})"


@lru_cache(maxsize=64)
def _schmid_table(algebra: Algebra, bound: int):
    modules = _enumerate(algebra, bound)
    mat = np.array([m.coords for m in modules], dtype=np.int64).reshape(len(modules), algebra.n)
    levels = [m.level for m in modules]
    starts = [0] * (bound + 2)
    # starts[k] = index of the first module of level k
    for k in range(bound + 1):
        starts[k + 1] = starts[k] + levels.count(k)
    return modules, mat, starts


class _Kernel:
    """Exact integer evaluation of Dirac differences for a fixed lambda.

    Coordinates are scaled by a common denominator; numpy int64 is used when
    the scaled squares provably fit, plain Python integers otherwise.
    """

    def __init__(self, lam: Weight):
        r = rho(lam.algebra)
        den = math.lcm(*(c.denominator for c in lam.coords + r.coords))
        self.den = den
        self.blocks = lam.algebra.blocks
        self.lam = [int(c * den) for c in lam.coords]
        self.rho = [int(c * den) for c in r.coords]
        self.base = sum((a + b) ** 2 for a, b in zip(self.lam, self.rho))

    def values(self, smat: np.ndarray) -> list[int]:
        """Scaled differences den^2 * (||(lam - s)^+ + rho||^2 - ||lam + rho||^2)."""
        if smat.shape[0] == 0:
            return []
        n = len(self.lam)
        big = max(map(abs, self.lam)) + self.den * int(np.abs(smat).max()) + max(map(abs, self.rho))
        if n * big * big < 2**62:
            x = np.asarray(self.lam, dtype=np.int64) - self.den * smat
            for a, b in self.blocks:
                x[:, a:b] = -np.sort(-x[:, a:b], axis=1)
            x += np.asarray(self.rho, dtype=np.int64)
            return ((x * x).sum(axis=1) - self.base).tolist()
        out = []
        for row in smat.tolist():
            x = [a - self.den * s for a, s in zip(self.lam, row)]
            y = []
            for a, b in self.blocks:
                y.extend(sorted(x[a:b], reverse=True))
            out.append(sum((u + v) ** 2 for u, v in zip(y, self.rho)) - self.base)
        return out


def scan(lam: Weight, bound: Optional[int] = None) -> DiracCertificate:
    """Walk Schmid modules in (level, coeffs) order and certify.

    Returns ``FirstStrictFailure(s)`` for the first module with a negative
    difference all of whose strictly-lower-level nonzero predecessors are
    positive; otherwise ``EqualityAt(s)`` for the first zero; otherwise
    ``AllStrictUpTo(bound)``.
    """
    require_k_dominant_integral(lam)
    if bound is None:
        bound = default_bound(lam.algebra)
    if bound < 1:
        raise ValueError("scan bound must be positive")
    modules, mat, starts = _schmid_table(lam.algebra, bound)
    kernel = _Kernel(lam)
    first_zero = None
    for level in range(1, bound + 1):
        lo, hi = starts[level], starts[level + 1]
        vals = kernel.values(mat[lo:hi])
        for k, v in enumerate(vals):
            if v < 0:
                return DiracCertificate(FIRST_STRICT_FAILURE, bound, modules[lo + k])
        if 0 in vals:
            first_zero = modules[lo + vals.index(0)]
            # every later failure has a zero below it, so none can qualify
            return DiracCertificate(EQUALITY_AT, bound, first_zero)
    return DiracCertificate(ALL_STRICT_UP_TO, bound)


def dirac_values(lam: Weight, bound: int) -> list[tuple[SchmidModule, Fraction]]:
    """All Dirac differences up to ``bound`` (zero module included), in scan order."""
    require_k_dominant_integral(lam)
    modules, mat, _ = _schmid_table(lam.algebra, bound)
    kernel = _Kernel(lam)
    scale = kernel.den**2
    return [(m, Fraction(v, scale)) for m, v in zip(modules, kernel.values(mat))]
