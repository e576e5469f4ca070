"""Closed-form unitarity classification of L(lambda).

Each family reduces to comparing one linear quantity Q(lambda) with a
descending list of critical values c_1 > c_2 > ... > c_k read off the shape
of lambda:

* above c_1                      -> non-unitary
* equal to c_i                   -> unitary, discrete point number i
* strictly between c_i, c_{i+1}  -> non-unitary gap i
* below c_k                      -> unitary, continuous part of the line
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .weights import (
    Family,
    Weight,
    beta,
    format_rational,
    inner,
    make_weight,
    require_k_dominant_integral,
    rho,
)


class Outcome(enum.Enum):
    NON_UNITARY_ABOVE_FIRST = "NonUnitaryAboveFirst"
    NON_UNITARY_GAP = "NonUnitaryGap"
    UNITARY_CONTINUOUS = "UnitaryContinuous"
    UNITARY_DISCRETE = "UnitaryDiscrete"

    @property
    def is_unitary(self) -> bool:
        return self in (Outcome.UNITARY_CONTINUOUS, Outcome.UNITARY_DISCRETE)


@dataclass(frozen=True)
class SpShape:
    q: int
    r: int

    def to_dict(self) -> dict:
        return {"q": self.q, "r": self.r}


@dataclass(frozen=True)
class SuShape:
    p_prime: int
    q_prime: int

    def to_dict(self) -> dict:
        return {"p_prime": self.p_prime, "q_prime": self.q_prime}


@dataclass(frozen=True)
class SoStarShape:
    # case 1: lambda_1 > lambda_2 and lambda_2 = ... = lambda_q
    # case 2: lambda_1 = ... = lambda_p
    case: int
    q: Optional[int] = None
    p: Optional[int] = None

    def to_dict(self) -> dict:
        if self.case == 1:
            return {"case": 1, "q": self.q}
        return {"case": 2, "p": self.p}


Shape = Union[SpShape, SuShape, SoStarShape]


def _run(coords, start: int, stop: int) -> int:
    # length of the run of values equal to coords[start] inside [start, stop)
    k = start
    while k < stop and coords[k] == coords[start]:
        k += 1
    return k - start


def shape(lam: Weight) -> Shape:
    require_k_dominant_integral(lam)
    c = lam.coords
    alg = lam.algebra
    n = alg.n
    if alg.family is Family.SP:
        q = _run(c, 0, n)
        r = q
        while r < n and c[r] == c[0] - 1:
            r += 1
        return SpShape(q, r)
    if alg.family is Family.SU:
        p_prime = _run(c, 0, alg.p)
        q_prime = 1
        while q_prime < alg.q and c[n - 1 - q_prime] == c[n - 1]:
            q_prime += 1
        return SuShape(p_prime, q_prime)
    if c[0] > c[1]:
        return SoStarShape(1, q=1 + _run(c, 1, n))
    return SoStarShape(2, p=_run(c, 0, n))


def comparison_quantity(lam: Weight, sh: Optional[Shape] = None) -> Fraction:
    sh = shape(lam) if sh is None else sh
    c = lam.coords
    if isinstance(sh, SuShape):
        return c[0] - c[-1]
    if isinstance(sh, SoStarShape) and sh.case == 1:
        return c[0] + c[1]
    return c[0]


def critical_values(algebra, sh: Shape) -> list[Fraction]:
    """Discrete thresholds for Q, in strictly decreasing order."""
    n = algebra.n
    if isinstance(sh, SpShape):
        return [Fraction(-2 * n + sh.q + sh.r - l + 1, 2) for l in range(1, sh.q + 1)]
    if isinstance(sh, SuShape):
        pq = sh.p_prime + sh.q_prime
        return [Fraction(-n + pq - i + 1) for i in range(1, min(sh.p_prime, sh.q_prime) + 1)]
    if sh.case == 1:
        return [Fraction(-2 * n + sh.q + 2)]
    return [Fraction(-n + sh.p - i + 1) for i in range(1, sh.p // 2 + 1)]


def zeta(algebra) -> Weight:
    n = algebra.n
    if algebra.family is Family.SP:
        return make_weight(algebra, [1] * n)
    if algebra.family is Family.SU:
        return make_weight(algebra, [1] * algebra.p + [0] * algebra.q)
    return make_weight(algebra, [Fraction(1, 2)] * n)


@dataclass(frozen=True)
class LinePosition:
    """lambda = lambda0 + z * zeta, with <lambda0 + rho, beta> = 0."""

    zeta: Weight
    lambda0: Weight
    z: Fraction
    a: Fraction

    def to_dict(self) -> dict:
        return {
            "zeta": self.zeta.to_json(),
            "lambda0": self.lambda0.to_json(),
            "z": format_rational(self.z),
            "a": format_rational(self.a),
        }


def line_position(lam: Weight) -> LinePosition:
    require_k_dominant_integral(lam)
    alg = lam.algebra
    zt = zeta(alg)
    b = beta(alg)
    z = inner(lam + rho(alg), b) / inner(zt, b)
    sh = shape(lam)
    # Q is linear and constant on the shape along the line
    a = z + (critical_values(alg, sh)[0] - comparison_quantity(lam, sh)) / comparison_quantity(zt, sh)
    return LinePosition(zt, lam - zt.scale(z), z, a)


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    shape: Shape
    critical_values: tuple[Fraction, ...]
    line: LinePosition
    index: Optional[int] = None
    quantity: Fraction = field(default=Fraction(0))

    @property
    def is_unitary(self) -> bool:
        return self.outcome.is_unitary

    def label(self) -> str:
        """One-line human summary, e.g. ``UnitaryDiscrete i=2``."""
        if self.outcome is Outcome.UNITARY_DISCRETE:
            sym = "ℓ" if isinstance(self.shape, SpShape) else "i"
            text = f"{self.outcome.value} {sym}={self.index}"
            return text + " (first reduction)" if self.index == 1 else text
        if self.outcome is Outcome.NON_UNITARY_GAP:
            return f"{self.outcome.value} i={self.index}"
        return self.outcome.value

    def to_dict(self) -> dict:
        d = {"outcome": self.outcome.value}
        if self.index is not None:
            d["index"] = self.index
        d["shape"] = self.shape.to_dict()
        d["critical_values"] = [format_rational(v) for v in self.critical_values]
        d["line"] = {"z": format_rational(self.line.z), "a": format_rational(self.line.a)}
        return d


def classify(lam: Weight) -> Verdict:
    require_k_dominant_integral(lam)
    sh = shape(lam)
    crit = critical_values(lam.algebra, sh)
    qv = comparison_quantity(lam, sh)
    line = line_position(lam)
    index = None
    if qv > crit[0]:
        outcome = Outcome.NON_UNITARY_ABOVE_FIRST
    elif qv < crit[-1]:
        outcome = Outcome.UNITARY_CONTINUOUS
    else:
        for i, c in enumerate(crit, start=1):
            if qv == c:
                outcome, index = Outcome.UNITARY_DISCRETE, i
                break
            if qv > crit[i]:
                outcome, index = Outcome.NON_UNITARY_GAP, i
                break
    return Verdict(outcome, sh, tuple(crit), line, index, qv)
