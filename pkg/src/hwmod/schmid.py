"""K-types of S(p^-): basic Schmid modules, decomposition, bounded enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import IndexOutOfRange, NotSchmidShape
from .weights import Algebra, Family, Weight


def _expand(algebra: Algebra, coeffs: tuple[int, ...]) -> tuple[int, ...]:
    """Trace-zero integer coordinates of sum(a_i * s_i)."""
    m = algebra.schmid_rank
    # b_i = a_i + ... + a_m
    b = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        b[i] = b[i + 1] + coeffs[i]
    b = b[:m]
    n = algebra.n
    if algebra.family is Family.SP:
        return tuple(2 * x for x in b)
    if algebra.family is Family.SOSTAR:
        out = [0] * n
        for i, x in enumerate(b):
            out[2 * i] = out[2 * i + 1] = x
        return tuple(out)
    p, q = algebra.p, algebra.q
    first = b + [0] * (p - m)
    second = [0] * (q - m) + [-x for x in reversed(b)]
    return tuple(first + second)


@dataclass(frozen=True)
class SchmidModule:
    """A K-type of S(p^-), recorded by its coefficients on the basic modules."""

    algebra: Algebra
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coeffs)
        if len(coeffs) != self.algebra.schmid_rank:
            raise IndexOutOfRange(
                f"{self.algebra} has {self.algebra.schmid_rank} basic Schmid modules"
            )
        if any(a < 0 for a in coeffs):
            raise ValueError("Schmid coefficients must be nonnegative")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def coords(self) -> tuple[int, ...]:
        """The weight s in the closed form (trace zero for su(p,q))."""
        return _expand(self.algebra, self.coeffs)

    @property
    def weight(self) -> Weight:
        return Weight(self.algebra, self.coords)

    @property
    def level(self) -> int:
        return sum(i * a for i, a in enumerate(self.coeffs, start=1))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        coords = self.coords
        if self.algebra.family is Family.SU:
            p = self.algebra.p
            s = ",".join(map(str, coords[:p])) + "|" + ",".join(map(str, coords[p:]))
        else:
            s = ",".join(map(str, coords))
        return f"level={self.level} coeffs=[{','.join(map(str, self.coeffs))}] s=({s})"


def basic_schmid(algebra: Algebra, i: int) -> SchmidModule:
    m = algebra.schmid_rank
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"basic Schmid index {i} outside 1..{m} for {algebra}")
    coeffs = [0] * m
    coeffs[i - 1] = 1
    return SchmidModule(algebra, tuple(coeffs))


def expand(algebra: Algebra, coeffs) -> Weight:
    return SchmidModule(algebra, tuple(coeffs)).weight


def decompose(algebra: Algebra, s: Weight) -> SchmidModule:
    """Recover the coefficients a_i with s = sum a_i s_i.

    Raises
    ------
    NotSchmidShape
        If ``s`` is not the weight of a Schmid module of ``algebra``.
    """
    coords = list(s.coords)
    if algebra.family is Family.SU:
        mean = sum(coords, Fraction(0)) / algebra.n
        coords = [c - mean for c in coords]
    if any(c.denominator != 1 for c in coords):
        raise NotSchmidShape(f"{s}: non-integral coordinates")
    coords = [int(c) for c in coords]
    m = algebra.schmid_rank
    if algebra.family is Family.SP:
        if any(c % 2 for c in coords):
            raise NotSchmidShape(f"{s}: odd coordinate")
        b = [c // 2 for c in coords]
    elif algebra.family is Family.SOSTAR:
        b = coords[0 : 2 * m : 2]
        if coords[1 : 2 * m : 2] != b:
            raise NotSchmidShape(f"{s}: coordinates not paired")
    else:
        b = coords[:m]
    if any(x < 0 for x in b) or any(b[i] < b[i + 1] for i in range(len(b) - 1)):
        raise NotSchmidShape(f"{s}: not a nonincreasing nonnegative sequence")
    coeffs = tuple(b[i] - (b[i + 1] if i + 1 < m else 0) for i in range(m))
    module = SchmidModule(algebra, coeffs)
    if list(module.coords) != coords:
        raise NotSchmidShape(f"{s}: does not match the Schmid pattern of {algebra}")
    return module


def _vectors_at_level_from(m: int, start: int, level: int) -> Iterator[tuple[int, ...]]:
    # coefficients for indices start..m with weighted sum == level, lex descending
    if start > m:
        if level == 0:
            yield ()
        return
    for a in range(level // start, -1, -1):
        for rest in _vectors_at_level_from(m, start + 1, level - start * a):
            yield (a,) + rest


@lru_cache(maxsize=64)
def _enumerate(algebra: Algebra, bound: int) -> tuple[SchmidModule, ...]:
    m = algebra.schmid_rank
    out = []
    for level in range(bound + 1):
        out.extend(SchmidModule(algebra, v) for v in _vectors_at_level_from(m, 1, level))
    return tuple(out)


def enumerate_up_to_level(algebra: Algebra, bound: int) -> list[SchmidModule]:
    """Every Schmid module of level <= bound, ordered by (level, coeffs descending)."""
    if bound < 0:
        raise ValueError("level bound must be nonnegative")
    return list(_enumerate(algebra, bound))
