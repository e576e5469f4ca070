"""Exact weight arithmetic for the Hermitian pairs sp(2n,R), su(p,q), so*(2n).

Weights are tuples of :class:`fractions.Fraction` in the standard
coordinates.  For su(p,q) the coordinates are taken modulo constant vectors;
the stored representative always has last coordinate zero and the inner
product is the one induced on the trace-zero hyperplane, so every quantity
exported from here is independent of the representative.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import AlgebraMismatch, LengthMismatch, NotKDominant, ParseError


class Family(enum.Enum):
    SP = "sp"
    SU = "su"
    SOSTAR = "so*"


@dataclass(frozen=True)
class Algebra:
    """A Hermitian pair, identified by its family and rank data.

    For ``SU`` the split ``n = p + q`` is recorded in ``p``; ``q`` is derived.
    """

    family: Family
    n: int
    p: int = 0

    def __post_init__(self):
        if self.family is Family.SP and self.n < 1:
            raise ValueError("sp(2n,R) needs n >= 1")
        if self.family is Family.SOSTAR and self.n < 2:
            raise ValueError("so*(2n) needs n >= 2")
        if self.family is Family.SU and not (1 <= self.p < self.n):
            raise ValueError("su(p,q) needs p >= 1 and q >= 1")
        if self.family is not Family.SU and self.p:
            raise ValueError("p is only meaningful for su(p,q)")

    @classmethod
    def sp(cls, n: int) -> "Algebra":
        return cls(Family.SP, n)

    @classmethod
    def su(cls, p: int, q: int) -> "Algebra":
        return cls(Family.SU, p + q, p)

    @classmethod
    def sostar(cls, n: int) -> "Algebra":
        return cls(Family.SOSTAR, n)

    @classmethod
    def parse(cls, text: str) -> "Algebra":
        """Parse ``sp:n``, ``su:p,q`` or ``so*:n``."""
        head, sep, tail = text.strip().partition(":")
        try:
            if not sep:
                raise ValueError
            head = head.lower()
            if head == "sp":
                return cls.sp(int(tail))
            if head == "su":
                p, q = (int(t) for t in tail.split(","))
                return cls.su(p, q)
            if head in ("so*", "sostar"):
                return cls.sostar(int(tail))
        except ValueError as exc:
            raise ParseError(f"bad algebra spec {text!r}: {exc}") from None
        raise ParseError(f"unknown algebra family in {text!r}")

    @property
    def q(self) -> int:
        return self.n - self.p if self.family is Family.SU else 0

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Index ranges permuted by the compact Weyl group."""
        if self.family is Family.SU:
            return ((0, self.p), (self.p, self.n))
        return ((0, self.n),)

    @property
    def schmid_rank(self) -> int:
        """Number of basic Schmid modules."""
        if self.family is Family.SP:
            return self.n
        if self.family is Family.SU:
            return min(self.p, self.q)
        return self.n // 2

    def __str__(self) -> str:
        if self.family is Family.SU:
            return f"su:{self.p},{self.q}"
        return f"{self.family.value}:{self.n}"


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coordinates are not accepted")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip().replace("−", "-")
    try:
        num, sep, den = text.partition("/")
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational: {text!r}") from None


@dataclass(frozen=True)
class Weight:
    """An exact weight of a fixed algebra."""

    algebra: Algebra
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(_frac(c) for c in self.coords)
        if len(coords) != self.algebra.n:
            raise LengthMismatch(
                f"{self.algebra} weights have {self.algebra.n} coordinates, got {len(coords)}"
            )
        if self.algebra.family is Family.SU and coords[-1]:
            shift = coords[-1]
            coords = tuple(c - shift for c in coords)
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Weight"):
        if not isinstance(other, Weight):
            return NotImplemented
        if other.algebra != self.algebra:
            raise AlgebraMismatch(f"{self.algebra} vs {other.algebra}")
        return None

    def __add__(self, other: "Weight") -> "Weight":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Weight(self.algebra, tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "Weight") -> "Weight":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Weight(self.algebra, tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "Weight":
        return Weight(self.algebra, tuple(-a for a in self))

    def scale(self, c) -> "Weight":
        c = _frac(c)
        return Weight(self.algebra, tuple(c * a for a in self))

    def shift(self, c) -> "Weight":
        """Add ``c`` to every coordinate (a no-op on su(p,q) classes)."""
        c = _frac(c)
        return Weight(self.algebra, tuple(a + c for a in self))

    def blocks(self) -> list[tuple[Fraction, ...]]:
        return [self.coords[a:b] for a, b in self.algebra.blocks]

    def __str__(self) -> str:
        return "|".join(",".join(format_rational(c) for c in blk) for blk in self.blocks())

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coords]


def make_weight(algebra: Algebra, coords: Iterable) -> Weight:
    return Weight(algebra, tuple(coords))


def parse_weight(algebra: Algebra, text: str) -> Weight:
    """Parse ``"-1,-1|0,0"`` or ``"-1/4,-1/4"``; the ``|`` separator is optional."""
    parts = [t for t in text.replace("|", ",").split(",") if t.strip()]
    return make_weight(algebra, (parse_rational(t) for t in parts))


def zero(algebra: Algebra) -> Weight:
    return Weight(algebra, (0,) * algebra.n)


class RhoTriple(NamedTuple):
    rho: Weight
    rho_k: Weight
    rho_n: Weight


def _half_sum_block(length: int) -> list[Fraction]:
    # half-sum of e_i - e_j (i<j) on a block of this length
    return [Fraction(length + 1, 2) - i for i in range(1, length + 1)]


def rho_parts(algebra: Algebra) -> RhoTriple:
    n = algebra.n
    if algebra.family is Family.SP:
        rho = list(range(n, 0, -1))
        rho_k = _half_sum_block(n)
    elif algebra.family is Family.SOSTAR:
        rho = list(range(n - 1, -1, -1))
        rho_k = _half_sum_block(n)
    else:
        rho = _half_sum_block(n)
        rho_k = _half_sum_block(algebra.p) + _half_sum_block(algebra.q)
    rho_n = [a - b for a, b in zip(rho, rho_k)]
    return RhoTriple(
        make_weight(algebra, rho), make_weight(algebra, rho_k), make_weight(algebra, rho_n)
    )


def rho(algebra: Algebra) -> Weight:
    return rho_parts(algebra).rho


def beta(algebra: Algebra) -> Weight:
    """Highest noncompact root."""
    c = [0] * algebra.n
    if algebra.family is Family.SP:
        c[0] = 2
    elif algebra.family is Family.SU:
        c[0], c[-1] = 1, -1
    else:
        c[0] = c[1] = 1
    return make_weight(algebra, c)


def k_dominant(w: Weight) -> Weight:
    """The dominant W_k-conjugate: each block sorted weakly decreasing."""
    out: list[Fraction] = []
    for blk in w.blocks():
        out.extend(sorted(blk, reverse=True))
    return Weight(w.algebra, tuple(out))


def is_k_dominant(w: Weight) -> bool:
    return all(
        all(blk[i] >= blk[i + 1] for i in range(len(blk) - 1)) for blk in w.blocks()
    )


def lowest_weight(w: Weight) -> Weight:
    """Image of a k-dominant weight under the longest element of W_k."""
    if not is_k_dominant(w):
        raise NotKDominant(f"{w} is not k-dominant")
    out: list[Fraction] = []
    for blk in w.blocks():
        out.extend(reversed(blk))
    return Weight(w.algebra, tuple(out))


def is_k_dominant_integral(w: Weight) -> tuple[bool, str]:
    for b, blk in enumerate(w.blocks()):
        for i in range(len(blk) - 1):
            if blk[i] < blk[i + 1]:
                return False, f"coordinates {blk[i]} < {blk[i + 1]} increase in block {b + 1}"
        for c in blk[1:]:
            if (blk[0] - c).denominator != 1:
                return False, f"non-integer difference {format_rational(blk[0] - c)} in block {b + 1}"
    return True, ""


def require_k_dominant_integral(w: Weight) -> None:
    ok, reason = is_k_dominant_integral(w)
    if not ok:
        raise NotKDominant(f"{w}: {reason}")


def inner(u: Weight, v: Weight) -> Fraction:
    if u.algebra != v.algebra:
        raise AlgebraMismatch(f"{u.algebra} vs {v.algebra}")
    s = sum((a * b for a, b in zip(u, v)), Fraction(0))
    if u.algebra.family is Family.SU:
        # inner product on the trace-zero hyperplane
        s -= sum(u.coords) * sum(v.coords) / u.algebra.n
    return s


def norm_sq(w: Weight) -> Fraction:
    return inner(w, w)


def block_permutations(algebra: Algebra) -> Iterator[tuple[int, ...]]:
    """All elements of W_k as index permutations (small ranks only)."""
    per_block = [itertools.permutations(range(a, b)) for a, b in algebra.blocks]
    for combo in itertools.product(*per_block):
        yield tuple(i for part in combo for i in part)


def permute(w: Weight, perm: Sequence[int]) -> Weight:
    return Weight(w.algebra, tuple(w.coords[i] for i in perm))
