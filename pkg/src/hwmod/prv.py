"""PRV products, basic representations and construction recipes for discrete points."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .classify import Outcome, SoStarShape, SpShape, classify, shape
from .errors import (
    AlgebraMismatch,
    EmptyChain,
    NotConstructible,
    NotKDominant,
    ParamOutOfRange,
)
from .weights import (
    Algebra,
    Family,
    Weight,
    format_rational,
    is_k_dominant,
    k_dominant,
    lowest_weight,
    make_weight,
    zero,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BasicRep:
    """A building block: a Weil half (sp only) or a basic representation L_k."""

    algebra: Algebra
    kind: str  # "W+", "W-" or "L"
    k: int = 0

    def __post_init__(self):
        fam = self.algebra.family
        if self.kind in ("W+", "W-"):
            if fam is not Family.SP:
                raise ParamOutOfRange("Weil halves exist only for sp(2n,R)")
        elif self.kind == "L":
            if fam is Family.SP and self.k > -2:
                raise ParamOutOfRange(f"sp basic representations are L[-k] with k >= 2, got {self.k}")
            if fam is Family.SOSTAR and self.k < 0:
                raise ParamOutOfRange(f"so* basic representations need k >= 0, got {self.k}")
        else:
            raise ParamOutOfRange(f"unknown basic representation kind {self.kind!r}")

    @property
    def label(self) -> str:
        if self.kind != "L":
            return self.kind
        return "L0" if self.k == 0 else f"L[{self.k}]"

    @property
    def weight(self) -> Weight:
        alg, n, k = self.algebra, self.algebra.n, self.k
        if self.kind == "W+":
            return make_weight(alg, [-HALF] * n)
        if self.kind == "W-":
            return make_weight(alg, [-HALF] * (n - 1) + [Fraction(-3, 2)])
        if alg.family is Family.SP:
            return make_weight(alg, [-1] * (n - 1) + [k])
        if alg.family is Family.SOSTAR:
            return make_weight(alg, [-1] * (n - 1) + [-1 - k])
        p, q = alg.p, alg.q
        if k >= 0:
            return make_weight(alg, [-1] * (p - 1) + [-1 - k] + [0] * q)
        return make_weight(alg, [-1] * p + [-k] + [0] * (q - 1))

    def __str__(self) -> str:
        return self.label


def weil_plus(algebra: Algebra) -> BasicRep:
    return BasicRep(algebra, "W+")


def weil_minus(algebra: Algebra) -> BasicRep:
    return BasicRep(algebra, "W-")


def basic(algebra: Algebra, k: int) -> BasicRep:
    return BasicRep(algebra, "L", int(k))


def prv_component(mu: Weight, nu: Weight) -> Weight:
    """Highest weight (mu + nu^-)^+ of the PRV component of F_mu (x) F_nu."""
    if mu.algebra != nu.algebra:
        raise AlgebraMismatch(f"{mu.algebra} vs {nu.algebra}")
    if not is_k_dominant(mu):
        raise NotKDominant(f"{mu} is not k-dominant")
    return k_dominant(mu + lowest_weight(nu))


def prv_product_chain(factors: Sequence[Weight]) -> Weight:
    """Right-associated PRV product f_1 . (f_2 . ( ... . f_k))."""
    if not factors:
        raise EmptyChain("PRV product of an empty chain")
    acc = factors[-1]
    for w in reversed(factors[:-1]):
        acc = prv_component(w, acc)
    return acc


# closed forms ---------------------------------------------------------------

WEIL_MINUS_POWER = "weil_minus_power"
SP_CHAIN = "sp_chain"
SU_CHAIN = "su_chain"
SOSTAR_CHAIN = "sostar_chain"


def _check_family(algebra: Algebra, fam: Family, kind: str):
    if algebra.family is not fam:
        raise AlgebraMismatch(f"{kind} is defined for {fam.value}, not {algebra}")


def _nonincreasing(seq, low: int, name: str):
    if any(x < low for x in seq):
        raise ParamOutOfRange(f"{name} entries must be >= {low}")
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
        raise ParamOutOfRange(f"{name} must be nonincreasing")


def closed_form_factors(algebra: Algebra, kind: str, params) -> list[BasicRep]:
    """The factor list whose right-folded PRV product the closed form describes."""
    n = algebra.n
    if kind == WEIL_MINUS_POWER:
        _check_family(algebra, Family.SP, kind)
        s = int(params)
        if not 1 <= s <= n:
            raise ParamOutOfRange(f"s={s} outside 1..{n}")
        return [weil_minus(algebra)] * s
    if kind == SP_CHAIN:
        _check_family(algebra, Family.SP, kind)
        a = list(params)
        if not 1 <= len(a) <= n:
            raise ParamOutOfRange(f"need 1..{n} parameters")
        _nonincreasing(a, 0, "a")
        return [basic(algebra, -3 - x) for x in reversed(a)]
    if kind == SU_CHAIN:
        _check_family(algebra, Family.SU, kind)
        a, b = (list(x) for x in params)
        if len(a) > algebra.p or len(b) > algebra.q or not (a or b):
            raise ParamOutOfRange("need 0..p a's, 0..q b's, not both empty")
        _nonincreasing(a, 1, "a")
        _nonincreasing(b, 1, "b")
        return [basic(algebra, x) for x in reversed(a)] + [basic(algebra, -y) for y in reversed(b)]
    if kind == SOSTAR_CHAIN:
        _check_family(algebra, Family.SOSTAR, kind)
        a = list(params)
        if not 1 <= len(a) <= n:
            raise ParamOutOfRange(f"need 1..{n} parameters")
        _nonincreasing(a, 1, "a")
        return [basic(algebra, x) for x in reversed(a)]
    raise ParamOutOfRange(f"unknown closed form {kind!r}")


def closed_forms(algebra: Algebra, kind: str, params) -> Weight:
    """Highest weight of a standard PRV product, from its closed formula.

    ``kind`` is one of ``weil_minus_power`` (params: s), ``sp_chain``
    (a_1 >= ... >= a_j >= 0), ``su_chain`` ((a's, b's), all >= 1, each
    nonincreasing) or ``sostar_chain`` (a_1 >= ... >= a_j >= 1).
    """
    closed_form_factors(algebra, kind, params)  # validates
    n = algebra.n
    if kind == WEIL_MINUS_POWER:
        s = int(params)
        return make_weight(algebra, [Fraction(-s, 2)] * (n - s) + [Fraction(-s, 2) - 1] * s)
    if kind == SP_CHAIN:
        a = list(params)
        j = len(a)
        return make_weight(algebra, [-j] * (n - j) + [-j - 2 - x for x in reversed(a)])
    if kind == SU_CHAIN:
        a, b = (list(x) for x in params)
        r, s = len(a), len(b)
        p, q = algebra.p, algebra.q
        first = [-r - s] * (p - r) + [-r - s - x for x in reversed(a)]
        return make_weight(algebra, first + b + [0] * (q - s))
    a = list(params)
    j = len(a)
    return make_weight(algebra, [-j] * (n - j) + [-j - x for x in reversed(a)])


# recipes --------------------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    factors: tuple[BasicRep, ...]

    def evaluate(self) -> Weight:
        return prv_product_chain([f.weight for f in self.factors])

    def expression(self) -> str:
        labels = [f.label for f in self.factors]
        out = labels[-1]
        for lab in reversed(labels[:-1]):
            out = f"{lab} . ({out})" if " . " in out else f"{lab} . {out}"
        return out


@dataclass(frozen=True)
class Power:
    factor: BasicRep
    exponent: int

    @property
    def factors(self) -> tuple[BasicRep, ...]:
        return (self.factor,) * self.exponent

    def evaluate(self) -> Weight:
        return prv_product_chain([self.factor.weight] * self.exponent)

    def expression(self) -> str:
        return f"{self.factor.label}^{self.exponent}"


Block = Union[Chain, Power]


@dataclass(frozen=True)
class Recipe:
    """A PRV-product construction of L(target) from basic representations.

    Blocks are evaluated on their own (chains right-associated, powers by
    repetition) and then combined left to right.  Empty blocks are dropped;
    the empty recipe stands for the trivial module.
    """

    algebra: Algebra
    blocks: tuple[Block, ...]
    target: Weight
    continuous_region: bool = False

    def __post_init__(self):
        got = self.evaluate()
        if got != self.target:
            raise NotConstructible(f"recipe evaluates to {got}, not {self.target}")

    @property
    def factors(self) -> list[BasicRep]:
        return [f for b in self.blocks for f in b.factors]

    def evaluate(self) -> Weight:
        if not self.blocks:
            return zero(self.algebra)
        acc = self.blocks[0].evaluate()
        for b in self.blocks[1:]:
            acc = prv_component(acc, b.evaluate())
        return acc

    def expression(self) -> str:
        if not self.blocks:
            return "1"
        parts = [b.expression() for b in self.blocks]
        out = parts[0]
        for part in parts[1:]:
            left = f"({out})" if " . " in out else out
            right = f"({part})" if " . " in part else part
            out = f"{left} . {right}"
        return out

    def to_dict(self) -> dict:
        return {
            "expression": self.expression(),
            "factors": [f.label for f in self.factors],
            "target": self.target.to_json(),
            "continuous_region": self.continuous_region,
        }


def _blocks(*items) -> tuple[Block, ...]:
    out = []
    for b in items:
        if isinstance(b, Chain) and b.factors:
            out.append(b)
        elif isinstance(b, Power) and b.exponent > 0:
            out.append(b)
    return tuple(out)


def discrete_recipe(lam: Weight) -> Recipe:
    """Construction of L(lam) as a PRV product of basic representations.

    Raises
    ------
    NotConstructible
        When no construction of the required shape exists (so*(2n) with
        lambda_1 > lambda_2, non-discrete su/so* points, and sp weights whose
        index l is not a positive integer).
    """
    alg = lam.algebra
    c = lam.coords
    n = alg.n
    sh = shape(lam)
    if alg.family is Family.SP:
        assert isinstance(sh, SpShape)
        ell = sh.q + sh.r + 1 - 2 * (c[0] + n)
        if ell.denominator != 1 or ell < 1:
            raise NotConstructible(f"{lam}: l = {format_rational(ell)} is not a positive integer")
        ell = int(ell)
        a = [c[0] - 2 - c[n - k] for k in range(1, n - sh.r + 1)]
        blocks = _blocks(
            Chain(tuple(basic(alg, -3 - x) for x in reversed(a))),
            Power(weil_minus(alg), sh.r - sh.q),
            Power(weil_plus(alg), ell - 1),
        )
        return Recipe(alg, blocks, lam, continuous_region=ell > sh.q)
    verdict = classify(lam)
    if alg.family is Family.SOSTAR and isinstance(sh, SoStarShape) and sh.case == 1:
        raise NotConstructible(f"{lam}: no PRV construction for lambda_1 > lambda_2 on so*(2n)")
    if verdict.outcome is not Outcome.UNITARY_DISCRETE:
        raise NotConstructible(f"{lam}: {verdict.label()} is not a discrete unitary point")
    i = verdict.index
    if alg.family is Family.SU:
        p = alg.p
        a = [c[0] - c[p - k] for k in range(1, p - sh.p_prime + 1)]
        b = [c[p + j - 1] - c[n - 1] for j in range(1, alg.q - sh.q_prime + 1)]
        chain = [basic(alg, int(x)) for x in reversed(a)] + [basic(alg, -int(y)) for y in reversed(b)]
    else:
        a = [c[0] - c[n - k] for k in range(1, n - sh.p + 1)]
        chain = [basic(alg, int(x)) for x in reversed(a)]
    blocks = _blocks(Chain(tuple(chain)), Power(basic(alg, 0), i - 1))
    return Recipe(alg, blocks, lam)


def weil_coefficient_identity(m: int) -> bool:
    """Cancellation of the coefficients of d^2 applied to the Weil singular vector."""
    if m < 1:
        raise ValueError("m must be positive")
    return all(
        math.comb(m, 2 * j) * (m - 2 * j) * (m - 2 * j - 1)
        == math.comb(m, 2 * j + 2) * (2 * j + 2) * (2 * j + 1)
        for j in range(m // 2)
    )
