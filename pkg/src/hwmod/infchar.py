"""Highest weight modules of sp(2n,R) with a fixed regular-for-k infinitesimal character.

A parameter is Lambda = lambda + rho, a strictly decreasing sequence whose
absolute values, sorted, give the dominant representative Lambda^dom.
Only integral and half-integral characters are handled.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import networkx as nx

from .classify import SpShape, shape
from .errors import (
    MixedParity,
    NotHookBuildable,
    NotRegularForK,
    NotRhoCharacter,
    ParseError,
    RankTooLarge,
)
from .weights import Algebra, Weight, format_rational, make_weight, parse_rational, rho

HALF = Fraction(1, 2)
MAX_HASSE_RANK = 8


class Parity(enum.Enum):
    INTEGER = "int"
    HALF_INTEGER = "half"


def _parity_of(values) -> Parity:
    dens = {v.denominator for v in values}
    if not dens <= {1, 2}:
        raise MixedParity("coordinates must be integers or half-integers")
    if len(dens) > 1:
        raise MixedParity("coordinates mix integers and half-integers")
    return Parity.HALF_INTEGER if dens == {2} else Parity.INTEGER


def _fmt(coords) -> str:
    return "(" + ",".join(format_rational(c) for c in coords) + ")"


@dataclass(frozen=True)
class DominantParam:
    """Lambda^dom: weakly decreasing, nonnegative, uniform parity."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if not coords:
            raise ValueError("empty parameter")
        if any(c < 0 for c in coords) or list(coords) != sorted(coords, reverse=True):
            raise NotRegularForK(f"{_fmt(coords)} is not weakly decreasing and nonnegative")
        _parity_of(coords)
        counts = Counter(coords)
        if counts.get(Fraction(0), 0) > 1 or any(m > 2 for m in counts.values()):
            raise NotRegularForK(f"{_fmt(coords)}: a value repeats too often for a k-regular character")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def rho(cls, n: int) -> "DominantParam":
        return cls(tuple(Fraction(k) for k in range(n, 0, -1)))

    @classmethod
    def parse(cls, text: str) -> "DominantParam":
        """``rho:n`` or a comma separated list, e.g. ``7,5,4,4,3,2,2,1,1,0``."""
        text = text.strip()
        if text.startswith("rho:"):
            try:
                return cls.rho(int(text[4:]))
            except ValueError:
                raise ParseError(f"bad rank in {text!r}") from None
        vals = sorted((parse_rational(t) for t in text.split(",") if t.strip()), reverse=True)
        return cls(tuple(vals))

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def parity(self) -> Parity:
        return _parity_of(self.coords)

    def __str__(self) -> str:
        return _fmt(self.coords)


@dataclass(frozen=True)
class Parameter:
    """A k-dominant k-regular parameter Lambda (strictly decreasing)."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if any(coords[i] <= coords[i + 1] for i in range(len(coords) - 1)):
            raise NotRegularForK(f"{_fmt(coords)} is not strictly decreasing")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def parse(cls, text: str) -> "Parameter":
        return cls(tuple(parse_rational(t) for t in text.split(",") if t.strip()))

    @property
    def n(self) -> int:
        return len(self.coords)

    def highest_weight(self) -> Weight:
        """lambda = Lambda - rho as an sp(2n,R) weight."""
        alg = Algebra.sp(self.n)
        return make_weight(alg, self.coords) - rho(alg)

    def qr(self) -> tuple[int, int]:
        sh = shape(self.highest_weight())
        assert isinstance(sh, SpShape)
        return sh.q, sh.r

    def __str__(self) -> str:
        return _fmt(self.coords)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coords]


def dominant_of(param: Parameter | Sequence) -> DominantParam:
    if not isinstance(param, Parameter):
        param = Parameter(tuple(Fraction(c) for c in param))
    _parity_of(param.coords)
    return DominantParam(tuple(sorted((abs(c) for c in param.coords), reverse=True)))


def _sorted_desc(params) -> list[Parameter]:
    return sorted(set(params), key=lambda p: p.coords, reverse=True)


def enumerate_parameters(dom: DominantParam) -> list[Parameter]:
    """Every parameter with dominant representative ``dom``, lexicographically descending."""
    forced: list[Fraction] = []
    choices: list[tuple[Fraction, Fraction]] = []
    for z, mult in Counter(dom.coords).items():
        if mult == 2:
            forced += [z, -z]
        elif z == 0:
            forced.append(z)
        else:
            choices.append((z, -z))
    out = [
        Parameter(tuple(sorted(forced + list(pick), reverse=True)))
        for pick in itertools.product(*choices)
    ]
    return _sorted_desc(out)


def compute_x(dom: DominantParam) -> Optional[Fraction]:
    """Largest x with 0,1,1,...,x,x (or 1/2,1/2,...,x,x) inside Lambda^dom, if any."""
    counts = Counter(dom.coords)
    if dom.parity is Parity.INTEGER:
        if counts[Fraction(0)] == 0:
            return None
        x = Fraction(0)
    else:
        if counts[HALF] < 2:
            return None
        x = HALF
    while counts[x + 1] == 2:
        x += 1
    return x


@dataclass(frozen=True)
class UnitaryDecision:
    unitary: bool
    case: str

    def __bool__(self) -> bool:
        return self.unitary


def is_unitary_parameter(param: Parameter) -> UnitaryDecision:
    """Decide unitarity of L(Lambda - rho) by locating the forced string x, ..., -x.

    Cases: ``1a`` string in the first run, ``1b`` in the second run, ``1c``
    later; ``2a``/``2b`` when no such x exists (r = q or r > q).
    """
    c = param.coords
    q, r = param.qr()
    x = compute_x(dominant_of(param))
    if x is None:
        if r == q:
            return UnitaryDecision(c[q - 1] <= 1, "2a")
        return UnitaryDecision(c[q - 1] <= Fraction(3, 2), "2b")
    pos = c.index(x)
    if pos < q:
        return UnitaryDecision(True, "1a")
    if pos < r:
        return UnitaryDecision(c[q] == x and c[r - 1] <= -x - 1, "1b")
    return UnitaryDecision(False, "1c")


def _build(dom: DominantParam, positive: set) -> Optional[Parameter]:
    # positive: values taken with + sign; repeated values always contribute both signs
    counts = Counter(dom.coords)
    out = []
    for z, mult in counts.items():
        if mult == 2:
            if z not in positive:
                return None
            out += [z, -z]
        elif z == 0 or z in positive:
            out.append(z)
        else:
            out.append(-z)
    return Parameter(tuple(sorted(out, reverse=True)))


def enumerate_unitary(dom: DominantParam) -> list[Parameter]:
    """The unitary parameters for ``dom``, built directly from the admissible shapes."""
    values = set(dom.coords)
    counts = Counter(dom.coords)
    n = dom.n
    found: list[Optional[Parameter]] = []
    x = compute_x(dom)
    if x is not None:
        u = 0
        while x + u + 1 in values:
            u += 1
        v = max([t for t in range(2, u + 1) if counts[x + t] == 2], default=0)
        if all(counts[z] == 1 for z in values if z > x + u):
            core = {z for z in values if z <= x}
            for t in range(v, u + 1):
                found.append(_build(dom, core | {x + k for k in range(1, t + 1)}))
            for t in range(max(v, 2), u + 1):
                found.append(_build(dom, core | {x + k for k in range(2, t + 1)}))
    elif dom.parity is Parity.INTEGER:
        found.append(_build(dom, set()))
        for q in range(1, n + 1):
            pos = {Fraction(k) for k in range(1, q + 1)}
            if pos <= values:
                found.append(_build(dom, pos))
    else:
        found.append(_build(dom, set()))
        for q in range(1, n + 1):
            pos = {Fraction(2 * k - 1, 2) for k in range(1, q + 1)}
            if pos <= values:
                found.append(_build(dom, pos))
            pos = {Fraction(2 * k + 1, 2) for k in range(1, q + 1)}
            if q <= n - 1 and pos <= values and HALF in values:
                found.append(_build(dom, pos))
    return _sorted_desc(p for p in found if p is not None)


# Young diagrams for the character rho ------------------------------------------


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(y) for y in self.rows)
        if any(y < 0 for y in rows) or list(rows) != sorted(rows, reverse=True):
            raise NotHookBuildable(f"{rows} is not a partition")
        object.__setattr__(self, "rows", rows)

    def contains(self, other: "YoungDiagram") -> bool:
        return len(self.rows) == len(other.rows) and all(a >= b for a, b in zip(self.rows, other.rows))

    @property
    def size(self) -> int:
        return sum(self.rows)

    def __str__(self) -> str:
        nz = [str(y) for y in self.rows if y]
        return "(" + ",".join(nz) + ")" if nz else "∅"


def is_hook_buildable(rows: Sequence[int]) -> bool:
    rows = [y for y in rows if y]
    while rows:
        if rows[0] != len(rows) + 1:
            return False
        rows = [y - 1 for y in rows[1:] if y > 1]
    return True


def young_of(n: int, param: Parameter) -> YoungDiagram:
    if param.n != n or dominant_of(param) != DominantParam.rho(n):
        raise NotRhoCharacter(f"{param} is not conjugate to rho for n={n}")
    diff = [n - i - c for i, c in enumerate(param.coords)]
    return YoungDiagram(tuple(int(d) for d in reversed(diff)))


def parameter_of(n: int, diagram: YoungDiagram | Sequence[int]) -> Parameter:
    rows = list(diagram.rows if isinstance(diagram, YoungDiagram) else diagram)
    if len(rows) > n:
        raise NotHookBuildable(f"more than {n} rows")
    rows += [0] * (n - len(rows))
    YoungDiagram(tuple(rows))
    if any(y > n + 1 for y in rows) or not is_hook_buildable(rows):
        raise NotHookBuildable(f"{tuple(rows)} is not built from hooks of size <= {n}")
    return Parameter(tuple(Fraction(n - i - y) for i, y in enumerate(reversed(rows))))


def edge_points(n: int) -> list[tuple[Parameter, YoungDiagram]]:
    """Lambda^q = (q,...,1,-q-1,...,-n) with its thick-hook diagram, q = 0..n."""
    out = []
    for q in range(n + 1):
        lam = Parameter(tuple(Fraction(k) for k in list(range(q, 0, -1)) + list(range(-q - 1, -n - 1, -1))))
        out.append((lam, YoungDiagram(tuple([n + 1] * (n - q) + [n - q] * q))))
    return out


@dataclass(frozen=True)
class Hasse:
    """Covering relation among the parameters of rho; edges point to the smaller diagram."""

    n: int
    nodes: tuple[Parameter, ...]
    edges: tuple[tuple[Parameter, Parameter], ...]

    def diagram(self, p: Parameter) -> YoungDiagram:
        return young_of(self.n, p)

    def to_dot(self) -> str:
        index = {p: i for i, p in enumerate(self.nodes)}
        lines = ["digraph hasse {"]
        for p, i in index.items():
            lines.append(f'  n{i} [label="{p} {self.diagram(p)}"];')
        for a, b in self.edges:
            lines.append(f"  n{index[a]} -> n{index[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "nodes": [{"parameter": p.to_json(), "young": list(self.diagram(p).rows)} for p in self.nodes],
            "edges": [[a.to_json(), b.to_json()] for a, b in self.edges],
        }


def hasse_rho(n: int) -> Hasse:
    if n > MAX_HASSE_RANK:
        raise RankTooLarge(f"Hasse diagram limited to n <= {MAX_HASSE_RANK}")
    nodes = enumerate_parameters(DominantParam.rho(n))
    ys = {p: young_of(n, p) for p in nodes}
    g = nx.DiGraph()
    g.add_nodes_from(range(len(nodes)))
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i != j and ys[a].contains(ys[b]):
                g.add_edge(i, j)
    red = nx.transitive_reduction(g)
    edges = tuple((nodes[i], nodes[j]) for i, j in sorted(red.edges()))
    return Hasse(n, tuple(nodes), edges)


# translation cones -------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    """vertex - (0,...,0, a_k, ..., a_1) for integers a_1 >= ... >= a_k >= 0, k = dimension."""

    case: str
    q: int
    vertex: Parameter
    dimension: int

    @property
    def generator_description(self) -> str:
        k = self.dimension
        if not k:
            return "single point"
        if k == 1:
            return "subtract a_1>=0 from the last coordinate"
        return f"subtract a_{k},...,a_1 from the last {k} coordinates, a_1>=...>=a_{k}>=0"

    def point(self, a: Sequence[int]) -> Parameter:
        a = list(a)
        if len(a) != self.dimension or any(x < 0 for x in a) or a != sorted(a, reverse=True):
            raise ValueError("cone coordinates must be nonincreasing, nonnegative, one per dimension")
        c = list(self.vertex.coords)
        n = len(c)
        for i, x in enumerate(a, start=1):
            c[n - i] -= x
        return Parameter(tuple(c))

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "q": self.q,
            "vertex": self.vertex.to_json(),
            "dimension": self.dimension,
            "generators": self.generator_description,
        }


def unitary_cones(n: int, parity: Parity) -> list[Cone]:
    """Translation cones of unitary parameters for regular characters of one parity."""
    def P(vals):
        return Parameter(tuple(Fraction(v) for v in vals))

    if parity is Parity.INTEGER:
        cones = [Cone("2a", 0, P(range(-1, -n - 1, -1)), n)]
        for q in range(1, n + 1):
            cones.append(Cone("2c", q, P(list(range(q, 0, -1)) + list(range(-q - 1, -n - 1, -1))), n - q))
        return cones
    h = [Fraction(2 * k + 1, 2) for k in range(n + 1)]  # h[k] = k + 1/2
    cones = [Cone("2a", 0, P([-h[k] for k in range(n)]), n)]
    for q in range(1, n + 1):
        cones.append(Cone("2b", q, P([h[k] for k in range(q - 1, -1, -1)] + [-h[k] for k in range(q, n)]), n - q))
        if q <= n - 1:
            head = [h[k] for k in range(q, 0, -1)] + [-h[0]]
            cones.append(Cone("2d", q, P(head + [-h[k] for k in range(q + 1, n)]), n - q - 1))
    return cones
