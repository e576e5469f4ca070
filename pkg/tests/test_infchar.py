import itertools
import random
from fractions import Fraction as F

import pytest

import oracles
from hwmod.classify import classify
from hwmod.errors import MixedParity, NotHookBuildable, NotRegularForK, NotRhoCharacter, RankTooLarge
from hwmod.infchar import (
    Cone,
    DominantParam,
    Parameter,
    Parity,
    YoungDiagram,
    compute_x,
    dominant_of,
    edge_points,
    enumerate_parameters,
    enumerate_unitary,
    hasse_rho,
    is_hook_buildable,
    is_unitary_parameter,
    parameter_of,
    unitary_cones,
    young_of,
)

h = F(1, 2)


def P(*c):
    return Parameter(tuple(F(x) for x in c))


def D(*c):
    return DominantParam(tuple(F(x) for x in c))


def random_dominant(rng, n, parity):
    """A valid Lambda^dom: values repeat at most twice, zero at most once."""
    off = F(0) if parity is Parity.INTEGER else h
    vals = []
    while len(vals) < n:
        v = rng.randint(0, n + 3) + off
        c = vals.count(v)
        if (v == 0 and c) or c >= 2:
            continue
        vals.append(v)
        if len(vals) < n and v != 0 and rng.random() < 0.35 and vals.count(v) < 2:
            vals.append(v)
    return DominantParam(tuple(sorted(vals, reverse=True)))


def test_dominant_of_examples():
    assert dominant_of(P(2, 1, -3)) == D(3, 2, 1)
    assert dominant_of(P(4, 2, 1, 0, -1, -2, -3, -4, -5, -7)) == D(7, 5, 4, 4, 3, 2, 2, 1, 1, 0)
    assert dominant_of([-1, -2, -3]) == DominantParam.rho(3)


def test_validation():
    with pytest.raises(MixedParity):
        dominant_of([h, -1])
    with pytest.raises(MixedParity):
        D(F(1, 3))
    with pytest.raises(NotRegularForK):
        P(1, 1, 0)
    with pytest.raises(NotRegularForK):
        D(2, 2, 2)
    with pytest.raises(NotRegularForK):
        D(1, 0, 0)
    assert DominantParam.parse("rho:3") == D(3, 2, 1)
    assert DominantParam.parse("0,1,1") == D(1, 1, 0)
    assert D(h, h).parity is Parity.HALF_INTEGER and D(1).parity is Parity.INTEGER
    assert str(P(h, -1 - h)) == "(1/2,-3/2)"


def test_enumerate_parameters_examples():
    got = enumerate_parameters(DominantParam.rho(3))
    assert got == [P(3, 2, 1), P(3, 2, -1), P(3, 1, -2), P(3, -1, -2),
                   P(2, 1, -3), P(2, -1, -3), P(1, -2, -3), P(-1, -2, -3)]
    assert P(4, 3, 2, 1, 0, -1, -2, -4, -5, -7) in enumerate_parameters(D(7, 5, 4, 4, 3, 2, 2, 1, 1, 0))
    assert enumerate_parameters(D(1)) == [P(1), P(-1)]


def test_enumerate_parameters_brute_force():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(1, 6)
        dom = random_dominant(rng, n, rng.choice(list(Parity)))
        brute = set()
        for signs in itertools.product((1, -1), repeat=n):
            vals = sorted((s * c for s, c in zip(signs, dom.coords)), reverse=True)
            if all(a > b for a, b in zip(vals, vals[1:])):
                brute.add(tuple(vals))
        got = enumerate_parameters(dom)
        assert {p.coords for p in got} == brute
        assert [p.coords for p in got] == sorted(brute, reverse=True)


def test_is_unitary_examples():
    assert is_unitary_parameter(P(2, 1, -3))
    assert not is_unitary_parameter(P(3, 1, -2))
    d = is_unitary_parameter(P(-1, -2, -3))
    assert d.unitary and bool(d)
    assert P(3, 1, -2).qr() == (1, 2)


def test_compute_x():
    assert compute_x(D(7, 5, 4, 4, 3, 2, 2, 1, 1, 0)) is not None
    assert compute_x(DominantParam.rho(3)) is None


def test_enumerate_unitary_rho():
    assert set(enumerate_unitary(DominantParam.rho(3))) == {P(-1, -2, -3), P(1, -2, -3), P(2, 1, -3), P(3, 2, 1)}


@pytest.mark.parametrize("parity", list(Parity))
def test_three_way_agreement(parity):
    rng = random.Random(31 if parity is Parity.INTEGER else 37)
    cases = set()
    for _ in range(150):
        dom = random_dominant(rng, rng.randint(1, 8), parity)
        params = enumerate_parameters(dom)
        filtered = [p for p in params if is_unitary_parameter(p)]
        assert enumerate_unitary(dom) == filtered
        for p in params:
            d = is_unitary_parameter(p)
            cases.add(d.case)
            assert d.unitary == classify(p.highest_weight()).is_unitary
            if parity is Parity.INTEGER:
                # string description of the classification, from plain tuples
                assert d.unitary == oracles.sp_param_unitary(p.coords)
            if d.unitary and d.case == "1b":
                q, r = p.qr()
                assert r >= q + 2
        # at most one parameter with Lambda_1 <= 0, and it is unitary
        neg = [p for p in params if p.coords[0] <= 0]
        assert len(neg) <= 1
        assert all(is_unitary_parameter(p) for p in neg)
    assert len(cases) >= 3


def test_young_examples():
    assert young_of(3, P(3, 2, -1)).rows == (2, 0, 0)
    assert young_of(3, P(1, -2, -3)).rows == (4, 4, 2)
    y = young_of(3, P(3, 2, 1))
    assert y.rows == (0, 0, 0) and str(y) == "∅"
    assert str(YoungDiagram((4, 1, 1))) == "(4,1,1)"
    with pytest.raises(NotRhoCharacter):
        young_of(3, P(4, 2, 1))
    with pytest.raises(NotHookBuildable):
        parameter_of(3, (3, 0, 0))
    with pytest.raises(NotHookBuildable):
        parameter_of(3, (5, 1, 1, 1))
    with pytest.raises(NotHookBuildable):
        YoungDiagram((1, 2))


def test_young_roundtrip_and_hooks():
    for n in range(1, 9):
        params = enumerate_parameters(DominantParam.rho(n))
        assert len(params) == 2**n
        diagrams = set()
        for p in params:
            y = young_of(n, p)
            assert y.rows == oracles.young_from_param(p.coords)
            assert max(y.rows) <= n + 1 and is_hook_buildable(y.rows)
            assert parameter_of(n, y) == p
            diagrams.add(y.rows)
        if n <= 6:
            boxed = {r for r in oracles.all_partitions_in_box(n, n + 1) if is_hook_buildable(r)}
            assert boxed == diagrams


def test_edge_points():
    pts = edge_points(3)
    assert pts[2] == (P(2, 1, -3), YoungDiagram((4, 1, 1)))
    assert pts[3] == (P(3, 2, 1), YoungDiagram((0, 0, 0)))
    assert pts[0] == (P(-1, -2, -3), YoungDiagram((4, 4, 4)))
    for n in range(1, 9):
        unitary = enumerate_unitary(DominantParam.rho(n))
        edges = edge_points(n)
        assert set(unitary) == {p for p, _ in edges}
        for q, (p, y) in enumerate(edges):
            assert young_of(n, p) == y
            if q >= 1:
                qq, r = p.qr()
                assert p.coords[0] == F(qq + r, 2)


def test_hasse_small():
    h1 = hasse_rho(1)
    assert h1.nodes == (P(1), P(-1)) and h1.edges == ((P(-1), P(1)),)
    assert len(hasse_rho(2).nodes) == 4
    with pytest.raises(RankTooLarge):
        hasse_rho(9)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_hasse_matches_containment_covers(n):
    hs = hasse_rho(n)
    ys = {p: oracles.young_from_param(p.coords) for p in hs.nodes}

    def leq(a, b):
        return all(x <= y for x, y in zip(ys[a], ys[b]))

    assert set(hs.edges) == oracles.brute_covers(hs.nodes, leq)


def test_hasse_exports():
    hs = hasse_rho(3)
    dot = hs.to_dot()
    assert dot.startswith("digraph hasse {") and dot.rstrip().endswith("}")
    assert 'n0 [label="(3,2,1) ∅"];' in dot
    assert dot.count("->") == 8
    d = hs.to_dict()
    assert len(d["nodes"]) == 8 and len(d["edges"]) == 8
    assert d["nodes"][0] == {"parameter": ["3", "2", "1"], "young": [0, 0, 0]}


def test_cone_examples():
    c = unitary_cones(3, Parity.INTEGER)
    assert [(x.case, x.vertex, x.dimension) for x in c] == [
        ("2a", P(-1, -2, -3), 3), ("2c", P(1, -2, -3), 2),
        ("2c", P(2, 1, -3), 1), ("2c", P(3, 2, 1), 0),
    ]
    c = unitary_cones(2, Parity.HALF_INTEGER)
    assert {(x.case, x.vertex, x.dimension) for x in c} == {
        ("2a", P(-h, -3 * h), 2), ("2b", P(h, -3 * h), 1), ("2b", P(3 * h, h), 0), ("2d", P(3 * h, -h), 0),
    }
    c = unitary_cones(1, Parity.INTEGER)
    assert [(x.vertex, x.dimension) for x in c] == [(P(-1), 1), (P(1), 0)]


def test_cones_are_unitary():
    rng = random.Random(6)
    for n in range(1, 7):
        for parity in Parity:
            for cone in unitary_cones(n, parity):
                assert isinstance(cone, Cone)
                assert is_unitary_parameter(cone.vertex)
                for _ in range(15):
                    a = sorted((rng.randint(0, 5) for _ in range(cone.dimension)), reverse=True)
                    assert is_unitary_parameter(cone.point(a))
                d = cone.to_dict()
                assert d["dimension"] == cone.dimension and d["case"] == cone.case
    with pytest.raises(ValueError):
        unitary_cones(2, Parity.INTEGER)[0].point([0, 1])
