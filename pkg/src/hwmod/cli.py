"""Command line interface.

Weights go after ``--`` so that leading minus signs are not read as flags::

    hwmod classify sp:6 -- -3,-3,-4,-4,-6,-7
    hwmod scan sp:3 --level 6 -- -1/4,-1/4,-1/4
    hwmod infchar rho:3 --hasse --format dot

Exit codes: 0 unitary / success, 10 non-unitary, 11 no construction known,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .classify import classify
from .dirac import FIRST_STRICT_FAILURE, scan
from .errors import HwmodError, NotConstructible, RankTooLarge
from .infchar import (
    DominantParam,
    Parity,
    enumerate_parameters,
    enumerate_unitary,
    hasse_rho,
    is_unitary_parameter,
    unitary_cones,
)
from .prv import discrete_recipe, prv_product_chain
from .schmid import decompose, enumerate_up_to_level
from .weights import Algebra, format_rational, parse_weight

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NON_UNITARY = 10
EXIT_NOT_CONSTRUCTIBLE = 11

SUBCOMMANDS = ("classify", "scan", "schmid", "prv", "recipe", "infchar")
MODES = ("unitary", "all", "hasse", "cones")
DEFAULT_MAX_RANK = 10


@dataclass(frozen=True)
class CliRequest:
    subcommand: str
    target: str  # algebra spec, or the dominant parameter for infchar
    weights: tuple[str, ...] = ()
    format: str = "table"
    level: Optional[int] = None
    mode: str = "unitary"
    parity: Optional[str] = None

    def to_argv(self) -> list[str]:
        argv = [self.subcommand, self.target]
        if self.format != "table":
            argv += ["--format", self.format]
        if self.level is not None:
            argv += ["--level", str(self.level)]
        if self.subcommand == "infchar":
            if self.mode != "unitary":
                argv.append("--" + self.mode)
            if self.parity is not None:
                argv += ["--parity", self.parity]
        if self.weights:
            argv += ["--", *self.weights]
        return argv


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise HwmodError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hwmod", description="Unitarity of highest weight modules.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, level=False):
        p.add_argument("target", metavar="ALGEBRA", help="sp:n, su:p,q or so*:n; weights follow --")
        p.add_argument("--format", choices=("table", "json"), default="table")
        if level:
            p.add_argument("--level", type=int, default=None)

    common(sub.add_parser("classify", help="closed-form verdict"))
    common(sub.add_parser("scan", help="Dirac inequality scan over Schmid modules"), level=True)
    common(sub.add_parser("schmid", help="list Schmid modules or decompose a weight"), level=True)
    common(sub.add_parser("prv", help="right-folded PRV product of the given weights"))
    common(sub.add_parser("recipe", help="PRV construction of a discrete unitary point"))

    p = sub.add_parser("infchar", help="parameters with a fixed infinitesimal character (sp only)")
    p.add_argument("target", metavar="DOM", help="rho:n or the dominant parameter, e.g. 7,5,4,4,3,2,2,1,1,0")
    p.add_argument("--format", choices=("table", "json", "dot"), default="table")
    p.add_argument("--parity", choices=[x.value for x in Parity], default=None)
    group = p.add_mutually_exclusive_group()
    for mode in MODES:
        group.add_argument("--" + mode, dest="mode", action="store_const", const=mode)
    p.set_defaults(mode="unitary")
    return parser


def parse_request(argv: Sequence[str]) -> CliRequest:
    argv = list(argv)
    # argparse mixes up positionals around "--", so split by hand
    weights: list[str] = []
    if "--" in argv:
        cut = argv.index("--")
        argv, weights = argv[:cut], argv[cut + 1 :]
    ns = build_parser().parse_args(argv)
    return CliRequest(
        subcommand=ns.subcommand,
        target=ns.target,
        weights=tuple(weights),
        format=ns.format,
        level=getattr(ns, "level", None),
        mode=getattr(ns, "mode", "unitary") if ns.subcommand == "infchar" else "unitary",
        parity=getattr(ns, "parity", None),
    )


def _max_rank() -> int:
    raw = os.environ.get("HWMOD_MAX_RANK")
    if raw is None:
        return DEFAULT_MAX_RANK
    try:
        return int(raw)
    except ValueError:
        raise HwmodError(f"HWMOD_MAX_RANK must be an integer, got {raw!r}") from None


def _check_rank(n: int):
    cap = _max_rank()
    if n > cap:
        raise RankTooLarge(f"rank {n} exceeds HWMOD_MAX_RANK={cap}")


def _one_weight(req: CliRequest, alg: Algebra):
    if len(req.weights) != 1:
        raise HwmodError(f"{req.subcommand} expects exactly one weight after --")
    return parse_weight(alg, req.weights[0])


def _emit(out, req: CliRequest, payload: dict, lines: list[str]):
    if req.format == "json":
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def _run(req: CliRequest, out) -> int:
    if req.subcommand == "infchar":
        return _run_infchar(req, out)
    alg = Algebra.parse(req.target)
    _check_rank(alg.n)

    if req.subcommand == "classify":
        lam = _one_weight(req, alg)
        v = classify(lam)
        payload = {"algebra": str(alg), "weight": lam.to_json(), **v.to_dict()}
        shape = " ".join(f"{k}={val}" for k, val in v.shape.to_dict().items())
        lines = [
            f"algebra    {alg}",
            f"weight     {lam}",
            f"shape      {shape}",
            "critical   " + ", ".join(format_rational(c) for c in v.critical_values),
            f"line       z={format_rational(v.line.z)} a={format_rational(v.line.a)}",
            v.label(),
        ]
        _emit(out, req, payload, lines)
        return EXIT_OK if v.is_unitary else EXIT_NON_UNITARY

    if req.subcommand == "scan":
        lam = _one_weight(req, alg)
        cert = scan(lam, req.level)
        _emit(out, req, cert.to_dict(), [str(cert)])
        return EXIT_NON_UNITARY if cert.variant == FIRST_STRICT_FAILURE else EXIT_OK

    if req.subcommand == "schmid":
        if req.weights:
            mod = decompose(alg, _one_weight(req, alg))
            _emit(out, req, {"level": mod.level, "coeffs": list(mod.coeffs)}, [str(mod)])
            return EXIT_OK
        mods = enumerate_up_to_level(alg, alg.schmid_rank if req.level is None else req.level)
        payload = {"modules": [{"level": m.level, "coeffs": list(m.coeffs)} for m in mods]}
        _emit(out, req, payload, [str(m) for m in mods])
        return EXIT_OK

    if req.subcommand == "prv":
        ws = [parse_weight(alg, w) for w in req.weights]
        res = prv_product_chain(ws)
        _emit(out, req, {"factors": [w.to_json() for w in ws], "result": res.to_json()}, [str(res)])
        return EXIT_OK

    if req.subcommand == "recipe":
        lam = _one_weight(req, alg)
        try:
            rec = discrete_recipe(lam)
        except NotConstructible as exc:
            sys.stderr.write(f"hwmod: not constructible: {exc}\n")
            return EXIT_NOT_CONSTRUCTIBLE
        lines = [rec.expression()]
        if rec.continuous_region:
            lines.append("continuous_region: true")
        _emit(out, req, rec.to_dict(), lines)
        return EXIT_OK
    raise HwmodError(f"unknown subcommand {req.subcommand!r}")


def _run_infchar(req: CliRequest, out) -> int:
    if req.weights:
        raise HwmodError("infchar takes the dominant parameter as its only argument")
    if req.format == "dot" and req.mode != "hasse":
        raise HwmodError("--format dot is only available with --hasse")
    if req.mode == "cones":
        if req.target.startswith("rho:"):
            try:
                n = int(req.target[4:])
            except ValueError:
                raise HwmodError(f"bad rank in {req.target!r}") from None
            parity = Parity(req.parity or "int")
        else:
            dom = DominantParam.parse(req.target)
            n, parity = dom.n, Parity(req.parity) if req.parity else dom.parity
        _check_rank(n)
        cones = unitary_cones(n, parity)
        lines = [
            f"{c.case} q={c.q} vertex={c.vertex} dim={c.dimension}" for c in cones
        ]
        _emit(out, req, {"cones": [c.to_dict() for c in cones]}, lines)
        return EXIT_OK

    dom = DominantParam.parse(req.target)
    _check_rank(dom.n)
    if req.parity is not None and Parity(req.parity) is not dom.parity:
        raise HwmodError(f"{dom} does not have parity {req.parity}")
    if req.mode == "hasse":
        if dom != DominantParam.rho(dom.n):
            raise HwmodError("--hasse is only available for rho:n")
        h = hasse_rho(dom.n)
        if req.format == "dot":
            out.write(h.to_dot())
            return EXIT_OK
        lines = [f"{p}  {h.diagram(p)}" for p in h.nodes] + [f"{a} -> {b}" for a, b in h.edges]
        _emit(out, req, h.to_dict(), lines)
        return EXIT_OK
    if req.mode == "unitary":
        params = enumerate_unitary(dom)
        _emit(out, req, {"parameters": [p.to_json() for p in params]}, [str(p) for p in params])
        return EXIT_OK
    rows = [(p, is_unitary_parameter(p)) for p in enumerate_parameters(dom)]
    payload = {
        "parameters": [
            {"parameter": p.to_json(), "unitary": d.unitary, "case": d.case} for p, d in rows
        ]
    }
    lines = [f"{p}  {'unitary' if d.unitary else 'non-unitary'} ({d.case})" for p, d in rows]
    _emit(out, req, payload, lines)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    if out is None:
        out = sys.stdout
        try:
            out.reconfigure(encoding="utf-8", line_buffering=True)
        except (AttributeError, ValueError):
            pass
    try:
        req = parse_request(sys.argv[1:] if argv is None else argv)
        return _run(req, out)
    except ValueError as exc:  # HwmodError included
        sys.stderr.write(f"hwmod: error: {exc}\n")
        return EXIT_INVALID
