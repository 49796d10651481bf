"""Command-line front door.

Subcommands:

* ``eval``     -- certified evaluation of one expansion (JSON/CSV/text);
* ``bound``    -- remainder-bound breakdown rows over an argument grid;
* ``reexpand`` -- terminant re-expansion of a channel remainder;
* ``validate`` -- run a named validation suite;
* ``figure``   -- scaled-remainder vs. bound comparison table (CSV).

Exit codes: 0 success, 1 flag error, 2 domain/sector error, 3 validation
failure, 4 accuracy error.  Numeric output is byte-deterministic: 17
significant digits, '.' decimal separator, '\\n' line endings.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Optional

from .bounds import FAMILIES, bound_complex_nu, bound_real_nu
from .coefficients import coeff_a
from .errors import AccuracyError, DomainError
from .expansions import EXPANSION_KINDS, evaluate_certified, family_remainder_series
from .reexpansion import TruncationPair, reexpand
from .surface import SurfaceComplex
from .terminants import chi
from .validation import SUITES, run_suite

__all__ = ["main", "CliRequest", "figure_rows", "FIGURE_TRUNCATIONS"]

EXIT_OK = 0
EXIT_FLAGS = 1
EXIT_DOMAIN = 2
EXIT_VALIDATION = 3
EXIT_ACCURACY = 4

# figure table: N per --id; shared order and modulus
FIGURE_TRUNCATIONS = {1: 10, 2: 30}
_FIGURE_NU = 2.0 + 1.0j
_FIGURE_MOD = 15.0
_FIGURE_STEPS = 200

_REAL_TOL = 1e-13


@dataclass(frozen=True)
class CliRequest:
    """Parsed command-line request."""

    subcommand: str
    kind: Optional[str] = None
    nu: complex = 0.0
    z_mod: float = 1.0
    z_arg: float = 0.0
    terms: int = 1
    terms2: Optional[int] = None
    fmt: str = "json"
    out: Optional[str] = None
    grid_arg: Optional[str] = None
    suite: Optional[str] = None
    figure_id: Optional[int] = None


def parse_nu(text: str) -> complex:
    """Parse an order written as ``a``, ``a+bi`` or ``a+bj``."""
    s = text.strip().replace(" ", "").replace("i", "j")
    if s.endswith("j") and (len(s) == 1 or s[-2] in "+-"):
        s = s[:-1] + "1j"
    s = s.replace("+-", "-").replace("-+", "-")
    try:
        return complex(s)
    except ValueError as exc:
        raise DomainError(f"cannot parse order {text!r}") from exc


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _parse_grid(spec: str):
    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid spec {spec!r} is not start:stop:steps")
    try:
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise DomainError(f"bad grid spec {spec!r}") from exc
    if steps < 1:
        raise DomainError("grid needs at least one step")
    if steps == 1:
        return [start]
    h = (stop - start) / (steps - 1)
    return [start + k * h for k in range(steps)]


@contextmanager
def _open_out(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="") as fh:
            yield fh


def _cmd_eval(req: CliRequest, out) -> int:
    z = SurfaceComplex(req.z_mod, req.z_arg)
    cv = evaluate_certified(req.kind, z, req.nu, req.terms, req.terms2)
    fields = [("value_re", cv.value.real), ("value_im", cv.value.imag),
              ("remainder_bound", cv.remainder_bound),
              ("value_bound", cv.value_bound)]
    if req.fmt == "json":
        obj = {k: v for k, v in fields}
        obj["bound_source"] = cv.bound_source
        obj["sector_ok"] = cv.sector_ok
        out.write(json.dumps(obj) + "\n")
    elif req.fmt == "csv":
        out.write(",".join(k for k, _ in fields) + ",bound_source,sector_ok\n")
        out.write(",".join(_fmt(v) for _, v in fields)
                  + f",{cv.bound_source},{str(cv.sector_ok).lower()}\n")
    else:
        for k, v in fields:
            out.write(f"{k} = {_fmt(v)}\n")
        out.write(f"bound_source = {cv.bound_source}\n")
        out.write(f"sector_ok = {cv.sector_ok}\n")
    return EXIT_OK


def _cmd_bound(req: CliRequest, out) -> int:
    if req.kind not in FAMILIES:
        raise DomainError(f"bound families are {FAMILIES}, got {req.kind!r}")
    args = (_parse_grid(req.grid_arg) if req.grid_arg is not None
            else [req.z_arg])
    real_order = abs(req.nu.imag) <= _REAL_TOL
    header = "arg_z,first_term_mag,sup_factor,nu_ratio,total,theorem"
    rows = []
    for theta in args:
        z = SurfaceComplex(req.z_mod, theta)
        bb = (bound_real_nu(req.kind, z, req.nu.real, req.terms) if real_order
              else bound_complex_nu(req.kind, z, req.nu, req.terms))
        rows.append(",".join([_fmt(theta), _fmt(bb.first_term_mag),
                              _fmt(bb.sup_factor), _fmt(bb.nu_ratio),
                              _fmt(bb.total), bb.theorem]))
    if req.fmt == "json":
        keys = header.split(",")
        out.write(json.dumps([dict(zip(keys, r.split(","))) for r in rows])
                  + "\n")
    else:
        out.write(header + "\n")
        for r in rows:
            out.write(r + "\n")
    return EXIT_OK


def _cmd_reexpand(req: CliRequest, out) -> int:
    if req.kind not in FAMILIES:
        raise DomainError(f"re-expansion families are {FAMILIES}, got {req.kind!r}")
    if req.terms2 is None:
        raise DomainError("reexpand needs --terms2 (terminant-series length)")
    z = SurfaceComplex(req.z_mod, req.z_arg)
    res = reexpand(req.kind, z, req.nu, TruncationPair(req.terms, req.terms2))
    fields = [("series_re", res.series_part.real),
              ("series_im", res.series_part.imag),
              ("tail_bound", res.tail_bound)]
    if req.fmt == "json":
        obj = {k: v for k, v in fields}
        obj["N"], obj["M"] = res.pair.N, res.pair.M
        out.write(json.dumps(obj) + "\n")
    elif req.fmt == "csv":
        out.write(",".join(k for k, _ in fields) + ",N,M\n")
        out.write(",".join(_fmt(v) for _, v in fields)
                  + f",{res.pair.N},{res.pair.M}\n")
    else:
        for k, v in fields:
            out.write(f"{k} = {_fmt(v)}\n")
        out.write(f"N = {res.pair.N}\nM = {res.pair.M}\n")
    return EXIT_OK


def _cmd_validate(req: CliRequest, out) -> int:
    fails = run_suite(req.suite)
    for line in fails:
        out.write(line + "\n")
    out.write(f"suite {req.suite}: "
              f"{'PASS' if not fails else f'{len(fails)} violation(s)'}\n")
    return EXIT_OK if not fails else EXIT_VALIDATION


def figure_rows(figure_id: int):
    """(arg_z, scaled_remainder, paper_bound, olver_bound) rows for --id 1|2.

    All three columns carry the normalization |z|^N / |a_N(nu)| at nu = 2+i,
    |z| = 15, with arg z sweeping [0, pi] in 200 steps.
    """
    try:
        N = FIGURE_TRUNCATIONS[figure_id]
    except KeyError:
        raise DomainError(f"figure id must be one of {sorted(FIGURE_TRUNCATIONS)}")
    nu = _FIGURE_NU
    mod = _FIGURE_MOD
    a_mag = abs(coeff_a(nu, N))
    a_real_mag = abs(coeff_a(nu.real, N))
    nu_ratio = abs(cmath.cos(math.pi * nu)) / abs(math.cos(math.pi * nu.real))
    mu = abs(nu * nu - 0.25)
    rows = []
    for k in range(_FIGURE_STEPS):
        theta = k * math.pi / (_FIGURE_STEPS - 1)
        z = SurfaceComplex(mod, theta)
        remainder = complex(family_remainder_series("K", z, nu, N)[N])
        scaled = abs(remainder) * mod ** N / a_mag
        if theta <= 0.5 * math.pi:
            sharp_factor = 1.0
            olver = 2.0 * math.exp(mu / mod)
        else:
            sharp_factor = min(abs(1.0 / math.sin(theta)) if math.sin(theta) != 0.0
                               else math.inf, 1.0 + chi(N + 0.5))
            olver = 2.0 * chi(N) * math.exp(0.5 * math.pi * mu / mod)
        paper = nu_ratio * a_real_mag / a_mag * sharp_factor
        rows.append((theta, scaled, paper, olver))
    return rows


def _cmd_figure(req: CliRequest, out) -> int:
    rows = figure_rows(req.figure_id)
    out.write("arg_z,scaled_remainder,paper_bound,olver_bound\n")
    for row in rows:
        out.write(",".join(_fmt(v) for v in row) + "\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="besselasym",
        description="Certified large-argument Bessel/Hankel asymptotics.")
    sub = top.add_subparsers(dest="subcommand", required=True)

    def point_flags(p, kinds, kind_required=True):
        p.add_argument("--kind", required=kind_required, choices=kinds)
        p.add_argument("--nu", default="0", help="order, e.g. 0.5 or 2+1i")
        p.add_argument("--z-mod", type=float, required=True)
        p.add_argument("--z-arg", type=float, default=0.0,
                       help="surface argument in radians (may exceed pi)")
        p.add_argument("--terms", type=int, required=True)
        p.add_argument("--format", dest="fmt", default="json",
                       choices=("json", "csv", "text"))
        p.add_argument("--out", default=None)

    p = sub.add_parser("eval", help="certified evaluation of one expansion")
    point_flags(p, EXPANSION_KINDS)
    p.add_argument("--terms2", type=int, default=None,
                   help="odd-channel truncation (defaults to --terms)")

    p = sub.add_parser("bound", help="remainder-bound breakdown rows")
    point_flags(p, FAMILIES)
    p.add_argument("--grid-arg", default=None, metavar="START:STOP:STEPS")

    p = sub.add_parser("reexpand", help="terminant re-expansion of a remainder")
    point_flags(p, FAMILIES)
    p.add_argument("--terms2", type=int, default=None,
                   help="terminant-series length M")

    p = sub.add_parser("validate", help="run a validation suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--out", default=None)

    p = sub.add_parser("figure", help="scaled-remainder comparison table")
    p.add_argument("--id", dest="figure_id", type=int, required=True,
                   choices=sorted(FIGURE_TRUNCATIONS))
    p.add_argument("--out", default=None)
    return top


_DISPATCH = {"eval": _cmd_eval, "bound": _cmd_bound, "reexpand": _cmd_reexpand,
             "validate": _cmd_validate, "figure": _cmd_figure}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags; flag errors are exit code 1 here
        return EXIT_OK if exc.code == 0 else EXIT_FLAGS
    try:
        req = CliRequest(
            subcommand=ns.subcommand,
            kind=getattr(ns, "kind", None),
            nu=parse_nu(getattr(ns, "nu", "0")),
            z_mod=getattr(ns, "z_mod", 1.0),
            z_arg=getattr(ns, "z_arg", 0.0),
            terms=getattr(ns, "terms", 1),
            terms2=getattr(ns, "terms2", None),
            fmt=getattr(ns, "fmt", "json"),
            out=getattr(ns, "out", None),
            grid_arg=getattr(ns, "grid_arg", None),
            suite=getattr(ns, "suite", None),
            figure_id=getattr(ns, "figure_id", None),
        )
        with _open_out(req.out) as out:
            return _DISPATCH[req.subcommand](req, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except AccuracyError as exc:
        print(f"accuracy error: {exc}", file=sys.stderr)
        return EXIT_ACCURACY


if __name__ == "__main__":
    sys.exit(main())
