"""Command-line interface: certify-zeta, verify, distance, disc-geometry.

Exit codes: 0 ok, 1 failed verification, 2 domain error, 3 numerical failure.
Progress lines go to stderr so stdout holds exactly one report.
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd

from app.report import write_report, write_table
from app.verify import run_suites, summarize
from bounds import geometric_grid
from config import (
    CONSTRAINTS, DEFAULT_GRID_SPEC, EXIT_DOMAIN, EXIT_NUMERIC, EXIT_OK, EXIT_VERIFY_FAILED, NORM_MODES,
    EXAMPLE_LAMBDA, EXAMPLE_R, EXAMPLE_SIGMA1, OUTPUT_FORMATS, VERIFY_SUITES,
)
from discs import (
    PseudoDisc, batch_certify, certify_zeta, distance_certificates, prop61_radius, pseudo_to_euclidean,
    zero_free_grid_check,
)
from errors import ConvergenceError, DomainError, HalfPlaneResult
from model import Sequence, load_model, zeta_model
from specfun import QuadratureSpec

logger = logging.getLogger(__name__)


# --- argument parsing ---

def parse_complex(text):
    """'0.01+50i', '0.3-2i', '50i' or '0.5' -> complex."""
    cleaned = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    try:
        return complex(cleaned)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r} (use a+bi)") from None


def parse_grid(text):
    """'geometric:n' or a comma-separated list of alpha values."""
    text = text.strip()
    if text.startswith("geometric:"):
        try:
            n = int(text.split(":", 1)[1])
        except ValueError:
            raise DomainError(f"bad grid size in {text!r}") from None
        return geometric_grid(n)
    try:
        return tuple(float(a) for a in text.split(",") if a.strip())
    except ValueError:
        raise DomainError(f"grid must be 'geometric:n' or a list of alpha values, got {text!r}") from None


def parse_batch(text):
    """'re:im0:im1:n' -> n values re + i y with y evenly spaced in [im0, im1]."""
    parts = text.split(":")
    if len(parts) != 4:
        raise DomainError(f"batch must look like re:im0:im1:n, got {text!r}")
    try:
        re, im0, im1 = (float(p) for p in parts[:3])
        n = int(parts[3])
    except ValueError:
        raise DomainError(f"batch must look like re:im0:im1:n, got {text!r}") from None
    if n < 1:
        raise DomainError(f"batch needs n >= 1, got {n}")
    return [complex(re, y) for y in np.linspace(im0, im1, n)]


def parse_sequence(text):
    """'alpha:c,alpha:c,...' with complex c -> Sequence."""
    alpha, c = [], []
    for item in text.split(","):
        try:
            a, coeff = item.split(":")
            alpha.append(float(a))
            c.append(parse_complex(coeff))
        except (ValueError, argparse.ArgumentTypeError):
            raise DomainError(f"sequence must look like alpha:c,alpha:c, got {text!r}") from None
    return Sequence(tuple(alpha), tuple(c))


@dataclass(frozen=True)
class CertifyRequest:
    model_name: str
    lam: complex
    r: float
    sigma1: float
    A: Optional[Sequence] = None
    mode: str = "paper_bound"
    out_format: str = "json"

    def __post_init__(self):
        if self.mode not in NORM_MODES:
            raise DomainError(f"mode must be one of {NORM_MODES}, got {self.mode!r}")
        if self.out_format not in OUTPUT_FORMATS:
            raise DomainError(f"output format must be one of {OUTPUT_FORMATS}, got {self.out_format!r}")
        if not self.sigma1 < 0.5:
            raise DomainError(f"sigma1 must be < 1/2, got {self.sigma1}")
        if not max(0.0, self.sigma1) < self.r < 1:
            raise DomainError(f"need max(0, sigma1) < r < 1, got r = {self.r}, sigma1 = {self.sigma1}")
        if not complex(self.lam).real > 0:
            raise DomainError(f"Re lambda must be positive, got {self.lam}")


def _model(args):
    """The --config model, or zeta with --sigma1; --sigma1 wins over the file."""
    if args.config:
        model = load_model(args.config)
        if args.sigma1 is not None and args.sigma1 != model.test_sigma1:
            model = zeta_model(args.sigma1)
        return model
    return zeta_model(EXAMPLE_SIGMA1 if args.sigma1 is None else args.sigma1)


def _spec(args):
    return QuadratureSpec(rel_tol=args.tol) if args.tol else None


def _open_output(args):
    if args.output:
        return open(args.output, "w", encoding="utf-8", newline="")
    return sys.stdout


def _emit(args, doc=None, table=None, summary=None):
    stream = _open_output(args)
    try:
        if table is not None:
            write_table(table, args.out, stream, summary=summary)
        else:
            write_report(doc, args.out, stream)
    finally:
        if stream is not sys.stdout:
            stream.close()


def _disc_doc(pseudo):
    try:
        return pseudo_to_euclidean(pseudo).to_dict()
    except HalfPlaneResult as exc:
        return {"R": pseudo.R, "certified_by": pseudo.certified_by, "half_plane": exc.boundary,
                "inputs": pseudo.inputs, "errors": pseudo.errors}


# --- commands ---

def cmd_certify_zeta(args):
    model = _model(args)
    spec = _spec(args)
    if args.batch:
        lambdas = parse_batch(args.batch)
        print(f"Certifying {len(lambdas)} lambda values at r={args.r}, sigma1={model.test_sigma1} ...",
              file=sys.stderr)
        df = batch_certify(lambdas, args.r, model.test_sigma1, args.mode, spec)
        _emit(args, table=df)
        return EXIT_OK
    req = CertifyRequest(model_name=model.name, lam=args.lam, r=args.r, sigma1=model.test_sigma1,
                         A=parse_sequence(args.sequence) if args.sequence else None,
                         mode=args.mode, out_format=args.out)
    model.check_r(req.r)
    print(f"Certifying lambda={req.lam} r={req.r} sigma1={req.sigma1} ({req.mode}) ...", file=sys.stderr)
    try:
        if req.A is None:
            disc = certify_zeta(req.lam, req.r, req.sigma1, req.mode, spec)
        else:
            disc = pseudo_to_euclidean(prop61_radius(model, req.A, req.r, req.lam, req.mode, spec))
    except HalfPlaneResult as exc:
        print(f"R = 1: zero-free half-plane Re s > {exc.boundary}", file=sys.stderr)
        _emit(args, doc={"R": 1.0, "half_plane": exc.boundary, "model": model.describe()})
        return EXIT_OK
    doc = disc.to_dict()
    doc["model"] = model.describe()
    if args.grid_check:
        doc["grid_check"] = zero_free_grid_check(disc)
    print(f"  center {disc.center}, radius {disc.radius:.6e}", file=sys.stderr)
    _emit(args, doc=doc)
    return EXIT_OK


def cmd_verify(args):
    names = list(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    frames = []
    for name in names:
        print(f"Running suite {name} ...", file=sys.stderr)
        frames.append(run_suites([name], tol=args.tol))
    df = pd.concat(frames, ignore_index=True)
    summary = summarize(df)
    print(f"  {int(df['passed'].sum())}/{len(df)} checks passed", file=sys.stderr)
    _emit(args, table=df, summary=summary)
    return EXIT_OK if summary["passed"] else EXIT_VERIFY_FAILED


def cmd_distance(args):
    model = _model(args)
    grid = parse_grid(args.grid)
    print(f"Estimating distances at lambda={args.lam} r={args.r} on {len(grid)} grid values ...",
          file=sys.stderr)
    out = distance_certificates(model, args.r, args.lam, grid, constraint=args.constraint, spec=_spec(args))
    comparison = out["comparison"]
    doc = {
        "model": model.describe(),
        "delta": out["delta"].to_dict(),
        "w_distance": out["w_distance"].to_dict(),
        "d_sharp_upper": out["d_sharp_upper"],
        "comparison": comparison.to_dict() if comparison is not None else None,
        "discs": {key: _disc_doc(out[key]) for key in ("thm62", "thm21sharp")},
    }
    _emit(args, doc=doc)
    return EXIT_OK


def cmd_disc_geometry(args):
    pseudo = PseudoDisc(lam=args.lam, R=args.R, sigma0=args.sigma0, shift=args.shift)
    try:
        disc = pseudo_to_euclidean(pseudo)
    except HalfPlaneResult as exc:
        _emit(args, doc={**pseudo.to_dict(), "half_plane": exc.boundary})
        return EXIT_OK
    points = disc.boundary(args.points)
    if args.out == "csv":
        table = pd.DataFrame({"re": points.real, "im": points.imag, "modulus": pseudo.modulus(points)})
        _emit(args, table=table)
        return EXIT_OK
    doc = disc.to_dict()
    doc["boundary"] = [{"re": p.real, "im": p.imag} for p in points]
    doc["max_boundary_deviation"] = float(np.max(np.abs(pseudo.modulus(points) - pseudo.R)))
    _emit(args, doc=doc)
    return EXIT_OK


# --- parser ---

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=OUTPUT_FORMATS, default="json", help="Report format (default: json).")
    common.add_argument("--output", default=None, help="Write the report to this file instead of stdout.")
    common.add_argument("--verbose", action="store_true", help="Log library progress to stderr.")

    point = argparse.ArgumentParser(add_help=False)
    point.add_argument("--lambda", dest="lam", type=parse_complex, default=EXAMPLE_LAMBDA,
                       help="Disc center lambda as a+bi (default: 0.01+50i).")
    point.add_argument("--r", type=float, default=EXAMPLE_R, help=f"Weight exponent r (default: {EXAMPLE_R}).")
    point.add_argument("--sigma1", type=float, default=None,
                       help=f"Exponent of phi(t) = (1-t)^(-sigma1) (default: {EXAMPLE_SIGMA1}).")
    point.add_argument("--config", default=None, help="JSON model file {name, sigma0, sigma1, r0, m_L}.")
    point.add_argument("--tol", type=float, default=None, help="Relative quadrature tolerance.")

    parser = argparse.ArgumentParser(prog="zerofree", description="Explicit zero-free discs for Dirichlet series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify-zeta", parents=[common, point], help="Zero-free disc for zeta around lambda.")
    p.add_argument("--mode", choices=NORM_MODES, default="paper_bound", help="How ||h_{A,r}|| is bounded.")
    p.add_argument("--sequence", default=None, help="Sequence A as alpha:c,alpha:c (default: 1:1).")
    p.add_argument("--batch", default=None, help="Certify re + i y for y in linspace(im0, im1, n): re:im0:im1:n.")
    p.add_argument("--grid-check", action="store_true", help="Evaluate zeta on a grid inside the disc.")
    p.set_defaults(func=cmd_certify_zeta)

    p = sub.add_parser("verify", parents=[common], help="Run a lemma verification suite.")
    p.add_argument("suite", nargs="?", default="all", choices=VERIFY_SUITES + ("all",))
    p.add_argument("--tol", type=float, default=None, help="Override every residual tolerance.")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distance", parents=[common, point], help="Gram distance bounds and their discs.")
    p.add_argument("--grid", default=DEFAULT_GRID_SPEC, help="'geometric:n' or alpha values a,b,c.")
    p.add_argument("--constraint", choices=CONSTRAINTS, default="none")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("disc-geometry", parents=[common], help="Euclidean form of a pseudo-disc.")
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True)
    p.add_argument("--R", type=float, required=True, help="Pseudo-hyperbolic radius in [0, 1].")
    p.add_argument("--sigma0", type=float, default=0.0)
    p.add_argument("--shift", type=float, default=0.0, help="Translation r - sigma0 of the disc.")
    p.add_argument("--points", type=int, default=20, help="Boundary samples.")
    p.set_defaults(func=cmd_disc_geometry)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
