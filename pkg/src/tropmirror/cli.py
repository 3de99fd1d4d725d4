"""Command-line entry point: ``tropmirror <group> <command> [flags]``.

Output is a JSON report on stdout (``-o PATH`` also writes PATH and PATH
with a ``.md`` suffix). Exit status: 0 ok, 1 a verification check failed,
2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from . import report as R
from .ext import StabilizationError
from .notation import format_monomial, parse_monomial
from .pants import ZERO, canonical_label, in_hw, mu2
from .specio import SpecFormatError, load_spec, parse_rational
from .tropical import TropicalFunction, region_classify, tropical_eval

OK, CHECK_FAILED, INPUT_ERROR = 0, 1, 2


class InputError(ValueError):
    pass


def _index_set(text: str) -> frozenset[int]:
    try:
        out = frozenset(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("index set must be non-empty")
    return out


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


# ---- handlers: each returns (sections, passed) -------------------------------------------

def _trop_subdivide(a):
    return {"subdivision": R.subdivision_section(load_spec(a.spec))}, True


def _trop_eval(a):
    spec = load_spec(a.spec)
    try:
        xi = [parse_rational(x) for x in a.point]
    except SpecFormatError:
        raise InputError(f"point coordinates must be exact rationals 'p' or 'p/q', got {a.point}")
    value, argmax = tropical_eval(TropicalFunction.from_spec(spec), xi)
    region = region_classify(spec, xi)
    body = {
        "spec": spec.name, "point": [R._q(x) for x in xi], "value": R._q(value),
        "argmax": sorted(argmax), "on_gamma": region.on_gamma, "region": region.index,
    }
    return {"tropical evaluation": body}, True


def _mirror_fan(a):
    return {"fan": R.fan_section(load_spec(a.spec))}, True


def _mirror_polytope(a):
    return {"polytope": R.polytope_section(load_spec(a.spec))}, True


def _labels(a, *names):
    out = []
    for name in names:
        members = getattr(a, name)
        if members is None:
            raise InputError(f"--{name} is required for this command")
        out.append(canonical_label(members, a.n))
    return out


def _pants_hw(a):
    I, J = _labels(a, "I", "J")
    return {"HW": R.hw_section(a.n, I, J, a.max_deg)}, True


def _pants_product(a):
    I, J, K = _labels(a, "I", "J", "K")
    m1, m2 = parse_monomial(a.m1, a.n), parse_monomial(a.m2, a.n)
    for lab, (s, t), m in (("m1", (I, J), m1), ("m2", (J, K), m2)):
        if not in_hw(s, t, m, a.n):
            raise InputError(f"{lab}={format_monomial(m)} is not a basis element of HW({s},{t})")
    p = mu2(I, J, K, m1, m2, a.n)
    body = {
        "source": str(I), "middle": str(J), "target": str(K),
        "m1": format_monomial(m1), "m2": format_monomial(m2),
        "product": "0" if p is ZERO else format_monomial(p),
        "degree": None if p is ZERO else p.degree,
    }
    return {"product": body}, True


def _pants_triangles(a):
    body = R.triangles_section(a.n)
    return {"triangle suite": body}, body["passed"]


def _pants_localize(a):
    I, J = _labels(a, "I", "J")
    return {"localized HW": R.localize_section(a.n, I, J, a.max_deg)}, True


def _ext_dims(a):
    I, J = _labels(a, "I", "J")
    return {"Ext": R.ext_section(a.n, I, J, a.max_k, a.max_deg)}, True


def _ext_sg(a):
    I, J = _labels(a, "I", "J")
    return {"singularity category": R.sg_section(a.n, I, J, a.max_k, a.max_deg, a.window)}, True


def _compare_hw_ext(a):
    pairs = None
    if a.I is not None or a.J is not None:
        pairs = [tuple(_labels(a, "I", "J"))]
    body = R.comparison_section(a.n, a.max_k, a.max_deg, pairs)
    return {"comparison matrix": body}, body["passed"]


def _functors_square(a):
    body = R.functors_section(a.n, a.max_k, a.max_deg, a.window)
    return {"functor squares": body}, body["passed"]


def _examples_local_pn(a):
    body = R.local_pn_section(a.n, a.max_deg)
    return {"local Pn": body}, body["passed"]


def _report_all(a):
    spec = load_spec(a.spec) if a.spec else None
    sections = R.full_report(a.n, spec, a.max_k, a.max_deg, a.window)
    passed = all(sections[k]["passed"] for k in ("triangle suite", "comparison matrix", "functor squares"))
    return sections, passed


# ---- parser --------------------------------------------------------------------------------

def _common(p, *, labels=(), max_deg=None, max_k=False, window=False, n_default=1):
    p.add_argument("--n", type=_positive, default=n_default, help="dimension of the pair of pants")
    for name in labels:
        p.add_argument(f"--{name}", type=_index_set, default=None, metavar="i,j,...",
                       help=f"index set {name} inside {{0..n+1}}")
    if max_deg is not None:
        p.add_argument("--max-deg", dest="max_deg", type=_nonneg, default=max_deg)
    if max_k:
        p.add_argument("--max-k", dest="max_k", type=_nonneg, default=6)
    if window:
        p.add_argument("--window", type=_positive, default=3)
    p.add_argument("-o", dest="output", default=None, metavar="PATH",
                   help="also write the JSON report to PATH and Markdown next to it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropmirror", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    groups = parser.add_subparsers(dest="group", required=True, metavar="GROUP")

    def group(name, help_):
        g = groups.add_parser(name, help=help_)
        return g.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(sub, name, handler, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        return p

    trop = group("trop", "tropical polynomial and regular subdivision")
    p = command(trop, "subdivide", _trop_subdivide, "regular subdivision and degeneration report")
    p.add_argument("spec", help="spec JSON path or bundled name")
    _common(p)
    p = command(trop, "eval", _trop_eval, "evaluate the tropical polynomial at a point")
    p.add_argument("spec")
    p.add_argument("point", nargs="+", help="coordinates, e.g. 1/2 3; put -- before negative fractions")
    _common(p)

    mirror = group("mirror", "toric mirror data")
    for name, h, text in (("fan", _mirror_fan, "fan of the mirror"), ("polytope", _mirror_polytope, "moment polytope")):
        p = command(mirror, name, h, text)
        p.add_argument("spec")
        _common(p)

    pants = group("pants", "wrapped Floer cohomology of the pair of pants")
    _common(command(pants, "hw", _pants_hw, "basis of HW(L_I, L_J)"), labels=("I", "J"), max_deg=6)
    p = command(pants, "product", _pants_product, "product HW(L_J,L_K) x HW(L_I,L_J) -> HW(L_I,L_K)")
    _common(p, labels=("I", "J", "K"))
    p.add_argument("--m1", required=True, help="monomial in HW(L_I, L_J)")
    p.add_argument("--m2", required=True, help="monomial in HW(L_J, L_K)")
    _common(command(pants, "triangles", _pants_triangles, "check every exact triangle"))
    _common(command(pants, "localize", _pants_localize, "dimensions after inverting z_0"),
            labels=("I", "J"), max_deg=10)

    ext = group("ext", "Ext over the singular fiber")
    _common(command(ext, "dims", _ext_dims, "Ext^k(M(I), M(J))"), labels=("I", "J"), max_deg=10, max_k=True)
    _common(command(ext, "sg", _ext_sg, "stabilized Ext in the singularity category"),
            labels=("I", "J"), max_deg=10, max_k=True, window=True)

    compare = group("compare", "cross-checks between the two sides")
    _common(command(compare, "hw-ext", _compare_hw_ext, "HW against Ext, all pairs unless --I/--J"),
            labels=("I", "J"), max_deg=10, max_k=True)

    functors = group("functors", "functor atlas")
    _common(command(functors, "square", _functors_square, "restriction vs singularity-category square"),
            n_default=2, max_deg=10, max_k=True, window=True)

    examples = group("examples", "closed-form identities")
    _common(command(examples, "local-pn", _examples_local_pn, "local P^n counts, n up to --n, d up to --max-deg"),
            n_default=3, max_deg=4)

    rep = group("report", "combined reports")
    p = command(rep, "all", _report_all, "every pipeline for one n")
    p.add_argument("--spec", default=None, help="spec for the tropical sections (default: pants of dimension n)")
    _common(p, n_default=2, max_deg=10, max_k=True, window=True)
    return parser


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        sections, passed = args.handler(args)
        md_path = None
        if args.output:
            md_path = Path(args.output).with_suffix(".md")
        js, _ = R.emit_report(sections, args.output, md_path)
    except (ValueError, TypeError, KeyError, FileNotFoundError, StabilizationError, OSError) as exc:
        print(f"tropmirror: error: {exc}", file=stderr)
        return INPUT_ERROR
    stdout.write(js)
    return OK if passed else CHECK_FAILED


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
