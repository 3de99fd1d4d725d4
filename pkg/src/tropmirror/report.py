"""Serializable sections and the JSON/Markdown report writer.

Every section builder returns plain dicts/lists/str/int/bool in a fixed
insertion order, so ``json.dumps`` of a report is byte-stable. Rationals are
written as strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from . import __version__
from .atlas import check_square, local_pn_dims, local_pn_dims_bruteforce
from .ext import compare_hw_ext, ext_classes, mirror_module, sg_stabilized_dims
from .notation import format_monomial
from .pants import (
    all_labels,
    canonical_label,
    check_triangle,
    enumerate_triangles,
    hw_basis,
    localized_hw_dims,
)
from .specio import format_rational
from .toric import build_fan, moment_polytope
from .tropical import LaurentPolySpec, degeneration_report, regular_subdivision

TOOLKIT = "tropmirror"


class ReportIOError(OSError):
    pass


def _q(x) -> str:
    return format_rational(Fraction(x))


def subdivision_section(spec: LaurentPolySpec) -> dict:
    P = regular_subdivision(spec)
    rep = degeneration_report(spec, P)
    return {
        "spec": spec.name,
        "n": spec.n,
        "cells": [list(c) for c in P.cells],
        "cell_points": [[list(spec.terms[i].alpha) for i in c] for c in P.cells],
        "heights": [{"normal": [_q(a) for a in plane[0]], "offset": _q(plane[1])} for plane in P.planes],
        "all_cells_simplicial": rep.all_cells_simplicial,
        "all_cells_unimodular": rep.all_cells_unimodular,
        "vertices_exactly_A": rep.vertices_exactly_A,
        "zero_in_every_maximal_cell": rep.zero_in_every_maximal_cell,
        "maximally_degenerate": rep.maximally_degenerate,
        "non_simplicial": [list(c) for c in rep.non_simplicial],
        "non_unimodular": [list(c) for c in rep.non_unimodular],
        "missing_zero": [list(c) for c in rep.missing_zero],
        "non_vertices": list(rep.non_vertices),
    }


def fan_section(spec: LaurentPolySpec) -> dict:
    F = build_fan(regular_subdivision(spec), spec)
    return {
        "spec": spec.name,
        "rays": [list(r) for r in F.rays],
        "ray_terms": list(F.ray_terms),
        "maximal_cones": [
            {"rays": list(c.rays), "determinant": c.determinant, "smooth": c.smooth}
            for c in F.maximal_cones
        ],
        "cone_count": len(F.cones),
        "smooth": F.smooth,
    }


def polytope_section(spec: LaurentPolySpec) -> dict:
    M = moment_polytope(spec)
    return {
        "spec": spec.name,
        "inequality": "c . (xi, eta) + c0 >= 0",
        "facets": [{"term": f.term, "coefficients": [_q(c) for c in f.coefficients()]} for f in M.facets],
    }


def hw_section(n: int, I, J, bound: int) -> dict:
    I, J = canonical_label(I, n), canonical_label(J, n)
    basis, dims = hw_basis(I, J, bound, n)
    return {
        "source": str(I),
        "target": str(J),
        "bounds": {"max_total_doubled_degree": bound},
        "generators": [
            {"monomial": format_monomial(m), "degree": m.degree, "doubled_total": m.total} for m in basis
        ],
        "dims": {str(k): {str(t): c for t, c in sorted(row.items())} for k, row in sorted(dims.dims.items())},
    }


def hw_tables_section(n: int, bound: int) -> dict:
    labels = all_labels(n)
    rows = []
    for I in labels:
        for J in labels:
            _, dims = hw_basis(I, J, bound, n)
            rows.append({
                "source": str(I), "target": str(J),
                "dims": {str(k): sum(row.values()) for k, row in sorted(dims.dims.items())},
            })
    return {"n": n, "bounds": {"max_total_doubled_degree": bound}, "pairs": rows}


def triangles_section(n: int) -> dict:
    rows = []
    for t in enumerate_triangles(n):
        c = check_triangle(t)
        rows.append({
            "triangle": str(t),
            "compositions_zero": all(c.compositions_zero.values()) and bool(c.compositions_zero),
            "mu3_target": format_monomial(c.mu3_target) if c.mu3_target is not None else None,
            "mu3_degree": c.mu3_target_degree,
            "mu3_dim": c.mu3_target_dim,
            "passed": c.passed,
            "failures": list(c.failures),
        })
    return {"n": n, "count": len(rows), "passed": all(r["passed"] for r in rows), "triangles": rows}


def localize_section(n: int, I, J, truncation: int) -> dict:
    I, J = canonical_label(I, n), canonical_label(J, n)
    dims = localized_hw_dims(I, J, truncation, n)
    return {
        "source": str(I), "target": str(J),
        "bounds": {"truncation": truncation},
        "dims": {str(i): {str(t): c for t, c in sorted(dims.dims[i].items())} for i in (0, 1)},
    }


def ext_section(n: int, I, J, max_k: int, max_degree: int) -> dict:
    src, tgt = mirror_module(I, n), mirror_module(J, n)
    table = ext_classes(src, tgt, max_k, max_degree)
    return {
        "source": str(src), "target": str(tgt),
        "bounds": {"max_k": max_k, "max_degree": max_degree},
        "dims": {str(k): {str(d): c for d, c in enumerate(table.series(k)) if c} for k in range(max_k + 1)},
    }


def sg_section(n: int, I, J, max_k: int, max_degree: int, window: int) -> dict:
    src, tgt = mirror_module(I, n), mirror_module(J, n)
    sg = sg_stabilized_dims(src, tgt, max_k, max_degree, window)
    return {
        "source": str(src), "target": str(tgt),
        "bounds": {"max_k": max_k, "max_degree": max_degree, "window": window,
                   "compare_length": sg.compare_length},
        "series": {str(i): list(sg.series[i]) for i in (0, 1)},
        "k_star": {str(i): sg.k_star[i] for i in (0, 1)},
    }


def comparison_section(n: int, max_k: int, max_degree: int, pairs=None) -> dict:
    labels = all_labels(n)
    pairs = pairs if pairs is not None else [(I, J) for I in labels for J in labels]
    rows = []
    for I, J in pairs:
        r = compare_hw_ext(n, I, J, max_k, max_degree)
        rows.append({
            "source": str(r.I), "target": str(r.J), "passed": r.passed,
            "rows": [{"k": x.k, "hw": x.hw, "ext": x.ext, "shift": x.shift, "passed": x.passed} for x in r.rows],
        })
    return {
        "n": n,
        "bounds": {"max_k": max_k, "max_degree": max_degree, "compare_length": max(0, max_degree - (n + 2) + 1)},
        "passed": all(r["passed"] for r in rows),
        "pairs": rows,
    }


def functors_section(n: int, max_k: int, max_degree: int, window: int) -> dict:
    r = check_square(n, max_k, max_degree, window)
    return {
        "n": n,
        "bounds": {"max_k": max_k, "max_degree": max_degree, "window": window},
        "passed": r.passed,
        "squares": dict(r.squares),
        "objects": r.objects,
        "witnesses": list(r.witnesses),
        "note": "framing changes x^(-a) f are not modelled",
    }


def local_pn_section(max_n: int, max_d: int) -> dict:
    rows = []
    for n in range(1, max_n + 1):
        for d in range(max_d + 1):
            closed, brute = local_pn_dims(n, d), local_pn_dims_bruteforce(n, d)
            rows.append({"n": n, "d": d, "closed_form": closed, "brute_force": brute, "passed": closed == brute})
    return {"bounds": {"max_n": max_n, "max_d": max_d}, "passed": all(r["passed"] for r in rows), "rows": rows}


def build_document(results) -> dict:
    sections = dict(results.items() if isinstance(results, Mapping) else results)
    bounds = {name: body["bounds"] for name, body in sections.items()
              if isinstance(body, dict) and "bounds" in body}
    return {"toolkit": TOOLKIT, "version": __version__, "bounds": bounds, "sections": sections}


def to_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _md_value(v) -> str:
    if isinstance(v, (dict, list)):
        return "`" + json.dumps(v, ensure_ascii=False) + "`"
    return "" if v is None else str(v)


def _md_block(body, depth: int) -> list[str]:
    lines: list[str] = []
    if isinstance(body, dict):
        flat = {k: v for k, v in body.items() if not isinstance(v, (dict, list)) or _is_small(v)}
        for k, v in flat.items():
            lines.append(f"- **{k}**: {_md_value(v)}")
        for k, v in body.items():
            if k in flat:
                continue
            lines += ["", "#" * min(depth, 6) + f" {k}", ""]
            lines += _md_block(v, depth + 1)
    elif isinstance(body, list):
        if body and all(isinstance(x, dict) for x in body):
            cols = list(dict.fromkeys(k for x in body for k in x))
            lines.append("| " + " | ".join(cols) + " |")
            lines.append("|" + "---|" * len(cols))
            for x in body:
                lines.append("| " + " | ".join(_md_value(x.get(c)).replace("|", "\\|") for c in cols) + " |")
        else:
            lines += [f"- {_md_value(x)}" for x in body] or ["(none)"]
    else:
        lines.append(_md_value(body))
    return lines


def _is_small(v) -> bool:
    return len(json.dumps(v)) <= 80 and not (isinstance(v, list) and v and isinstance(v[0], dict))


def to_markdown(doc) -> str:
    lines = [f"# {doc['toolkit']} report", "", f"- **version**: {doc['version']}"]
    if not doc["sections"]:
        lines += ["", "No results."]
    for name, body in doc["sections"].items():
        lines += ["", f"## {name}", ""]
        lines += _md_block(body, 3)
    return "\n".join(lines) + "\n"


def emit_report(results, json_path=None, md_path=None) -> tuple[str, str]:
    """Render ``results`` (section name -> body) to JSON and Markdown, writing files if paths are given."""
    doc = build_document(results)
    js, md = to_json(doc), to_markdown(doc)
    for path, text in ((json_path, js), (md_path, md)):
        if path is None:
            continue
        try:
            Path(path).write_text(text)
        except OSError as exc:
            raise ReportIOError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
    return js, md


def full_report(n: int, spec: LaurentPolySpec | None = None, max_k: int = 6, max_degree: int = 10,
                window: int = 3, hw_bound: int = 6) -> dict:
    """Every pipeline for Pi_n (and the given spec, else the pants spec of dimension n)."""
    from .tropical import pants_spec

    spec = spec or pants_spec(n)
    return {
        "subdivision": subdivision_section(spec),
        "fan": fan_section(spec),
        "polytope": polytope_section(spec),
        "HW tables": hw_tables_section(n, hw_bound),
        "triangle suite": triangles_section(n),
        "comparison matrix": comparison_section(n, max_k, max_degree),
        "functor squares": functors_section(n, max_k, max_degree, window),
    }
