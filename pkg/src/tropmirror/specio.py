"""JSON form of a LaurentPolySpec and the bundled example corpus.

Schema::

    {"n": int, "name": optional str,
     "terms": [{"alpha": [int, ...], "rho": "p" | "p/q", "coeff": optional str}]}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .tropical import LaurentPolySpec, Term, hirzebruch_spec, local_pn_spec, pants_spec


class SpecFormatError(ValueError):
    pass


_RATIONAL = re.compile(r"-?\d+(/[1-9]\d*)?")


def parse_rational(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise SpecFormatError(f"rho must be a string 'p' or 'p/q', got {text!r}")
    s = str(text).strip()
    if not _RATIONAL.fullmatch(s):
        raise SpecFormatError(f"not an exact rational: {text!r}")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def spec_from_dict(doc) -> LaurentPolySpec:
    if not isinstance(doc, dict):
        raise SpecFormatError("spec document must be a JSON object")
    extra = set(doc) - {"n", "terms", "name"}
    if extra:
        raise SpecFormatError(f"unknown fields {sorted(extra)}")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SpecFormatError(f"'n' must be a positive integer, got {n!r}")
    raw = doc.get("terms")
    if not isinstance(raw, list):
        raise SpecFormatError("'terms' must be a list")
    terms = []
    for k, t in enumerate(raw):
        if not isinstance(t, dict) or "alpha" not in t or "rho" not in t:
            raise SpecFormatError(f"term {k} needs 'alpha' and 'rho'")
        if set(t) - {"alpha", "rho", "coeff"}:
            raise SpecFormatError(f"term {k} has unknown fields {sorted(set(t) - {'alpha', 'rho', 'coeff'})}")
        alpha = t["alpha"]
        if not isinstance(alpha, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in alpha):
            raise SpecFormatError(f"term {k}: 'alpha' must be a list of integers")
        coeff = t.get("coeff")
        if coeff is not None and not isinstance(coeff, str):
            raise SpecFormatError(f"term {k}: 'coeff' must be a string")
        terms.append(Term(tuple(alpha), parse_rational(t["rho"]), coeff))
    try:
        return LaurentPolySpec(n, tuple(terms), name=str(doc.get("name", "")))
    except ValueError as exc:
        raise SpecFormatError(str(exc)) from exc


def spec_to_dict(spec: LaurentPolySpec) -> dict:
    doc = {"n": spec.n}
    if spec.name:
        doc["name"] = spec.name
    doc["terms"] = []
    for t in spec.terms:
        entry = {"alpha": list(t.alpha), "rho": format_rational(t.rho)}
        if t.coeff is not None:
            entry["coeff"] = t.coeff
        doc["terms"].append(entry)
    return doc


def load_spec(path) -> LaurentPolySpec:
    """Read a spec from a file path, or from the bundled corpus by name."""
    p = Path(path)
    if not p.exists():
        name = p.name[:-5] if p.name.endswith(".json") else p.name
        if name in bundled_names():
            return bundled_spec(name)
        raise FileNotFoundError(f"no such spec file: {path}")
    try:
        doc = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"{path}: invalid JSON ({exc})") from exc
    return spec_from_dict(doc)


def dump_spec(spec: LaurentPolySpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2) + "\n"


def _data_dir():
    return resources.files("tropmirror") / "data"


def bundled_names() -> list[str]:
    return sorted(f.name[:-5] for f in _data_dir().iterdir() if f.name.endswith(".json"))


def bundled_spec(name: str) -> LaurentPolySpec:
    f = _data_dir() / f"{name}.json"
    if not f.is_file():
        raise KeyError(f"no bundled spec {name!r}; have {bundled_names()}")
    return spec_from_dict(json.loads(f.read_text()))


def corpus() -> dict[str, LaurentPolySpec]:
    """The builders behind the bundled files (used to regenerate them)."""
    out = {f"pants{n}": pants_spec(n) for n in range(1, 5)}
    out.update({f"local_p{n}": local_pn_spec(n) for n in range(1, 4)})
    out["hirzebruch3"] = hirzebruch_spec(3)
    return out
