"""JSON template files.

::

    {
      "label": "t_fold2",
      "n": 2,
      "polytopes": [
        {"label": "A", "facets": [{"normal": [1, 0], "offset": "0"}, ...]},
        ...
      ],
      "edges": [{"ends": [{"vertex": 0, "facet": 2}, {"vertex": 1, "facet": 2}]}]
    }

Offsets are integers or ``"p/q"`` strings; they are always written back as
strings so no float ever enters a file.
"""

import json
import os
import warnings
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import NotAPolytopeError, TemplateParseError
from .polytope import DelzantPolytope, Facet, NormalizationWarning
from .template import FoldEdge, OrigamiTemplate

FIXTURE_ENV = "ORIGAMI_FIXTURE_DIR"
FIXTURE_NAMES = ("t_square", "t_fold2", "t_ring4", "t_chain4", "t_cube2",
                 "t_prismring", "t_figure1")


def _need(obj, key, where, kind):
    if not isinstance(obj, dict):
        raise TemplateParseError("expected an object", field=where)
    if key not in obj:
        raise TemplateParseError(f"missing field '{key}'", field=where)
    val = obj[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise TemplateParseError("expected an integer", field=f"{where}.{key}")
    if kind is list and not isinstance(val, list):
        raise TemplateParseError("expected a list", field=f"{where}.{key}")
    return val


def _rational(val, where):
    if isinstance(val, bool):
        raise TemplateParseError("expected a rational", field=where)
    if isinstance(val, int):
        return Fraction(val)
    if isinstance(val, str):
        try:
            return Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            pass
        raise TemplateParseError(f"bad rational {val!r}", field=where)
    raise TemplateParseError(
        "rationals must be integers or 'p/q' strings (floats are rejected)",
        field=where)


def template_from_dict(doc):
    """Build an OrigamiTemplate from a decoded document.

    Returns ``(template, notes)`` where notes record normal normalisations.
    """
    n = _need(doc, "n", "$", int)
    if n < 1:
        raise TemplateParseError("n must be positive", field="$.n")
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise TemplateParseError("expected a string", field="$.label")
    polys_raw = _need(doc, "polytopes", "$", list)
    polytopes, notes = [], []
    for i, pr in enumerate(polys_raw):
        where = f"$.polytopes[{i}]"
        facets_raw = _need(pr, "facets", where, list)
        plabel = pr.get("label", f"P{i}")
        facets = []
        for j, fr in enumerate(facets_raw):
            fw = f"{where}.facets[{j}]"
            normal = _need(fr, "normal", fw, list)
            if len(normal) != n or not all(
                    isinstance(a, int) and not isinstance(a, bool) for a in normal):
                raise TemplateParseError(
                    f"normal must be a list of {n} integers", field=f"{fw}.normal")
            if "offset" not in fr:
                raise TemplateParseError("missing field 'offset'", field=fw)
            facets.append(Facet(tuple(normal), _rational(fr["offset"], f"{fw}.offset")))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", NormalizationWarning)
            try:
                p = DelzantPolytope(n, tuple(facets), plabel)
            except (NotAPolytopeError, ValueError) as exc:
                raise TemplateParseError(str(exc), field=where) from None
        notes.extend(str(w.message) for w in caught
                     if issubclass(w.category, NormalizationWarning))
        polytopes.append(p)
    edges = []
    for k, er in enumerate(doc.get("edges", [])):
        where = f"$.edges[{k}]"
        ends = _need(er, "ends", where, list)
        if len(ends) != 2:
            raise TemplateParseError("an edge has exactly two ends", field=f"{where}.ends")
        vals = []
        for s, end in enumerate(ends):
            ew = f"{where}.ends[{s}]"
            vals += [_need(end, "vertex", ew, int), _need(end, "facet", ew, int)]
        edges.append(FoldEdge(*vals))
    return OrigamiTemplate(n, tuple(polytopes), tuple(edges), label), notes


def template_to_dict(t):
    return {
        "label": t.label,
        "n": t.n,
        "polytopes": [
            {"label": p.label,
             "facets": [{"normal": list(f.normal), "offset": str(f.offset)}
                        for f in p.facets]}
            for p in t.polytopes
        ],
        "edges": [
            {"ends": [{"vertex": e.v1, "facet": e.f1},
                      {"vertex": e.v2, "facet": e.f2}]}
            for e in t.edges
        ],
    }


def dumps(t):
    return json.dumps(template_to_dict(t), indent=2) + "\n"


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TemplateParseError(exc.msg, line=exc.lineno) from None
    return template_from_dict(doc)


def fixture_dir():
    env = os.environ.get(FIXTURE_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("toric_origami") / "fixtures"))


def resolve(path):
    """A readable file for ``path``: a file, or a fixture name like ``t_ring4``."""
    p = Path(path)
    if p.is_file():
        return p
    if p.with_suffix(".json").is_file():
        return p.with_suffix(".json")
    cand = fixture_dir() / (p.stem + ".json")
    if cand.is_file():
        return cand
    raise FileNotFoundError(path)


def load(path):
    """Parse a template file (or named fixture); returns ``(template, notes)``."""
    f = resolve(path)
    try:
        text = f.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise TemplateParseError(f"not UTF-8: {exc}") from None
    return loads(text)


def load_fixture(name):
    return load(fixture_dir() / f"{name}.json")[0]


def save(t, path):
    Path(path).write_text(dumps(t), encoding="utf-8")
