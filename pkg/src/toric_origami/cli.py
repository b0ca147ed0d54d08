"""Command-line front end.

Exit codes: 0 ok, 1 domain failure, 2 parse error, 3 unsupported dimension.
"""

import argparse
import json
import sys

from . import fileformat
from .errors import (CapabilityError, DimensionError, OrigamiError,
                     PreconditionError, TemplateParseError)
from .homology import chain_complex, expected_dual_homology, homology
from .invariants import invariant_report
from .orbit_space import acyclicity_report, build_face_classes, order_complex
from .ring4d import ring_presentation
from .template import cut, graph_cycle_rank, validate_template

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAPABILITY = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code, message, payload=None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _tup(x):
    return "(" + ", ".join(str(a) for a in x) + ")"


def _emit(args, text, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _load_valid(path):
    t, notes = fileformat.load(path)
    rep = validate_template(t)
    if not rep.ok:
        raise _Fail(EXIT_FAIL, str(rep), {"validation": rep.to_dict()})
    return t, notes


def cmd_validate(args):
    t, notes = fileformat.load(args.path)
    rep = validate_template(t)
    for note in notes:
        if note not in rep.notes:
            rep.notes.insert(0, note)
    _emit(args, str(rep), rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_FAIL


def _invariants_text(r):
    lines = [f"template: {r.label}", f"n = {r.n}, b1 = {r.b1}, r_min = {r.r_min}",
             f"orientable: {r.orientable}, coorientable: {r.coorientable}",
             f"f = {_tup(r.f)}", f"h = {_tup(r.h)}",
             f"chi(boundary) = {r.chi_boundary}", f"chi(M) = {r.chi_M}"]
    if r.relaxed is not None:
        rel = r.relaxed
        lo, hi = rel.vanishing_range
        lo2, hi2 = rel.relation_range
        lines += ["relaxed mode: Betti numbers are not fully determined",
                  f"odd vanishing range: {lo} <= i <= {hi}"
                  + (" (empty)" if lo > hi else ""),
                  f"cut relation range: {lo2} <= i <= {hi2}"
                  + (" (empty)" if lo2 > hi2 else ""),
                  "constraints:"]
        lines += [f"  {c}" for c in rel.constraints]
        return "\n".join(lines)
    lines += [f"dual homology (reduced ranks) = {_tup(r.dual_homology)}"]
    if not r.dual_homology_matches:
        lines += [f"  expected {_tup(r.dual_homology_expected)} for a genus-0 orbit "
                  f"surface; this one has genus {r.surface_genus}, so the h'/h'' "
                  f"residuals below are not zero"]
    lines += [f"h' = {_tup(r.h_prime)}",
              f"h'' (degrees 1..n-1) = {_tup(r.h_double_prime)}"]
    if r.betti_closed is not None:
        lines.append(f"Betti (closed form) = {_tup(r.betti_closed)}")
    if r.betti_inductive is not None:
        lines.append(f"Betti (inductive) = {_tup(r.betti_inductive)}")
        for edge, hf in r.inductive_cuts:
            lines.append(f"  cut edge {edge}: h(F) = {_tup(hf)}")
    if r.methods_agree is not None:
        lines.append(f"methods agree: {r.methods_agree}")
    lines += [f"Dehn-Sommerville residuals = {_tup(r.dehn_sommerville)}",
              "Euler cut residuals = "
              + (", ".join(f"edge {k}: {v}" for k, v in sorted(r.euler_cut_residuals.items()))
                 or "none (no non-bridge edge)"),
              f"h' vs Betti residual = {_tup(r.h_prime_residual)}",
              f"h'' vs Betti residual = {_tup(r.h_double_prime_residual)}",
              f"coker (degree 2) = {r.restriction.coker_deg2}",
              f"ker (degree 4) = {r.restriction.ker_deg4}",
              f"quotient ranks (degrees 0,2,..,2n) = {_tup(r.restriction.quotient_ranks)}",
              f"not an isomorphism in degrees {_tup(r.restriction.non_iso_degrees)}",
              f"equivariant ranks (degrees 0..{len(r.equivariant_series) - 1}) = "
              f"{_tup(r.equivariant_series)}"]
    return "\n".join(lines)


def cmd_invariants(args):
    t, _ = _load_valid(args.path)
    try:
        r = invariant_report(t, mode=args.mode, relaxed=args.relaxed)
    except PreconditionError as exc:
        raise _Fail(EXIT_FAIL, f"{exc}\nhint: pass --relaxed for the surviving constraints")
    _emit(args, _invariants_text(r), r.to_dict())
    if r.methods_agree is False:
        return EXIT_FAIL
    return EXIT_OK


def cmd_homology(args):
    t, _ = _load_valid(args.path)
    fp = build_face_classes(t)
    oc = order_complex(fp)
    got = homology(chain_complex(oc, reduced=True)).padded(t.n)
    b1 = graph_cycle_rank(t)
    try:
        want = expected_dual_homology(t.n, b1)
    except DimensionError as exc:
        raise _Fail(EXIT_FAIL, str(exc))
    match = got.ranks == want.ranks and got.torsion_free
    r_min = acyclicity_report(fp).r_min
    text = "\n".join([
        f"template: {t.label}", f"n = {t.n}, b1 = {b1}, r_min = {r_min}",
        f"order complex simplices by dimension = {_tup(oc.count_by_dim())}",
        f"computed: {got}", f"expected: {want}",
        f"torsion free: {got.torsion_free}", f"match: {match}"])
    payload = {"label": t.label, "n": t.n, "b1": b1, "r_min": r_min,
               "simplices": list(oc.count_by_dim()),
               "computed": {"ranks": list(got.ranks),
                            "torsion": [list(x) for x in got.torsion]},
               "expected": {"ranks": list(want.ranks)},
               "torsion_free": got.torsion_free, "match": match}
    _emit(args, text, payload)
    return EXIT_OK if match else EXIT_FAIL


def cmd_cut(args):
    t, _ = _load_valid(args.path)
    try:
        res = cut(t, args.edge, allow_bridge=args.allow_bridge)
    except IndexError as exc:
        raise _Fail(EXIT_FAIL, str(exc))
    except PreconditionError as exc:
        raise _Fail(EXIT_FAIL, f"{exc}\nhint: pass --allow-bridge to cut it anyway")
    fileformat.save(res.template, args.out)
    back, _ = fileformat.load(args.out)
    if fileformat.template_to_dict(back) != fileformat.template_to_dict(res.template):
        raise _Fail(EXIT_FAIL, "written file does not parse back to the cut template")
    n = t.n
    hf = tuple(res.folded_facet_h) + (0,)
    deltas = {f"b_{2 * i}": hf[i] + hf[i - 1] for i in range(1, n)}
    if not res.was_bridge:
        deltas["b_1"] = deltas[f"b_{2 * n - 1}"] = -1
    r_min = acyclicity_report(build_face_classes(t)).r_min
    caveat = None
    if r_min > 1:
        rng = (f"{r_min} <= i <= {n - r_min}" if r_min <= n - r_min
               else "no i (the range is empty)")
        caveat = f"note: r_min = {r_min}, so the even changes are only guaranteed for {rng}"
    text = "\n".join(
        [f"cut edge {args.edge} ({res.edge.v1}:{res.edge.f1} -- {res.edge.v2}:{res.edge.f2})",
         f"folded facet h = {_tup(res.folded_facet_h)}",
         f"bridge: {res.was_bridge}",
         "predicted Betti changes M -> M': "
         + ", ".join(f"{k} {v:+d}" for k, v in deltas.items()),
         f"written to {args.out}"] + ([caveat] if caveat else []))
    payload = {"edge": args.edge, "folded_facet_h": list(res.folded_facet_h),
               "bridge": res.was_bridge, "betti_deltas": deltas, "r_min": r_min,
               "out": str(args.out)}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_ring4d(args):
    t, _ = _load_valid(args.path)
    try:
        rp = ring_presentation(t)
    except PreconditionError as exc:
        raise _Fail(EXIT_FAIL, str(exc))
    d2, d4 = rp.degree2, rp.degree4
    lines = [f"template: {t.label}", f"b1 = {rp.b1}, boundary circles = {len(rp.cycles)}, "
             f"orbit surface genus = {rp.genus}", "generators:"]
    j = 0
    for k, c in enumerate(rp.cycles):
        for i in range(len(c)):
            lines.append(f"  {d2.generators[j]}  normal {_tup(c.normals[i])}  "
                         f"(circle {k + 1}, facet class {c.classes[i]})")
            j += 1
    lines.append("degree-2 relation matrix (rows e1*, e2*):")
    lines += [f"  {list(row)}" for row in d2.relation_matrix]
    lines.append(f"degree-2 relations (dual basis of v1, v2): {', '.join(d2.relations)}")
    lines.append(f"degree-2 rank = {d2.rank}")
    lines.append(f"degree-4 rank = {d4.rank}"
                 + (f", torsion {_tup(d4.torsion)}" if d4.torsion else ""))
    lines.append("squares: " + ", ".join(str(s) for s in rp.squares))
    for k, ex in enumerate(d4.mu_expressions):
        lines.append(f"μ{k + 1} = " + " = ".join(ex))
    if not d4.mu_det_agrees:
        lines.append("note: det-normalised products differ from μ by a sign on some circle")
    lines.append("kernel basis (degree 4): "
                 + (", ".join(f"[{lab}]" for lab in d4.kernel_labels) or "empty"))
    lines.append(f"kernel rank = {d4.kernel_rank}")
    payload = {
        "label": t.label, "b1": rp.b1, "genus": rp.genus,
        "cycles": [{"classes": list(c.classes), "normals": [list(v) for v in c.normals],
                    "determinants": list(c.dets), "vertex_signs": list(c.vertex_signs)}
                   for c in rp.cycles],
        "generators": list(d2.generators),
        "degree2": {"relation_matrix": [list(r) for r in d2.relation_matrix],
                    "relations": list(d2.relations), "rank": d2.rank},
        "degree4": {"monomials": list(d4.monomials), "rank": d4.rank,
                    "torsion": list(d4.torsion),
                    "mu": [list(ex) for ex in d4.mu_expressions],
                    "mu_det_agrees": d4.mu_det_agrees,
                    "kernel_basis": list(d4.kernel_labels),
                    "kernel_rank": d4.kernel_rank},
        "squares": [str(s) for s in rp.squares],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="toric-origami",
                                description="Invariants of toric origami templates.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("path", help="template file or fixture name (e.g. t_ring4)")
        sp.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the template axioms")
    sp = add("invariants", cmd_invariants, "face numbers, Betti numbers and more")
    sp.add_argument("--mode", choices=("closed", "inductive", "both"), default="both")
    sp.add_argument("--relaxed", action="store_true",
                    help="report only surviving constraints when a face is not acyclic")
    add("homology", cmd_homology, "homology of the boundary vs the expected pattern")
    sp = add("cut", cmd_cut, "remove a fold and write the new template")
    sp.add_argument("--edge", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--allow-bridge", action="store_true")
    add("ring4d", cmd_ring4d, "degree 2 and 4 ring presentation (n = 2)")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        if exc.payload is not None and args.format == "json":
            print(json.dumps(exc.payload, indent=2, ensure_ascii=False))
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (TemplateParseError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapabilityError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except OrigamiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
