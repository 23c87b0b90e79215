"""Command-line front end.

Input files are JSON.  A presentation file looks like::

    {"field": "Q",
     "presentation": {"vertices": ["1"],
                      "arrows": [{"name": "x", "source": "1", "target": "1", "degree": 1}],
                      "relations": [[[1, ["x", "x"]]]],
                      "path_length_bound": 3},
     "grading": {"arrow_degrees": {"x": 1}}}

and a construction file replaces "presentation" by "construct" plus parameters.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction
import importlib.resources
import json
import sys
from typing import Optional

import numpy as np

from . import algcore, constructions, derlie, grading, homo, regrade
from .errors import GradAlgError, InputError, NegativeCycle, ParseError, Unsupported, ValidationError
from .exactla import Field

TOP_KEYS = {"field", "presentation", "grading", "construct", "twist", "name", "description",
            "base", "n", "group", "p", "invariants", "action"}
CONSTRUCT_KEYS = {
    "trivext": {"base"},
    "exterior": {"n", "group"},
    "pgroup": {"p", "invariants"},
    "pgroup_semidirect": {"p", "invariants", "action"},
}


@dataclass
class Directive:
    kind: str
    params: dict
    field: Field


@dataclass
class Loaded:
    field: Field
    presentation: Optional[algcore.QuiverPresentation] = None
    directive: Optional[Directive] = None
    name: str = ""
    explicit_grading: bool = False


# parsing ----------------------------------------------------------------------------


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None


def _expect(cond, message, location):
    if not cond:
        raise ValidationError(message, location)


def _scalar(x, location):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ValidationError("coefficient must be an integer or a fraction string", location)
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"bad coefficient {x!r}", location) from None


def _field(value, location) -> Field:
    try:
        return Field.parse(value)
    except (ValueError, TypeError) as e:
        raise ValidationError(str(e), location) from None


def _presentation(doc, F: Field, arrow_degrees, location="$.presentation"):
    _expect(isinstance(doc, dict), "presentation must be an object", location)
    extra = set(doc) - {"vertices", "arrows", "relations", "path_length_bound"}
    _expect(not extra, f"unknown keys {sorted(extra)}", location)
    verts = doc.get("vertices")
    _expect(isinstance(verts, list) and verts, "vertices must be a nonempty list", location + ".vertices")
    verts = [str(v) for v in verts]
    _expect(len(set(verts)) == len(verts), "duplicate vertex labels", location + ".vertices")
    arrows = []
    for k, a in enumerate(doc.get("arrows", [])):
        loc = f"{location}.arrows[{k}]"
        if isinstance(a, list):
            _expect(len(a) in (3, 4), "arrow list must be [name, source, target(, degree)]", loc)
            a = dict(zip(["name", "source", "target", "degree"], a))
        _expect(isinstance(a, dict), "arrow must be an object or a list", loc)
        extra = set(a) - {"name", "source", "target", "degree"}
        _expect(not extra, f"unknown keys {sorted(extra)}", loc)
        for key in ("name", "source", "target"):
            _expect(key in a, f"missing {key!r}", loc)
        name = str(a["name"])
        for key in ("source", "target"):
            _expect(str(a[key]) in verts, f"arrow {name!r} references unknown vertex {a[key]!r}",
                    f"{loc}.{key}")
        deg = a.get("degree", 1)
        _expect(isinstance(deg, int) and not isinstance(deg, bool), "degree must be an integer",
                loc + ".degree")
        if name in arrow_degrees:
            deg = arrow_degrees[name]
        arrows.append(algcore.Arrow(name, str(a["source"]), str(a["target"]), deg))
    names = [a.name for a in arrows]
    _expect(len(set(names)) == len(names), "duplicate arrow names", location + ".arrows")
    for nm in arrow_degrees:
        _expect(nm in names, f"grading mentions unknown arrow {nm!r}", "$.grading.arrow_degrees")
    rels = []
    for k, r in enumerate(doc.get("relations", [])):
        loc = f"{location}.relations[{k}]"
        _expect(isinstance(r, list) and r, "relation must be a nonempty list of [coefficient, path]", loc)
        terms = []
        for m, term in enumerate(r):
            tloc = f"{loc}[{m}]"
            _expect(isinstance(term, list) and len(term) == 2, "term must be [coefficient, path]", tloc)
            coef = _scalar(term[0], tloc + "[0]")
            path = term[1]
            _expect(isinstance(path, list) and all(isinstance(x, str) for x in path),
                    "path must be a list of arrow names", tloc + "[1]")
            for x in path:
                _expect(x in names, f"relation uses unknown arrow {x!r}", tloc + "[1]")
            terms.append((coef, tuple(path)))
        rels.append(tuple(terms))
    bound = doc.get("path_length_bound")
    _expect(isinstance(bound, int) and not isinstance(bound, bool) and bound > 0,
            "path_length_bound must be a positive integer", location + ".path_length_bound")
    return algcore.QuiverPresentation(F, verts, arrows, rels, bound)


def _loaded_from_doc(doc, field_override=None, location="$") -> Loaded:
    _expect(isinstance(doc, dict), "top level must be an object", location)
    if "twist" in doc:
        raise Unsupported("twisted group algebras are not supported")
    extra = set(doc) - TOP_KEYS
    _expect(not extra, f"unknown keys {sorted(extra)}", location)
    F = field_override or _field(doc.get("field", "Q"), location + ".field")
    name = str(doc.get("name", ""))
    has_p = "presentation" in doc
    has_c = "construct" in doc
    _expect(has_p != has_c, "exactly one of 'presentation' and 'construct' is required", location)
    gdoc = doc.get("grading", {})
    _expect(isinstance(gdoc, dict) and set(gdoc) <= {"arrow_degrees"},
            "grading must be {\"arrow_degrees\": {...}}", location + ".grading")
    arrow_degrees = gdoc.get("arrow_degrees", {})
    _expect(isinstance(arrow_degrees, dict)
            and all(isinstance(v, int) and not isinstance(v, bool) for v in arrow_degrees.values()),
            "arrow_degrees must map arrow names to integers", location + ".grading.arrow_degrees")
    if has_p:
        leftover = set(doc) - {"field", "presentation", "grading", "name", "description"}
        _expect(not leftover, f"keys {sorted(leftover)} only apply to constructions", location)
        pres = _presentation(doc["presentation"], F, arrow_degrees, location + ".presentation")
        explicit = bool(arrow_degrees) or any(
            isinstance(a, dict) and "degree" in a or isinstance(a, list) and len(a) == 4
            for a in doc["presentation"].get("arrows", []))
        return Loaded(F, presentation=pres, name=name, explicit_grading=explicit)
    kind = doc["construct"]
    _expect(kind in CONSTRUCT_KEYS, f"unknown construction {kind!r}", location + ".construct")
    _expect(not arrow_degrees, "grading overrides apply to presentations only", location + ".grading")
    need = CONSTRUCT_KEYS[kind]
    allowed = need | {"field", "construct", "name", "description", "grading"}
    leftover = set(doc) - allowed
    _expect(not leftover, f"keys {sorted(leftover)} do not apply to {kind}", location)
    missing = need - set(doc)
    _expect(not missing, f"missing keys {sorted(missing)}", location)
    params = {k: doc[k] for k in need}
    if kind == "trivext":
        params["base"] = _loaded_from_doc(doc["base"], field_override or F, location + ".base")
    elif kind == "exterior":
        n = doc["n"]
        _expect(isinstance(n, int) and n >= 0, "n must be a nonnegative integer", location + ".n")
        grp = doc["group"]
        _expect(grp in ("trivial", "pm1") or (isinstance(grp, dict) and set(grp) == {"generators"}),
                "group must be 'trivial', 'pm1' or {\"generators\": [...]}", location + ".group")
    else:
        p = doc["p"]
        _expect(isinstance(p, int) and p > 1, "p must be a prime", location + ".p")
        inv = doc["invariants"]
        _expect(isinstance(inv, list) and inv and all(isinstance(r, int) and r > 0 for r in inv),
                "invariants must be a nonempty list of positive integers", location + ".invariants")
    return Loaded(F, directive=Directive(kind, params, F), name=name)


def parse_presentation(path, field_override: Field = None) -> Loaded:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return _loaded_from_doc(_parse_json(text), field_override)


def parse_text(text: str, field_override: Field = None) -> Loaded:
    return _loaded_from_doc(_parse_json(text), field_override)


# building ---------------------------------------------------------------------------


@dataclass
class Built:
    algebra: algcore.AlgebraRep
    grading: grading.Grading
    form: Optional[np.ndarray] = None
    extra: object = None


def build(loaded: Loaded) -> Built:
    if loaded.presentation is not None:
        a = algcore.build_from_presentation(loaded.presentation)
        degs = {x.name: x.degree for x in loaded.presentation.arrows}
        return Built(a, grading.grading_from_paths(a, degs))
    d = loaded.directive
    F = d.field
    if d.kind == "trivext":
        # the base keeps its own grading only when the file states one
        base_doc = d.params["base"]
        base = build(base_doc)
        gb = base.grading if base_doc.explicit_grading else None
        a, g, t = constructions.trivial_extension(base.algebra, gb)
        return Built(a, g, t)
    if d.kind == "exterior":
        n, grp = d.params["n"], d.params["group"]
        if grp == "trivial":
            G = constructions.GroupRep.trivial(F, n)
        elif grp == "pm1":
            G = constructions.GroupRep.plus_minus(F, n)
        else:
            G = constructions.GroupRep(F, grp["generators"], n)
        x = constructions.exterior_skew(n, G)
        return Built(x.algebra, x.grading, x.form, x)
    if d.kind == "pgroup":
        a, g = constructions.abelian_pgroup_algebra(d.params["p"], d.params["invariants"], F)
        return Built(a, g)
    a, g = constructions.pgroup_semidirect(d.params["p"], d.params["invariants"],
                                          d.params["action"], F)
    return Built(a, g)


# reports ------------------------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, Fraction):
        return str(x)
    return x


def _layers_json(layers):
    out = {}
    for v, ls in layers.items():
        out[v] = [[{"simple": w, "degree": d, "multiplicity": m}
                   for (w, d), m in sorted(layer.items(), key=lambda e: (algcore.natural_key(e[0][0]), e[0][1]))]
                  for layer in ls]
    return out


def _fmt_dims(prof):
    return ", ".join(f"{d}:{k}" for d, k in prof.items())


class Report:
    def __init__(self):
        self.lines = []
        self.data = {}

    def line(self, text):
        self.lines.append(text)

    def put(self, key, value):
        self.data[key] = _jsonable(value)


def _cmd_check(b: Built, args, rep: Report):
    problems = algcore.validate_algebra(b.algebra) + grading.validate_grading(b.algebra, b.grading)
    rep.put("dim", b.algebra.dim)
    rep.put("problems", problems)
    rep.line(f"dimension {b.algebra.dim}")
    if b.algebra.idempotents is not None:
        labels = algcore.sorted_labels(b.algebra.idempotents)
        rep.put("simples", labels)
        rep.line("simples: " + ", ".join(labels))
    for p in problems:
        rep.line("violation: " + p)
    rep.line("valid" if not problems else f"{len(problems)} violations")
    return 0 if not problems else 1


def _cmd_radical(b, args, rep):
    J = algcore.radical(b.algebra)
    dims = algcore.dims(algcore.radical_series(b.algebra))
    rep.put("radical_dim", J.shape[1])
    rep.put("radical_series_dims", list(dims))
    rep.line(f"dim J = {J.shape[1]}")
    rep.line("radical series dims: " + ", ".join(map(str, dims)))
    return 0


def _cmd_socle(b, args, rep):
    dims = algcore.dims(algcore.socle_series(b.algebra))
    rep.put("socle_series_dims", list(dims))
    rep.put("convention", "soc^i = {x : J^i x = 0}")
    rep.line("socle series dims (soc^i = {x : J^i x = 0}): " + ", ".join(map(str, dims)))
    return 0


def _cmd_center(b, args, rep):
    Z = algcore.center(b.algebra)
    rep.put("center_dim", Z.shape[1])
    rep.line(f"dim Z = {Z.shape[1]}")
    return 0


def _cmd_profile(b, args, rep):
    prof, n = grading.degree_profile(b.algebra, b.grading)
    rep.put("profile", {str(k): v for k, v in prof.items()})
    rep.put("n_A", n)
    rep.line(f"graded dimensions {{{_fmt_dims(prof)}}}, n_A = {n}")
    return 0


def _cmd_assoc_graded(b, args, rep):
    gr, g = grading.associated_graded(b.algebra)
    dims = grading.graded_dims(gr, g)
    rep.put("graded_dims", list(dims))
    rep.line("associated graded dims: " + ", ".join(map(str, dims)))
    return 0


def _cmd_cartan(b, args, rep):
    g = b.grading if args.graded or args.identity else None
    C = homo.cartan_graded(b.algebra, g)
    D = C.det()
    rep.put("cartan", C.to_json())
    rep.put("det", D.to_json())
    rep.line(f"C = {C}")
    rep.line(f"det = {D}")
    if not args.identity:
        return 0
    r = homo.cartan_identity_check(b.algebra, b.grading)
    rep.put("identity", r.to_json())
    for ln in r.lines:
        rep.line(ln)
    rep.line("identity " + ("PASS" if r.passed else "FAIL"))
    return 0 if r.passed else 1


def _cmd_ext(b, args, rep):
    q = homo.ext1_graded(b.algebra, b.grading)
    rep.put("ext1", q.to_json())
    for i, j, d, m in q.edges():
        rep.line(f"dim Ext^1(S_{i}, S_{j}<{-d}>) = {m}")
    if not q.data:
        rep.line("no extensions between simples")
    return 0


def _cmd_regrade(b, args, rep):
    out = regrade.normalize_positive(b.algebra, b.grading)
    if isinstance(out, regrade.NegativeCycleWitness):
        raise NegativeCycle(out)
    rep.put("shifts", out.shifts)
    rep.put("degrees", list(out.grading.degrees))
    rep.line("shifts: " + ", ".join(f"{k}={v}" for k, v in sorted(out.shifts.items(),
                                                                  key=lambda e: algcore.natural_key(e[0]))))
    prof, n = grading.degree_profile(b.algebra, out.grading)
    rep.line(f"positive grading with dimensions {{{_fmt_dims(prof)}}}")
    return 0


def _cmd_trivext(b, args, rep):
    a, g, t = constructions.trivial_extension(b.algebra, b.grading)
    prof, n = grading.degree_profile(a, g)
    ok = homo.is_symmetrizing(a, t)
    rep.put("dim", a.dim)
    rep.put("profile", {str(k): v for k, v in prof.items()})
    rep.put("symmetric", ok)
    rep.line(f"T(A): dimension {a.dim}, graded dimensions {{{_fmt_dims(prof)}}}")
    rep.line("canonical form t(a, f) = f(1) is symmetrizing" if ok else "form check FAILED")
    return 0 if ok else 1


def _cmd_recognize(b, args, rep):
    t = b.form
    if t is None:
        r = homo.find_symmetrizing_form(b.algebra, b.grading, seed=args.seed)
        if r.status != "present":
            raise GradAlgError(f"no symmetrizing form available ({r.status}: {r.reason})")
        t = r.form
    iso = constructions.recognize_trivial_extension(b.algebra, b.grading, t)
    rep.put("phi", iso.phi)
    rep.put("degree_zero_dim", iso.base.dim)
    rep.line(f"isomorphic to T(A_0) with dim A_0 = {iso.base.dim}; phi verified multiplicative")
    return 0


def _cmd_construct(b, args, rep):
    a = b.algebra
    prof, n = grading.degree_profile(a, b.grading)
    rep.put("dim", a.dim)
    rep.put("profile", {str(k): v for k, v in prof.items()})
    rep.put("simples", algcore.sorted_labels(a.idempotents) if a.idempotents else None)
    rep.line(f"dimension {a.dim}, graded dimensions {{{_fmt_dims(prof)}}}, n_A = {n}")
    if a.idempotents:
        rep.line("idempotents: " + ", ".join(algcore.sorted_labels(a.idempotents)))
    if isinstance(b.extra, constructions.ExteriorSkew):
        pred = constructions.exterior_symmetric_predicate(b.extra.group.n, b.extra.group)
        rep.put("symmetric_predicate", pred)
        rep.line(f"|G| = {b.extra.group.order}; symmetric by the SL/scalar criterion: {pred}")
    return 0


def _cmd_gldim(b, args, rep):
    d = homo.global_dimension(b.algebra, args.cap)
    value = f">={d.bound}" if isinstance(d, homo.AtLeast) else d
    rep.put("global_dimension", value)
    rep.line(f"global dimension {d}")
    return 0


def _cmd_ext_vanishing(b, args, rep):
    r = homo.ext_vanishing_bound_check(b.algebra, b.grading, args.cap)
    rep.put("report", r.to_json())
    rep.line(f"gldim A_0 = {r.gldim_degree_zero}; checked {len(r.checks)} groups Ext^i(S, T<0>) "
             f"for {r.gldim_degree_zero + 1} <= i <= {r.cap}")
    for v, w, i, x in r.checks:
        if x:
            rep.line(f"nonzero: Ext^{i}(S_{v}, S_{w}<0>) has dim {x}")
    rep.line("PASS" if r.passed else "FAIL")
    return 0 if r.passed else 1


def _cmd_cyclic(b, args, rep):
    rows = homo.cyclic_cotangent_dims(b.algebra, b.grading, args.nmax)
    rep.put("cyclic", [{"n": n, "formula": f, "direct": d} for n, f, d in rows])
    ok = all(f == d for _, f, d in rows)
    for n, f, d in rows:
        rep.line(f"n={n}: closed walks {f}, cyclic tensor dim {d}" + ("" if f == d else "  MISMATCH"))
    return 0 if ok else 1


def _cmd_hh1(b, args, rep):
    r = derlie.derivation_report(b.algebra)
    rep.put("derivations", r.to_json())
    rep.line(str(r))
    rep.line(str(r.outer))
    return 0


def _cmd_nakayama(b, args, rep):
    nak = homo.nakayama(b.algebra, b.grading)
    rep.put("nakayama", nak.to_json())
    rep.line("nu: " + ", ".join(f"{k}->{v}" for k, v in
                                sorted(nak.nu.items(), key=lambda e: algcore.natural_key(e[0]))))
    rep.line(f"shift n = {nak.shift} (n_A = {nak.n_A})")
    return 0


def _cmd_symform(b, args, rep):
    r = homo.find_symmetrizing_form(b.algebra, b.grading, seed=args.seed)
    rep.put("symform", r.to_json())
    rep.line(f"{r.status}: {r.reason}")
    if r.form is not None:
        terms = [f"{x} ({b.algebra.labels[i]})^*" for i, x in enumerate(r.form) if x != 0]
        rep.line("t = " + " + ".join(terms))
    return 0


COMMANDS = {
    "check": _cmd_check, "radical": _cmd_radical, "socle": _cmd_socle, "center": _cmd_center,
    "grading-profile": _cmd_profile, "assoc-graded": _cmd_assoc_graded, "cartan": _cmd_cartan,
    "ext": _cmd_ext, "regrade": _cmd_regrade, "trivext": _cmd_trivext,
    "recognize-trivext": _cmd_recognize, "construct": _cmd_construct, "gldim": _cmd_gldim,
    "ext-vanishing": _cmd_ext_vanishing, "cyclic": _cmd_cyclic, "hh1": _cmd_hh1,
    "nakayama": _cmd_nakayama, "symform": _cmd_symform,
}


def _cmd_lemmefonction(path, args, rep):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = _parse_json(fh.read())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    _expect(isinstance(doc, dict) and set(doc) == {"nodes", "f"}, "expected keys 'nodes' and 'f'", "$")
    nodes = [str(x) for x in doc["nodes"]]
    f = doc["f"]
    _expect(isinstance(f, list) and len(f) == len(nodes)
            and all(isinstance(r, list) and len(r) == len(nodes) for r in f),
            "f must be a square matrix matching nodes", "$.f")
    _expect(all(isinstance(x, int) for r in f for x in r), "entries must be integers", "$.f")
    t = regrade.DistanceTable.from_matrix(nodes, f)
    d = regrade.lemmefonction_solve(t)
    shifted = regrade.shifted_table(t, d)
    rep.put("d", d)
    rep.put("shifted", [[shifted.f[(x, y)] for y in nodes] for x in nodes])
    rep.line("d: " + ", ".join(f"{x}={d[x]}" for x in nodes))
    for x in nodes:
        rep.line("  ".join(str(shifted.f[(x, y)]) for y in nodes))
    return 0


def default_catalogue_path():
    return importlib.resources.files("gradalg") / "data" / "derived_pairs.json"


def _cmd_pairs(path, args, rep):
    text = (open(path, encoding="utf-8").read() if path
            else default_catalogue_path().read_text(encoding="utf-8"))
    doc = _parse_json(text)
    _expect(isinstance(doc, dict) and isinstance(doc.get("pairs"), list),
            "catalogue must be {\"pairs\": [...]}", "$")
    results = []
    ok = True
    for k, pair in enumerate(doc["pairs"]):
        loc = f"$.pairs[{k}]"
        _expect(isinstance(pair, dict) and {"id", "first", "second"} <= set(pair),
                "pair needs 'id', 'first' and 'second'", loc)
        vals = []
        for side in ("first", "second"):
            b = build(_loaded_from_doc(pair[side], args.field, f"{loc}.{side}"))
            vals.append(derlie.out_lie_dim(b.algebra))
        same = vals[0] == vals[1]
        ok &= same
        results.append({"id": pair["id"], "first": vals[0], "second": vals[1], "equal": same})
        rep.line(f"{pair['id']}: dim Der/Inn {vals[0]} vs {vals[1]} "
                 f"({'equal' if same else 'DIFFERENT'}; infinitesimal proxy)")
    rep.put("pairs", results)
    return 0 if ok else 1


def _parser():
    p = argparse.ArgumentParser(prog="gradalg", description="Graded finite-dimensional algebras.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--field", help="override the ground field (Q or F<p>)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("file")
        if name == "cartan":
            s.add_argument("--graded", action="store_true")
            s.add_argument("--identity", action="store_true")
        if name in ("gldim", "ext-vanishing"):
            s.add_argument("--cap", type=int, default=6)
        if name == "cyclic":
            s.add_argument("--nmax", type=int, default=4)
    s = sub.add_parser("lemmefonction")
    s.add_argument("file")
    s = sub.add_parser("pairs-check")
    s.add_argument("file", nargs="?")
    return p


def run_command(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    rep = Report()
    try:
        args.field = Field.parse(args.field) if args.field else None
    except ValueError as e:
        print(f"usage error: {e}", file=out)
        return 2
    try:
        if args.command == "lemmefonction":
            code = _cmd_lemmefonction(args.file, args, rep)
        elif args.command == "pairs-check":
            code = _cmd_pairs(args.file, args, rep)
        else:
            loaded = parse_presentation(args.file, args.field)
            built = build(loaded)
            rep.put("field", str(built.algebra.field))
            code = COMMANDS[args.command](built, args, rep)
    except InputError as e:
        _emit_error(out, args, "input", e, 2)
        return 2
    except NegativeCycle as e:
        _emit_error(out, args, "negative_cycle", e, 1, witness=e.witness.to_json())
        return 1
    except GradAlgError as e:
        _emit_error(out, args, type(e).__name__, e, 1)
        return 1
    if args.json:
        rep.data["exit_code"] = code
        print(json.dumps(rep.data, sort_keys=True), file=out)
    else:
        for ln in rep.lines:
            print(ln, file=out)
    return code


def _emit_error(out, args, kind, exc, code, witness=None):
    if args.json:
        data = {"error": kind, "message": str(exc), "exit_code": code}
        if witness is not None:
            data["witness"] = witness
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print(f"error ({type(exc).__name__}): {exc}", file=out)


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
