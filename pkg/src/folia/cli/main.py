"""Command-line entry point: ``folia <subcommand> ...``.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on bad input.  With ``--json`` errors are printed as JSON objects.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from ..algebra.branch import factor_at_node, solve_smooth_branch
from ..algebra.poly import BiPoly
from ..algebra.series import DEFAULT_TRUNCATION_CAP
from ..blowup import DEFAULT_MAX_DEPTH, ledger_to_surface, reduce_seidenberg
from ..errors import (
    DepthExceeded,
    FoliaError,
    InsufficientTruncation,
    ModelInconsistency,
    NotDecomposable,
    NotSmoothHere,
    TreeIncomplete,
)
from ..germ import (
    FoliationGerm,
    classify_point,
    cs_index,
    fmt_point,
    singular_locus,
    tang_index,
    z_index,
)
from ..models import RiccatiModel, riccati_report
from ..surface import (
    QDivisor,
    chi_orb,
    kf_degree,
    load_scene,
    verify_camacho_sad,
    zariski_decompose,
)
from .parser import ExprSyntaxError, parse_foliation, parse_point, parse_polynomial

OK, CHECK_FAILED, INPUT_ERROR = 0, 1, 2


class InputError(FoliaError):
    pass


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout
        self.color = bool(os.environ.get("FOLIA_COLOR")) and not as_json

    def verdict(self, ok: bool) -> str:
        word = "PASS" if ok else "FAIL"
        if self.color:
            return f"\033[{32 if ok else 31}m{word}\033[0m"
        return word

    def emit_json(self, data) -> None:
        self.stream.write(json.dumps(data, sort_keys=True, indent=2) + "\n")

    def line(self, text: str = "") -> None:
        self.stream.write(text + "\n")


def _atomic_write(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=".folia-")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, target)


def _read_input(args) -> str:
    if getattr(args, "expr", None) is not None:
        return args.expr
    if getattr(args, "input", None) is None:
        raise InputError("no input: give a file or --expr")
    try:
        return Path(args.input).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from exc


def _foliation(args, out):
    parsed = parse_foliation(_read_input(args).strip())
    if parsed.warnings and args.strict:
        raise InputError("; ".join(parsed.warnings))
    if not out.as_json:
        for w in parsed.warnings:
            out.line(f"warning: {w}")
    return parsed


def _point_str(p) -> list:
    return [str(p[0]), str(p[1])]


# -- subcommands ---------------------------------------------------------------

def cmd_analyze(args, out) -> int:
    parsed = _foliation(args, out)
    germ = parsed.germ
    locus = singular_locus(germ)
    points = []
    for p in locus.points:
        cls = classify_point(germ.at(p))
        points.append({"point": _point_str(p), "class": cls.to_dict(), "reduced": cls.is_reduced})
    report = {
        "input": str(germ),
        "kind": parsed.kind,
        "warnings": list(parsed.warnings),
        "singular_points": points,
        "residual_factors": [str(r) for r in locus.residual],
        "complete": locus.complete,
    }
    if args.strict and not locus.complete:
        code = CHECK_FAILED
    else:
        code = OK
    if out.as_json:
        out.emit_json(report)
    else:
        out.line(f"foliation: {germ}")
        if not points:
            out.line("no rational singular points")
        for item in points:
            cls = item["class"]
            extra = ", ".join(f"{k}={v}" for k, v in cls.items() if k != "kind")
            out.line(f"  ({item['point'][0]}, {item['point'][1]}): {cls['kind']}" + (f" [{extra}]" if extra else ""))
        for r in report["residual_factors"]:
            out.line(f"  non-rational singular points: {r}")
    return code


def cmd_reduce(args, out) -> int:
    parsed = _foliation(args, out)
    germ = parsed.germ
    if args.at:
        germ = germ.at(parse_point(args.at))
    try:
        tree = reduce_seidenberg(germ, args.max_depth)
    except DepthExceeded as exc:
        return _fail(out, "DepthExceeded", str(exc))
    if args.dot:
        _atomic_write(args.dot, tree.to_dot())
    data = tree.to_dict()
    cs_checks = []
    if tree.complete and tree.events:
        model = ledger_to_surface(tree, args.truncation_cap)
        for c in model.curves:
            if c.invariant:
                rep = verify_camacho_sad(c.id, model)
                cs_checks.append(rep.to_dict())
    data["camacho_sad"] = cs_checks
    ok = tree.complete and all(c["pass"] for c in cs_checks)
    if out.as_json:
        out.emit_json(data)
    else:
        out.line(f"germ: {tree.root}")
        out.line(f"root class: {tree.root_class.kind}; blow-ups: {len(tree.events)}")
        for cid in data["curves"]:
            style = "invariant" if cid["invariant"] else "dicritical"
            nb = ", ".join(sorted(cid["adjacency"]))
            out.line(f"  {cid['id']}: self-intersection {cid['self_intersection']}, {style}"
                     + (f", meets {nb}" if nb else ""))
        for c in cs_checks:
            out.line(f"  CS sum on {c['curve']}: {c['cs_sum']}  {out.verdict(c['pass'])}")
        for e, r in tree.unresolved:
            out.line(f"  non-rational centre on {e}: {r}")
        out.line(f"reduction {'complete' if tree.complete else 'incomplete'}")
        if args.dot:
            out.line(f"dual graph written to {args.dot}")
    return OK if ok else CHECK_FAILED


def _curve_points(germ: FoliationGerm, f: BiPoly, invariant: bool) -> list:
    if invariant:
        return [p for p in singular_locus(germ).points if f(*p) == 0]
    contact = FoliationGerm(f, germ.apply(f))
    if not contact.removed_factor.is_constant():
        return []
    return list(singular_locus(contact).points)


def _branches(f: BiPoly, p, order):
    try:
        return [solve_smooth_branch(f, p, order)]
    except NotSmoothHere:
        return list(factor_at_node(f, p, order))


def cmd_indices(args, out) -> int:
    parsed = _foliation(args, out)
    germ = parsed.germ
    f = parse_polynomial(args.curve)
    if f.is_constant():
        raise InputError("the curve equation must be nonconstant")
    invariant = _is_invariant(germ, f)
    points = [parse_point(args.at)] if args.at else _curve_points(germ, f, invariant)
    rows = []
    for p in points:
        if f(*p) != 0:
            raise InputError(f"{fmt_point(p)} is not on the curve")
        if invariant:
            if not germ.at(p).is_singular():
                rows.append({"point": _point_str(p), "Z": 0, "CS": None, "branches": []})
                continue
            branches = []
            for b in _branches(f, p, 8):
                branches.append({"Z": z_index(germ.at(p), b, args.truncation_cap),
                                 "CS": str(cs_index(germ.at(p), b, args.truncation_cap))})
            z = sum(b["Z"] for b in branches) - 2 * (len(branches) - 1)
            cs = sum(Fraction(b["CS"]) for b in branches) + 2 * (len(branches) - 1)
            rows.append({"point": _point_str(p), "Z": z, "CS": str(cs), "branches": branches})
        else:
            rows.append({"point": _point_str(p), "tang": str(tang_index(germ, f, p))})
    report = {"foliation": str(germ), "curve": str(f), "invariant": invariant, "points": rows}
    if out.as_json:
        out.emit_json(report)
    else:
        out.line(f"curve {f} is {'invariant' if invariant else 'not invariant'}")
        for r in rows:
            pt = f"({r['point'][0]}, {r['point'][1]})"
            if invariant:
                out.line(f"  {pt}: Z = {r['Z']}, CS = {r['CS']}")
            else:
                out.line(f"  {pt}: tang = {r['tang']}")
    return OK


def _is_invariant(germ: FoliationGerm, f: BiPoly) -> bool:
    vf = germ.apply(f)
    if vf.is_zero():
        return True
    try:
        vf.exact_div(f)
        return True
    except ValueError:
        return False


def _load_scene(args):
    text = _read_input(args)
    return load_scene(text, strict=True)


def cmd_verify(args, out) -> int:
    model, _ = _load_scene(args)
    results, ok = [], True
    for c in model.curves:
        entry = {"curve": c.id, "invariant": c.invariant}
        try:
            entry["chi_orb"] = str(chi_orb(c.id, model))
        except ModelInconsistency as exc:
            entry["chi_orb_error"] = str(exc)
            ok = False
        except FoliaError:
            pass
        if c.invariant and all(r.CS is not None for r in c.records):
            rep = verify_camacho_sad(c.id, model)
            entry["camacho_sad"] = rep.to_dict()
            ok &= rep.passed
        try:
            entry["kf"] = kf_degree(c.id, model).to_dict()
            if entry["kf"].get("tang") is not None and Fraction(entry["kf"]["tang"]) < 0:
                ok = False
        except FoliaError as exc:
            entry["kf_error"] = str(exc)
        results.append(entry)
    report = {"curves": results, "pass": ok, "model_relative": True}
    if out.as_json:
        out.emit_json(report)
    else:
        for e in results:
            parts = [f"{e['curve']}:"]
            if "camacho_sad" in e:
                cs = e["camacho_sad"]
                parts.append(f"CS sum {cs['cs_sum']} vs self-intersection {cs['self_intersection']}"
                             f" (residual {cs['residual']}) {out.verdict(cs['pass'])}")
            if "kf" in e:
                parts.append(f"K_F.C = {e['kf']['kf_degree']}")
            if "chi_orb" in e:
                parts.append(f"chi_orb = {e['chi_orb']}")
            if "chi_orb_error" in e:
                parts.append(f"{out.verdict(False)} {e['chi_orb_error']}")
            out.line("  ".join(parts))
        out.line(f"overall: {out.verdict(ok)}")
    return OK if ok else CHECK_FAILED


def cmd_zariski(args, out) -> int:
    model, divisors = _load_scene(args)
    if args.divisor not in divisors:
        raise InputError(f"scene has no divisor named {args.divisor!r}")
    L = divisors[args.divisor]
    try:
        dec = zariski_decompose(L, model)
    except NotDecomposable as exc:
        return _fail(out, "NotDecomposable", str(exc))
    if out.as_json:
        out.emit_json(dec.to_dict())
    else:
        out.line(f"L = {L}")
        out.line(f"P = {dec.positive}")
        out.line(f"N = {dec.negative}")
        out.line(f"support of N: {', '.join(dec.support) or '(empty)'}")
        out.line("(verdict relative to the curves of the model)")
    return OK


def cmd_riccati(args, out) -> int:
    text = args.model
    if text is None:
        text = _read_input(args)
    elif not text.lstrip().startswith("{") and Path(text).exists():
        text = Path(text).read_text()
    rep = riccati_report(RiccatiModel.from_json(text))
    if out.as_json:
        out.emit_json(rep.to_dict())
    else:
        out.stream.write(rep.table())
    return OK


def _fail(out, kind: str, message: str) -> int:
    if out.as_json:
        out.emit_json({"error": {"type": kind, "message": message}})
    else:
        out.line(f"{out.verdict(False)}: {message}")
    return CHECK_FAILED


# -- argument parsing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--strict", action="store_true", help="treat warnings as errors")
    common.add_argument("--truncation-cap", type=int, default=DEFAULT_TRUNCATION_CAP)

    ap = argparse.ArgumentParser(prog="folia", description="Exact analysis of planar foliations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_expr(p):
        p.add_argument("input", nargs="?", help="file holding the expression")
        p.add_argument("--expr", help="expression given inline")
        return p

    with_expr(sub.add_parser("analyze", parents=[common], help="singular points and their classes"))
    p = with_expr(sub.add_parser("reduce", parents=[common], help="Seidenberg reduction tree"))
    p.add_argument("--dot", help="write the dual graph in DOT format")
    p.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH)
    p.add_argument("--at", help="base point 'a,b' (default origin)")
    p = with_expr(sub.add_parser("indices", parents=[common], help="tang / Z / CS along a curve"))
    p.add_argument("--curve", required=True, help="curve equation in z, w")
    p.add_argument("--at", help="restrict to one point 'a,b'")
    p = sub.add_parser("verify", parents=[common], help="index theorem checks on a scene")
    p.add_argument("input", nargs="?")
    p = sub.add_parser("zariski", parents=[common], help="Zariski decomposition on a scene")
    p.add_argument("input", nargs="?")
    p.add_argument("--divisor", default="L")
    p = sub.add_parser("riccati", parents=[common], help="degree and Kodaira dimension")
    p.add_argument("model", nargs="?", help="JSON object or file")
    p.add_argument("--input", dest="input", help="JSON file")
    return ap


COMMANDS = {
    "analyze": cmd_analyze,
    "reduce": cmd_reduce,
    "indices": cmd_indices,
    "verify": cmd_verify,
    "zariski": cmd_zariski,
    "riccati": cmd_riccati,
}


def run(argv=None, stream=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    out = Output(args.json, stream)
    try:
        return COMMANDS[args.command](args, out)
    except ExprSyntaxError as exc:
        return _input_error(out, type(exc).__name__, exc.detail, exc.offset)
    except (InputError, ValueError, FoliaError) as exc:
        kind = type(exc).__name__
        if isinstance(exc, (TreeIncomplete, InsufficientTruncation)):
            return _fail(out, kind, str(exc))
        return _input_error(out, kind, str(exc))


def _input_error(out, kind, message, offset=None) -> int:
    if out.as_json:
        err = {"type": kind, "message": message}
        if offset is not None:
            err["offset"] = offset
        out.emit_json({"error": err})
    else:
        where = f" at offset {offset}" if offset is not None else ""
        sys.stderr.write(f"error: {message}{where}\n")
    return INPUT_ERROR


def main(argv=None) -> None:
    sys.exit(run(argv))
