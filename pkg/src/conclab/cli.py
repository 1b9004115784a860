"""Command-line front end.

Every operation is exposed as a subcommand with JSON output (canonical:
sorted keys, fixed separators, rationals as "p/q" strings), so identical
inputs produce byte-identical documents.  Exit status is 0 for any
successful computation regardless of verdict, 2 for input validation
errors, and 3 for an INCONCLUSIVE verdict under --strict.

Inputs may be named objects (trefoil, figure-eight, unknot, T(a,b),
"unit"), inline JSON, polynomial expressions, or @path references to JSON
files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import jsonio
from ._intervals import DEFAULT_PRECISION_BITS
from .abgroup import FiniteAbelianGroup, square_root_subgroups
from .dinv import (DTable, VSequence, dbar_table, large_surgery_d_table,
                   lens_d_invariant, lens_d_table, lspace_v_sequence)
from .errors import ConclabError, ValidationError
from .exprparse import named_seifert, parse_poly
from .obstruct import (LinkFamilySpec, obstruct_smooth, obstruct_topological)
from .polyalg import (LaurentPoly, PolySet, branched_homology_order,
                      excluded_primes, normalize_poly)
from .seifert import (SeifertMatrix, alexander_from_seifert, connected_sum,
                      jump_function, jump_locations, minimal_period, mirror,
                      reverse, scale_jump_function, signature_at)

MIN_PRECISION_BITS = 64


# ---------------------------------------------------------------------------
# argument loaders (accept strings from the command line or JSON values
# from batch jobs)


def _load_json_source(spec: str, what: str) -> Any:
    text = spec
    if spec.startswith("@"):
        path = Path(spec[1:])
        if not path.exists():
            raise ValidationError(f"{what}: file not found: {path}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"{what}: malformed JSON ({e})") from None


def load_seifert(spec: Any, what: str = "J") -> SeifertMatrix:
    if isinstance(spec, dict):
        return jsonio.seifert_from_json(spec, what)
    if not isinstance(spec, str):
        raise ValidationError(f"{what}: expected a name, JSON object, or @file")
    named = named_seifert(spec)
    if named is not None:
        return named
    if spec.lstrip().startswith("{") or spec.startswith("@"):
        return jsonio.seifert_from_json(_load_json_source(spec, what), what)
    raise ValidationError(
        f"{what}: unknown knot {spec!r} (try unknot, trefoil, figure-eight, "
        "inline JSON, or @file)")


def load_poly(spec: Any, what: str = "poly") -> LaurentPoly:
    if isinstance(spec, dict):
        return jsonio.poly_from_json(spec, what)
    if not isinstance(spec, str):
        raise ValidationError(f"{what}: expected an expression, JSON object, or @file")
    if spec.lstrip().startswith("{") or spec.startswith("@"):
        return jsonio.poly_from_json(_load_json_source(spec, what), what)
    return parse_poly(spec)


def load_polyset(spec: Any, what: str = "D") -> PolySet:
    if isinstance(spec, dict):
        return jsonio.polyset_from_json(spec, what)
    if not isinstance(spec, str):
        raise ValidationError(f"{what}: expected a name, JSON object, or @file")
    if spec.strip().lower() == "unit":
        return PolySet.of(LaurentPoly.one())
    if spec.lstrip().startswith("{") or spec.startswith("@"):
        return jsonio.polyset_from_json(_load_json_source(spec, what), what)
    polys = tuple(normalize_poly(parse_poly(part))
                  for part in spec.split(";") if part.strip())
    return PolySet(polys)


def load_jump_function(spec: Any, what: str = "jumps"):
    if isinstance(spec, dict):
        return jsonio.jump_function_from_json(spec, what)
    if not isinstance(spec, str):
        raise ValidationError(f"{what}: expected a JSON object or @file")
    return jsonio.jump_function_from_json(_load_json_source(spec, what), what)


def load_dtable(spec: Any, what: str = "table") -> DTable:
    if isinstance(spec, dict):
        return jsonio.dtable_from_json(spec, what)
    if not isinstance(spec, str):
        raise ValidationError(f"{what}: expected a JSON object or @file")
    return jsonio.dtable_from_json(_load_json_source(spec, what), what)


def load_group(spec: Any, what: str = "group") -> FiniteAbelianGroup:
    if isinstance(spec, dict):
        return jsonio.group_from_json(spec, what)
    if isinstance(spec, str):
        if spec.lstrip().startswith("{") or spec.startswith("@"):
            return jsonio.group_from_json(_load_json_source(spec, what), what)
        try:
            factors = tuple(int(part) for part in spec.split(",") if part.strip())
        except ValueError:
            raise ValidationError(f"{what}: malformed invariant factor list {spec!r}") from None
        return FiniteAbelianGroup(factors)
    raise ValidationError(f"{what}: expected invariant factors, JSON, or @file")


def _rational_arg(spec: Any, what: str) -> Fraction:
    return jsonio.parse_rational(spec, what)


def _int_arg(spec: Any, what: str) -> int:
    if isinstance(spec, bool) or spec is None:
        raise ValidationError(f"{what}: expected an integer")
    if isinstance(spec, int):
        return spec
    try:
        return int(str(spec))
    except ValueError:
        raise ValidationError(f"{what}: expected an integer, got {spec!r}") from None


def _transformed_matrix(base: SeifertMatrix, params: dict, prefix: str) -> SeifertMatrix:
    out = base
    if params.get(f"reverse_{prefix}"):
        out = reverse(out)
    if params.get(f"mirror_{prefix}"):
        out = mirror(out)
    return out


# ---------------------------------------------------------------------------
# operations (shared by subcommands and batch jobs)


def op_rd(params: dict, precision: int) -> dict:
    f = load_poly(params.get("poly"), "poly")
    d = _int_arg(params.get("d"), "d")
    return {"poly": jsonio.poly_to_json(f), "d": d,
            "r_d": branched_homology_order(f, d)}


def op_primeset(params: dict, precision: int) -> dict:
    ps = load_polyset(params.get("D"), "D")
    d = _int_arg(params.get("d"), "d")
    out = jsonio.primeset_to_json(excluded_primes(ps, d))
    out["D"] = jsonio.polyset_to_json(ps)
    return out


def op_alexander(params: dict, precision: int) -> dict:
    a = load_seifert(params.get("seifert"), "seifert")
    f = alexander_from_seifert(a)
    return {"seifert": jsonio.seifert_to_json(a),
            "alexander": jsonio.poly_to_json(f),
            "display": str(f),
            "normalized": f.is_alexander_normalized}


def op_signature(params: dict, precision: int) -> dict:
    a = load_seifert(params.get("seifert"), "seifert")
    t = _rational_arg(params.get("t"), "t")
    return {"t": jsonio.rational_str(t), "signature": signature_at(a, t)}


def op_jumps(params: dict, precision: int) -> dict:
    a = load_seifert(params.get("seifert"), "seifert")
    c = _int_arg(params.get("c", 1), "c")
    jf = jump_function(a, c, precision)
    locs = jump_locations(a, precision)
    return {"jump_function": jsonio.jump_function_to_json(jf),
            "locations": [jsonio.position_to_json(p) for p in locs]}


def op_period(params: dict, precision: int) -> dict:
    jf = load_jump_function(params.get("jumps"), "jumps")
    mp = minimal_period(jf)
    out = jsonio.minimal_period_to_json(mp)
    return {"kind": out["kind"], "minimal_period": out["value"]}


def op_sum(params: dict, precision: int) -> dict:
    a = _transformed_matrix(load_seifert(params.get("A"), "A"), params, "a")
    b = _transformed_matrix(load_seifert(params.get("B"), "B"), params, "b")
    return {"sum": jsonio.seifert_to_json(connected_sum(a, b))}


def op_scale(params: dict, precision: int) -> dict:
    jf = load_jump_function(params.get("jumps"), "jumps")
    q = _int_arg(params.get("q"), "q")
    return {"jump_function": jsonio.jump_function_to_json(scale_jump_function(jf, q))}


def op_dlens(params: dict, precision: int) -> dict:
    p = _int_arg(params.get("p"), "p")
    q = _int_arg(params.get("q"), "q")
    orientation = _int_arg(params.get("orientation", 1), "orientation")
    if params.get("i") is not None:
        i = _int_arg(params.get("i"), "i")
        val = orientation * lens_d_invariant(p, q, i)
        return {"p": p, "q": q, "i": i, "d": jsonio.rational_str(val)}
    return {"p": p, "q": q, "table": jsonio.dtable_to_json(lens_d_table(p, q, orientation))}


def op_vseq(params: dict, precision: int) -> dict:
    f = load_poly(params.get("poly"), "poly")
    v = lspace_v_sequence(f)
    return {"poly": jsonio.poly_to_json(f), "v_sequence": list(v.values),
            "genus": v.genus}


def op_dsurgery(params: dict, precision: int) -> dict:
    n = _int_arg(params.get("n"), "n")
    if params.get("v") is not None:
        raw = params.get("v")
        if isinstance(raw, str):
            values = tuple(int(x) for x in raw.split(",") if x.strip())
        else:
            values = tuple(_int_arg(x, "v") for x in raw)
        v = VSequence(values)
    else:
        v = lspace_v_sequence(load_poly(params.get("poly"), "poly"))
    return {"n": n, "v_sequence": list(v.values),
            "table": jsonio.dtable_to_json(large_surgery_d_table(n, v))}


def op_dbar(params: dict, precision: int) -> dict:
    t = load_dtable(params.get("table"), "table")
    return {"dbar": jsonio.dtable_to_json(dbar_table(t))}


def op_metabolizers(params: dict, precision: int) -> dict:
    g = load_group(params.get("group"), "group")
    q = _int_arg(params.get("q"), "q")
    res = square_root_subgroups(g, q)
    return {"group": jsonio.group_to_json(g), "q": q,
            "primary_order": res.primary_order,
            "primary_order_is_square": res.is_square,
            "candidates": [jsonio.subgroup_to_json(s) for s in res.candidates]}


def _family_from_params(params: dict) -> LinkFamilySpec:
    m = _int_arg(params.get("m"), "m")
    j = load_seifert(params.get("J", "unknot"), "J")
    j0 = normalize_poly(load_poly(params.get("J0", "1"), "J0"))
    return LinkFamilySpec(m, j, j0)


def op_obstruct_top(params: dict, precision: int) -> dict:
    spec = _family_from_params(params)
    ps = load_polyset(params.get("D"), "D")
    d = _int_arg(params.get("d", 2), "d")
    return jsonio.topological_verdict_to_json(
        obstruct_topological(spec, ps, d, precision))


def op_obstruct_smooth(params: dict, precision: int) -> dict:
    spec = _family_from_params(params)
    ps = load_polyset(params.get("D"), "D")
    if params.get("dbar") is not None and params.get("computed"):
        raise ValidationError("give either an external dbar table or --computed, not both")
    ext = None
    if params.get("dbar") is not None:
        ext = load_dtable(params.get("dbar"), "dbar")
    return jsonio.smooth_verdict_to_json(obstruct_smooth(spec, ps, ext))


def op_batch(params: dict, precision: int) -> dict:
    jobs_spec = params.get("jobs")
    if isinstance(jobs_spec, str):
        jobs_spec = _load_json_source(jobs_spec, "jobs")
    if isinstance(jobs_spec, dict):
        jobs_spec = jobs_spec.get("jobs")
    if not isinstance(jobs_spec, list):
        raise ValidationError("jobs: expected an array of job objects")
    results = []
    for i, job in enumerate(jobs_spec):
        if not isinstance(job, dict) or "op" not in job:
            raise ValidationError(f"jobs[{i}]: expected an object with an 'op' field")
        op = job["op"]
        if op not in _OPS or op == "batch":
            raise ValidationError(f"jobs[{i}].op: unknown operation {op!r}")
        args = {k: v for k, v in job.items() if k != "op"}
        try:
            results.append({"op": op, "ok": True, "result": _OPS[op](args, precision)})
        except ConclabError as e:
            results.append({"op": op, "ok": False, "error": str(e)})
    return {"results": results}


_OPS: dict[str, Callable[[dict, int], dict]] = {
    "rd": op_rd,
    "primeset": op_primeset,
    "alexander": op_alexander,
    "signature": op_signature,
    "jumps": op_jumps,
    "period": op_period,
    "sum": op_sum,
    "scale": op_scale,
    "dlens": op_dlens,
    "vseq": op_vseq,
    "dsurgery": op_dsurgery,
    "dbar": op_dbar,
    "metabolizers": op_metabolizers,
    "obstruct-top": op_obstruct_top,
    "obstruct-smooth": op_obstruct_smooth,
    "batch": op_batch,
}


# ---------------------------------------------------------------------------
# argument parsing and output


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "human"), default="json")
    common.add_argument("--output", default=None, help="write the report to a file")
    common.add_argument("--strict", action="store_true",
                        help="exit 3 on INCONCLUSIVE verdicts")
    common.add_argument("--precision", type=int, default=None,
                        help=f"bits for interval fallbacks (default "
                             f"{DEFAULT_PRECISION_BITS}, min {MIN_PRECISION_BITS}; "
                             "env CONCLAB_PRECISION)")

    parser = argparse.ArgumentParser(
        prog="conclab",
        description="Exact link-concordance obstruction calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, args):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for flag, kwargs in args:
            p.add_argument(flag, **kwargs)
        return p

    add("rd", "homology order of the d-fold branched cover", [
        ("--poly", dict(required=True, help="polynomial expression, JSON, or @file")),
        ("--d", dict(required=True, type=int, help="covering degree"))])
    add("primeset", "primes excluded by a polynomial collection", [
        ("--D", dict(required=True, help="'unit', 'f1;f2;...', JSON, or @file")),
        ("--d", dict(required=True, type=int, help="prime-power covering degree"))])
    add("alexander", "Alexander polynomial of a Seifert matrix", [
        ("--seifert", dict(required=True, help="named knot, JSON, or @file"))])
    add("signature", "signature at a rational circle parameter", [
        ("--seifert", dict(required=True)),
        ("--t", dict(required=True, help="rational in (0,1), e.g. 1/2"))])
    add("jumps", "signature jump function and jump locations", [
        ("--seifert", dict(required=True)),
        ("--c", dict(type=int, default=1, help="complexity reparametrization"))])
    add("period", "minimal period of a jump function", [
        ("--jumps", dict(required=True, help="jump function JSON or @file"))])
    add("sum", "connected sum of Seifert matrices", [
        ("--A", dict(required=True)), ("--B", dict(required=True)),
        ("--reverse-a", dict(action="store_true")),
        ("--mirror-a", dict(action="store_true")),
        ("--reverse-b", dict(action="store_true")),
        ("--mirror-b", dict(action="store_true"))])
    add("scale", "rescale a jump function by a positive integer", [
        ("--jumps", dict(required=True)), ("--q", dict(required=True, type=int))])
    add("dlens", "lens space correction terms", [
        ("--p", dict(required=True, type=int)), ("--q", dict(required=True, type=int)),
        ("--i", dict(type=int, default=None, help="single label (default: full table)")),
        ("--orientation", dict(type=int, default=1, choices=(1, -1)))])
    add("vseq", "V-sequence of an L-space knot polynomial", [
        ("--poly", dict(required=True))])
    add("dsurgery", "large-surgery correction-term table", [
        ("--n", dict(required=True, type=int)),
        ("--poly", dict(default=None, help="L-space knot polynomial")),
        ("--v", dict(default=None, help="explicit V-sequence, e.g. '1,0'"))])
    add("dbar", "reduced table d(s) - d(0)", [
        ("--table", dict(required=True, help="correction table JSON or @file"))])
    add("metabolizers", "square-root-order subgroups of a primary part", [
        ("--group", dict(required=True, help="invariant factors, e.g. '9' or '3,3'")),
        ("--q", dict(required=True, type=int))])
    add("obstruct-top", "topological pipeline on the L(m,J) family", [
        ("--m", dict(required=True, type=int)),
        ("--J", dict(required=True)),
        ("--D", dict(required=True)),
        ("--J0", dict(default="1")),
        ("--d", dict(type=int, default=2))])
    add("obstruct-smooth", "smooth correction-term pipeline on L(m,J)", [
        ("--m", dict(required=True, type=int)),
        ("--J", dict(default="unknot")),
        ("--D", dict(required=True)),
        ("--J0", dict(default="1")),
        ("--dbar", dict(default=None, help="external reduced table JSON or @file")),
        ("--computed", dict(action="store_true",
                            help="compute the table (requires J = unknot)"))])
    add("batch", "run a list of jobs from JSON", [
        ("--jobs", dict(required=True, help="JSON array of jobs or @file"))])
    return parser


def _params_from_namespace(ns: argparse.Namespace) -> dict:
    skip = {"command", "format", "output", "strict", "precision"}
    return {k: v for k, v in vars(ns).items() if k not in skip and v is not None}


def _render_human(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.extend(_render_human(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
    else:
        lines.append(f"{pad}{json.dumps(value)}")
    return lines


def _resolve_precision(ns: argparse.Namespace) -> int:
    if ns.precision is not None:
        precision = ns.precision
    else:
        env = os.environ.get("CONCLAB_PRECISION")
        if env is not None:
            try:
                precision = int(env)
            except ValueError:
                raise ValidationError(
                    f"CONCLAB_PRECISION: expected an integer, got {env!r}") from None
        else:
            precision = DEFAULT_PRECISION_BITS
    if precision < MIN_PRECISION_BITS:
        raise ValidationError(
            f"precision {precision} below the minimum {MIN_PRECISION_BITS}")
    return precision


def _verdict_inconclusive(payload: dict) -> bool:
    if payload.get("verdict") == "INCONCLUSIVE":
        return True
    for res in payload.get("results", []):
        if isinstance(res, dict) and isinstance(res.get("result"), dict):
            if res["result"].get("verdict") == "INCONCLUSIVE":
                return True
    return False


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        precision = _resolve_precision(ns)
        payload = _OPS[ns.command](_params_from_namespace(ns), precision)
    except ConclabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if ns.format == "json":
        text = jsonio.canonical_dumps(payload)
    else:
        text = "\n".join(_render_human(payload))
    if ns.output:
        Path(ns.output).write_text(text + "\n")
    else:
        print(text)
    if ns.strict and _verdict_inconclusive(payload):
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
