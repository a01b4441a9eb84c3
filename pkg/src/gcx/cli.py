"""Command-line interface ``gcx``.

Targets are either catalog entry names (``su2_contact``) or paths to ``.gcx``
documents.  Exit status: 0 success, 2 parse error, 3 validation violation,
4 expectation mismatch, 5 precondition error.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import catalog
from .courant import GenVector
from .dsl import Document, parse, parse_endo, parse_gen, parse_tensor
from .errors import ExpectationMismatch, GcxError, InvalidStructure, ParseError, PreconditionError
from .exactnum import as_scalar, format_scalar
from .liealg import central_extension, check_jacobi
from .polyfield import DarbouxReport, darboux_model
from .report import (
    algebra_tree, blocks_tree, bracket_list, catalog_tree, classification_tree, closedness_tree, dump,
    eigen_tree, gacs_tree, gcs_tree, gen_multivector, span_tree,
)
from .structures import (
    DeformParam, Gacs, Gcs, Level, classify, complex_gcs, deform_E, eigenbundles, gacs_violations,
    gcs_integrable, gcs_violations, graph_closed, is_normal, lift_gcs, mc_check, obstruction, type_components,
)

COMMANDS = ("validate", "classify", "obstruction", "brackets", "deform", "extend", "darboux", "catalog")


class UsageError(ParseError):
    """Missing or inconsistent command-line input."""


# targets ---------------------------------------------------------------------

def parse_params(items: list[str] | None) -> dict:
    out = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"--param expects k=v, got {item!r}")
        out[key.strip()] = val.strip()
    return out


def load_document(path: str) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _is_path(target: str) -> bool:
    return target.endswith(".gcx") or Path(target).is_file()


def resolve(target: str | None, entry: str | None, params: dict) -> tuple[list[tuple[str, object]], Document | None]:
    """Objects named by the command line, plus the document they came from (if any)."""
    if target is None:
        if entry is None:
            raise UsageError("no target: give a catalog entry name or a .gcx file")
        target = entry
        entry = None
    if _is_path(target):
        doc = load_document(target)
        if not doc.structures:
            raise UsageError(f"{target}: document defines no structures; usage: gcx <command> FILE.gcx [--entry NAME]")
        names = [entry] if entry else list(doc.structures)
        for n in names:
            if n not in doc.structures:
                raise UsageError(f"{target}: no structure named {n!r}")
        out = []
        for n in names:
            out.append((n, _build_doc(doc, n)))
        return out, doc
    return [(target, catalog.build(target, params))], None


def _build_doc(doc: Document, name: str):
    try:
        return doc.structure(name)
    except InvalidStructure as exc:
        return exc


# expectations ---------------------------------------------------------------------

def check_directives(doc: Document | None, results: dict[str, dict]) -> list[dict]:
    """Compare ``expect NAME KEY VALUE`` directives with computed classification records."""
    out = []
    if doc is None:
        return out
    for d in doc.directives:
        if d.verb != "expect":
            continue
        name, key, value = d.args
        rec = results.get(name)
        if rec is None:
            continue
        got = rec.get(key)
        got_s = ("true" if got else "false") if isinstance(got, bool) else str(got)
        out.append({"structure": name, "key": key, "expected": value, "actual": got_s,
                    "status": "pass" if got_s == value else "FAIL"})
    return out


def _class_record(c) -> dict:
    return {
        "level": c.level.value, "strong": c.strong, "llstar_bialgebroid": c.llstar_bialgebroid,
        "e_pair_bialgebroid": c.e_pair_bialgebroid, "obstruction_nonzero": c.obstruction_nonzero,
    }


# commands -----------------------------------------------------------------------

def cmd_validate(args) -> tuple[dict, int]:
    objs, doc = resolve(args.target, args.entry, parse_params(args.param))
    items, status = [], 0
    for name, obj in objs:
        if isinstance(obj, InvalidStructure):
            bad = obj.violations
        elif isinstance(obj, Gacs):
            bad = gacs_violations(obj)
        elif isinstance(obj, Gcs):
            bad = gcs_violations(obj)
        else:
            raise PreconditionError(f"{name} is not a structure")
        items.append({"structure": name, "valid": not bad, "violations": [str(v) for v in bad]})
        if bad:
            status = 3
    return {"command": "validate", "structures": items}, status


def cmd_classify(args) -> tuple[dict, int]:
    objs, doc = resolve(args.target, args.entry, parse_params(args.param))
    items, records, status = [], {}, 0
    for name, obj in objs:
        if isinstance(obj, InvalidStructure):
            items.append({"structure": name, "level": Level.INVALID.value,
                          "violations": [str(v) for v in obj.violations]})
            records[name] = {"level": Level.INVALID.value, "strong": False}
            continue
        if isinstance(obj, Gcs):
            rep = gcs_integrable(obj)
            items.append({"structure": name, "gcs": gcs_tree(obj), "integrable": closedness_tree(rep)})
            records[name] = {"integrable": rep.closed}
            continue
        if isinstance(obj, DarbouxReport):
            items.append({"structure": name, "darboux": darboux_tree(obj)})
            continue
        c = classify(obj)
        items.append({"structure": name, "tensors": gacs_tree(obj), "classification": classification_tree(c)})
        records[name] = _class_record(c)
    out = {"command": "classify", "structures": items}
    exp = check_directives(doc, records)
    if exp:
        out["expectations"] = exp
        if any(e["status"] != "pass" for e in exp):
            status = 4
    return out, status


def _single(args, what: str) -> tuple[str, Gacs]:
    objs, _ = resolve(args.target, args.entry, parse_params(args.param))
    if len(objs) != 1:
        raise UsageError(f"{what} needs a single structure; use --entry NAME")
    name, obj = objs[0]
    if isinstance(obj, InvalidStructure):
        raise obj
    if not isinstance(obj, Gacs):
        raise PreconditionError(f"{what} needs a generalized almost contact structure")
    return name, obj


def cmd_obstruction(args) -> tuple[dict, int]:
    name, j = _single(args, "obstruction")
    e = eigenbundles(j)
    ob = obstruction(j, e)
    tb = type_components(j, j.d_eta())
    return {
        "command": "obstruction",
        "structure": name,
        "nonzero": bool(ob),
        "tensor": gen_multivector(ob.tensor),
        "checked_triples": ob.checked_triples,
        "type_components_of_d_eta": blocks_tree(tb),
    }, 0


def cmd_brackets(args) -> tuple[dict, int]:
    name, j = _single(args, "brackets")
    e = eigenbundles(j)
    return {
        "command": "brackets",
        "structure": name,
        "spans": eigen_tree(e),
        "L": bracket_list(e.L),
        "L*": bracket_list(e.Lstar),
    }, 0


def _gamma(args, j: Gacs) -> DeformParam:
    if args.gamma:
        parts = [p for p in args.gamma.split(",")]
        if len(parts) != 2:
            raise UsageError("--gamma takes two generalized vectors separated by ','")
        vs = [GenVector(j.algebra, *parse_gen(p, j.dim)) for p in parts]
        return DeformParam.from_pair(*vs)
    if j.algebra.name == "h3":
        return catalog.family_gamma(j.algebra)
    raise UsageError("--gamma is required for this structure")


def cmd_deform(args) -> tuple[dict, int]:
    name, j = _single(args, "deform")
    G = _gamma(args, j)
    t = as_scalar(args.t)
    try:
        res = mc_check(j, G.scaled(t))
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    out = {
        "command": "deform",
        "structure": name,
        "t": format_scalar(t),
        "mc_residual_zero": res.zero,
    }
    if res.zero:
        out["E10_t"] = span_tree(deform_E(j, G, t))
    else:
        out["residual"] = gen_multivector(res.residual)
    out["graph_closed"] = graph_closed(j, G.scaled(t))
    return out, 0


def _lift_source(args, h):
    if args.lift is None:
        return None
    if args.lift == "complex_J":
        if h.dim != 4 or h != catalog.kod4():
            raise PreconditionError("complex_J is the complex structure of kod4")
        return catalog.kodaira_complex()
    if args.lift == "kodaira_gcs":
        return catalog.build("kodaira_gcs", parse_params(args.param))
    if args.doc:
        doc = load_document(args.doc)
        obj = doc.structure(args.lift)
        if isinstance(obj, Gcs):
            return obj
    if args.lift.startswith("complex:"):
        return complex_gcs(h, parse_endo(args.lift[8:], h.dim))
    raise UsageError(f"unknown lift {args.lift!r}; use complex_J, kodaira_gcs, complex:<phi> or a complex structure of --doc")


def cmd_extend(args) -> tuple[dict, int]:
    if args.doc:
        doc = load_document(args.doc)
        if args.algebra not in doc.algebras:
            raise UsageError(f"{args.doc}: no algebra named {args.algebra!r}")
        h = doc.algebra(args.algebra)
    else:
        h = catalog.algebra(args.algebra)
    omega = parse_tensor(args.omega, h.dim, "e", 2)
    out = {"command": "extend", "base": algebra_tree(h), "omega": args.omega}
    if args.no_check:
        g = central_extension(h, omega, name=f"{h.name}+c", check=False)
        bad = check_jacobi(g)
        out["algebra"] = algebra_tree(g)
        out["jacobi_violations"] = [str(v) for v in bad]
        return out, 3 if bad else 0
    J = _lift_source(args, h)
    if J is None:
        g = central_extension(h, omega, name=f"{h.name}+c")
        out["algebra"] = algebra_tree(g)
        return out, 0
    g, j = lift_gcs(h, omega, J, name="lift")
    c = classify(j)
    out["algebra"] = algebra_tree(g)
    out["structure"] = gacs_tree(j)
    out["classification"] = classification_tree(c)
    out["type_components_of_d_eta"] = blocks_tree(type_components(j, j.d_eta()))
    out["normal"] = is_normal(g, j.F, j.eta, j.phi).normal
    return out, 0


def darboux_tree(r: DarbouxReport) -> dict:
    return {
        "n": r.n,
        "passed": r.passed,
        "checks": [f"{'ok' if c.ok else 'FAIL'} {c.name}" for c in r.checks],
        "obstruction_witness": (f"coefficient {format_scalar(r.obstruction_witness[1])} on slots "
                                f"{list(r.obstruction_witness[0])}" if r.obstruction_witness else "none"),
    }


def cmd_darboux(args) -> tuple[dict, int]:
    if not 1 <= args.n <= 3:
        raise PreconditionError("the Darboux chart supports 1 <= n <= 3")
    r = darboux_model(args.n)
    return {"command": "darboux", "report": darboux_tree(r)}, 0 if r.passed else 4


def cmd_catalog(args) -> tuple[dict, int]:
    if args.action == "list":
        items = []
        for name in sorted(catalog.ENTRIES):
            e = catalog.ENTRIES[name]
            items.append({"entry": name, "summary": e.summary,
                          "params": catalog.format_params(e.defaults) or "-",
                          "samples": len(e.samples) or 1})
        return {"command": "catalog list", "entries": items}, 0
    runs = catalog.catalog_run(args.name, parse_params(args.param) or None)
    tree = catalog_tree(runs, verbose=args.verbose)
    tree = {"command": "catalog run", **tree}
    return tree, 0 if all(r.ok for r in runs) else 4


HANDLERS = {
    "validate": cmd_validate, "classify": cmd_classify, "obstruction": cmd_obstruction,
    "brackets": cmd_brackets, "deform": cmd_deform, "extend": cmd_extend, "darboux": cmd_darboux,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json-like-tree"), default="text")
    common.add_argument("--param", action="append", metavar="K=V", help="exact rational/complex parameter")
    common.add_argument("--timing", action="store_true", help="append wall-clock timing to the report")

    p = argparse.ArgumentParser(prog="gcx", description="Exact generalized contact geometry on Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("validate", "classify", "obstruction", "brackets", "deform"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("target", nargs="?", help="catalog entry or .gcx file")
        s.add_argument("--entry", help="structure name inside a document")
        if name == "deform":
            s.add_argument("--gamma", help="two generalized vectors 'f1, f2' spanning Gamma")
            s.add_argument("--t", default="1", help="scaling of Gamma")

    s = sub.add_parser("extend", parents=[common])
    s.add_argument("algebra", help="catalog algebra (su2, h3, kod4, kod5) or an algebra of --doc")
    s.add_argument("--omega", required=True, help="closed 2-form on the algebra")
    s.add_argument("--lift", help="complex_J, kodaira_gcs, complex:<phi>, or a complex structure of --doc")
    s.add_argument("--doc", help=".gcx document providing the algebra or the lift")
    s.add_argument("--no-check", action="store_true", help="skip the cocycle test and report Jacobi violations")

    s = sub.add_parser("darboux", parents=[common])
    s.add_argument("--n", type=int, default=1)

    s = sub.add_parser("catalog", parents=[common])
    s.add_argument("action", choices=("list", "run"))
    s.add_argument("name", nargs="?")
    s.add_argument("--verbose", action="store_true")
    return p


VALUE_OPTIONS = ("--omega", "--gamma", "--t", "--param", "--lift")


def _glue_values(argv: list[str]) -> list[str]:
    """Attach option values that start with '-' (e.g. ``--omega -(e1^e3)``) so argparse accepts them."""
    out, k = [], 0
    while k < len(argv):
        a = argv[k]
        if a in VALUE_OPTIONS and k + 1 < len(argv) and argv[k + 1].startswith("-") and argv[k + 1] != "--":
            out.append(f"{a}={argv[k + 1]}")
            k += 2
            continue
        out.append(a)
        k += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(list(sys.argv[1:] if argv is None else argv)))
    start = time.perf_counter()
    try:
        tree, status = HANDLERS[args.command](args)
    except GcxError as exc:
        print(f"gcx {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.timing:
        tree["timing_ms"] = f"{(time.perf_counter() - start) * 1000:.1f}"
    sys.stdout.write(dump(tree, args.format))
    if status == ExpectationMismatch.exit_code:
        print(f"gcx {args.command}: expectation mismatch", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
