"""Structured reports: nested mappings of strings, serialized as an indented key-value tree.

Leaves are strings (scalars already formatted exactly), lists hold strings
or mappings.  :func:`dump_text` and :func:`load_text` are inverse to each
other; :func:`dump_tree` writes the same data as JSON.
"""
from __future__ import annotations

import json
from itertools import combinations

from .catalog import EntryRun, format_params
from .courant import (
    ClosednessReport, GenVector, SubbundleSpan, courant_bracket, format_genvector,
)
from .dsl import format_tensor
from .exactnum import GaussRational, format_scalar
from .liealg import LieAlgebra
from .multilinear import KVector
from .structures import Classification, EigenData, Gacs, Gcs, TypeBlocks

INDENT = "  "


# serialization ---------------------------------------------------------------

def _leaf(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, GaussRational):
        return format_scalar(v)
    s = " ".join(str(v).split())
    return s or "-"


def normalize(tree):
    """Turn every leaf into a string (booleans become ``true``/``false``)."""
    if isinstance(tree, dict):
        return {str(k): normalize(v) for k, v in tree.items()}
    if isinstance(tree, (list, tuple)):
        return [normalize(v) for v in tree]
    return _leaf(tree)


def dump_text(tree: dict) -> str:
    lines: list[str] = []

    def emit(node, depth):
        pad = INDENT * depth
        if isinstance(node, dict):
            for k, v in node.items():
                if isinstance(v, (dict, list)):
                    lines.append(f"{pad}{k}:" + ("" if v else (" {}" if isinstance(v, dict) else " []")))
                    emit(v, depth + 1)
                else:
                    lines.append(f"{pad}{k}: {v}")
        else:
            for item in node:
                if isinstance(item, dict):
                    lines.append(f"{pad}-")
                    emit(item, depth + 1)
                else:
                    lines.append(f"{pad}- {item}")

    emit(normalize(tree), 0)
    return "\n".join(lines) + "\n"


def load_text(text: str) -> dict:
    """Inverse of :func:`dump_text`."""
    rows = []
    for raw in text.splitlines():
        if not raw.strip():
            continue
        depth = (len(raw) - len(raw.lstrip(" "))) // len(INDENT)
        rows.append((depth, raw.strip()))
    pos = 0

    def block(depth):
        nonlocal pos
        if pos < len(rows) and rows[pos][1].startswith("-") and rows[pos][0] == depth:
            out_l = []
            while pos < len(rows) and rows[pos][0] == depth:
                body = rows[pos][1]
                pos += 1
                if body == "-":
                    out_l.append(block(depth + 1))
                else:
                    out_l.append(body[2:])
            return out_l
        out_d = {}
        while pos < len(rows) and rows[pos][0] == depth:
            body = rows[pos][1]
            pos += 1
            key, sep, val = body.partition(": ")
            if sep:
                if val == "{}":
                    out_d[key] = {}
                elif val == "[]":
                    out_d[key] = []
                else:
                    out_d[key] = val
            else:
                out_d[key.rstrip(":")] = block(depth + 1)
        return out_d

    return block(0)


def dump_tree(tree: dict) -> str:
    return json.dumps(normalize(tree), indent=2) + "\n"


def load_tree(text: str) -> dict:
    return json.loads(text)


def dump(tree: dict, fmt: str = "text") -> str:
    return dump_tree(tree) if fmt == "json-like-tree" else dump_text(tree)


# building blocks ---------------------------------------------------------------

def gv(v: GenVector) -> str:
    return format_genvector(v)


def span_tree(s: SubbundleSpan) -> list[str]:
    return [gv(b) for b in s.basis]


def algebra_tree(g: LieAlgebra) -> dict:
    return {
        "name": g.name or "-",
        "dim": g.dim,
        "brackets": [f"[X{i + 1}, X{j + 1}] = {format_tensor(v)}" for (i, j), v in g.brackets().items()],
    }


def gacs_tree(j: Gacs) -> dict:
    return {
        "name": j.name or "-",
        "kind": j.kind,
        "algebra": j.algebra.name or "-",
        "F": format_tensor(j.F),
        "eta": format_tensor(j.eta),
        "pi": format_tensor(j.pi),
        "theta": format_tensor(j.theta),
        "phi": format_tensor(j.phi),
    }


def closedness_tree(r: ClosednessReport | None) -> dict:
    if r is None:
        return {"closed": "not computed"}
    return {"closed": r.closed, "witnesses": [str(w) for w in r.witnesses]}


def classification_tree(c: Classification) -> dict:
    out = {
        "level": c.level.value,
        "strong": c.strong,
        "llstar_bialgebroid": c.llstar_bialgebroid,
        "e_pair_bialgebroid": c.e_pair_bialgebroid,
        "obstruction_nonzero": c.obstruction_nonzero,
    }
    if c.violations:
        out["violations"] = [str(v) for v in c.violations]
    if c.L_report is not None:
        out["L"] = closedness_tree(c.L_report)
    if c.Lstar_report is not None:
        out["L*"] = closedness_tree(c.Lstar_report)
    if c.E_pair_report is not None:
        out["E10+E01"] = closedness_tree(c.E_pair_report)
    if c.dEta_kernel_zero is not None:
        out["d_eta_on_kernel_zero"] = c.dEta_kernel_zero
    return out


def eigen_tree(e: EigenData) -> dict:
    return {name: span_tree(s) for name, s in e.spans().items()}


def bracket_list(s: SubbundleSpan) -> list[str]:
    """Every nonzero bracket of basis pairs, with membership in the span."""
    out = []
    for a, b in combinations(range(s.dim), 2):
        v = courant_bracket(s.basis[a], s.basis[b])
        if v:
            tag = "" if s.contains(v) else "  (leaves span)"
            out.append(f"[[{gv(s.basis[a])}, {gv(s.basis[b])}]] = {gv(v)}{tag}")
    return out


def blocks_tree(tb: TypeBlocks) -> dict:
    return {k: gen_multivector(v) for k, v in tb.as_dict().items()}


def gen_multivector(A: KVector) -> str:
    """Generalized multivector with ``X_k`` for vector slots and ``e_k`` for covector slots."""
    n = A.dim // 2
    if not A:
        return "0"
    names = [f"X{k + 1}" for k in range(n)] + [f"e{k + 1}" for k in range(n)]
    parts = []
    for key, c in A.items():
        mono = "^".join(names[i] for i in key)
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            s = format_scalar(c)
            parts.append(f"({s})*{mono}" if c.re and c.im else f"{s}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def gcs_tree(J: Gcs) -> dict:
    return {
        "name": J.name or "-",
        "algebra": J.algebra.name or "-",
        "phi": format_tensor(J.phi),
        "pi": format_tensor(J.pi),
        "theta": format_tensor(J.theta),
        "eigenspan(-i)": span_tree(J.eigenspan(-1)),
    }


def catalog_tree(runs: list[EntryRun], verbose: bool = False) -> dict:
    out = []
    for r in runs:
        item = {
            "entry": r.name,
            "params": format_params(r.params) or "-",
            "status": "pass" if r.ok else "FAIL",
            "checks": len(r.outcomes),
        }
        bad = r.first_failure()
        if bad:
            item["first_mismatch"] = {"label": bad.label, "expected": bad.expected, "actual": bad.actual}
        info = [f"{o.label}: {o.actual}" for o in r.outcomes if o.informational]
        if info:
            item["reported"] = info
        if verbose:
            item["results"] = [f"{'ok' if o.ok else 'FAIL'} {o.label}" for o in r.outcomes]
        out.append(item)
    return {
        "entries": out,
        "passed": sum(r.ok for r in runs),
        "failed": sum(not r.ok for r in runs),
    }


__all__ = [
    "algebra_tree", "blocks_tree", "bracket_list", "catalog_tree", "classification_tree", "closedness_tree",
    "dump", "dump_text", "gen_multivector", "dump_tree", "eigen_tree", "gacs_tree", "gcs_tree", "gv", "load_text", "load_tree",
    "normalize", "span_tree",
]
