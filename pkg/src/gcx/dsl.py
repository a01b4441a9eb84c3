"""Text format for algebras and structures.

A document is a sequence of blocks and directives::

    # comment
    algebra su2 dim 3
      bracket X1 X2 = -X3
      bracket X2 X3 = -X1
      bracket X3 X1 = -X2
    end

    algebra kod5 dim 5
      extends kod4 by -(e1^e3 - e2^e4)
    end

    structure su2_contact on su2 kind contact
      eta = e3
    end

    expect su2_contact level GeneralizedContact

Tensor expressions are sums of terms built from scalars (``2/3``, ``i``,
``(1/2+1/3*i)``), basis vectors ``X1..Xn`` and basis covectors ``e1..en``
with ``*`` (scalar product, or ``X*e`` for the endomorphism ``X (x) e``) and
``^`` (wedge).  Indices are 1-based; ``s1..sn`` is accepted as a synonym for
``e1..en``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, ValidationError
from .exactnum import I, as_scalar, format_scalar
from .liealg import LieAlgebra, central_extension
from .multilinear import Endo, KForm, KVector, _Alternating, format_alternating, format_endo, wedge

KINDS = ("contact", "cosymplectic", "almost_contact", "explicit", "complex")

FIELDS = {
    "contact": {"required": ("eta",), "optional": ()},
    "cosymplectic": {"required": ("eta", "theta"), "optional": ()},
    "almost_contact": {"required": ("F", "eta", "phi"), "optional": ()},
    "explicit": {"required": ("F", "eta"), "optional": ("pi", "theta", "phi")},
    "complex": {"required": ("phi",), "optional": ()},
}

# expected shape of each field: (symbol, degree) or "endo"
FIELD_SHAPE = {"eta": ("e", 1), "theta": ("e", 2), "F": ("X", 1), "pi": ("X", 2), "phi": "endo"}


# expressions -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sym>[Xes]\d+)|(?P<i>i)(?![A-Za-z0-9_])|(?P<op>[-+*/^()])|(?P<bad>\S))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    col: int


def tokenize(text: str, line: int = 1, col0: int = 1) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        kind = m.lastgroup
        col = col0 + m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", line, col)
        out.append(Token(kind, m.group(kind), col))
        pos = m.end()
    out.append(Token("end", "", col0 + len(text.rstrip())))
    return out


class Value:
    """Formal sum of scalars, multivectors, forms and endomorphisms."""

    __slots__ = ("parts",)

    def __init__(self, parts: dict):
        self.parts = {k: v for k, v in parts.items() if v}

    @classmethod
    def scalar(cls, c) -> "Value":
        return cls({"s": as_scalar(c)})

    def __add__(self, other: "Value") -> "Value":
        out = dict(self.parts)
        for k, v in other.parts.items():
            out[k] = out[k] + v if k in out else v
        return Value(out)

    def __neg__(self) -> "Value":
        return Value({k: -v for k, v in self.parts.items()})

    def only(self):
        """The single homogeneous component, or None for zero."""
        if len(self.parts) > 1:
            return "mixed"
        return next(iter(self.parts.items()), None)

    def is_scalar(self) -> bool:
        return set(self.parts) <= {"s"}


def _key(t) -> object:
    if isinstance(t, Endo):
        return "endo"
    if isinstance(t, KVector):
        return ("X", t.degree)
    if isinstance(t, KForm):
        return ("e", t.degree)
    return "s"


class _ExprParser:
    def __init__(self, text: str, dim: int, line: int, col0: int):
        self.toks = tokenize(text, line, col0)
        self.pos = 0
        self.dim = dim
        self.line = line

    def peek(self) -> Token:
        return self.toks[self.pos]

    def take(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok.col)

    def parse(self) -> Value:
        if self.peek().kind == "end":
            self.fail("empty expression")
        v = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected {self.peek().text!r}")
        return v

    def expr(self) -> Value:
        sign = 1
        if self.peek().text in "+-" and self.peek().kind == "op":
            sign = -1 if self.take().text == "-" else 1
        v = self.term()
        if sign < 0:
            v = -v
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take()
            if self.peek().kind in ("end",) or (self.peek().kind == "op" and self.peek().text not in "("):
                self.fail(f"dangling {op.text!r}", op)
            rhs = self.term()
            v = v + rhs if op.text == "+" else v + (-rhs)
        return v

    def term(self) -> Value:
        v = self.factor()
        while self.peek().kind == "op" and self.peek().text in "*^":
            op = self.take()
            if self.peek().kind == "end" or (self.peek().kind == "op" and self.peek().text not in "("):
                self.fail(f"dangling {op.text!r}", op)
            rhs = self.factor()
            v = self._combine(v, rhs, op)
        return v

    def _combine(self, a: Value, b: Value, op: Token) -> Value:
        if op.text == "*":
            if a.is_scalar() or b.is_scalar():
                s, t = (a, b) if a.is_scalar() else (b, a)
                c = s.parts.get("s")
                if c is None:
                    return Value({})
                return Value({k: c * v for k, v in t.parts.items()})
            pa, pb = a.only(), b.only()
            if (pa not in (None, "mixed") and pb not in (None, "mixed")
                    and pa[0] == ("X", 1) and pb[0] == ("e", 1)):
                return Value({"endo": Endo.outer(pa[1], pb[1])})
            self.fail("'*' needs a scalar factor or a vector times a covector", op)
        # wedge
        if a.is_scalar() or b.is_scalar():
            self.fail("'^' needs tensors on both sides", op)
        out = Value({})
        for ka, va in a.parts.items():
            for kb, vb in b.parts.items():
                if ka == "endo" or kb == "endo" or ka[0] != kb[0]:
                    self.fail("'^' joins vectors with vectors or covectors with covectors", op)
                w = wedge(va, vb)
                out = out + Value({_key(w): w})
        return out

    def factor(self) -> Value:
        t = self.take()
        if t.kind == "num":
            num = Fraction(int(t.text))
            if self.peek().kind == "op" and self.peek().text == "/":
                slash = self.take()
                d = self.take()
                if d.kind != "num":
                    self.fail("expected a denominator", d if d.kind != "end" else slash)
                if int(d.text) == 0:
                    self.fail("zero denominator", d)
                num = num / int(d.text)
            return Value.scalar(num)
        if t.kind == "i":
            return Value.scalar(I)
        if t.kind == "sym":
            k = int(t.text[1:])
            if not 1 <= k <= self.dim:
                raise ParseError(f"unknown symbol {t.text!r} in dimension {self.dim}", self.line, t.col)
            cls = KVector if t.text[0] == "X" else KForm
            b = cls.basis(self.dim, k - 1)
            return Value({_key(b): b})
        if t.kind == "op" and t.text == "(":
            v = self.expr()
            close = self.take()
            if close.text != ")":
                self.fail("expected ')'", close)
            return v
        if t.kind == "op" and t.text == "-":
            return -self.factor()
        if t.kind == "end":
            self.fail("unexpected end of expression", t)
        self.fail(f"unexpected {t.text!r}", t)


def parse_expr(text: str, dim: int, line: int = 1, col0: int = 1) -> Value:
    return _ExprParser(text, dim, line, col0).parse()


def _coerce_shape(v: Value, shape, dim: int, line: int, col: int, what: str):
    if shape == "endo":
        if not v.parts:
            return Endo.zero(dim)
        if set(v.parts) != {"endo"}:
            raise ParseError(f"{what} must be a sum of X*e terms", line, col)
        return v.parts["endo"]
    sym, deg = shape
    cls = KVector if sym == "X" else KForm
    if not v.parts:
        return cls.zero(dim, deg)
    if set(v.parts) != {(sym, deg)}:
        kind = "vector" if sym == "X" else "form"
        raise ParseError(f"dimension mismatch: {what} must be a degree-{deg} {kind}", line, col)
    return v.parts[(sym, deg)]


def parse_tensor(text: str, dim: int, symbol: str, degree: int):
    """``KVector`` (symbol ``X``) or ``KForm`` (symbol ``e``) of the given degree."""
    return _coerce_shape(parse_expr(text, dim), (symbol, degree), dim, 1, 1, "expression")


def parse_endo(text: str, dim: int) -> Endo:
    return _coerce_shape(parse_expr(text, dim), "endo", dim, 1, 1, "expression")


def parse_gen(text: str, dim: int) -> tuple[KVector, KForm]:
    """Vector and covector parts of a generalized vector such as ``X1 - i*e2``."""
    v = parse_expr(text, dim)
    extra = set(v.parts) - {("X", 1), ("e", 1)}
    if extra:
        raise ParseError("a generalized vector is a sum of X_k and e^k terms")
    return v.parts.get(("X", 1), KVector.zero(dim, 1)), v.parts.get(("e", 1), KForm.zero(dim, 1))


def format_tensor(t) -> str:
    if isinstance(t, Endo):
        return format_endo(t)
    if isinstance(t, _Alternating):
        return format_alternating(t)
    return format_scalar(as_scalar(t))


# documents -------------------------------------------------------------------

@dataclass
class AlgebraDef:
    name: str
    dim: int
    brackets: dict = field(default_factory=dict)
    extends: tuple | None = None  # (base name, omega)
    line: int = field(default=0, compare=False)


@dataclass
class StructureDef:
    name: str
    algebra: str
    kind: str
    fields: dict = field(default_factory=dict)
    line: int = field(default=0, compare=False)


@dataclass
class Directive:
    verb: str
    args: tuple
    line: int = field(default=0, compare=False)


@dataclass
class Document:
    algebras: dict = field(default_factory=dict)
    structures: dict = field(default_factory=dict)
    directives: list = field(default_factory=list)

    def is_empty(self) -> bool:
        return not (self.algebras or self.structures or self.directives)

    def algebra(self, name: str) -> LieAlgebra:
        """Build the named Lie algebra (extensions are built recursively)."""
        d = self.algebras[name]
        if d.extends is not None:
            base, omega = d.extends
            try:
                return central_extension(self.algebra(base), omega, name=name)
            except ValueError as exc:
                raise ValidationError(f"algebra {name!r}: {exc}") from exc
        try:
            return LieAlgebra(d.dim, d.brackets, name=name)
        except ValueError as exc:
            raise ValidationError(f"algebra {name!r}: {exc}") from exc

    def structure(self, name: str):
        """Build the named structure as a Gacs (odd kinds) or a Gcs (``complex``)."""
        from .structures import complex_gcs, from_almost_contact, from_contact, from_cosymplectic, make_gacs

        s = self.structures[name]
        g = self.algebra(s.algebra)
        f = s.fields
        if s.kind == "contact":
            return from_contact(g, f["eta"], name=name)
        if s.kind == "cosymplectic":
            return from_cosymplectic(g, f["eta"], f["theta"], name=name)
        if s.kind == "almost_contact":
            return from_almost_contact(g, f["F"], f["eta"], f["phi"], name=name)
        if s.kind == "complex":
            return complex_gcs(g, f["phi"], name=name)
        return make_gacs(g, f["F"], f["eta"], pi=f.get("pi"), theta=f.get("theta"), phi=f.get("phi"), name=name)


_HEADER_ALG = re.compile(r"^algebra\s+(\w+)\s+dim\s+(\d+)$")
_HEADER_STR = re.compile(r"^structure\s+(\w+)\s+on\s+(\w+)\s+kind\s+(\w+)$")
_BRACKET = re.compile(r"^bracket\s+X(\d+)\s+X(\d+)\s*=\s*(.*)$")
_EXTENDS = re.compile(r"^extends\s+(\w+)\s+by\s+(.*)$")
_FIELD = re.compile(r"^(\w+)\s*=\s*(.*)$")
DIRECTIVES = {"expect"}


def _col(raw: str, fragment: str) -> int:
    idx = raw.rfind(fragment) if fragment else len(raw)
    return idx + 1 if idx >= 0 else 1


def parse(text: str) -> Document:
    """Parse a whole document; any error raises :class:`ParseError` (or a
    :class:`DimensionMismatch`) carrying its line and column."""
    doc = Document()
    lines = text.splitlines()
    k = 0

    def err(msg, ln, col=1):
        raise ParseError(msg, ln, col)

    while k < len(lines):
        raw = lines[k]
        ln = k + 1
        k += 1
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        indent = len(raw) - len(raw.lstrip())
        m = _HEADER_ALG.match(body)
        if m:
            name, dim = m.group(1), int(m.group(2))
            if name in doc.algebras:
                err(f"duplicate algebra {name!r}", ln, indent + 1)
            d = AlgebraDef(name, dim, line=ln)
            k = _algebra_block(lines, k, d, doc, err)
            doc.algebras[name] = d
            continue
        m = _HEADER_STR.match(body)
        if m:
            name, alg, kind = m.groups()
            if name in doc.structures:
                err(f"duplicate structure {name!r}", ln, indent + 1)
            if alg not in doc.algebras:
                err(f"unknown algebra {alg!r}", ln, _col(raw, alg))
            if kind not in KINDS:
                err(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", ln, _col(raw, kind))
            s = StructureDef(name, alg, kind, line=ln)
            k = _structure_block(lines, k, s, doc.algebras[alg].dim, err)
            doc.structures[name] = s
            continue
        words = body.split()
        if words[0] in DIRECTIVES:
            if words[0] == "expect":
                if len(words) != 4:
                    err("expect needs: expect NAME KEY VALUE", ln, indent + 1)
                if words[1] not in doc.structures:
                    err(f"unknown structure {words[1]!r}", ln, _col(raw, words[1]))
            doc.directives.append(Directive(words[0], tuple(words[1:]), line=ln))
            continue
        err(f"unrecognized statement {words[0]!r}", ln, indent + 1)
    return doc


def _algebra_block(lines, k, d: AlgebraDef, doc: Document, err) -> int:
    start = k
    while k < len(lines):
        raw = lines[k]
        ln = k + 1
        k += 1
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body == "end":
            return k
        m = _BRACKET.match(body)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            for idx, grp in ((i, 1), (j, 2)):
                if not 1 <= idx <= d.dim:
                    err(f"unknown symbol X{idx} in dimension {d.dim}", ln, raw.find("X" + m.group(grp)) + 1)
            if i == j:
                err("bracket of a basis vector with itself", ln, _col(raw, "bracket"))
            rhs = m.group(3)
            if not rhs.strip():
                err("missing bracket value", ln, raw.index("=") + 1)
            col = raw.index(rhs, raw.index("=")) + 1
            v = _coerce_shape(parse_expr(rhs, d.dim, ln, col), ("X", 1), d.dim, ln, col, "bracket value")
            a, b = (i - 1, j - 1) if i < j else (j - 1, i - 1)
            if i > j:
                v = -v
            if (a, b) in d.brackets:
                err(f"bracket X{a + 1} X{b + 1} given twice", ln, _col(raw, "bracket"))
            if v:
                d.brackets[(a, b)] = v
            continue
        m = _EXTENDS.match(body)
        if m:
            base, rhs = m.groups()
            if base not in doc.algebras:
                err(f"unknown algebra {base!r}", ln, _col(raw, base))
            bdim = doc.algebras[base].dim
            if bdim + 1 != d.dim:
                err(f"dimension mismatch: extending a {bdim}-dimensional algebra gives dimension {bdim + 1}", ln, 1)
            omega = _coerce_shape(parse_expr(rhs, bdim, ln, raw.index(rhs) + 1), ("e", 2), bdim, ln,
                                  raw.index(rhs) + 1, "cocycle")
            d.extends = (base, omega)
            continue
        err(f"unrecognized algebra statement {body.split()[0]!r}", ln, len(raw) - len(raw.lstrip()) + 1)
    err(f"algebra {d.name!r} is missing 'end'", start, 1)


def _structure_block(lines, k, s: StructureDef, dim: int, err) -> int:
    start = k
    spec = FIELDS[s.kind]
    allowed = spec["required"] + spec["optional"]
    while k < len(lines):
        raw = lines[k]
        ln = k + 1
        k += 1
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body == "end":
            missing = [f for f in spec["required"] if f not in s.fields]
            if missing:
                err(f"structure {s.name!r} of kind {s.kind} needs {', '.join(missing)}", ln, 1)
            return k
        m = _FIELD.match(body)
        if not m:
            err(f"expected 'name = value', got {body!r}", ln, len(raw) - len(raw.lstrip()) + 1)
        key, rhs = m.groups()
        if key not in allowed:
            err(f"field {key!r} is not used by kind {s.kind}", ln, _col(raw, key))
        if key in s.fields:
            err(f"field {key!r} given twice", ln, _col(raw, key))
        if not rhs.strip():
            err("missing value", ln, raw.index("=") + 1)
        col = raw.index(rhs, raw.index("=")) + 1
        value = parse_expr(rhs, dim, ln, col)
        s.fields[key] = _coerce_shape(value, FIELD_SHAPE[key], dim, ln, col, key)
    err(f"structure {s.name!r} is missing 'end'", start, 1)


def print_document(doc: Document) -> str:
    """Canonical text; ``parse(print_document(d)) == d``."""
    out = []
    for d in doc.algebras.values():
        out.append(f"algebra {d.name} dim {d.dim}")
        if d.extends is not None:
            out.append(f"  extends {d.extends[0]} by {format_tensor(d.extends[1])}")
        for (i, j), v in sorted(d.brackets.items()):
            out.append(f"  bracket X{i + 1} X{j + 1} = {format_tensor(v)}")
        out.append("end")
        out.append("")
    for s in doc.structures.values():
        out.append(f"structure {s.name} on {s.algebra} kind {s.kind}")
        order = FIELDS[s.kind]["required"] + FIELDS[s.kind]["optional"]
        for key in order:
            if key in s.fields:
                out.append(f"  {key} = {format_tensor(s.fields[key])}")
        out.append("end")
        out.append("")
    for dv in doc.directives:
        out.append(" ".join((dv.verb,) + tuple(dv.args)))
    return "\n".join(out).rstrip() + "\n"


__all__ = [
    "AlgebraDef", "Directive", "Document", "KINDS", "StructureDef", "Value", "format_tensor", "parse",
    "parse_endo", "parse_expr", "parse_gen", "parse_tensor", "print_document", "tokenize",
]
