from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcx import catalog
from gcx.errors import DimensionMismatch, GcxError, ParseError
from gcx.exactnum import Matrix, parse_scalar
from gcx.dsl import (
    FIELD_SHAPE, FIELDS, KINDS, AlgebraDef, Directive, Document, StructureDef, parse, parse_endo, parse_gen,
    parse_tensor, print_document,
)
from gcx.multilinear import Endo, KForm, KVector
from helpers import scalars

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def alternating(draw, cls, n: int, degree: int):
    keys = list(combinations(range(n), degree))
    chosen = draw(st.lists(st.sampled_from(keys), unique=True, max_size=3)) if keys else []
    return cls(n, degree, {k: draw(scalars) for k in chosen})


@st.composite
def endos(draw, n: int):
    return Endo(Matrix(n, n, tuple(draw(st.sampled_from([0, 0, 0]) | scalars) for _ in range(n * n))))


def field_value(key: str, n: int):
    shape = FIELD_SHAPE[key]
    if shape == "endo":
        return endos(n)
    sym, deg = shape
    return alternating(KVector if sym == "X" else KForm, n, deg)


@st.composite
def documents(draw):
    doc = Document()
    for a in range(draw(st.integers(1, 2))):
        n = draw(st.integers(2, 4))
        d = AlgebraDef(f"g{a}", n)
        for pair in draw(st.lists(st.sampled_from(list(combinations(range(n), 2))), unique=True, max_size=3)):
            v = draw(alternating(KVector, n, 1))
            if v:
                d.brackets[pair] = v
        doc.algebras[d.name] = d
    if draw(st.booleans()):
        base = draw(st.sampled_from(sorted(doc.algebras)))
        n = doc.algebras[base].dim
        doc.algebras["ext"] = AlgebraDef("ext", n + 1, extends=(base, draw(alternating(KForm, n, 2))))
    for s in range(draw(st.integers(0, 3))):
        alg = draw(st.sampled_from(sorted(doc.algebras)))
        n = doc.algebras[alg].dim
        kind = draw(st.sampled_from(KINDS))
        fields = list(FIELDS[kind]["required"]) + draw(st.lists(st.sampled_from(FIELDS[kind]["optional"] or ("",)),
                                                                unique=True, max_size=2))
        sd = StructureDef(f"s{s}", alg, kind)
        for key in fields:
            if key:
                sd.fields[key] = draw(field_value(key, n))
        doc.structures[sd.name] = sd
    for name in sorted(doc.structures):
        if draw(st.booleans()):
            doc.directives.append(Directive("expect", (name, "level", "GeneralizedContact")))
    return doc


@given(documents())
def test_print_parse_roundtrip(doc):
    text = print_document(doc)
    back = parse(text)
    assert back == doc
    assert print_document(back) == text


def test_fixture_is_a_parse_print_fixpoint():
    for path in sorted(FIXTURES.glob("*.gcx")):
        doc = parse(path.read_text())
        assert parse(print_document(doc)) == doc
        assert print_document(parse(print_document(doc))) == print_document(doc)


def test_su2_fixture_contents():
    doc = parse((FIXTURES / "su2.gcx").read_text())
    assert len(doc.algebras) == 1 and len(doc.structures) == 2
    assert doc.algebras["su2"].brackets[(0, 1)] == -KVector.basis(3, 2)
    assert doc.algebra("su2") == catalog.su2()
    j = doc.structure("su2_normal")
    assert j.phi == catalog.build("su2_normal").phi
    assert [d.args for d in doc.directives] == [("su2_contact", "level", "GeneralizedContact"),
                                              ("su2_normal", "level", "StrongGeneralizedContact")]


def test_reversed_bracket_is_negated():
    doc = parse("algebra g dim 3\n  bracket X2 X1 = X3\nend\n")
    assert doc.algebras["g"].brackets == {(0, 1): -KVector.basis(3, 2)}


def test_term_syntax():
    assert parse_tensor("e1^e3 - e2^e4", 4, "e", 2) == KForm(4, 2, {(0, 2): 1, (1, 3): -1})
    assert parse_tensor("X2^X3", 3, "X", 2) == KVector.basis(3, 1, 2)
    assert parse_endo("X2*s1", 3) == Endo.outer(KVector.basis(3, 1), KForm.basis(3, 0))
    assert parse_tensor("(2/3+1/5*i)*e1", 2, "e", 1) == KForm(2, 1, {(0,): parse_scalar("2/3+1/5*i")})
    vec, cov = parse_gen("X1 - i*e2", 3)
    assert vec == KVector.basis(3, 0) and cov == -parse_scalar("i") * KForm.basis(3, 1)
    assert parse_tensor("-(e1^e3 - e2^e4)", 4, "e", 2) == parse_tensor("e2^e4 - e1^e3", 4, "e", 2)


def diagnostic(text: str) -> ParseError:
    with pytest.raises(ParseError) as exc:
        parse(text)
    return exc.value


ALG = "algebra g dim 3\n  bracket X1 X2 = -X3\nend\n"


def test_dangling_operator_is_located():
    err = diagnostic(ALG + "structure s on g kind cosymplectic\n  eta = e3\n  theta = e1^\nend\n")
    assert err.line == 6
    line = "  theta = e1^"
    assert err.col == line.index("^") + 1


@pytest.mark.parametrize("text,line,col", [
    ("algebra g dim 3\n  bracket X1 X4 = X3\nend\n", 2, 14),
    ("algebra g dim 3\n  bracket X1 X2 = X3 + @\nend\n", 2, 24),
    (ALG + "structure s on h kind contact\nend\n", 4, 16),
    (ALG + "structure s on g kind weird\nend\n", 4, 23),
    (ALG + "structure s on g kind contact\n  eta = X1\nend\n", 5, 9),
    (ALG + "structure s on g kind contact\nend\n", 5, 1),
    ("algebra g dim 3\n  bracket X1 X2 = X3\n", 1, 1),
    ("frobnicate\n", 1, 1),
    (ALG + "expect nothing level Invalid\n", 4, 8),
])
def test_errors_carry_locations(text, line, col):
    err = diagnostic(text)
    assert (err.line, err.col) == (line, col), str(err)


def test_shape_mismatch_is_a_parse_error():
    err = diagnostic(ALG + "structure s on g kind contact\n  eta = e1^e2\nend\n")
    assert isinstance(err, GcxError) and err.exit_code == 2
    with pytest.raises((ParseError, DimensionMismatch)):
        parse(ALG + "algebra h dim 5\n  extends g by e1^e2\nend\n")


def test_duplicates_rejected():
    diagnostic(ALG + ALG)
    diagnostic("algebra g dim 3\n  bracket X1 X2 = X3\n  bracket X2 X1 = X3\nend\n")
    diagnostic(ALG + "structure s on g kind contact\n  eta = e3\n  eta = e3\nend\n")
