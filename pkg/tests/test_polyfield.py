from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcx.courant import GenVector, courant_bracket
from gcx.exactnum import HALF, ONE
from gcx.liealg import LieAlgebra
from gcx.multilinear import KForm, KVector, contract
from gcx.polyfield import (
    Poly, PolySection, apply_field, darboux_model, pf_bracket, pf_courant, pf_d, pf_lie_derivative, pf_pairing,
)
from helpers import scalars, small_ints

N = 3
exponents = st.tuples(*[st.integers(0, 2)] * N)


@st.composite
def polys(draw, max_terms: int = 3):
    terms = draw(st.dictionaries(exponents, small_ints, max_size=max_terms))
    return Poly(N, terms)


@st.composite
def fields(draw):
    return KVector._raw(N, 1, {(k,): draw(polys()) for k in range(N)})


@st.composite
def one_forms(draw):
    return KForm._raw(N, 1, {(k,): draw(polys()) for k in range(N)})


@st.composite
def sections(draw):
    return PolySection(draw(fields()), draw(one_forms()))


def zero_form(f: Poly) -> KForm:
    return KForm._raw(N, 0, {(): f})


def as_poly(c) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(N, c)


def form_eq(a: KForm, b: KForm) -> bool:
    keys = set(a.coeffs) | set(b.coeffs)
    return all(as_poly(a.coeffs.get(k, 0)) == as_poly(b.coeffs.get(k, 0)) for k in keys)


def field_eq(a: KVector, b: KVector) -> bool:
    return form_eq(KForm._raw(N, a.degree, a.coeffs), KForm._raw(N, b.degree, b.coeffs))


def section_eq(a: PolySection, b: PolySection) -> bool:
    return field_eq(a.vec, b.vec) and form_eq(a.cov, b.cov)


def scale(f: Poly, s: PolySection) -> PolySection:
    return PolySection(KVector._raw(N, 1, {k: f * as_poly(c) for k, c in s.vec.coeffs.items()}),
                       KForm._raw(N, 1, {k: f * as_poly(c) for k, c in s.cov.coeffs.items()}))


# ring --------------------------------------------------------------------------

@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly(N)
    assert p * Poly.const(N, ONE) == p


@given(polys(), polys(), st.integers(0, N - 1))
def test_derivative_is_a_derivation(p, q, k):
    assert (p * q).derivative(k) == p.derivative(k) * q + p * q.derivative(k)
    assert (p.derivative(k)).derivative((k + 1) % N) == p.derivative((k + 1) % N).derivative(k)


@given(polys(), scalars)
def test_constants_and_conjugation(p, c):
    assert Poly.const(N, c).is_constant() and Poly.const(N, c).constant_value() == c
    assert (c * p).conjugate() == c.conjugate() * p.conjugate()
    with pytest.raises(ValueError):
        Poly.var(N, 0).constant_value()


# exterior calculus ------------------------------------------------------------

@given(polys())
def test_d_squared_zero_on_functions(f):
    assert not pf_d(pf_d(zero_form(f)))


@given(one_forms())
def test_d_squared_zero_on_one_forms(a):
    assert form_eq(pf_d(pf_d(a)), KForm.zero(N, 3))


@given(fields(), one_forms())
def test_cartan_formula(X, a):
    ixa = sum((as_poly(a.coeffs.get((k,), 0)) * as_poly(X.coeffs.get((k,), 0)) for k in range(N)), Poly(N))
    rhs = contract(X, pf_d(a)) + pf_d(zero_form(ixa))
    assert form_eq(pf_lie_derivative(X, a), rhs)


@given(fields(), fields(), fields())
def test_vector_field_jacobi(X, Y, Z):
    jac = pf_bracket(pf_bracket(X, Y), Z) + pf_bracket(pf_bracket(Y, Z), X) + pf_bracket(pf_bracket(Z, X), Y)
    assert field_eq(jac, KVector.zero(N, 1))


@given(fields(), fields(), polys())
def test_bracket_leibniz(X, Y, f):
    fY = KVector._raw(N, 1, {k: f * as_poly(c) for k, c in Y.coeffs.items()})
    lhs = pf_bracket(X, fY)
    rhs = KVector._raw(N, 1, {k: f * as_poly(c) for k, c in pf_bracket(X, Y).coeffs.items()})
    rhs = rhs + KVector._raw(N, 1, {k: apply_field(X, f) * as_poly(c) for k, c in Y.coeffs.items()})
    assert field_eq(lhs, rhs)


# Courant bracket --------------------------------------------------------------

@given(sections(), sections())
def test_courant_antisymmetric_with_anchor(a, b):
    assert section_eq(pf_courant(a, b), -pf_courant(b, a))
    assert field_eq(pf_courant(a, b).vec, pf_bracket(a.vec, b.vec))


@given(sections(), sections(), polys(max_terms=2))
def test_courant_anomaly_under_function_scaling(a, b, f):
    """``[a, f b] = f [a, b] + X(f) b - <a, b> df``."""
    lhs = pf_courant(a, scale(f, b))
    rhs = scale(f, pf_courant(a, b)) + scale(apply_field(a.vec, f), b)
    rhs = rhs - PolySection.of(N, cov=KForm._raw(N, 1, {k: pf_pairing(a, b) * as_poly(c)
                                                        for k, c in pf_d(zero_form(f)).coeffs.items()}))
    assert section_eq(lhs, rhs)


@given(st.lists(scalars, min_size=4 * N, max_size=4 * N))
def test_constant_sections_on_abelian_chart_match_invariant_bracket(cs):
    g = LieAlgebra(N, {}, "abelian")
    a = GenVector(g, KVector.from_list(cs[:N]), KForm.from_list(cs[N:2 * N]))
    b = GenVector(g, KVector.from_list(cs[2 * N:3 * N]), KForm.from_list(cs[3 * N:]))
    pa = PolySection(a.vec, a.cov)
    pb = PolySection(b.vec, b.cov)
    inv = courant_bracket(a, b)
    poly = pf_courant(pa, pb)
    assert section_eq(poly, PolySection(inv.vec, inv.cov))
    assert pf_pairing(pa, pb) == HALF * (a.cov.eval(b.vec) + b.cov.eval(a.vec))


# Darboux chart -----------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2])
def test_darboux_model_checks_pass(n):
    report = darboux_model(n)
    assert report.passed, report.failures()
    assert report.chart.dim == 2 * n + 1
    var, coeff = report.obstruction_witness
    assert coeff and as_poly(coeff).is_constant()
