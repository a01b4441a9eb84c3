from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcx import catalog
from gcx.courant import is_isotropic
from gcx.errors import NonTransverse, NotClosed
from gcx.exactnum import HALF, I, ONE, Matrix
from gcx.dsl import parse_endo, parse_tensor
from gcx.structures import (
    Gcs, classify, complex_gcs, gcs_from_eigenspan, gcs_integrable, gcs_violations, kodaira_family, kodaira_span,
    lift_gcs, symplectic_gcs,
)
from helpers import scalars

KOD4 = catalog.kod4()


@given(st.lists(scalars, min_size=4, max_size=4))
def test_family_points_are_valid_or_non_transverse(ts):
    span = kodaira_span(KOD4, *ts)
    assert is_isotropic(span)
    try:
        J = kodaira_family(KOD4, *ts)
    except NonTransverse:
        return
    assert gcs_violations(J) == []
    assert J.eigenspan(-1).equals(span)
    assert J.eigenspan(1).equals(span.conj())
    assert isinstance(gcs_integrable(J).closed, bool)


def test_family_sample_points():
    # t = 0 is the complex structure J
    assert kodaira_family(KOD4).eigenspan(-1).equals(catalog.kodaira_complex().eigenspan(-1))
    # generic complex point
    J = kodaira_family(KOD4, 0, ONE / 3, ONE * 2 / 5, 0)
    assert gcs_integrable(J).closed
    # symplectic point: t1 = i/2, t4 = 2i, i.e. u1 = 1, v1 = 0
    Js = kodaira_family(KOD4, HALF * I, 0, 0, 2 * I)
    omega = parse_tensor("e1^e3 - e2^e4", 4, "e", 2)
    assert Js.eigenspan(-1).equals(symplectic_gcs(KOD4, omega).eigenspan(-1))
    assert gcs_integrable(Js).closed
    assert not Js.phi and Js.theta == omega


def test_transversality_at_the_boundary():
    kodaira_family(KOD4, 1, 0, 0, 0)
    with pytest.raises(NonTransverse):
        kodaira_family(KOD4, 0, 1, 0, 0)


def test_complex_and_symplectic_constructors():
    Jc = complex_gcs(KOD4, parse_endo(catalog.KOD_J, 4))
    assert gcs_violations(Jc) == [] and gcs_integrable(Jc).closed
    bad = Gcs(KOD4, Jc.J.scale(2))
    assert {v.relation for v in gcs_violations(bad)} >= {"JSquared"}
    non_real = Gcs(KOD4, Jc.J.scale(I))
    assert "Real" in {v.relation for v in gcs_violations(non_real)}
    assert gcs_from_eigenspan(KOD4, Jc.eigenspan(-1)).J == Jc.J


def test_lift_of_the_complex_structure():
    omega = parse_tensor(catalog.KOD_OMEGA, 4, "e", 2)
    g, j = lift_gcs(KOD4, omega, catalog.kodaira_complex())
    assert g == catalog.kod5()
    assert j.phi == parse_endo(catalog.KOD_J, 5)
    assert not j.pi and not j.theta
    assert classify(j).level.value == "GeneralizedContact"


def test_lift_needs_integrable_input():
    # J with phi^2 = -1 that is not integrable on kod4: rotate the pair (X1, X3)
    Jc = parse_endo("X3*e1 - X1*e3 + X4*e2 - X2*e4", 4)
    G = complex_gcs(KOD4, Jc)
    assert gcs_violations(G) == []
    if gcs_integrable(G).closed:
        pytest.skip("chosen endomorphism happens to be integrable")
    with pytest.raises(NotClosed):
        lift_gcs(KOD4, parse_tensor(catalog.KOD_OMEGA, 4, "e", 2), G)


def test_odd_dimension_is_flagged():
    su2 = catalog.su2()
    relations = {v.relation for v in gcs_violations(Gcs(su2, Matrix.identity(6)))}
    assert {"EvenDimension", "JSquared"} <= relations
