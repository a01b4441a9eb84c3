from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcx import catalog
from gcx.errors import NonClosedCocycle
from gcx.exactnum import ZERO, GaussRational
from gcx.liealg import LieAlgebra, ce_d, central_extension, check_jacobi, lie_derivative
from gcx.multilinear import KForm, KVector, contract, wedge, wedge_all
from helpers import ALGEBRAS, covectors, small_ints, vectors

e = lambda n, *k: KVector.basis(n, *(i - 1 for i in k))  # noqa: E731
s = lambda n, *k: KForm.basis(n, *(i - 1 for i in k))  # noqa: E731


@st.composite
def almost_abelian(draw, n: int = 4):
    """``R x_A R^(n-1)``: ``[e1, e_k] = A e_k``; Jacobi holds for any A."""
    m = n - 1
    A = [[GaussRational(draw(small_ints)) for _ in range(m)] for _ in range(m)]
    br = {}
    for k in range(m):
        v = KVector.from_list([ZERO] + [A[r][k] for r in range(m)])
        if v:
            br[(0, k + 1)] = v
    return LieAlgebra(n, br, name="almost_abelian")


lie_algebras = st.one_of(st.sampled_from(sorted(ALGEBRAS)).map(ALGEBRAS.__getitem__), almost_abelian())


@st.composite
def algebra_and_form(draw, degree: int):
    g = draw(lie_algebras)
    parts = draw(st.lists(covectors(g.dim), min_size=degree, max_size=degree))
    return g, wedge_all(parts) if degree > 1 else parts[0]


def direct_d(g: LieAlgebra, a: KForm, xs: list[KVector]):
    """``(da)(X0..Xk)`` straight from the definition, evaluated on given vectors."""
    total = ZERO
    for i, j in combinations(range(len(xs)), 2):
        rest = [x for m, x in enumerate(xs) if m not in (i, j)]
        term = a.eval(g.bracket(xs[i], xs[j]), *rest)
        total = total + term if (i + j) % 2 == 0 else total - term
    return total


def test_catalog_structure_constants():
    su2, h3, kod4, kod5 = catalog.su2(), catalog.h3(), catalog.kod4(), catalog.kod5()
    assert su2.bracket(e(3, 1), e(3, 2)) == -e(3, 3)
    assert su2.bracket(e(3, 2), e(3, 3)) == -e(3, 1)
    assert su2.bracket(e(3, 3), e(3, 1)) == -e(3, 2)
    assert h3.brackets() == {(0, 1): -e(3, 3)}
    assert kod4.brackets() == {(0, 1): e(4, 3)}
    assert kod5.brackets() == {(0, 1): e(5, 3), (0, 2): -e(5, 5), (1, 3): e(5, 5)}
    for g in (su2, h3, kod4, kod5):
        assert check_jacobi(g) == []


def test_known_differentials():
    su2 = catalog.su2()
    assert ce_d(su2, s(3, 3)) == wedge(s(3, 1), s(3, 2))
    assert ce_d(catalog.h3(), s(3, 3)) == wedge(s(3, 1), s(3, 2))
    assert ce_d(catalog.kod4(), s(4, 3)) == -wedge(s(4, 1), s(4, 2))


@given(algebra_and_form(1), st.data())
def test_ce_d_matches_definition_on_1_forms(ga, data):
    g, a = ga
    xs = [data.draw(vectors(g.dim)) for _ in range(2)]
    assert ce_d(g, a).eval(*xs) == direct_d(g, a, xs)


@given(algebra_and_form(2), st.data())
def test_ce_d_matches_definition_on_2_forms(ga, data):
    g, a = ga
    xs = [data.draw(vectors(g.dim)) for _ in range(3)]
    assert ce_d(g, a).eval(*xs) == direct_d(g, a, xs)


@given(algebra_and_form(1))
def test_d_squared_zero_1_forms(ga):
    g, a = ga
    assert not ce_d(g, ce_d(g, a))


@given(algebra_and_form(2))
def test_d_squared_zero_2_forms(ga):
    g, a = ga
    assert not ce_d(g, ce_d(g, a))


@given(lie_algebras.flatmap(lambda g: st.tuples(st.just(g), covectors(g.dim), covectors(g.dim), covectors(g.dim))))
def test_d_is_a_graded_derivation(t):
    g, a, b, c = t
    ab = wedge(a, b)
    assert ce_d(g, ab) == wedge(ce_d(g, a), b) - wedge(a, ce_d(g, b))
    assert ce_d(g, wedge(ab, c)) == wedge(ce_d(g, ab), c) + wedge(ab, ce_d(g, c))


@given(lie_algebras.flatmap(lambda g: st.tuples(st.just(g), vectors(g.dim), vectors(g.dim), covectors(g.dim))))
def test_lie_derivative_identities(t):
    g, x, y, a = t
    # L_X a evaluated on Y equals -a([X, Y]) for invariant forms
    assert lie_derivative(g, x, a).eval(y) == -a.eval(g.bracket(x, y))
    # i_[X,Y] = [L_X, i_Y]
    b = ce_d(g, a)
    lhs = contract(g.bracket(x, y), b)
    rhs = lie_derivative(g, x, contract(y, b)) - contract(y, lie_derivative(g, x, b))
    assert lhs == rhs


@given(almost_abelian())
def test_random_algebras_satisfy_jacobi(g):
    assert check_jacobi(g) == []


def test_central_extension_and_cocycle():
    kod4 = catalog.kod4()
    omega = -(wedge(s(4, 1), s(4, 3)) - wedge(s(4, 2), s(4, 4)))
    g = central_extension(kod4, omega, name="kod5")
    assert g == catalog.kod5()
    bad = wedge(s(4, 3), s(4, 4))
    assert ce_d(kod4, bad) == -wedge_all([s(4, 1), s(4, 2), s(4, 4)])
    with pytest.raises(NonClosedCocycle):
        central_extension(kod4, bad)
    broken = central_extension(kod4, bad, check=False)
    assert [(v.i, v.j, v.k) for v in check_jacobi(broken)] == [(0, 1, 3)]


def test_jacobi_failure_is_rejected():
    with pytest.raises(ValueError):
        LieAlgebra(3, {(0, 1): e(3, 3), (1, 2): e(3, 2)})
