from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcx.errors import DimensionMismatch
from gcx.exactnum import ONE, ZERO, GaussRational, Matrix
from gcx.multilinear import (
    Endo, KForm, KVector, bivector_from_sharp, contract, flat, flat_matrix, form_from_flat, pair, pushforward,
    sharp, sharp_matrix, sort_sign, wedge, wedge_all,
)
from helpers import covectors, scalars, small_ints, two_forms, vectors

N = 4


@st.composite
def forms(draw, degree: int, n: int = N):
    terms = draw(st.lists(covectors(n), min_size=degree, max_size=degree))
    scale = draw(scalars)
    return scale * wedge_all(terms) if degree else KForm.scalar(n, scale)


def leibniz_det(rows):
    """Determinant by the permutation expansion, written out independently."""
    k = len(rows)
    total = ZERO
    for p in permutations(range(k)):
        term = GaussRational(sort_sign(p)[0])
        for i in range(k):
            term = term * rows[i][p[i]]
        total = total + term
    return total


def test_determinant_convention():
    s = [KForm.basis(3, k) for k in range(3)]
    X = [KVector.basis(3, k) for k in range(3)]
    assert wedge(s[1], s[2]).eval(X[1], X[2]) == ONE
    assert wedge(s[1], s[2]).eval(X[2], X[1]) == -ONE
    assert wedge_all(s).eval(*X) == ONE


@given(st.lists(covectors(N), min_size=3, max_size=3), st.lists(vectors(N), min_size=3, max_size=3))
def test_wedge_of_covectors_is_determinant(alphas, xs):
    expected = leibniz_det([[pair(a, x) for x in xs] for a in alphas])
    assert wedge_all(alphas).eval(*xs) == expected


@given(forms(1), forms(2), forms(1))
def test_wedge_associative_and_graded_commutative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
    assert wedge(a, b) == wedge(b, a)
    assert wedge(a, c) == -wedge(c, a)


@given(vectors(N), forms(2), forms(1))
def test_contract_is_antiderivation(x, a, b):
    assert contract(x, wedge(a, b)) == wedge(contract(x, a), b) + wedge(a, contract(x, b))
    assert contract(x, wedge(b, a)) == wedge(contract(x, b), a) - wedge(b, contract(x, a))


@given(vectors(N), vectors(N), vectors(N), forms(3))
def test_contract_inserts_first_slot(x, y, z, a):
    assert contract(x, a).eval(y, z) == a.eval(x, y, z)
    assert contract(y, contract(x, a)).eval(z) == a.eval(x, y, z)


@given(two_forms(N), vectors(N), vectors(N))
def test_flat_sharp_conventions(theta, x, y):
    assert pair(flat(theta, x), y) == theta.eval(x, y)
    assert form_from_flat(flat_matrix(theta)) == theta
    pi = KVector(N, 2, dict(theta.coeffs))
    assert bivector_from_sharp(sharp_matrix(pi)) == pi
    a, b = KForm.from_list(x.to_list()), KForm.from_list(y.to_list())
    assert pair(b, sharp(pi, a)) == pi.eval(a, b)


@given(st.lists(small_ints, min_size=N * N, max_size=N * N), st.lists(small_ints, min_size=N * N, max_size=N * N),
       forms(2))
def test_pushforward_is_functorial(ea, eb, a):
    A = Matrix(N, N, tuple(GaussRational(x) for x in ea))
    B = Matrix(N, N, tuple(GaussRational(x) for x in eb))
    cols = lambda M: [M.column(j) for j in range(N)]  # noqa: E731
    assert pushforward(cols(A), pushforward(cols(B), a)) == pushforward(cols(A @ B), a)


@given(st.lists(scalars, min_size=N * N, max_size=N * N), vectors(N), covectors(N))
def test_endo_dual(entries, x, a):
    phi = Endo(Matrix(N, N, tuple(entries)))
    assert pair(phi.dual_apply(a), x) == pair(a, phi.apply(x))
    assert (phi @ phi).apply(x) == phi.apply(phi.apply(x))


@given(forms(2), scalars)
def test_conj_and_scaling(a, c):
    assert (c * a).conj() == c.conjugate() * a.conj()
    assert a.conj().conj() == a


def test_mismatched_dimensions():
    with pytest.raises(DimensionMismatch):
        wedge(KForm.basis(3, 0), KForm.basis(4, 1))
    with pytest.raises(TypeError):
        contract(KVector.basis(3, 0), KVector.basis(3, 0, 1))


def test_top_degree_overflow_is_zero():
    a = wedge_all([KForm.basis(3, k) for k in range(3)])
    assert not wedge(a, KForm.basis(3, 0))
