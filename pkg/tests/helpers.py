"""Shared strategies and constructions for the test suite."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from gcx import catalog
from gcx.courant import GenVector
from gcx.exactnum import GaussRational, Matrix
from gcx.liealg import LieAlgebra
from gcx.multilinear import Endo, KForm, KVector, bivector_from_sharp, contract, flat_matrix, form_from_flat, wedge
from gcx.structures import Gacs, from_almost_contact, from_contact, from_cosymplectic
from gcx.structures.gacs import block_matrix, blocks

small_ints = st.integers(-4, 4)
denominators = st.sampled_from((1, 1, 2, 3, 4))
fractions = st.builds(Fraction, st.integers(-6, 6), denominators)
reals = fractions.map(GaussRational)
# one shared denominator keeps generation cheap while still exercising fractions
scalars = st.builds(lambda a, b, d: GaussRational(Fraction(a, d), Fraction(b, d)),
                    st.integers(-12, 12), st.integers(-12, 12), denominators)
nonzero_reals = fractions.filter(bool).map(GaussRational)

ALGEBRAS = {"su2": catalog.su2(), "h3": catalog.h3(), "kod4": catalog.kod4(), "kod5": catalog.kod5()}
algebras = st.sampled_from(sorted(ALGEBRAS)).map(ALGEBRAS.__getitem__)


def vectors(n: int, coeff=scalars):
    return st.lists(coeff, min_size=n, max_size=n).map(KVector.from_list)


def covectors(n: int, coeff=scalars):
    return st.lists(coeff, min_size=n, max_size=n).map(KForm.from_list)


def two_forms(n: int, coeff=scalars):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return st.lists(coeff, min_size=len(pairs), max_size=len(pairs)).map(
        lambda cs: KForm(n, 2, dict(zip(pairs, cs))))


def gen_vectors(g: LieAlgebra, coeff=scalars):
    return st.lists(coeff, min_size=2 * g.dim, max_size=2 * g.dim).map(lambda cs: GenVector.from_coords(g, cs))


@st.composite
def algebra_and_gens(draw, k: int = 2, coeff=scalars):
    g = draw(algebras)
    return g, [draw(gen_vectors(g, coeff)) for _ in range(k)]


@st.composite
def invertible(draw, n: int):
    """``A = L U`` with unit lower L and upper U on a nonzero diagonal, plus its inverse."""
    ints = st.integers(-2, 2)
    diag = st.sampled_from((1, -1, 2, -2, 3))
    lower = [[GaussRational(1 if r == c else draw(ints) if r > c else 0) for c in range(n)] for r in range(n)]
    upper = [[GaussRational(draw(diag) if r == c else draw(ints) if r < c else 0) for c in range(n)]
             for r in range(n)]
    m = Matrix.from_rows(lower) @ Matrix.from_rows(upper)
    return m, m.inverse()


def conjugated_almost_contact(g: LieAlgebra, A: Matrix, Ainv: Matrix) -> Gacs:
    """The standard almost contact triple of the last basis vector, moved by ``A``."""
    n = g.dim
    phi0 = Matrix.zeros(n, n).to_rows()
    phi0 = [list(r) for r in phi0]
    for k in range(0, n - 1, 2):
        phi0[k + 1][k] = GaussRational(1)
        phi0[k][k + 1] = GaussRational(-1)
    phi = A @ Matrix.from_rows(phi0) @ Ainv
    F = KVector.from_list(A.column(n - 1))
    eta = KForm.from_list(Ainv.row(n - 1))
    return from_almost_contact(g, F, eta, Endo(phi))


def b_transform(j: Gacs, B: KForm) -> Gacs:
    """Conjugate ``Phi`` by ``exp(B)``; requires ``i_F B = 0`` so that F and eta are preserved."""
    n = j.dim
    Bf = flat_matrix(B)
    one, z = Matrix.identity(n), Matrix.zeros(n, n)
    E = block_matrix(one, z, Bf, one)
    Einv = block_matrix(one, z, -Bf, one)
    phi, P, T, _ = blocks(E @ j.Phi @ Einv)
    return j.with_(phi=Endo(phi), pi=bivector_from_sharp(P), theta=form_from_flat(T), kind="explicit")


def kill_F(B: KForm, F: KVector, eta: KForm) -> KForm:
    """Project a 2-form to one with ``i_F B = 0``: ``B - eta ^ i_F B``."""
    return B - wedge(eta, contract(F, B))


@st.composite
def random_gacs(draw, algebra_names=("su2", "h3")):
    """A valid Gacs on su(2) or h3: contact, cosymplectic, conjugated almost contact, optionally B-transformed."""
    g = ALGEBRAS[draw(st.sampled_from(algebra_names))]
    n = g.dim
    kind = draw(st.sampled_from(("classical", "almost_contact")))
    if kind == "classical" and g.name == "su2":
        j = from_contact(g, draw(covectors(n, reals).filter(bool)))
    elif kind == "classical":
        # closed 1-forms on h3 are spanned by e1, e2; every 2-form is closed
        eta = KForm.from_list([draw(reals), draw(reals), GaussRational(0)])
        theta = draw(two_forms(n, reals))
        if not wedge(eta, theta):
            eta, theta = KForm.basis(n, 0), KForm.basis(n, 1, 2)
        j = from_cosymplectic(g, eta, theta)
    else:
        A, Ainv = draw(invertible(n))
        j = conjugated_almost_contact(g, A, Ainv)
    if draw(st.booleans()):
        j = b_transform(j, kill_F(draw(two_forms(n, reals)), j.F, j.eta))
    return j
