"""Maurer-Cartan deformations of ``E10`` by bivectors ``Gamma`` in ``^2 E01``.

Every identification between ``E10`` and ``E01`` here goes through the
symmetric pairing: ``Gamma#(e) = <e, f1> f2 - <e, f2> f1`` for
``Gamma = f1 ^ f2``, Gamma read as a 2-form on ``E10`` the same way, and the
resulting 3-form turned back into an element of ``^3 E01`` with the dual
basis of the pairing.  With one consistent duality, a zero residual is the
same as closedness of the graph of Gamma.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..courant import (
    GenVector, SubbundleSpan, ambient_to_span, closedness, dirac_d, gen_wedge, pairing, schouten,
)
from ..errors import DimensionMismatch, MCViolated, NotStrong
from ..exactnum import HALF, ZERO, Matrix, as_scalar
from ..multilinear import KForm, KVector, det, increasing_tuples, wedge_all
from .classify import Level, classify
from .eigen import EigenData, eigenbundles
from .gacs import Gacs


@dataclass(frozen=True)
class DeformParam:
    """A generalized bivector Gamma, expected to lie in ``^2 E01``."""

    gamma: KVector

    @classmethod
    def from_pair(cls, f1: GenVector, f2: GenVector) -> "DeformParam":
        return cls(gen_wedge(f1, f2))

    def scaled(self, t) -> "DeformParam":
        return DeformParam(as_scalar(t) * self.gamma)


@dataclass(frozen=True)
class MCResult:
    residual: KVector
    d_term: KVector
    bracket_term: KVector

    @property
    def zero(self) -> bool:
        return not self.residual

    def __bool__(self):
        return self.zero


def _on_span(E01: SubbundleSpan, G: DeformParam) -> KVector:
    if G.gamma.degree != 2 or G.gamma.dim != E01.ambient_dim:
        raise DimensionMismatch("Gamma must be a generalized bivector")
    coeffs = ambient_to_span(E01, G.gamma)
    if coeffs is None:
        raise ValueError("Gamma is not a section of ^2 E01")
    return coeffs


def pairing_form(L: SubbundleSpan, E01: SubbundleSpan, P: KVector) -> KForm:
    """Multivector ``P`` on ``E01.basis`` read as a form on ``L.basis`` through the pairing."""
    k = P.degree
    m = L.dim
    M = [[pairing(g, s) for s in L.basis] for g in E01.basis]
    out = {}
    for J in increasing_tuples(m, k):
        total = ZERO
        for K, c in P.coeffs.items():
            v = det([[M[K[a]][J[b]] for b in range(k)] for a in range(k)])
            if v:
                total = total + c * v
        if total:
            out[J] = total
    return KForm._raw(m, k, out)


def _form_to_e01(E10: SubbundleSpan, E01: SubbundleSpan, rows: list[int], form: KForm) -> KVector:
    """Element of ``^k E01`` whose pairing with ``E10`` triples reproduces ``form``.

    ``rows`` are the positions of the E10 basis inside the span carrying ``form``.
    """
    m = E01.dim
    M = Matrix.from_rows([[pairing(g, e) for e in E10.basis] for g in E01.basis])
    Minv = M.inverse()
    # dual element to e_b is sum_a Minv[b, a] g_a
    duals = [KVector.from_list(Minv.row(b)) for b in range(m)]
    k = form.degree
    out = KVector.zero(m, k)
    for J in increasing_tuples(m, k):
        val = form[tuple(rows[b] for b in J)]
        if val:
            out = out + val * wedge_all([duals[b] for b in J])
    return out


def mc_check(j: Gacs, G: DeformParam, eigen: EigenData | None = None) -> MCResult:
    """Residual ``d_E Gamma + 1/2 [[Gamma, Gamma]]`` in ``^3 E01`` (coefficients on ``E01.basis``)."""
    c = classify(j)
    if c.level is not Level.STRONG:
        raise NotStrong(f"deformations need a strong structure, got {c.level}")
    e = eigen or eigenbundles(j)
    gamma = _on_span(e.E01, G)
    m = e.E01.dim
    if m < 3:
        zero = KVector.zero(m, m)
        return MCResult(zero, zero, zero)
    L = e.L
    xi = pairing_form(L, e.E01, gamma)
    dxi = dirac_d(L, e.Lstar, xi)
    rows = [_position(L, v) for v in e.E10.basis]
    d_term = _form_to_e01(e.E10, e.E01, rows, dxi)
    br = schouten(e.E01, gamma, gamma)
    return MCResult(d_term + HALF * br, d_term, br)


def _position(L: SubbundleSpan, v: GenVector) -> int:
    for k, b in enumerate(L.basis):
        if b == v:
            return k
    raise ValueError("E10 generator is not a basis element of L")


def gamma_sharp(G: DeformParam, e: GenVector) -> GenVector:
    """``Gamma#(e)`` with the symmetric pairing in the first slot."""
    lam = [HALF * x for x in e.flat()]
    g = e.algebra
    A = G.gamma
    out = [ZERO] * (2 * g.dim)
    for (a, b), c in A.coeffs.items():
        if lam[a]:
            out[b] = out[b] + c * lam[a]
        if lam[b]:
            out[a] = out[a] - c * lam[b]
    return GenVector.from_coords(g, out)


def deform_E(j: Gacs, G: DeformParam, t=1, eigen: EigenData | None = None) -> SubbundleSpan:
    """Graph ``{e + (t Gamma)#(e)}`` over the basis of ``E10``; requires a zero MC residual."""
    e = eigen or eigenbundles(j)
    Gt = G.scaled(t)
    res = mc_check(j, Gt, e)
    if not res.zero:
        raise MCViolated(f"Maurer-Cartan residual {res.residual!r}")
    return SubbundleSpan(j.algebra, [v + gamma_sharp(Gt, v) for v in e.E10.basis], "E10_t")


def graph_closed(j: Gacs, G: DeformParam, eigen: EigenData | None = None) -> bool:
    """Closedness of the graph of Gamma, computed without the MC equation."""
    e = eigen or eigenbundles(j)
    span = SubbundleSpan(j.algebra, [v + gamma_sharp(G, v) for v in e.E10.basis])
    return closedness(span).closed


__all__ = [
    "DeformParam", "MCResult", "deform_E", "gamma_sharp", "graph_closed", "mc_check", "pairing_form",
]
