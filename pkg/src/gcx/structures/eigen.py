"""Eigenbundles of Phi and the type decomposition of pulled-back 2-forms."""
from __future__ import annotations

from dataclasses import dataclass

from ..courant import GenVector, SubbundleSpan
from ..errors import InvalidStructure
from ..exactnum import HALF, I, Matrix, _rref_rows, nullspace
from ..multilinear import KForm, KVector, mixed_pushforward, pushforward
from .gacs import Gacs, Violation, gacs_violations


@dataclass(frozen=True)
class EigenData:
    L_F: SubbundleSpan
    L_eta: SubbundleSpan
    E10: SubbundleSpan
    E01: SubbundleSpan
    L: SubbundleSpan
    Lstar: SubbundleSpan
    Lbar: SubbundleSpan
    Lbarstar: SubbundleSpan

    def spans(self) -> dict[str, SubbundleSpan]:
        return {
            "L_F": self.L_F, "L_eta": self.L_eta, "E10": self.E10, "E01": self.E01,
            "L": self.L, "Lstar": self.Lstar, "Lbar": self.Lbar, "Lbarstar": self.Lbarstar,
        }


def kernel_basis(j: Gacs) -> list[GenVector]:
    """Real basis of ``ker eta + ker F``: vectors first, then covectors."""
    g = j.algebra
    eta_row = Matrix(1, j.dim, tuple(j.eta.to_list()))
    F_row = Matrix(1, j.dim, tuple(j.F.to_list()))
    vecs = [GenVector(g, vec=KVector.from_list(v)) for v in nullspace(eta_row)]
    covs = [GenVector(g, cov=KForm.from_list(a)) for a in nullspace(F_row)]
    return vecs + covs


def eigenbundles(j: Gacs) -> EigenData:
    """The eight spans ``L_F, L_eta, E10, E01, L, L*, Lbar, Lbar*``.

    ``E10 = {e - i Phi e}`` over a basis of ``ker eta + ker F``; generators
    keep the first linearly independent ones so E01 is their conjugate list.
    """
    bad = gacs_violations(j)
    if bad:
        raise InvalidStructure(bad)
    g = j.algebra
    e10: list[GenVector] = []
    rows: list[tuple] = []
    for e in kernel_basis(j):
        v = e - I * j.apply(e)
        trial = rows + [v.coords()]
        if len(_rref_rows(trial)[1]) == len(trial):
            rows = trial
            e10.append(v)
    if len(e10) != j.dim - 1:
        raise InvalidStructure([Violation("Relation2", f"+i-eigenspace has dimension {len(e10)}, expected {j.dim - 1}")])
    e01 = [v.conj() for v in e10]
    F, eta = j.F_gen(), j.eta_gen()
    return EigenData(
        L_F=SubbundleSpan(g, [F], "L_F"),
        L_eta=SubbundleSpan(g, [eta], "L_eta"),
        E10=SubbundleSpan(g, e10, "E10"),
        E01=SubbundleSpan(g, e01, "E01"),
        L=SubbundleSpan(g, [F] + e10, "L"),
        Lstar=SubbundleSpan(g, [eta] + e01, "L*"),
        Lbar=SubbundleSpan(g, [F] + e01, "Lbar"),
        Lbarstar=SubbundleSpan(g, [eta] + e10, "Lbar*"),
    )


def projectors(j: Gacs) -> tuple[Matrix, Matrix, Matrix]:
    """Spectral projectors ``(P10, P01, P0)`` of Phi.

    With ``Phi^3 = -Phi``: ``P10 = (-Phi^2 - i Phi)/2``, ``P01`` its
    conjugate and ``P0 = I + Phi^2``.
    """
    Phi = j.Phi
    Phi2 = Phi @ Phi
    iPhi = Phi.scale(I)
    P10 = (-Phi2 - iPhi).scale(HALF)
    P01 = (-Phi2 + iPhi).scale(HALF)
    P0 = Matrix.identity(Phi.rows) + Phi2
    return P10, P01, P0


def anchor_pullback(B: KForm) -> KVector:
    """``Q(u, v) = B(rho u, rho v)`` as a generalized 2-vector read through evaluation.

    Evaluation swaps the halves, so the coefficients of ``B`` sit on the
    covector coordinates.
    """
    n = B.dim
    return KVector._raw(2 * n, B.degree, {tuple(n + i for i in k): c for k, c in B.coeffs.items()})


@dataclass(frozen=True)
class TypeBlocks:
    """Components of a pulled-back 2-form in ``^2 E10``, ``E10 ^ E01`` and ``^2 E01``."""

    block20: KVector
    block11: KVector
    block02: KVector
    rest: KVector

    def as_dict(self) -> dict[str, KVector]:
        return {"(2,0)": self.block20, "(1,1)": self.block11, "(0,2)": self.block02}


def type_components(j: Gacs, B: KForm) -> TypeBlocks:
    """Type decomposition of ``rho* B`` with respect to Phi.

    ``block20`` is the ``^2 E10`` part; through evaluation it is the
    restriction of ``B(rho., rho.)`` to ``E01 x E01`` arguments.  ``rest``
    collects the parts involving the zero-eigenspace.
    """
    if B.degree != 2 or B.dim != j.dim:
        raise ValueError("type_components needs a 2-form on the algebra")
    P10, P01, _ = projectors(j)
    A = anchor_pullback(B)
    c10 = [P10.column(k) for k in range(P10.cols)]
    c01 = [P01.column(k) for k in range(P01.cols)]
    b20 = pushforward(c10, A)
    b02 = pushforward(c01, A)
    b11 = mixed_pushforward(c10, c01, A)
    return TypeBlocks(b20, b11, b02, A - b20 - b11 - b02)
