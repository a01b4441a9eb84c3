"""Generalized almost contact structures ``(F, eta, pi, theta, phi)`` and their validation."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property

from ..courant import GenVector
from ..errors import BadParams, InvalidStructure
from ..exactnum import ONE, Matrix, as_scalar
from ..liealg import LieAlgebra, ce_d
from ..multilinear import Endo, KForm, KVector, flat_matrix, pair, sharp_matrix


@dataclass(frozen=True)
class Violation:
    relation: str
    detail: str

    def __str__(self):
        return f"{self.relation}: {self.detail}"


def block_matrix(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    """``[[a, b], [c, d]]`` for square n x n blocks."""
    n = a.rows
    rows = [a.row(i) + b.row(i) for i in range(n)] + [c.row(i) + d.row(i) for i in range(n)]
    return Matrix(2 * n, 2 * n, tuple(x for r in rows for x in r))


def blocks(m: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    n = m.rows // 2

    def sub(r0, c0):
        return Matrix(n, n, tuple(m[r0 + i, c0 + j] for i in range(n) for j in range(n)))

    return sub(0, 0), sub(0, n), sub(n, 0), sub(n, n)


def outer_matrix(x: KVector | KForm, y: KVector | KForm) -> Matrix:
    xs, ys = x.to_list(), y.to_list()
    return Matrix(len(xs), len(ys), tuple(a * b for a in xs for b in ys))


def odot_matrix(F: KVector, eta: KForm) -> Matrix:
    """``(F . eta)(X + alpha) = eta(X) F + alpha(F) eta`` on generalized coordinates."""
    n = F.dim
    z = Matrix.zeros(n, n)
    return block_matrix(outer_matrix(F, eta), z, z, outer_matrix(eta, F))


@dataclass(frozen=True, eq=False)
class Gacs:
    """Tensor data of a generalized almost contact structure on a Lie algebra.

    Construction does not validate; use :func:`make_gacs` or
    :func:`validate_gacs`.
    """

    algebra: LieAlgebra
    F: KVector
    eta: KForm
    pi: KVector
    theta: KForm
    phi: Endo
    name: str = ""
    kind: str = "explicit"
    notes: tuple = field(default_factory=tuple)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @cached_property
    def Phi(self) -> Matrix:
        """``[[phi, pi#], [theta_flat, -phi*]]`` on coordinates ``(X, alpha)``."""
        return block_matrix(self.phi.matrix, sharp_matrix(self.pi), flat_matrix(self.theta), -self.phi.matrix.T)

    def apply(self, v: GenVector) -> GenVector:
        return GenVector.from_coords(self.algebra, self.Phi @ v.coords())

    def F_gen(self) -> GenVector:
        return GenVector(self.algebra, vec=self.F)

    def eta_gen(self) -> GenVector:
        return GenVector(self.algebra, cov=self.eta)

    def d_eta(self) -> KForm:
        return ce_d(self.algebra, self.eta)

    def with_(self, **changes) -> "Gacs":
        return replace(self, **changes)

    def same_tensors(self, other: "Gacs") -> bool:
        return (self.algebra == other.algebra and self.F == other.F and self.eta == other.eta
                and self.pi == other.pi and self.theta == other.theta and self.phi == other.phi)

    def __repr__(self):
        return f"Gacs({self.name or self.kind}, dim={self.dim})"


def gacs_violations(j: Gacs) -> list[Violation]:
    """Every failed axiom, each named by the relation it breaks (memoized on the frozen instance)."""
    memo = j.__dict__.get("_violations")
    if memo is None:
        memo = j.__dict__["_violations"] = tuple(_violations(j))
    return list(memo)


def _violations(j: Gacs) -> list[Violation]:
    n = j.dim
    out: list[Violation] = []
    for label, t in (("F", j.F), ("eta", j.eta), ("pi", j.pi), ("theta", j.theta)):
        if t.dim != n:
            out.append(Violation("Dimension", f"{label} lives in dimension {t.dim}, algebra has {n}"))
    if j.phi.dim != n:
        out.append(Violation("Dimension", f"phi is {j.phi.dim}x{j.phi.dim}, algebra has {n}"))
    if out:
        return out
    if n % 2 == 0:
        out.append(Violation("OddDimension", f"algebra dimension {n} is even"))
    eF = pair(j.eta, j.F)
    if eF != ONE:
        out.append(Violation("Normalization", f"eta(F) = {eF}"))

    phi = j.phi.matrix
    P = sharp_matrix(j.pi)
    T = flat_matrix(j.theta)
    I = Matrix.identity(n)
    Fe = outer_matrix(j.F, j.eta)
    eF_ = outer_matrix(j.eta, j.F)

    Phi = j.Phi
    Fg, eg = j.F_gen(), j.eta_gen()
    if any(Phi @ Fg.coords()):
        out.append(Violation("PhiF", "Phi(F) is not zero"))
    if any(Phi @ eg.coords()):
        out.append(Violation("PhiEta", "Phi(eta) is not zero"))
    # adjoint for the symmetric pairing swaps the two halves: Phi* = S Phi^T S
    z, one = Matrix.zeros(n, n), Matrix.identity(n)
    S = block_matrix(z, one, one, z)
    if not (Phi + S @ Phi.T @ S).is_zero():
        out.append(Violation("Skew", "Phi + Phi* is not zero"))
    if not (Phi @ Phi == -Matrix.identity(2 * n) + odot_matrix(j.F, j.eta)):
        out.append(Violation("PhiSquared", "Phi^2 differs from -I + F.eta"))

    if not (T @ phi == phi.T @ T):
        out.append(Violation("Relation1", "theta_flat phi != phi* theta_flat"))
    if not (phi @ P == P @ phi.T):
        out.append(Violation("Relation1", "phi pi# != pi# phi*"))
    if not (phi @ phi + P @ T == -I + Fe):
        out.append(Violation("Relation2", "phi^2 + pi# theta_flat != -I + F(x)eta"))
    if not (phi.T @ phi.T + T @ P == -I + eF_):
        out.append(Violation("Relation2", "(phi*)^2 + theta_flat pi# != -I + eta(x)F"))
    checks = [
        (phi.T @ j.eta.to_list(), "eta o phi != 0"),
        (P @ j.eta.to_list(), "pi#(eta) != 0"),
        (phi @ j.F.to_list(), "phi(F) != 0"),
        (T @ j.F.to_list(), "i_F theta != 0"),
    ]
    for vec, msg in checks:
        if any(vec):
            out.append(Violation("Relation3", msg))
    return out


def validate_gacs(candidate: Gacs) -> Gacs | list[Violation]:
    """The structure itself when valid, otherwise the full list of violations."""
    bad = gacs_violations(candidate)
    return bad if bad else candidate


def make_gacs(algebra: LieAlgebra, F: KVector, eta: KForm, pi: KVector | None = None,
              theta: KForm | None = None, phi: Endo | None = None, name: str = "",
              kind: str = "explicit") -> Gacs:
    """Build and validate; raises :class:`InvalidStructure` listing every violation."""
    n = algebra.dim
    j = Gacs(algebra, F, eta,
             KVector.zero(n, 2) if pi is None else pi,
             KForm.zero(n, 2) if theta is None else theta,
             Endo.zero(n) if phi is None else phi,
             name=name, kind=kind)
    bad = gacs_violations(j)
    if bad:
        raise InvalidStructure(bad)
    return j


def rescale(j: Gacs, f) -> Gacs:
    """Equivalent representative ``(Phi, F/f + f eta)`` for a nonzero real constant ``f``."""
    f = as_scalar(f)
    if not f or not f.is_real:
        raise BadParams(f"rescaling factor must be real and nonzero, got {f}")
    return j.with_(F=j.F / f, eta=f * j.eta)


def zero_tensors(n: int) -> tuple[KVector, KForm, Endo]:
    return KVector.zero(n, 2), KForm.zero(n, 2), Endo.zero(n)


__all__ = [
    "Gacs", "Violation", "block_matrix", "blocks", "gacs_violations", "make_gacs",
    "odot_matrix", "outer_matrix", "rescale", "validate_gacs", "zero_tensors",
]
