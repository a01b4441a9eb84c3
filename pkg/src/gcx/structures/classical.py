"""Generalized almost contact structures built from classical odd-dimensional geometry."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import Degenerate, NotAlmostContact, NotClosedForms, NotContact
from ..exactnum import ZERO, Matrix, solve
from ..liealg import LieAlgebra, ce_d, lie_derivative
from ..multilinear import (
    Endo, KForm, KVector, bivector_from_sharp, flat_matrix, pair, wedge, wedge_power,
)
from .gacs import Gacs, make_gacs, outer_matrix


def _top_nonzero(form: KForm) -> bool:
    return bool(form) and form.degree == form.dim


def reeb_field(eta: KForm, theta: KForm) -> KVector:
    """The unique F with ``eta(F) = 1`` and ``i_F theta = 0``."""
    n = eta.dim
    T = flat_matrix(theta)
    rows = [T.row(i) for i in range(n)] + [tuple(eta.to_list())]
    sol = solve(Matrix.from_rows(rows), [ZERO] * n + [1])
    if sol is None:
        raise Degenerate("no vector with eta(F) = 1 and i_F theta = 0")
    return KVector.from_list(sol)


def _pi_from_flat(eta: KForm, theta: KForm) -> KVector:
    """``pi(alpha, beta) = theta(b^-1 alpha, b^-1 beta)`` with ``b(X) = i_X theta - eta(X) eta``."""
    bmat = flat_matrix(theta) - outer_matrix(eta, eta)
    try:
        binv = bmat.inverse()
    except ZeroDivisionError as exc:
        raise Degenerate("the flat map is singular") from exc
    n = eta.dim
    cols = [binv.column(a) for a in range(n)]
    entries = []
    for i in range(n):
        for j in range(n):
            # sharp_matrix[i][j] = pi(e^j, e^i)
            entries.append(theta.eval(cols[j], cols[i]))
    return bivector_from_sharp(Matrix(n, n, tuple(entries)))


def from_contact(g: LieAlgebra, eta: KForm, name: str = "") -> Gacs:
    """Contact form ``eta``: ``theta = d eta``, Reeb field F, ``phi = 0``."""
    n = g.dim
    if n % 2 == 0:
        raise NotContact(f"contact forms need odd dimension, got {n}")
    theta = ce_d(g, eta)
    vol = wedge(eta, wedge_power(theta, (n - 1) // 2)) if n > 1 else eta
    if not _top_nonzero(vol):
        raise NotContact("eta ^ (d eta)^n vanishes")
    F = reeb_field(eta, theta)
    pi = _pi_from_flat(eta, theta)
    return make_gacs(g, F, eta, pi=pi, theta=theta, name=name, kind="contact")


@dataclass(frozen=True)
class ClosedFormsReport:
    eta_closed: bool
    theta_closed: bool
    failing: tuple = field(default_factory=tuple)

    @property
    def cosymplectic(self) -> bool:
        return self.eta_closed and self.theta_closed


def cosymplectic_report(g: LieAlgebra, eta: KForm, theta: KForm) -> ClosedFormsReport:
    de, dt = ce_d(g, eta), ce_d(g, theta)
    failing = tuple(name for name, d in (("eta", de), ("theta", dt)) if d)
    return ClosedFormsReport(not de, not dt, failing)


def from_cosymplectic(g: LieAlgebra, eta: KForm, theta: KForm, name: str = "",
                      require_closed: bool = False) -> Gacs:
    """Almost cosymplectic pair; ``kind`` is ``cosymplectic`` only when both forms are closed.

    With ``require_closed`` a non-closed pair raises :class:`NotClosedForms`.
    """
    n = g.dim
    if n % 2 == 0:
        raise Degenerate(f"cosymplectic structures need odd dimension, got {n}")
    vol = wedge(eta, wedge_power(theta, (n - 1) // 2)) if n > 1 else eta
    if not _top_nonzero(vol):
        raise Degenerate("eta ^ theta^n vanishes")
    report = cosymplectic_report(g, eta, theta)
    if require_closed and not report.cosymplectic:
        raise NotClosedForms("not closed: " + ", ".join(report.failing))
    F = reeb_field(eta, theta)
    pi = _pi_from_flat(eta, theta)
    kind = "cosymplectic" if report.cosymplectic else "almost_cosymplectic"
    j = make_gacs(g, F, eta, pi=pi, theta=theta, name=name, kind=kind)
    return j.with_(notes=tuple(f"d{f} != 0" for f in report.failing))


def from_almost_contact(g: LieAlgebra, F: KVector, eta: KForm, phi: Endo, name: str = "") -> Gacs:
    """Almost contact triple; ``Phi = diag(phi, -phi*)``."""
    n = g.dim
    if pair(eta, F) != 1:
        raise NotAlmostContact(f"eta(F) = {pair(eta, F)}")
    if phi.matrix @ phi.matrix != -Matrix.identity(n) + outer_matrix(F, eta):
        raise NotAlmostContact("phi^2 differs from -I + F(x)eta")
    return make_gacs(g, F, eta, phi=phi, name=name, kind="almost_contact")


@dataclass(frozen=True)
class NormalityReport:
    normal: bool
    nijenhuis_residual: tuple
    lie_F_phi: Endo
    lie_F_eta: KForm

    def __bool__(self):
        return self.normal


def nijenhuis_phi(g: LieAlgebra, phi: Endo, x: KVector, y: KVector) -> KVector:
    """``[phi X, phi Y] + phi^2 [X, Y] - phi([phi X, Y] + [X, phi Y])``."""
    px, py = phi.apply(x), phi.apply(y)
    return (g.bracket(px, py) + phi.apply(phi.apply(g.bracket(x, y)))
            - phi.apply(g.bracket(px, y) + g.bracket(x, py)))


def is_normal(g: LieAlgebra, F: KVector, eta: KForm, phi: Endo) -> NormalityReport:
    """``N_phi = -d eta (x) F``, ``L_F phi = 0`` and ``L_F eta = 0``."""
    n = g.dim
    d = ce_d(g, eta)
    residual = []
    for i in range(n):
        for j in range(i + 1, n):
            x, y = KVector.basis(n, i), KVector.basis(n, j)
            r = nijenhuis_phi(g, phi, x, y) + d[(i, j)] * F
            if r:
                residual.append((i, j, r))
    lf_phi = lie_derivative(g, F, phi)
    lf_eta = lie_derivative(g, F, eta)
    ok = not residual and lf_phi.is_zero() and not lf_eta
    return NormalityReport(ok, tuple(residual), lf_phi, lf_eta)
