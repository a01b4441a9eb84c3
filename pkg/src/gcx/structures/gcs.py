"""Generalized complex structures on even-dimensional algebras and their contact lifts."""
from __future__ import annotations

from dataclasses import dataclass

from ..courant import ClosednessReport, GenVector, SubbundleSpan, closedness, is_isotropic
from ..errors import NonIsotropic, NonTransverse, NotClosed, ValidationError
from ..exactnum import HALF, I, ONE, ZERO, Matrix, _rref_rows, as_scalar, nullspace
from ..liealg import LieAlgebra, central_extension
from ..multilinear import Endo, KForm, KVector, bivector_from_sharp, flat_matrix, form_from_flat
from .gacs import Gacs, Violation, block_matrix, blocks, make_gacs


@dataclass(frozen=True, eq=False)
class Gcs:
    """``J = [[phi, pi#], [theta_flat, -phi*]]`` on ``h + h*``."""

    algebra: LieAlgebra
    J: Matrix
    name: str = ""

    @property
    def phi(self) -> Endo:
        return Endo(blocks(self.J)[0])

    @property
    def pi(self) -> KVector:
        return bivector_from_sharp(blocks(self.J)[1])

    @property
    def theta(self) -> KForm:
        return form_from_flat(blocks(self.J)[2])

    def eigenspan(self, sign: int = -1) -> SubbundleSpan:
        """The ``(sign * i)``-eigenspace."""
        n2 = self.J.rows
        shifted = self.J - Matrix.identity(n2).scale(sign * I)
        vecs = nullspace(shifted)
        return SubbundleSpan(self.algebra, [GenVector.from_coords(self.algebra, v) for v in vecs])


def _swap(n: int) -> Matrix:
    z, one = Matrix.zeros(n, n), Matrix.identity(n)
    return block_matrix(z, one, one, z)


def gcs_violations(j: Gcs) -> list[Violation]:
    n = j.algebra.dim
    out = []
    if j.J.rows != 2 * n or j.J.cols != 2 * n:
        return [Violation("Dimension", f"J must be {2 * n}x{2 * n}")]
    if n % 2:
        out.append(Violation("EvenDimension", f"algebra dimension {n} is odd"))
    if j.J @ j.J != -Matrix.identity(2 * n):
        out.append(Violation("JSquared", "J^2 != -I"))
    S = _swap(n)
    if not (j.J + S @ j.J.T @ S).is_zero():
        out.append(Violation("Skew", "J + J* != 0"))
    if any(not x.is_real for x in j.J.entries):
        out.append(Violation("Real", "J has non-real entries"))
    return out


def validate_gcs(j: Gcs) -> Gcs | list[Violation]:
    bad = gcs_violations(j)
    return bad if bad else j


def gcs_integrable(j: Gcs) -> ClosednessReport:
    """Courant closedness of the ``-i``-eigenspace."""
    bad = gcs_violations(j)
    if bad:
        raise ValidationError("; ".join(str(v) for v in bad))
    return closedness(j.eigenspan(-1))


def kodaira_basis(g: LieAlgebra) -> list[GenVector]:
    """``1/2(e1 + i e2), 1/2(e3 + i e4), e^1 + i e^2, e^3 + i e^4`` and their conjugates."""
    n = g.dim

    def vec(a, b):
        c = [ZERO] * (2 * n)
        c[a], c[b] = HALF, HALF * I
        return GenVector.from_coords(g, c)

    def cov(a, b):
        c = [ZERO] * (2 * n)
        c[n + a], c[n + b] = ONE, I
        return GenVector.from_coords(g, c)

    first = [vec(0, 1), vec(2, 3), cov(0, 1), cov(2, 3)]
    return first + [v.conj() for v in first]


def kodaira_rows(t1, t2, t3, t4) -> list[list]:
    t1, t2, t3, t4 = (as_scalar(t) for t in (t1, t2, t3, t4))
    return [
        [ONE, ZERO, ZERO, ZERO, t3, ZERO, ZERO, t1],
        [ZERO, ONE, ZERO, ZERO, ZERO, t2, -t1, ZERO],
        [ZERO, ZERO, ONE, ZERO, ZERO, t4, -t3, ZERO],
        [ZERO, ZERO, ZERO, ONE, -t4, ZERO, ZERO, -t2],
    ]


def kodaira_span(g: LieAlgebra, t1, t2, t3, t4) -> SubbundleSpan:
    basis = kodaira_basis(g)
    gens = []
    for row in kodaira_rows(t1, t2, t3, t4):
        v = GenVector(g)
        for c, b in zip(row, basis):
            if c:
                v = v + c * b
        gens.append(v)
    return SubbundleSpan(g, gens, "E(-i)")


def gcs_from_eigenspan(g: LieAlgebra, span: SubbundleSpan, name: str = "") -> Gcs:
    """J acting as ``-i`` on ``span`` and ``+i`` on its conjugate."""
    n2 = 2 * g.dim
    if span.dim * 2 != n2:
        raise NonTransverse(f"span has dimension {span.dim}, expected {g.dim}")
    if not is_isotropic(span):
        raise NonIsotropic("eigenspan is not isotropic")
    conj = span.conj()
    cols = [v.coords() for v in span.basis] + [v.coords() for v in conj.basis]
    if len(_rref_rows(cols)[1]) != n2:
        raise NonTransverse("span meets its conjugate")
    P = Matrix(n2, n2, tuple(cols[j][i] for i in range(n2) for j in range(n2)))
    D = Matrix(n2, n2, tuple((-I if i < span.dim else I) if i == j else ZERO
                             for i in range(n2) for j in range(n2)))
    return Gcs(g, P @ D @ P.inverse(), name)


def kodaira_family(g: LieAlgebra, t1=0, t2=0, t3=0, t4=0, name: str = "") -> Gcs:
    """Generalized complex structure whose ``-i``-eigenspace is spanned by the family rows."""
    if g.dim != 4:
        raise ValueError("the family lives on a four-dimensional algebra")
    return gcs_from_eigenspan(g, kodaira_span(g, t1, t2, t3, t4), name)


def complex_gcs(g: LieAlgebra, Jc: Endo, name: str = "") -> Gcs:
    """``diag(J, -J*)`` for an endomorphism with ``J^2 = -I``."""
    return Gcs(g, block_matrix(Jc.matrix, Matrix.zeros(g.dim, g.dim), Matrix.zeros(g.dim, g.dim), -Jc.matrix.T), name)


def symplectic_gcs(g: LieAlgebra, omega: KForm, name: str = "") -> Gcs:
    """``[[0, -omega_flat^-1], [omega_flat, 0]]``."""
    W = flat_matrix(omega)
    z = Matrix.zeros(g.dim, g.dim)
    return Gcs(g, block_matrix(z, -W.inverse(), W, z), name)


def _extend_zero(m: Matrix, n: int) -> Matrix:
    return Matrix(n, n, tuple(m[i, j] if i < m.rows and j < m.cols else ZERO for i in range(n) for j in range(n)))


def lift_gcs(h: LieAlgebra, omega: KForm, j: Gcs, name: str = "") -> tuple[LieAlgebra, Gacs]:
    """Central extension by ``omega`` with the blocks of J extended by zero."""
    report = gcs_integrable(j)
    if not report.closed:
        raise NotClosed(f"J is not integrable: {report.witnesses[0]}")
    g = central_extension(h, omega, name=f"{h.name}+c" if h.name else "")
    n = g.dim
    phi_b, pi_b, theta_b, _ = blocks(j.J)
    F = KVector.basis(n, n - 1)
    eta = KForm.basis(n, n - 1)
    phi = Endo(_extend_zero(phi_b, n))
    pi = bivector_from_sharp(_extend_zero(pi_b, n))
    theta = form_from_flat(_extend_zero(theta_b, n))
    return g, make_gacs(g, F, eta, pi=pi, theta=theta, phi=phi, name=name, kind="lift")
