"""Lie algebras given by structure constants and their Chevalley-Eilenberg calculus."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .errors import DimensionMismatch, NonClosedCocycle
from .exactnum import ZERO, GaussRational, Matrix
from .multilinear import Endo, KForm, KVector, contract, increasing_tuples


@dataclass(frozen=True)
class JacobiViolation:
    i: int
    j: int
    k: int
    residual: KVector

    def __str__(self):
        return f"(e{self.i + 1}, e{self.j + 1}, e{self.k + 1}): {self.residual!r}"


class LieAlgebra:
    """Finite-dimensional Lie algebra with basis e_1..e_n.

    ``brackets`` maps 0-based pairs ``(i, j)`` to ``[e_i, e_j]``; the opposite
    order is filled in by antisymmetry and missing pairs bracket to zero.
    """

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], KVector] | None = None,
                 name: str = "", check: bool = True):
        self.dim = dim
        self.name = name
        table: list[list[tuple]] = [[(ZERO,) * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"bracket index ({i}, {j}) outside dimension {dim}")
            if v.dim != dim:
                raise DimensionMismatch(f"bracket value of dimension {v.dim} in a {dim}-dimensional algebra")
            if i == j:
                if v:
                    raise ValueError(f"[e{i + 1}, e{i + 1}] must vanish")
                continue
            coords = tuple(v.to_list())
            table[i][j] = coords
            table[j][i] = tuple(-c for c in coords)
        self._table = table
        if check:
            bad = check_jacobi(self)
            if bad:
                raise ValueError(f"Jacobi identity fails at {bad[0]}")

    def bracket_basis(self, i: int, j: int) -> KVector:
        return KVector.from_list(self._table[i][j])

    def structure_constant(self, i: int, j: int, k: int) -> GaussRational:
        return self._table[i][j][k]

    def brackets(self) -> dict[tuple[int, int], KVector]:
        """Nonzero brackets ``[e_i, e_j]`` with ``i < j``."""
        out = {}
        for i, j in combinations(range(self.dim), 2):
            if any(self._table[i][j]):
                out[(i, j)] = self.bracket_basis(i, j)
        return out

    def bracket(self, x: KVector, y: KVector) -> KVector:
        if x.dim != self.dim or y.dim != self.dim:
            raise DimensionMismatch("vectors do not live in this algebra")
        out = [ZERO] * self.dim
        for (i,), xi in x.coeffs.items():
            row = self._table[i]
            for (j,), yj in y.coeffs.items():
                c = row[j]
                if i == j or not any(c):
                    continue
                s = xi * yj
                out = [o + s * ck if ck else o for o, ck in zip(out, c)]
        return KVector.from_list(out)

    def is_abelian(self) -> bool:
        return not self.brackets()

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __hash__(self):
        return hash((self.dim, tuple(tuple(r) for r in self._table)))

    def __repr__(self):
        body = ", ".join(f"[e{i + 1},e{j + 1}]={v!r}" for (i, j), v in self.brackets().items())
        return f"LieAlgebra({self.name or 'unnamed'}, dim={self.dim}{', ' + body if body else ''})"


def check_jacobi(g: LieAlgebra) -> list[JacobiViolation]:
    """Every basis triple i<j<k whose cyclic Jacobi sum is nonzero."""
    out = []
    e = [KVector.basis(g.dim, i) for i in range(g.dim)]
    for i, j, k in combinations(range(g.dim), 3):
        r = (g.bracket(g.bracket(e[i], e[j]), e[k])
             + g.bracket(g.bracket(e[j], e[k]), e[i])
             + g.bracket(g.bracket(e[k], e[i]), e[j]))
        if r:
            out.append(JacobiViolation(i, j, k, r))
    return out


def ce_d(g: LieAlgebra, a: KForm) -> KForm:
    """Chevalley-Eilenberg differential of an invariant form.

    ``(da)(X0..Xk) = sum_{i<j} (-1)^(i+j) a([Xi,Xj], X0..^i..^j..Xk)``.
    """
    if a.dim != g.dim:
        raise DimensionMismatch("form does not live on this algebra")
    k = a.degree
    n = g.dim
    if k + 1 > n:
        return KForm.zero(n, n)
    out = {}
    for J in increasing_tuples(n, k + 1):
        total = ZERO
        for p in range(k + 1):
            for q in range(p + 1, k + 1):
                br = g._table[J[p]][J[q]]
                rest = J[:p] + J[p + 1:q] + J[q + 1:]
                s = ZERO
                for m, c in enumerate(br):
                    if c:
                        v = a[(m,) + rest]
                        if v:
                            s = s + c * v
                if s:
                    total = total + s if (p + q) % 2 == 0 else total - s
        if total:
            out[J] = total
    return KForm._raw(n, k + 1, out)


def lie_derivative(g: LieAlgebra, x: KVector, a):
    """Lie derivative along an invariant vector.

    Forms use Cartan's formula ``L_X = i_X d + d i_X`` (d of a constant is
    zero); vectors use ``L_X Y = [X, Y]``; endomorphisms use
    ``(L_X phi)(Y) = [X, phi Y] - phi [X, Y]``.
    """
    if isinstance(a, KVector):
        if a.degree != 1:
            raise ValueError("only vectors of degree 1 are supported")
        return g.bracket(x, a)
    if isinstance(a, Endo):
        n = g.dim
        cols = []
        for j in range(n):
            ej = KVector.basis(n, j)
            cols.append((g.bracket(x, a.apply(ej)) - a.apply(g.bracket(x, ej))).to_list())
        return Endo(Matrix(n, n, tuple(cols[j][i] for i in range(n) for j in range(n))))
    out = contract(x, ce_d(g, a))
    if a.degree > 0:
        out = out + ce_d(g, contract(x, a))
    return out


def central_extension(h: LieAlgebra, omega: KForm, name: str = "", check: bool = True) -> LieAlgebra:
    """Extend ``h`` by a central line spanned by a new last basis vector F.

    ``[X, Y]_new = [X, Y]_h + omega(X, Y) F`` and ``[X, F] = 0``.  Raises
    :class:`NonClosedCocycle` unless ``d omega = 0``; ``check=False`` skips
    that test and the Jacobi check so broken algebras can be inspected.
    """
    if omega.degree != 2 or omega.dim != h.dim:
        raise DimensionMismatch("omega must be a 2-form on h")
    if check:
        d_omega = ce_d(h, omega)
        if d_omega:
            raise NonClosedCocycle(f"d omega = {d_omega!r} is not zero")
    return _extend(h, omega, name, check=check)


def _extend(h: LieAlgebra, omega: KForm, name: str, check: bool) -> LieAlgebra:
    n = h.dim
    brackets = {}
    for i, j in combinations(range(n), 2):
        coords = list(h.bracket_basis(i, j).to_list()) + [omega[(i, j)]]
        v = KVector.from_list(coords)
        if v:
            brackets[(i, j)] = v
    return LieAlgebra(n + 1, brackets, name=name, check=check)


def embed_form(a: KForm, dim: int) -> KForm:
    """View a form on the first ``a.dim`` coordinates inside a larger space."""
    return KForm._raw(dim, a.degree, dict(a.coeffs))


def embed_vector(x: KVector, dim: int) -> KVector:
    return KVector._raw(dim, x.degree, dict(x.coeffs))
