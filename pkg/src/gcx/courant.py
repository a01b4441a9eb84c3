"""The Courant algebroid (g + g*)_C restricted to invariant sections.

Generalized vectors are pairs ``X + alpha``; on invariant sections the Courant
bracket reduces to ``[X, Y] + i_X d(beta) - i_Y d(alpha)`` because every
``d`` of a constant function vanishes.

Two bilinear forms appear:

* :func:`pairing` -- the symmetric form ``1/2 (beta(X) + alpha(Y))``;
* :func:`evaluation` -- twice that, i.e. the natural evaluation of the
  covector halves on the vector halves.  Generalized multivectors such as
  the obstruction tensor are evaluated on sections through it.

Identifications of one isotropic span with the dual of a transversal one
(dual forms, Gamma-sharp, Maurer-Cartan) go through the pairing.

Multivectors over the generalized space are ordinary :class:`KVector` objects
of dimension ``2n`` whose coordinates are ``(X_1..X_n, e^1..e^n)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotClosed
from .exactnum import HALF, ONE, ZERO, GaussRational, _rref_rows, as_scalar, reduce_mod
from .liealg import LieAlgebra, ce_d
from .multilinear import KForm, KVector, _scaled, contract, det, increasing_tuples, pair, pushforward, wedge_all


class GenVector:
    """Invariant section ``vec + cov`` of (g + g*)_C."""

    __slots__ = ("algebra", "vec", "cov", "_coords")

    def __init__(self, algebra: LieAlgebra, vec: KVector | None = None, cov: KForm | None = None):
        n = algebra.dim
        vec = KVector.zero(n, 1) if vec is None else vec
        cov = KForm.zero(n, 1) if cov is None else cov
        if not isinstance(vec, KVector) or not isinstance(cov, KForm):
            raise TypeError("GenVector needs a KVector and a KForm")
        if vec.dim != n or cov.dim != n or vec.degree != 1 or cov.degree != 1:
            raise DimensionMismatch(f"components must be degree-1 tensors in dimension {n}")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "vec", vec)
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "_coords", tuple(vec.to_list()) + tuple(cov.to_list()))

    def __setattr__(self, name, value):
        raise AttributeError("GenVector is immutable")

    @classmethod
    def from_coords(cls, algebra: LieAlgebra, coords: Sequence) -> "GenVector":
        n = algebra.dim
        coords = [as_scalar(c) for c in coords]
        if len(coords) != 2 * n:
            raise DimensionMismatch(f"need {2 * n} coordinates, got {len(coords)}")
        return cls(algebra, KVector.from_list(coords[:n]), KForm.from_list(coords[n:]))

    @classmethod
    def basis(cls, algebra: LieAlgebra, k: int) -> "GenVector":
        """k-th element of (e_1..e_n, e^1..e^n)."""
        c = [ZERO] * (2 * algebra.dim)
        c[k] = ONE
        return cls.from_coords(algebra, c)

    def coords(self) -> tuple:
        return self._coords

    def flat(self) -> tuple:
        """Covector on the generalized space representing ``evaluation(self, .)``."""
        n = self.algebra.dim
        return self._coords[n:] + self._coords[:n]

    def _other(self, other) -> "GenVector":
        if not isinstance(other, GenVector):
            raise TypeError("expected a GenVector")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise DimensionMismatch("generalized vectors over different algebras")
        return other

    def __add__(self, other):
        other = self._other(other)
        return GenVector(self.algebra, self.vec + other.vec, self.cov + other.cov)

    def __sub__(self, other):
        other = self._other(other)
        return GenVector(self.algebra, self.vec - other.vec, self.cov - other.cov)

    def __neg__(self):
        return GenVector(self.algebra, -self.vec, -self.cov)

    def __mul__(self, c):
        c = as_scalar(c)
        return GenVector(self.algebra, c * self.vec, c * self.cov)

    __rmul__ = __mul__

    def conj(self) -> "GenVector":
        return GenVector(self.algebra, self.vec.conj(), self.cov.conj())

    def __bool__(self):
        return any(self._coords)

    def __eq__(self, other):
        if not isinstance(other, GenVector):
            return NotImplemented
        return self.algebra == other.algebra and self._coords == other._coords

    def __hash__(self):
        return hash(self._coords)

    def __repr__(self):
        return f"GenVector({format_genvector(self)})"


def format_genvector(v: GenVector, vec: str = "X", cov: str = "e") -> str:
    n = v.algebra.dim
    parts = []
    for k, c in enumerate(v.coords()):
        if c:
            sym = f"{vec}{k + 1}" if k < n else f"{cov}{k - n + 1}"
            parts.append(_scaled(c, sym))
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


def pairing(a: GenVector, b: GenVector) -> GaussRational:
    """``<X+alpha, Y+beta> = 1/2 (beta(X) + alpha(Y))``."""
    a._other(b)
    return HALF * (pair(b.cov, a.vec) + pair(a.cov, b.vec))


def evaluation(a: GenVector, b: GenVector) -> GaussRational:
    """``beta(X) + alpha(Y)``: the duality between transversal isotropic spans."""
    a._other(b)
    return pair(b.cov, a.vec) + pair(a.cov, b.vec)


def courant_bracket(a: GenVector, b: GenVector) -> GenVector:
    """Invariant Courant bracket ``[X,Y] + i_X d(beta) - i_Y d(alpha)``."""
    a._other(b)
    g = a.algebra
    vec = g.bracket(a.vec, b.vec)
    cov = KForm.zero(g.dim, 1)
    if a.vec and b.cov:
        cov = cov + contract(a.vec, ce_d(g, b.cov))
    if b.vec and a.cov:
        cov = cov - contract(b.vec, ce_d(g, a.cov))
    return GenVector(g, vec, cov)


def anchor(a: GenVector) -> KVector:
    return a.vec


# spans ---------------------------------------------------------------------

class SubbundleSpan:
    """Complex span of finitely many invariant sections.

    ``basis`` keeps the linearly independent generators in the order given;
    equality and membership are decided on the rref-canonical basis.
    """

    def __init__(self, algebra: LieAlgebra, generators: Iterable[GenVector] = (), name: str = ""):
        self.algebra = algebra
        self.name = name
        self.generators = tuple(generators)
        for v in self.generators:
            if v.algebra != algebra:
                raise DimensionMismatch("generator over a different algebra")
        # incremental Gauss-Jordan: each echelon row also records its combination of basis vectors
        basis: list[GenVector] = []
        ech: list[list] = []  # [row, pivot, combination]
        for v in self.generators:
            r = list(v.coords())
            comb = [ZERO] * len(basis) + [ONE]
            for row, p, c in ech:
                f = r[p]
                if f:
                    r = [a - f * b if b else a for a, b in zip(r, row)]
                    comb = [a - f * b if b else a for a, b in zip(comb, c + [ZERO] * (len(comb) - len(c)))]
            p = next((k for k, x in enumerate(r) if x), None)
            if p is None:
                continue
            inv = r[p].inverse()
            r = [x * inv if x else x for x in r]
            comb = [x * inv if x else x for x in comb]
            for e in ech:
                f = e[0][p]
                if f:
                    e[0] = [a - f * b if b else a for a, b in zip(e[0], r)]
                    c = e[2] + [ZERO] * (len(comb) - len(e[2]))
                    e[2] = [a - f * b if b else a for a, b in zip(c, comb)]
            ech.append([r, p, comb])
            basis.append(v)
        self.basis = tuple(basis)
        self.ambient_dim = 2 * algebra.dim
        ech.sort(key=lambda e: e[1])
        m = len(basis)
        self._rref = [tuple(e[0]) for e in ech]
        self._pivots = tuple(e[1] for e in ech)
        self._T = [tuple(e[2] + [ZERO] * (m - len(e[2]))) for e in ech]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def rref_basis(self) -> list[tuple]:
        return list(self._rref)

    def contains(self, v: GenVector) -> bool:
        return not any(reduce_mod(self._rref, self._pivots, v.coords()))

    __contains__ = contains

    def escaping(self, v: GenVector) -> tuple:
        """Component of ``v`` on the standard complement (non-pivot coordinates)."""
        return reduce_mod(self._rref, self._pivots, v.coords())

    def coordinates(self, v: GenVector) -> tuple | None:
        """Coefficients of ``v`` on :attr:`basis`, or None if ``v`` is outside the span."""
        c = v.coords()
        if any(reduce_mod(self._rref, self._pivots, c)):
            return None
        a = [c[p] for p in self._pivots]
        m = len(self.basis)
        out = []
        for l in range(m):
            s = ZERO
            for k in range(m):
                if a[k] and self._T[k][l]:
                    s = s + a[k] * self._T[k][l]
            out.append(s)
        return tuple(out)

    def combine(self, coeffs: Sequence) -> GenVector:
        out = GenVector(self.algebra)
        for c, b in zip(coeffs, self.basis):
            if c:
                out = out + as_scalar(c) * b
        return out

    def conj(self) -> "SubbundleSpan":
        return SubbundleSpan(self.algebra, [v.conj() for v in self.generators])

    def __add__(self, other: "SubbundleSpan") -> "SubbundleSpan":
        return SubbundleSpan(self.algebra, self.generators + other.generators)

    def equals(self, other: "SubbundleSpan") -> bool:
        return self.algebra == other.algebra and self._rref == other._rref

    def __eq__(self, other):
        if not isinstance(other, SubbundleSpan):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash(tuple(self._rref))

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        label = f"{self.name}=" if self.name else ""
        return f"{label}<" + ", ".join(format_genvector(v) for v in self.basis) + ">"


def full_span(algebra: LieAlgebra) -> SubbundleSpan:
    return SubbundleSpan(algebra, [GenVector.basis(algebra, k) for k in range(2 * algebra.dim)])


def is_isotropic(s: SubbundleSpan) -> bool:
    gens = s.basis
    return all(not pairing(a, b) for i, a in enumerate(gens) for b in gens[i:])


@dataclass(frozen=True)
class Witness:
    i: int
    j: int
    value: GenVector
    escaping: tuple

    def __str__(self):
        return f"[[b{self.i + 1}, b{self.j + 1}]] = {format_genvector(self.value)}"


@dataclass(frozen=True)
class ClosednessReport:
    closed: bool
    witnesses: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.closed


def closedness(s: SubbundleSpan) -> ClosednessReport:
    """Test every basis pair (lexicographic order) for bracket membership."""
    witnesses = []
    for i, j in combinations(range(s.dim), 2):
        v = courant_bracket(s.basis[i], s.basis[j])
        esc = s.escaping(v)
        if any(esc):
            witnesses.append(Witness(i, j, v, esc))
    return ClosednessReport(not witnesses, tuple(witnesses))


def bracket_table(s: SubbundleSpan) -> list[tuple[int, int, GenVector]]:
    """Nonzero brackets of basis pairs, lexicographic."""
    out = []
    for i, j in combinations(range(s.dim), 2):
        v = courant_bracket(s.basis[i], s.basis[j])
        if v:
            out.append((i, j, v))
    return out


# tensors on spans ----------------------------------------------------------

def dual_form(L: SubbundleSpan, elements: Sequence[GenVector], form=None) -> KForm:
    """``l1 ^ ... ^ lk`` read as a k-form on ``L``.

    Each ``l`` acts as ``form(l, .)``, by default the symmetric :func:`pairing`
    (pass :func:`evaluation` for the natural duality).  The result has
    dimension ``L.dim`` and coefficients on ``L.basis``.
    """
    form = form or pairing
    k = len(elements)
    m = L.dim
    out = {}
    for J in increasing_tuples(m, k):
        val = det([[form(elements[a], L.basis[J[b]]) for b in range(k)] for a in range(k)])
        if val:
            out[J] = val
    return KForm._raw(m, k, out)


def _bracket_coords(L: SubbundleSpan, Ldual: SubbundleSpan | None, i: int, j: int) -> tuple:
    v = courant_bracket(L.basis[i], L.basis[j])
    c = L.coordinates(v)
    if c is not None:
        return c
    if Ldual is None:
        raise NotClosed(f"bracket of basis {i + 1},{j + 1} leaves the span")
    both = SubbundleSpan(L.algebra, L.basis + Ldual.basis)
    full = both.coordinates(v)
    if full is None or both.dim != L.dim + Ldual.dim:
        raise DimensionMismatch("L and its dual are not transversal")
    return full[:L.dim]


def dirac_d(L: SubbundleSpan, Ldual: SubbundleSpan | None, xi: KForm, require_closed: bool = True) -> KForm:
    """Lie algebroid differential of a Dirac structure on invariant tensors.

    ``xi`` is an alternating k-form on ``L`` (coefficients on ``L.basis``);
    ``(d xi)(s0..sk) = sum_{i<j} (-1)^(i+j) xi([[si,sj]], s0..^i..^j..sk)``.
    With ``require_closed=False`` brackets leaving ``L`` are projected onto it
    along ``Ldual``, which is how the quasi-differential of a non-closed span
    is evaluated.
    """
    if require_closed:
        report = closedness(L)
        if not report.closed:
            raise NotClosed(f"span is not closed: {report.witnesses[0]}")
    m = L.dim
    if xi.dim != m:
        raise DimensionMismatch(f"form of dimension {xi.dim} on a span of dimension {m}")
    k = xi.degree
    if k + 1 > m:
        return KForm.zero(m, m)
    br = {(i, j): _bracket_coords(L, Ldual, i, j) for i, j in combinations(range(m), 2)}
    out = {}
    for J in increasing_tuples(m, k + 1):
        total = ZERO
        for p in range(k + 1):
            for q in range(p + 1, k + 1):
                c = br[(J[p], J[q])]
                rest = J[:p] + J[p + 1:q] + J[q + 1:]
                s = ZERO
                for a, ca in enumerate(c):
                    if ca:
                        v = xi[(a,) + rest]
                        if v:
                            s = s + ca * v
                if s:
                    total = total + s if (p + q) % 2 == 0 else total - s
        if total:
            out[J] = total
    return KForm._raw(m, k + 1, out)


def span_bracket_table(S: SubbundleSpan) -> dict[tuple[int, int], KVector]:
    """Brackets of basis pairs as coordinate vectors on ``S.basis``; raises if ``S`` is not closed."""
    m = S.dim
    out = {}
    for i, j in combinations(range(m), 2):
        c = S.coordinates(courant_bracket(S.basis[i], S.basis[j]))
        if c is None:
            raise NotClosed(f"bracket of basis {i + 1},{j + 1} leaves the span")
        out[(i, j)] = KVector._raw(m, 1, {(a,): x for a, x in enumerate(c) if x})
    return out


def schouten(S: SubbundleSpan, P: KVector, Q: KVector) -> KVector:
    """Bracket of two elements of ^2 S extended from the span's Courant bracket.

    ``[[a^b, c^d]] = [[a,c]]^b^d - [[a,d]]^b^c - [[b,c]]^a^d + [[b,d]]^a^c``,
    bilinear in the coefficients (invariant sections, so no anchor terms).
    """
    m = S.dim
    if P.degree != 2 or Q.degree != 2 or P.dim != m or Q.dim != m:
        raise DimensionMismatch("schouten takes two bivectors on the span basis")
    table = span_bracket_table(S)
    e = [KVector.basis(m, i) for i in range(m)]

    def br(i, j):
        if i == j:
            return KVector.zero(m, 1)
        return table[(i, j)] if i < j else -table[(j, i)]

    out = KVector.zero(m, 3) if m >= 3 else KVector.zero(m, m)
    for (a, b), p in P.coeffs.items():
        for (c, d), q in Q.coeffs.items():
            term = (wedge_all([br(a, c), e[b], e[d]])
                    - wedge_all([br(a, d), e[b], e[c]])
                    - wedge_all([br(b, c), e[a], e[d]])
                    + wedge_all([br(b, d), e[a], e[c]]))
            if term:
                out = out + (p * q) * term
    return out


# multivectors over the generalized space ----------------------------------

def gen_wedge(*vs: GenVector) -> KVector:
    """Wedge of generalized vectors as a multivector over the 2n generalized coordinates."""
    return wedge_all([KVector.from_list(v.coords()) for v in vs])


def gen_eval(A: KVector, *vs: GenVector):
    """Evaluate a generalized multivector on sections through :func:`evaluation`."""
    return A.eval(*[v.flat() for v in vs])


def span_to_ambient(S: SubbundleSpan, A: KVector) -> KVector:
    """Push a multivector with coefficients on ``S.basis`` into the generalized space."""
    return pushforward([b.coords() for b in S.basis], A)


def ambient_to_span(S: SubbundleSpan, A: KVector) -> KVector | None:
    """Coefficients on ``S.basis`` of a generalized multivector, or None if not in ^k S."""
    k = A.degree
    m = S.dim
    keys = list(increasing_tuples(m, k))
    amb = list(increasing_tuples(A.dim, k))
    cols = [span_to_ambient(S, KVector.basis(m, *J)) for J in keys]
    rows = [[c[K] for c in cols] + [A[K]] for K in amb]
    if not keys:
        return KVector.zero(m, k) if not A else None
    red, pivots = _rref_rows(rows)
    if len(keys) in pivots:
        return None
    coeffs = {}
    for r, p in enumerate(pivots):
        val = red[r][len(keys)]
        if val:
            coeffs[keys[p]] = val
    return KVector._raw(m, k, coeffs)
