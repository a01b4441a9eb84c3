"""Exterior calculus with polynomial coefficients on a coordinate chart.

Coordinates on the chart of dimension ``2n + 1`` are ordered
``(x1, y1, ..., xn, yn, z)``.  Vector fields and forms are the usual
:class:`~gcx.multilinear.KVector` / :class:`~gcx.multilinear.KForm` objects
whose coefficients are :class:`Poly` instances; the coordinate basis is
``d/dx_k`` and ``dx_k``.  Here the Courant bracket is the full formula with
Lie derivatives and the exact term, not its invariant reduction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exactnum import HALF, I, ONE, ZERO, GaussRational, as_scalar
from .multilinear import KForm, KVector, _Alternating, contract, pushforward, mixed_pushforward, wedge


class Poly:
    """Sparse multivariate polynomial over Q(i): ``{exponent tuple: coefficient}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            c = as_scalar(c)
            if c:
                clean[exp] = clean[exp] + c if exp in clean else c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Poly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "terms", {e: c for e, c in terms.items() if c})
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly._raw, (self.nvars, dict(self.terms)))

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls._raw(nvars, {(0,) * nvars: as_scalar(c)})

    @classmethod
    def var(cls, nvars: int, k: int) -> "Poly":
        exp = [0] * nvars
        exp[k] = 1
        return cls._raw(nvars, {tuple(exp): ONE})

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"polynomials in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (GaussRational, int, Fraction)):
            return Poly.const(self.nvars, other)
        return None

    # ring operations ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out[e] + c if e in out else c
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, _Alternating):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return Poly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(self.nvars, ONE)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> "Poly":
        return Poly._raw(self.nvars, {e: c.conjugate() for e, c in self.terms.items()})

    def derivative(self, k: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = e[:k] + (e[k] - 1,) + e[k + 1:]
                out[ne] = c * e[k]
        return Poly._raw(self.nvars, out)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    # predicates -----------------------------------------------------------

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> GaussRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * self.nvars, ZERO)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(tuple(sorted(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        names = chart_names(self.nvars)
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                parts.append(str(c) if not (c.re and c.im) else f"({c})")
            elif c == ONE:
                parts.append(mono)
            elif c == -ONE:
                parts.append("-" + mono)
            else:
                s = str(c)
                parts.append(f"({s})*{mono}" if c.re and c.im else f"{s}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self})"


def chart_names(nvars: int) -> list[str]:
    """``x1, y1, ..., xn, yn, z`` for odd charts, ``v1..vN`` otherwise."""
    if nvars % 2:
        n = nvars // 2
        return [f"{c}{j}" for j in range(1, n + 1) for c in "xy"] + ["z"]
    return [f"v{k}" for k in range(1, nvars + 1)]


def _const_poly(nvars: int, c) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(nvars, c)


def apply_field(X: KVector, f: Poly) -> Poly:
    """Directional derivative ``X(f) = sum_k X^k d_k f``."""
    out = Poly(X.dim)
    for (k,), c in X.coeffs.items():
        out = out + c * f.derivative(k)
    return out


def _coeff_derivative(c, k: int, nvars: int) -> Poly:
    return _const_poly(nvars, c).derivative(k)


def pf_d(a: KForm) -> KForm:
    """Exterior derivative ``d(f dx^K) = sum_m d_m f dx^m ^ dx^K``."""
    n = a.dim
    out: dict = {}
    for K, c in a.coeffs.items():
        for m in range(n):
            dc = _coeff_derivative(c, m, n)
            if dc and m not in K:
                piece = KForm(n, a.degree + 1, {(m,) + K: dc})
                for key, v in piece.coeffs.items():
                    out[key] = out[key] + v if key in out else v
    return KForm._raw(n, a.degree + 1, out)


def pf_bracket(X: KVector, Y: KVector) -> KVector:
    """Coordinate Lie bracket ``[X, Y]^k = X(Y^k) - Y(X^k)``."""
    n = X.dim
    vals = []
    for k in range(n):
        yk, xk = _const_poly(n, Y[k]), _const_poly(n, X[k])
        vals.append(apply_field(X, yk) - apply_field(Y, xk))
    return KVector._raw(n, 1, {(k,): v for k, v in enumerate(vals)})


def pf_lie_derivative(X: KVector, a: KForm) -> KForm:
    """``L_X`` on forms: derivative of coefficients plus ``d(X^k)`` substituted in each slot."""
    n = a.dim
    out = KForm.zero(n, a.degree)
    for K, c in a.coeffs.items():
        cp = _const_poly(n, c)
        xc = apply_field(X, cp)
        if xc:
            out = out + KForm(n, a.degree, {K: xc})
        for s, k in enumerate(K):
            xk = _const_poly(n, X[k])
            for m in range(n):
                dm = xk.derivative(m)
                if dm:
                    key = K[:s] + (m,) + K[s + 1:]
                    out = out + KForm(n, a.degree, {key: cp * dm})
    return out


@dataclass(frozen=True)
class PolySection:
    """Section ``X + alpha`` of ``(TM + T*M)_C`` over the chart."""

    vec: KVector
    cov: KForm

    @classmethod
    def of(cls, dim: int, vec: KVector | None = None, cov: KForm | None = None) -> "PolySection":
        return cls(KVector.zero(dim, 1) if vec is None else vec, KForm.zero(dim, 1) if cov is None else cov)

    @property
    def dim(self) -> int:
        return self.vec.dim

    def __add__(self, other: "PolySection") -> "PolySection":
        return PolySection(self.vec + other.vec, self.cov + other.cov)

    def __sub__(self, other: "PolySection") -> "PolySection":
        return PolySection(self.vec - other.vec, self.cov - other.cov)

    def __neg__(self) -> "PolySection":
        return PolySection(-self.vec, -self.cov)

    def __rmul__(self, c) -> "PolySection":
        return PolySection(c * self.vec, c * self.cov)

    def coords(self) -> list:
        return self.vec.to_list() + self.cov.to_list()

    @classmethod
    def from_coords(cls, coords) -> "PolySection":
        n = len(coords) // 2
        return cls(KVector._raw(n, 1, {(k,): coords[k] for k in range(n)}),
                   KForm._raw(n, 1, {(k,): coords[n + k] for k in range(n)}))

    def flat(self) -> list:
        """Covector on the generalized chart space for natural evaluation."""
        c = self.coords()
        n = self.dim
        return c[n:] + c[:n]

    def conj(self) -> "PolySection":
        return PolySection(self.vec.conj(), self.cov.conj())

    def __bool__(self):
        return bool(self.vec) or bool(self.cov)


def _iota(X: KVector, a: KForm):
    """Contraction returning a Poly for 1-forms (``a(X)``)."""
    n = X.dim
    if a.degree == 1:
        total = Poly(n)
        for (k,), c in a.coeffs.items():
            x = X.coeffs.get((k,))
            if x is not None:
                total = total + c * x
        return total
    return contract(X, a)


def pf_pairing(a: PolySection, b: PolySection) -> Poly:
    return HALF * (_iota(a.vec, b.cov) + _iota(b.vec, a.cov))


def pf_courant(a: PolySection, b: PolySection) -> PolySection:
    """``[X, Y] + L_X beta - L_Y alpha - 1/2 d(i_X beta - i_Y alpha)``."""
    n = a.dim
    f = _iota(a.vec, b.cov) - _iota(b.vec, a.cov)
    df = pf_d(KForm._raw(n, 0, {(): f}))
    cov = pf_lie_derivative(a.vec, b.cov) - pf_lie_derivative(b.vec, a.cov) - HALF * df
    return PolySection(pf_bracket(a.vec, b.vec), cov)


def section_wedge(*ss: PolySection) -> KVector:
    """Generalized multivector ``s1 ^ ... ^ sk`` on the doubled chart space."""
    out = None
    for s in ss:
        v = KVector._raw(2 * s.dim, 1, {(k,): c for k, c in enumerate(s.coords())})
        out = v if out is None else wedge(out, v)
    return out


def section_eval(A: KVector, *ss: PolySection):
    """Natural evaluation of a generalized multivector on sections."""
    return A.eval(*[s.flat() for s in ss])


# Darboux model ----------------------------------------------------------------

@dataclass(frozen=True)
class DarbouxChart:
    """Coordinates, frame and coframe of the contact chart in dimension ``2n + 1``."""

    n: int

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    def p(self, c) -> Poly:
        return Poly.const(self.dim, c)

    def var(self, k: int) -> Poly:
        return Poly.var(self.dim, k)

    def x(self, j: int) -> int:
        return 2 * (j - 1)

    def y(self, j: int) -> int:
        return 2 * (j - 1) + 1

    @property
    def z(self) -> int:
        return 2 * self.n

    def d(self, k: int) -> KForm:
        return KForm._raw(self.dim, 1, {(k,): self.p(1)})

    def partial(self, k: int) -> KVector:
        return KVector._raw(self.dim, 1, {(k,): self.p(1)})

    @property
    def eta(self) -> KForm:
        out = self.d(self.z)
        for j in range(1, self.n + 1):
            out = out - self.var(self.y(j)) * self.d(self.x(j))
        return out

    @property
    def F(self) -> KVector:
        return self.partial(self.z)

    def X(self, j: int) -> KVector:
        return self.partial(self.x(j)) + self.var(self.y(j)) * self.partial(self.z)

    def Y(self, j: int) -> KVector:
        return self.partial(self.y(j))

    def sec(self, vec: KVector | None = None, cov: KForm | None = None) -> PolySection:
        return PolySection.of(self.dim, vec, cov)


def _poly_matmul(A: list[list], B: list[list]) -> list[list]:
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for k in range(p):
            acc = ZERO
            for j in range(m):
                if A[i][j] and B[j][k]:
                    acc = acc + A[i][j] * B[j][k]
            row.append(acc)
        out.append(row)
    return out


def _columns(M: list[list]) -> list[list]:
    return [[M[i][j] for i in range(len(M))] for j in range(len(M[0]))]


def phi_matrix(eta: KForm, F: KVector, theta: KForm, pi: KVector) -> list[list]:
    """``Phi = [[0, pi#], [theta_flat, 0]]`` with Poly entries (``phi = 0``)."""
    N = eta.dim
    M = [[ZERO] * (2 * N) for _ in range(2 * N)]
    for j in range(N):
        ej = KForm._raw(N, 1, {(j,): ONE})
        col = contract(ej, pi)
        for (i,), c in col.coeffs.items():
            M[i][N + j] = c
        Xj = KVector._raw(N, 1, {(j,): ONE})
        col = contract(Xj, theta)
        for (i,), c in col.coeffs.items():
            M[N + i][j] = c
    return M


def apply_matrix(M: list[list], s: PolySection) -> PolySection:
    c = s.coords()
    out = []
    for row in M:
        acc = ZERO
        for a, b in zip(row, c):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return PolySection.from_coords(out)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class DarbouxReport:
    n: int
    chart: DarbouxChart
    eta: KForm
    F: KVector
    theta: KForm
    pi: KVector
    Phi: list
    blocks: dict
    obstruction: KVector
    obstruction_witness: tuple
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def _anchor_pullback(B: KForm) -> KVector:
    N = B.dim
    return KVector._raw(2 * N, B.degree, {tuple(N + i for i in k): c for k, c in B.coeffs.items()})


def darboux_model(n: int) -> DarbouxReport:
    """Build the contact structure of ``eta = dz - sum y_j dx_j`` and verify its local calculus.

    Checks cover ``d eta``, the flat map on the frame, the action of Phi,
    the Courant brackets among ``F``, ``X_j - i dy_j``, ``Y_j + i dx_j`` and
    ``eta``, the three type components of the pulled-back ``d eta``, and the
    obstruction ``-1/2 F ^ (d eta)^(2,0)``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    ch = DarbouxChart(n)
    N = ch.dim
    checks: list[Check] = []

    def check(name, ok, detail=""):
        checks.append(Check(name, bool(ok), detail))

    eta, F = ch.eta, ch.F
    theta = pf_d(eta)
    expected_theta = KForm.zero(N, 2)
    for j in range(1, n + 1):
        expected_theta = expected_theta + wedge(ch.d(ch.x(j)), ch.d(ch.y(j)))
    check("d eta = sum dx_j ^ dy_j", theta == expected_theta, str(theta))
    check("eta(F) = 1", _iota(F, eta) == 1)
    check("i_F d eta = 0", not contract(F, theta))

    pi = KVector.zero(N, 2)
    for j in range(1, n + 1):
        pi = pi + wedge(ch.X(j), ch.Y(j))

    # flat map of the contact construction: X -> i_X theta - eta(X) eta
    def flat(v: KVector) -> KForm:
        return contract(v, theta) - _iota(v, eta) * eta

    for j in range(1, n + 1):
        check(f"flat(X{j}) = dy{j}", flat(ch.X(j)) == ch.d(ch.y(j)))
        check(f"flat(Y{j}) = -dx{j}", flat(ch.Y(j)) == -ch.d(ch.x(j)))
    check("flat(F) = -eta", flat(F) == -eta)

    Phi = phi_matrix(eta, F, theta, pi)
    sec = ch.sec
    ph = lambda s: apply_matrix(Phi, s)  # noqa: E731
    check("Phi(eta) = 0", not ph(sec(cov=eta)))
    check("Phi(F) = 0", not ph(sec(vec=F)))
    for j in range(1, n + 1):
        X, Y, dx, dy = ch.X(j), ch.Y(j), ch.d(ch.x(j)), ch.d(ch.y(j))
        check(f"Phi(X{j}) = dy{j}", ph(sec(vec=X)) == sec(cov=dy))
        check(f"Phi(Y{j}) = -dx{j}", ph(sec(vec=Y)) == sec(cov=-dx))
        check(f"Phi(dx{j}) = Y{j}", ph(sec(cov=dx)) == sec(vec=Y))
        check(f"Phi(dy{j}) = -X{j}", ph(sec(cov=dy)) == sec(vec=-X))

    Phi2 = _poly_matmul(Phi, Phi)
    odot = PolySection.from_coords
    ok = True
    for k in range(2 * N):
        e = [ZERO] * (2 * N)
        e[k] = ONE
        s = odot(e)
        expected = -1 * s + sec(vec=_iota(s.vec, eta) * F, cov=_iota(F, s.cov) * eta)
        got = PolySection.from_coords([Phi2[i][k] for i in range(2 * N)])
        ok = ok and got == expected
    check("Phi^2 = -I + F.eta", ok)

    # frames
    Fs, etas = sec(vec=F), sec(cov=eta)
    E10, E01 = [], []
    for j in range(1, n + 1):
        X, Y, dx, dy = ch.X(j), ch.Y(j), ch.d(ch.x(j)), ch.d(ch.y(j))
        E10 += [sec(X, -I * dy), sec(Y, I * dx)]
        E01 += [sec(X, I * dy), sec(Y, -I * dx)]
    for k, e in enumerate(E10):
        check(f"E10[{k}] is a +i eigenvector", ph(e) == I * e)

    zero = sec()
    for j in range(1, n + 1):
        a, b = E10[2 * j - 2], E10[2 * j - 1]
        check(f"[[F, X{j} - i dy{j}]] = 0", pf_courant(Fs, a) == zero)
        check(f"[[F, Y{j} + i dx{j}]] = 0", pf_courant(Fs, b) == zero)
        check(f"[[X{j} - i dy{j}, Y{j} + i dx{j}]] = -F", pf_courant(a, b) == -Fs)
        check(f"[[X{j}, Y{j}]] = -F", pf_bracket(ch.X(j), ch.Y(j)) == -F)
        check(f"[[X{j} - i dy{j}, eta]] = dy{j}", pf_courant(a, etas) == sec(cov=ch.d(ch.y(j))))
        check(f"[[Y{j} + i dx{j}, eta]] = -dx{j}", pf_courant(b, etas) == sec(cov=-ch.d(ch.x(j))))
    for p, q in combinations(range(2 * n), 2):
        if q == p + 1 and p % 2 == 0:
            continue
        check(f"[[E10[{p}], E10[{q}]]] = 0", pf_courant(E10[p], E10[q]) == zero)

    # type decomposition of the pulled-back d eta
    H = Phi
    P10 = [[HALF * (-Phi2[i][k] - I * H[i][k]) for k in range(2 * N)] for i in range(2 * N)]
    P01 = [[HALF * (-Phi2[i][k] + I * H[i][k]) for k in range(2 * N)] for i in range(2 * N)]
    A = _anchor_pullback(theta)
    b20 = pushforward(_columns(P10), A)
    b02 = pushforward(_columns(P01), A)
    b11 = mixed_pushforward(_columns(P10), _columns(P01), A)
    quarter = HALF * HALF
    exp20 = KVector.zero(2 * N, 2)
    exp02 = KVector.zero(2 * N, 2)
    for j in range(1, n + 1):
        X, Y, dx, dy = ch.X(j), ch.Y(j), ch.d(ch.x(j)), ch.d(ch.y(j))
        exp20 = exp20 + quarter * section_wedge(sec(-I * Y, dx), sec(I * X, dy))
        exp02 = exp02 + quarter * section_wedge(sec(I * Y, dx), sec(-I * X, dy))
    pi_gen = KVector._raw(2 * N, 2, dict(pi.coeffs))
    exp11 = HALF * (A + pi_gen)
    check("(d eta)^(2,0) = 1/4 sum (dx_j - i Y_j) ^ (dy_j + i X_j)", b20 == exp20)
    check("(d eta)^(0,2) = 1/4 sum (dx_j + i Y_j) ^ (dy_j - i X_j)", b02 == exp02)
    check("(d eta)^(1,1) = 1/2 (d eta + pi)", b11 == exp11)
    check("(2,0) and (0,2) are conjugate", b20.conj() == b02)

    Fgen = section_wedge(Fs)
    obs = -HALF * wedge(Fgen, b20)
    witness = ()
    for key, c in obs.items():
        if isinstance(c, Poly) and c.is_constant():
            witness = (key, c.constant_value())
            break
    check("obstruction has a constant nonzero coefficient", bool(witness), str(witness))

    # the obstruction evaluated on L* frames matches the cyclic Nijenhuis sum
    for j in range(1, n + 1):
        v0, v1 = E01[2 * j - 2], E01[2 * j - 1]
        third = ONE / 3
        direct = third * (pf_pairing(pf_courant(v0, v1), etas) + pf_pairing(pf_courant(v1, etas), v0)
                          + pf_pairing(pf_courant(etas, v0), v1))
        closed = section_eval(obs, v0, v1, etas)
        check(f"nij on (X{j} + i dy{j}, Y{j} - i dx{j}, eta) matches", direct == closed,
              f"{direct} vs {closed}")

    return DarbouxReport(
        n=n, chart=ch, eta=eta, F=F, theta=theta, pi=pi, Phi=Phi,
        blocks={"(2,0)": b20, "(1,1)": b11, "(0,2)": b02},
        obstruction=obs, obstruction_witness=witness, checks=checks,
    )


__all__ = [
    "Check", "DarbouxChart", "DarbouxReport", "Poly", "PolySection", "apply_field", "chart_names",
    "darboux_model", "pf_bracket", "pf_courant", "pf_d", "pf_lie_derivative", "pf_pairing",
    "section_eval", "section_wedge",
]
