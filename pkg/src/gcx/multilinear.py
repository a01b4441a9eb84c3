"""Exterior algebra of a finite-dimensional space and its dual.

Alternating tensors are stored sparsely as ``{increasing index tuple: coefficient}``.
Evaluation uses the determinant convention (no factorial factors)::

    (a1 ^ ... ^ ak)(v1, ..., vk) = det[a_i(v_j)]

so that ``(s2 ^ s3)(X2, X3) == 1``.  Interior products insert into the first
slot: ``contract(X, theta)(Y) == theta(X, Y)``.

The classes are agnostic about the coefficient ring: anything supporting
``+ - *`` and truthiness-as-nonzero works (``GaussRational`` here, ``Poly`` in
:mod:`gcx.polyfield`).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch
from .exactnum import I, ONE, ZERO, GaussRational, Matrix, as_scalar


def sort_sign(idx: Sequence[int]) -> tuple[int, tuple]:
    """Sign of the permutation sorting ``idx`` and the sorted tuple; sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


def _perm_sign(p: Sequence[int]) -> int:
    return sort_sign(p)[0]


def _lift(c):
    if isinstance(c, (int, Fraction, str)):
        return as_scalar(c)
    return c


def det(rows: Sequence[Sequence]):
    """Determinant by permutation expansion; works for any commutative ring."""
    k = len(rows)
    if k == 0:
        return ONE
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = ZERO
    for p in permutations(range(k)):
        term = None
        for i in range(k):
            x = rows[i][p[i]]
            if not x:
                term = None
                break
            term = x if term is None else term * x
        if term is not None:
            total = total + term if _perm_sign(p) > 0 else total - term
    return total


class _Alternating:
    __slots__ = ("dim", "degree", "coeffs")
    _symbol = "?"

    def __init__(self, dim: int, degree: int, coeffs: Mapping | Iterable | None = None):
        if degree < 0:
            raise ValueError("negative degree")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "degree", degree)
        acc: dict = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        for key, c in items:
            key = tuple(key)
            if len(key) != degree:
                raise DimensionMismatch(f"index {key} for a degree-{degree} tensor")
            if any(not 0 <= i < dim for i in key):
                raise DimensionMismatch(f"index {key} outside dimension {dim}")
            sign, skey = sort_sign(key)
            if not sign:
                continue
            c = _lift(c)
            if sign < 0:
                c = -c
            acc[skey] = acc[skey] + c if skey in acc else c
        object.__setattr__(self, "coeffs", {k: v for k, v in acc.items() if v})

    @classmethod
    def _raw(cls, dim, degree, coeffs: dict):
        obj = object.__new__(cls)
        object.__setattr__(obj, "dim", dim)
        object.__setattr__(obj, "degree", degree)
        object.__setattr__(obj, "coeffs", {k: v for k, v in coeffs.items() if v})
        return obj

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (type(self)._raw, (self.dim, self.degree, dict(self.coeffs)))

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, degree: int):
        return cls._raw(dim, degree, {})

    @classmethod
    def basis(cls, dim: int, *idx: int):
        """Basis element e_{i1} ^ ... ^ e_{ik} (0-based indices)."""
        return cls(dim, len(idx), {idx: ONE})

    @classmethod
    def scalar(cls, dim: int, c):
        return cls._raw(dim, 0, {(): _lift(c)})

    @classmethod
    def from_list(cls, values: Sequence):
        values = [_lift(v) for v in values]
        return cls._raw(len(values), 1, {(i,): v for i, v in enumerate(values)})

    # access ---------------------------------------------------------------

    def __getitem__(self, key):
        if isinstance(key, int):
            key = (key,)
        sign, skey = sort_sign(key)
        if not sign:
            return ZERO
        c = self.coeffs.get(skey, ZERO)
        return c if sign > 0 else -c

    def to_list(self) -> list:
        if self.degree != 1:
            raise ValueError("to_list() needs a degree-1 tensor")
        return [self.coeffs.get((i,), ZERO) for i in range(self.dim)]

    def items(self):
        return sorted(self.coeffs.items())

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.dim == other.dim and self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.dim, self.degree, tuple(self.items())))

    # linear structure -----------------------------------------------------

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree:
            raise DimensionMismatch("cannot add tensors of different degree")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return type(self)._raw(self.dim, self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)._raw(self.dim, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, c):
        if isinstance(c, _Alternating):
            return NotImplemented
        c = _lift(c)
        return type(self)._raw(self.dim, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        if isinstance(c, _Alternating):
            return NotImplemented
        c = _lift(c)
        return type(self)._raw(self.dim, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __truediv__(self, c):
        c = as_scalar(c)
        return self * c.inverse()

    def conj(self):
        return type(self)._raw(self.dim, self.degree, {k: v.conjugate() for k, v in self.coeffs.items()})

    def map_coeffs(self, f):
        return type(self)._raw(self.dim, self.degree, {k: f(v) for k, v in self.coeffs.items()})

    # evaluation -----------------------------------------------------------

    def eval(self, *args):
        """Fully antisymmetric evaluation on ``degree`` dual arguments.

        Arguments are degree-1 tensors of the dual kind or plain coordinate
        sequences.
        """
        if len(args) != self.degree:
            raise DimensionMismatch(f"degree-{self.degree} tensor evaluated on {len(args)} arguments")
        vs = []
        for a in args:
            v = a.to_list() if isinstance(a, _Alternating) else list(a)
            if len(v) != self.dim:
                raise DimensionMismatch(f"argument of length {len(v)} in dimension {self.dim}")
            vs.append(v)
        if self.degree == 0:
            return self.coeffs.get((), ZERO)
        total = ZERO
        for key, c in self.coeffs.items():
            d = det([[vs[j][i] for j in range(self.degree)] for i in key])
            if d:
                total = total + c * d
        return total

    def eval_basis(self, *idx: int):
        """Value on basis arguments (e_{i1}, ..., e_{ik})."""
        return self[idx]

    def __repr__(self):
        if not self.coeffs:
            return f"{type(self).__name__}(0, dim={self.dim}, degree={self.degree})"
        return f"{type(self).__name__}({format_alternating(self)})"


class KForm(_Alternating):
    """Alternating form on the primal space (coefficients on e^I)."""

    _symbol = "e"


class KVector(_Alternating):
    """Multivector on the primal space (coefficients on e_I)."""

    _symbol = "X"


def dual_kind(cls):
    return KVector if cls is KForm else KForm


def format_alternating(a: _Alternating, symbol: str | None = None) -> str:
    """Term syntax used by the DSL: ``1/2*e1^e3 - e2^e4`` (1-based indices)."""
    symbol = symbol or a._symbol
    if not a.coeffs:
        return "0"
    parts = []
    for key, c in a.items():
        mono = "^".join(f"{symbol}{i + 1}" for i in key) if key else ""
        parts.append(_scaled(c, mono))
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


def _scaled(c, mono: str) -> str:
    if not mono:
        return str(c)
    if c == ONE:
        return mono
    if c == -ONE:
        return "-" + mono
    if c == I:
        return "i*" + mono
    if c == -I:
        return "-i*" + mono
    s = str(c)
    if isinstance(c, GaussRational) and c.re and c.im:
        s = f"({s})"
    return f"{s}*{mono}"


# products ------------------------------------------------------------------

def wedge(a: _Alternating, b: _Alternating) -> _Alternating:
    """Exterior product; degrees above the ambient dimension give zero."""
    a._check(b)
    deg = a.degree + b.degree
    if deg > a.dim:
        return type(a).zero(a.dim, min(deg, a.dim))
    out: dict = {}
    for ka, ca in a.coeffs.items():
        for kb, cb in b.coeffs.items():
            sign, key = sort_sign(ka + kb)
            if not sign:
                continue
            c = ca * cb
            if sign < 0:
                c = -c
            out[key] = out[key] + c if key in out else c
    return type(a)._raw(a.dim, deg, out)


def wedge_all(items: Iterable[_Alternating]) -> _Alternating:
    items = list(items)
    out = items[0]
    for x in items[1:]:
        out = wedge(out, x)
    return out


def wedge_power(a: _Alternating, n: int) -> _Alternating:
    if n == 0:
        return type(a).scalar(a.dim, ONE)
    return wedge_all([a] * n)


def contract(x: _Alternating, a: _Alternating) -> _Alternating:
    """Interior product inserting the degree-1 ``x`` into the first slot of ``a``."""
    if x.degree != 1:
        raise ValueError("contract needs a degree-1 argument to insert")
    if type(x) is type(a):
        raise TypeError("contract pairs a vector with a form (or a covector with a multivector)")
    if x.dim != a.dim:
        raise DimensionMismatch(f"dimension {x.dim} vs {a.dim}")
    if a.degree == 0:
        raise ValueError("cannot contract into a degree-0 tensor")
    xv = x.coeffs
    out: dict = {}
    for key, c in a.coeffs.items():
        for m, i in enumerate(key):
            xi = xv.get((i,))
            if xi is None:
                continue
            rest = key[:m] + key[m + 1:]
            term = xi * c
            if m % 2:
                term = -term
            out[rest] = out[rest] + term if rest in out else term
    return type(a)._raw(a.dim, a.degree - 1, out)


def pair(a: _Alternating, x: _Alternating):
    """Natural pairing of a degree-1 form with a degree-1 vector."""
    if a.degree != 1 or x.degree != 1:
        raise ValueError("pair() takes two degree-1 tensors")
    total = ZERO
    for (i,), c in a.coeffs.items():
        d = x.coeffs.get((i,))
        if d is not None:
            total = total + c * d
    return total


def sharp(pi: KVector, alpha: KForm) -> KVector:
    """``pi#(alpha)`` with ``(pi#alpha)(beta) = pi(alpha, beta)``."""
    return contract(alpha, pi)


def flat(theta: KForm, x: KVector) -> KForm:
    """``theta_flat(X) = iota_X theta``, so ``Y(theta_flat X) = theta(X, Y)``."""
    return contract(x, theta)


def pushforward(columns: Sequence[Sequence], a: _Alternating) -> _Alternating:
    """Induced action of a linear map on multivectors.

    ``columns[j]`` holds the image of basis vector ``j``; each basis term
    ``e_I`` is sent to the wedge of the images.
    """
    images = [type(a).from_list(col) for col in columns]
    out = type(a).zero(len(columns[0]) if columns else a.dim, a.degree)
    for key, c in a.coeffs.items():
        if not key:
            out = out + type(a).scalar(out.dim, c)
            continue
        out = out + c * wedge_all([images[i] for i in key])
    return out


def mixed_pushforward(p_cols: Sequence[Sequence], q_cols: Sequence[Sequence], a: _Alternating) -> _Alternating:
    """Component ``P e_i ^ Q e_j + Q e_i ^ P e_j`` of a degree-2 tensor."""
    if a.degree != 2:
        raise ValueError("mixed_pushforward is defined for degree 2")
    cls = type(a)
    P = [cls.from_list(c) for c in p_cols]
    Q = [cls.from_list(c) for c in q_cols]
    out = cls.zero(a.dim, 2)
    for (i, j), c in a.coeffs.items():
        out = out + c * (wedge(P[i], Q[j]) + wedge(Q[i], P[j]))
    return out


def increasing_tuples(n: int, k: int):
    return combinations(range(n), k)


# endomorphisms -------------------------------------------------------------

class Endo:
    """Linear endomorphism of the primal space; its transpose acts on forms.

    ``matrix[i, j]`` is the i-th coordinate of the image of e_j.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        if matrix.rows != matrix.cols:
            raise DimensionMismatch("endomorphism needs a square matrix")
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("Endo is immutable")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @classmethod
    def zero(cls, n: int) -> "Endo":
        return cls(Matrix.zeros(n, n))

    @classmethod
    def identity(cls, n: int) -> "Endo":
        return cls(Matrix.identity(n))

    @classmethod
    def outer(cls, x: KVector, a: KForm) -> "Endo":
        """``x (x) a`` acting as ``Y -> a(Y) x``."""
        if x.dim != a.dim:
            raise DimensionMismatch("outer product of different dimensions")
        xs, as_ = x.to_list(), a.to_list()
        return cls(Matrix(x.dim, x.dim, tuple(xi * aj for xi in xs for aj in as_)))

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[KVector, KForm]]) -> "Endo":
        out = cls.zero(n)
        for x, a in terms:
            out = out + cls.outer(x, a)
        return out

    def apply(self, x: KVector) -> KVector:
        return KVector.from_list(self.matrix @ x.to_list())

    def dual_apply(self, a: KForm) -> KForm:
        """Transpose action ``(phi* a)(X) = a(phi X)``."""
        return KForm.from_list(self.matrix.T @ a.to_list())

    def __call__(self, x):
        return self.apply(x) if isinstance(x, KVector) else self.dual_apply(x)

    def __add__(self, other: "Endo") -> "Endo":
        return Endo(self.matrix + other.matrix)

    def __sub__(self, other: "Endo") -> "Endo":
        return Endo(self.matrix - other.matrix)

    def __neg__(self) -> "Endo":
        return Endo(-self.matrix)

    def __mul__(self, c) -> "Endo":
        return Endo(self.matrix.scale(c))

    __rmul__ = __mul__

    def __matmul__(self, other: "Endo") -> "Endo":
        return Endo(self.matrix @ other.matrix)

    @property
    def T(self) -> Matrix:
        return self.matrix.T

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Endo):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def terms(self) -> list[tuple[int, int, GaussRational]]:
        """Nonzero ``(i, j, c)`` meaning ``c * X_{i+1} (x) e^{j+1}``."""
        n = self.dim
        return [(i, j, self.matrix[i, j]) for i in range(n) for j in range(n) if self.matrix[i, j]]

    def __repr__(self):
        return f"Endo({format_endo(self)})"


def format_endo(phi: Endo, vec: str = "X", cov: str = "e") -> str:
    parts = [_scaled(c, f"{vec}{i + 1}*{cov}{j + 1}") for i, j, c in phi.terms()]
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


def sharp_matrix(pi: KVector) -> Matrix:
    """Matrix of ``pi#`` on coordinates of forms."""
    n = pi.dim
    cols = [sharp(pi, KForm.basis(n, j)).to_list() for j in range(n)]
    return Matrix(n, n, tuple(cols[j][i] for i in range(n) for j in range(n)))


def flat_matrix(theta: KForm) -> Matrix:
    n = theta.dim
    cols = [flat(theta, KVector.basis(n, j)).to_list() for j in range(n)]
    return Matrix(n, n, tuple(cols[j][i] for i in range(n) for j in range(n)))


def bivector_from_sharp(m: Matrix) -> KVector:
    """Inverse of :func:`sharp_matrix` (assumes antisymmetry)."""
    n = m.rows
    return KVector(n, 2, {(a, b): m[b, a] for a in range(n) for b in range(a + 1, n)})


def form_from_flat(m: Matrix) -> KForm:
    n = m.rows
    return KForm(n, 2, {(a, b): m[b, a] for a in range(n) for b in range(a + 1, n)})
