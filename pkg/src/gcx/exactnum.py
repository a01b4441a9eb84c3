"""Exact scalars over Q(i) and dense linear algebra on top of them.

Rationals are :class:`fractions.Fraction`.  A :class:`GaussRational` stores
``(a + b*i) / d`` with integers ``a, b`` and ``d > 0`` in lowest terms, and
exposes its parts as fractions.  Matrices are dense, immutable and row-major.
Nothing here ever touches floating point.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch, ParseError

Rational = Fraction

_F0 = Fraction(0)


def _reduced(a: int, b: int, d: int) -> "GaussRational":
    if d != 1:
        g = gcd(a, b, d)
        if g != 1:
            a, b, d = a // g, b // g, d // g
    obj = object.__new__(GaussRational)
    object.__setattr__(obj, "_a", a)
    object.__setattr__(obj, "_b", b)
    object.__setattr__(obj, "_d", d)
    return obj


class GaussRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRational):
            if im:
                raise TypeError("imaginary part given twice")
            re, im = re.re, re.im
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floats are not exact scalars")
        r, s = Fraction(re), Fraction(im)
        d = r.denominator * s.denominator // gcd(r.denominator, s.denominator)
        a, b = r.numerator * (d // r.denominator), s.numerator * (d // s.denominator)
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "GaussRational":
        return cls(re, im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    def __reduce__(self):
        return (GaussRational, (self.re, self.im))

    @property
    def re(self) -> Fraction:
        return Fraction(self._a) if self._d == 1 else Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b) if self._d == 1 else Fraction(self._b, self._d)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if type(other) is not GaussRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return _reduced(self._a + other._a, self._b + other._b, d1)
        return _reduced(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return _reduced(self._a - other._a, self._b - other._b, d1)
        return _reduced(self._a * d2 - other._a * d1, self._b * d2 - other._b * d1, d1 * d2)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if type(other) is not GaussRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        a, b, c, e = self._a, self._b, other._a, other._b
        if not b:
            return _reduced(a * c, a * e, self._d * other._d)
        if not e:
            return _reduced(a * c, b * c, self._d * other._d)
        return _reduced(a * c - b * e, a * e + b * c, self._d * other._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not GaussRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return _reduced(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "GaussRational":
        a, b = self._a, self._b
        norm = a * a + b * b
        if not norm:
            raise ZeroDivisionError("GaussRational division by zero")
        return _reduced(self._d * a, -self._d * b, norm)

    def conjugate(self) -> "GaussRational":
        return _reduced(self._a, -self._b, self._d)

    def norm2(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    @property
    def is_real(self) -> bool:
        return not self._b

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if type(other) is not GaussRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self._a == other._a and self._b == other._b and self._d == other._d

    def __hash__(self):
        if not self._b:
            return hash(self._a) if self._d == 1 else hash(Fraction(self._a, self._d))
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self._a) or bool(self._b)

    def __repr__(self):
        return f"GaussRational({self})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x) -> GaussRational | None:
    if type(x) is int:
        return _reduced(x, 0, 1)
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return _reduced(x.numerator, 0, x.denominator)
    return None


def as_scalar(x) -> GaussRational:
    """Coerce int / Fraction / GaussRational / numeric string to GaussRational."""
    if type(x) is GaussRational:
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    c = _coerce(x)
    if c is None:
        raise TypeError(f"cannot use {x!r} as an exact scalar")
    return c


ZERO = _reduced(0, 0, 1)
ONE = _reduced(1, 0, 1)
I = _reduced(0, 1, 1)
HALF = _reduced(1, 0, 2)


# scalar text ---------------------------------------------------------------

_TERM = re.compile(r"[+-]?[^+-]+")
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_scalar(text: str) -> GaussRational:
    """Parse ``p/q``, ``p``, ``i``, ``p/q*i`` and sums such as ``2/3+1/5*i``."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty scalar literal")
    if s[0] not in "+-":
        s = "+" + s
    re_part, im_part = _F0, _F0
    for term in _TERM.findall(s):
        sign, body = term[0], term[1:]
        if not body:
            raise ParseError(f"dangling sign in scalar {text!r}")
        imaginary = False
        if body == "i":
            coeff, imaginary = "1", True
        elif body.endswith("*i"):
            coeff, imaginary = body[:-2], True
        elif body.startswith("i*"):
            coeff, imaginary = body[2:], True
        else:
            coeff = body
        if not _RATIONAL.match(coeff):
            raise ParseError(f"bad scalar literal {text!r}")
        try:
            value = Fraction(coeff)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}") from None
        if sign == "-":
            value = -value
        if imaginary:
            im_part += value
        else:
            re_part += value
    return GaussRational._make(re_part, im_part)


def format_scalar(z: GaussRational) -> str:
    """Canonical text form ``p/q+r/s*i`` (zero parts omitted)."""
    if not z.im:
        return str(z.re)
    im = f"{z.im}*i"
    if not z.re:
        return im
    if z.im < 0:
        return f"{z.re}-{-z.im}*i"
    return f"{z.re}+{im}"


# matrices ------------------------------------------------------------------

Row = tuple  # tuple[GaussRational, ...]


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "Matrix":
        rows = [tuple(as_scalar(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j]
                            for j in range(self.cols) for i in range(self.rows)))

    def conj(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(x.conjugate() for x in self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            cols = [other.column(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for c in cols:
                    out.append(_dot(r, c))
            return Matrix(self.rows, other.cols, tuple(out))
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        return tuple(_dot(self.row(i), v) for i in range(self.rows))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices are invertible")
        n = self.rows
        aug = [list(self.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        red, pivots = _rref_rows(aug)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("singular matrix")
        return Matrix(n, n, tuple(x for r in red for x in r[n:]))

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]"
                               for i in range(self.rows)) + "]"


def _dot(a, b):
    s = ZERO
    for x, y in zip(a, b):
        if x and y:
            s = s + x * y
    return s


def _rref_rows(rows: list[list]) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan on a list of mutable rows; returns (rows, pivots)."""
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((k for k in range(r, n_rows) if m[k][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if x else x for x in m[r]]
        pr = m[r]
        for k in range(n_rows):
            if k != r:
                f = m[k][c]
                if f:
                    m[k] = [a - f * b if b else a for a, b in zip(m[k], pr)]
        pivots.append(c)
        r += 1
    return m, pivots


class RREF(NamedTuple):
    reduced: Matrix
    rank: int
    pivot_cols: tuple


def rref(m: Matrix) -> RREF:
    """Reduced row-echelon form over Q(i), together with rank and pivot columns."""
    if m.rows == 0:
        return RREF(m, 0, ())
    red, pivots = _rref_rows(m.to_rows())
    return RREF(Matrix(m.rows, m.cols, tuple(x for r in red for x in r)), len(pivots), tuple(pivots))


def _as_rows(vectors: Sequence[Sequence]) -> list[tuple]:
    rows = [tuple(as_scalar(x) for x in v) for v in vectors]
    if rows and len({len(r) for r in rows}) != 1:
        raise DimensionMismatch("vectors of different lengths")
    return rows


def row_basis(vectors: Sequence[Sequence]) -> list[tuple]:
    """Nonzero rows of the rref of ``vectors`` (the canonical span basis)."""
    rows = _as_rows(vectors)
    if not rows:
        return []
    red, pivots = _rref_rows(rows)
    return [tuple(red[k]) for k in range(len(pivots))]


def rank(vectors: Sequence[Sequence]) -> int:
    rows = _as_rows(vectors)
    if not rows:
        return 0
    return len(_rref_rows(rows)[1])


def member(span: Sequence[Sequence], v: Sequence) -> tuple | None:
    """Coordinates of ``v`` over the rref basis of ``span``, or None if ``v`` is outside."""
    v = tuple(as_scalar(x) for x in v)
    rows = _as_rows(span)
    if rows and len(rows[0]) != len(v):
        raise DimensionMismatch(f"vector of length {len(v)} against span in dimension {len(rows[0])}")
    if not rows:
        return () if not any(v) else None
    red, pivots = _rref_rows(rows)
    coeffs = tuple(v[p] for p in pivots)
    residual = list(v)
    for c, p in zip(coeffs, pivots):
        if c:
            b = red[pivots.index(p)]
            residual = [x - c * y if y else x for x, y in zip(residual, b)]
    if any(residual):
        return None
    return coeffs


def reduce_mod(span_basis: Sequence[Sequence], pivots: Sequence[int], v: Sequence) -> tuple:
    """Remainder of ``v`` after subtracting its pivot-coordinate combination of an rref basis.

    The result is supported on the non-pivot columns, i.e. it is the component
    of ``v`` in the standard complement of the span.
    """
    residual = list(v)
    for b, p in zip(span_basis, pivots):
        c = residual[p]
        if c:
            residual = [x - c * y if y else x for x, y in zip(residual, b)]
    return tuple(residual)


def span_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    ra, rb = _as_rows(a), _as_rows(b)
    if ra and rb and len(ra[0]) != len(rb[0]):
        raise DimensionMismatch("spans live in different dimensions")
    return row_basis(ra) == row_basis(rb)


def nullspace(m: Matrix) -> list[tuple]:
    """Basis of {x : m x = 0}, one vector per free column (free entry = 1)."""
    if m.rows == 0:
        return [tuple(ONE if i == j else ZERO for i in range(m.cols)) for j in range(m.cols)]
    red, pivots = _rref_rows(m.to_rows())
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * m.cols
        x[f] = ONE
        for r, p in enumerate(pivots):
            x[p] = -red[r][f]
        basis.append(tuple(x))
    return basis


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``m x = b`` (free variables zero), or None when inconsistent."""
    b = [as_scalar(x) for x in b]
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side length does not match rows")
    aug = [list(m.row(i)) + [b[i]] for i in range(m.rows)]
    red, pivots = _rref_rows(aug)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = red[r][m.cols]
    return tuple(x)


def conj_vec(v: Sequence[GaussRational]) -> tuple:
    return tuple(x.conjugate() for x in v)
