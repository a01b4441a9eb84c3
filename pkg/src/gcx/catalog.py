"""Built-in algebras and structures, each paired with the values it must reproduce.

Every :class:`CatalogEntry` carries a builder and an expected record; running
an entry recomputes everything and compares exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .courant import GenVector, SubbundleSpan, bracket_table, courant_bracket
from .dsl import parse_endo, parse_gen, parse_tensor
from .errors import BadParams, GcxError, UnknownEntry
from .exactnum import ONE, ZERO, GaussRational, I, as_scalar, format_scalar
from .liealg import LieAlgebra, central_extension
from .multilinear import KForm, KVector
from .polyfield import darboux_model
from .structures import (
    DeformParam, Level, classify, complex_gcs, deform_E, eigenbundles, from_almost_contact,
    from_contact, from_cosymplectic, gcs_integrable, is_normal, kodaira_family, kodaira_span,
    lift_gcs, mc_check, nij, obstruction, symplectic_gcs, type_components, validate_gacs,
)
from .structures.gacs import Gacs


# algebras --------------------------------------------------------------------

def _vec(n: int, k: int) -> KVector:
    return KVector.basis(n, k - 1)


def su2() -> LieAlgebra:
    """``[X1, X2] = -X3`` and cyclic."""
    return LieAlgebra(3, {(0, 1): -_vec(3, 3), (1, 2): -_vec(3, 1), (2, 0): -_vec(3, 2)}, "su2")


def h3() -> LieAlgebra:
    """Heisenberg algebra with ``[X1, X2] = -X3``."""
    return LieAlgebra(3, {(0, 1): -_vec(3, 3)}, "h3")


def kod4() -> LieAlgebra:
    """Kodaira algebra: ``[e1, e2] = e3``."""
    return LieAlgebra(4, {(0, 1): _vec(4, 3)}, "kod4")


KOD_OMEGA = "-(e1^e3 - e2^e4)"
KOD_J = "X2*e1 - X1*e2 + X4*e3 - X3*e4"


def kod5() -> LieAlgebra:
    """Central extension of kod4 by ``-(e^13 - e^24)``."""
    return central_extension(kod4(), parse_tensor(KOD_OMEGA, 4, "e", 2), name="kod5")


ALGEBRAS: dict[str, Callable[[], LieAlgebra]] = {"su2": su2, "h3": h3, "kod4": kod4, "kod5": kod5}


def algebra(name: str) -> LieAlgebra:
    try:
        return ALGEBRAS[name]()
    except KeyError:
        raise UnknownEntry(f"unknown algebra {name!r}; known: {', '.join(sorted(ALGEBRAS))}") from None


# entries ---------------------------------------------------------------------

@dataclass(frozen=True)
class Expectation:
    label: str
    expected: Any
    actual: Callable[[], Any]
    informational: bool = False


@dataclass(frozen=True)
class Outcome:
    label: str
    ok: bool
    expected: str
    actual: str
    informational: bool = False


@dataclass(frozen=True)
class EntryRun:
    name: str
    params: dict
    outcomes: tuple

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.outcomes)

    def first_failure(self) -> Outcome | None:
        return next((o for o in self.outcomes if not o.ok), None)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    build: Callable[[dict], Any]
    expect: Callable[[dict, Any], list[Expectation]]
    defaults: dict = field(default_factory=dict)
    samples: tuple = ()
    check_params: Callable[[dict], None] | None = None
    integer_params: tuple = ()

    def __post_init__(self):
        if self.expect is None:
            raise ValueError(f"catalog entry {self.name!r} has no expected record")

    def resolve(self, params: dict | None = None) -> dict:
        """Defaults overridden by ``params`` (strings are parsed as exact scalars)."""
        params = dict(params or {})
        unknown = set(params) - set(self.defaults)
        if unknown:
            raise BadParams(f"{self.name} takes {sorted(self.defaults) or 'no parameters'}, got {sorted(unknown)}")
        out = dict(self.defaults)
        for k, v in params.items():
            if k in self.integer_params:
                try:
                    out[k] = int(v)
                except (TypeError, ValueError):
                    raise BadParams(f"{k} must be an integer, got {v!r}") from None
            else:
                try:
                    out[k] = as_scalar(v)
                except (GcxError, TypeError) as exc:
                    raise BadParams(f"{k}: {exc}") from None
        if self.check_params:
            self.check_params(out)
        return out

    def sample_params(self) -> list[dict]:
        return [self.resolve(s) for s in self.samples] or [self.resolve()]


def _fmt(x) -> str:
    if isinstance(x, GaussRational):
        return format_scalar(x)
    if isinstance(x, SubbundleSpan):
        return "<" + ", ".join(repr(b) for b in x.rref_basis()) + ">"
    return str(x) if not isinstance(x, (KVector, KForm, GenVector)) else repr(x)


def evaluate(e: Expectation) -> Outcome:
    try:
        got = e.actual()
    except GcxError as exc:
        return Outcome(e.label, False, _fmt(e.expected), f"{type(exc).__name__}: {exc}", e.informational)
    if e.informational:
        return Outcome(e.label, True, "-", _fmt(got), True)
    return Outcome(e.label, got == e.expected, _fmt(e.expected), _fmt(got))


# helpers -----------------------------------------------------------------------

def gen(g: LieAlgebra, text: str) -> GenVector:
    v, a = parse_gen(text, g.dim)
    return GenVector(g, v, a)


def span(g: LieAlgebra, *texts) -> SubbundleSpan:
    return SubbundleSpan(g, [t if isinstance(t, GenVector) else gen(g, t) for t in texts])


def _bracket(a: GenVector, b: GenVector) -> Callable[[], GenVector]:
    return lambda: courant_bracket(a, b)


def _real(params: dict, *names: str):
    for n in names:
        if not params[n].is_real:
            raise BadParams(f"{n} must be real, got {format_scalar(params[n])}")


# su(2) ---------------------------------------------------------------------------

def _su2_contact(_p) -> Gacs:
    return from_contact(su2(), parse_tensor("e3", 3, "e", 1), name="su2_contact")


def _su2_contact_expect(_p, j: Gacs) -> list[Expectation]:
    g = j.algebra
    G = lambda t: gen(g, t)  # noqa: E731
    e = eigenbundles(j)
    c = classify(j)
    return [
        Expectation("F", _vec(3, 3), lambda: j.F),
        Expectation("theta", parse_tensor("e1^e2", 3, "e", 2), lambda: j.theta),
        Expectation("pi", parse_tensor("X1^X2", 3, "X", 2), lambda: j.pi),
        Expectation("L", span(g, "X3", "X1 - i*e2", "X2 + i*e1"), lambda: e.L),
        Expectation("L*", span(g, "e3", "X1 + i*e2", "X2 - i*e1"), lambda: e.Lstar),
        Expectation("level", Level.GENERALIZED_CONTACT, lambda: c.level),
        Expectation("strong", False, lambda: c.strong),
        Expectation("[[X3, X1 - i*e2]]", -G("X2 + i*e1"), _bracket(G("X3"), G("X1 - i*e2"))),
        Expectation("[[X3, X2 + i*e1]]", G("X1 - i*e2"), _bracket(G("X3"), G("X2 + i*e1"))),
        Expectation("[[X1 - i*e2, X2 + i*e1]]", -G("X3"), _bracket(G("X1 - i*e2"), G("X2 + i*e1"))),
        Expectation("[[X1 + i*e2, X2 - i*e1]]", -G("X3"), _bracket(G("X1 + i*e2"), G("X2 - i*e1"))),
        Expectation("[[e3, X1 + i*e2]]", -G("e2"), _bracket(G("e3"), G("X1 + i*e2"))),
        Expectation("[[e3, X2 - i*e1]]", G("e1"), _bracket(G("e3"), G("X2 - i*e1"))),
        Expectation("obstruction nonzero", True, lambda: bool(obstruction(j, e))),
        Expectation("nij(X1 + i*e2, X2 - i*e1, e3)", -ONE / 2,
                    lambda: nij(G("X1 + i*e2"), G("X2 - i*e1"), G("e3"))),
    ]


NORMAL_PHI = "X2*e1 - X1*e2"


def _su2_normal(_p) -> Gacs:
    g = su2()
    return from_almost_contact(g, _vec(3, 3), parse_tensor("e3", 3, "e", 1), parse_endo(NORMAL_PHI, 3),
                               name="su2_normal")


def _su2_normal_expect(_p, j: Gacs) -> list[Expectation]:
    g = j.algebra
    G = lambda t: gen(g, t)  # noqa: E731
    e = eigenbundles(j)
    c = classify(j)
    return [
        Expectation("L", span(g, "X3", "X1 - i*X2", "e1 - i*e2"), lambda: e.L),
        Expectation("L*", span(g, "e3", "X1 + i*X2", "e1 + i*e2"), lambda: e.Lstar),
        Expectation("level", Level.STRONG, lambda: c.level),
        Expectation("[[X3, X1 - i*X2]]", -I * G("X1 - i*X2"), _bracket(G("X3"), G("X1 - i*X2"))),
        Expectation("[[X3, e1 - i*e2]]", -I * G("e1 - i*e2"), _bracket(G("X3"), G("e1 - i*e2"))),
        Expectation("[[e3, X1 + i*X2]]", I * G("e1 + i*e2"), _bracket(G("e3"), G("X1 + i*X2"))),
        Expectation("[[X1 - i*X2, X1 + i*X2]]", -2 * I * G("X3"), _bracket(G("X1 - i*X2"), G("X1 + i*X2"))),
        Expectation("E10 + E01 closed", False, lambda: c.E_pair_report.closed),
        Expectation("e_pair_bialgebroid", False, lambda: c.e_pair_bialgebroid),
        Expectation("llstar_bialgebroid", True, lambda: c.llstar_bialgebroid),
        Expectation("normal", True, lambda: is_normal(g, j.F, j.eta, j.phi).normal),
    ]


# h3 ------------------------------------------------------------------------------

def _h3_cosym(p) -> Gacs:
    a, b = p["a"], p["b"]
    theta = parse_tensor("e2^e3", 3, "e", 2) + a * parse_tensor("e1^e2", 3, "e", 2) + b * parse_tensor("e1^e3", 3, "e", 2)
    return from_cosymplectic(h3(), parse_tensor("e1", 3, "e", 1), theta, name="h3_cosymplectic")


def _h3_cosym_expect(p, j: Gacs) -> list[Expectation]:
    g = j.algebra
    G = lambda t: gen(g, t)  # noqa: E731
    a, b = p["a"], p["b"]
    Fg = G("X1") - b * G("X2") + a * G("X3")
    l1 = G("X2 - i*e3") + I * a * G("e1")
    l2 = G("X3 + i*e2") + I * b * G("e1")
    s1 = G("X2 + i*e3") - I * a * G("e1")
    s2 = G("X3 - i*e2") - I * b * G("e1")
    e = eigenbundles(j)
    c = classify(j)
    return [
        Expectation("kind", "cosymplectic", lambda: j.kind),
        Expectation("F", Fg.vec, lambda: j.F),
        Expectation("pi", parse_tensor("X2^X3", 3, "X", 2), lambda: j.pi),
        Expectation("L", span(g, Fg, l1, l2), lambda: e.L),
        Expectation("L*", span(g, "e1", s1, s2), lambda: e.Lstar),
        Expectation("level", Level.STRONG, lambda: c.level),
        Expectation("L* brackets", [], lambda: bracket_table(span(g, "e1", s1, s2))),
        Expectation("[[F, l1]]", -l2, _bracket(Fg, l1)),
        Expectation("[[F, l2]]", GenVector(g), _bracket(Fg, l2)),
        Expectation("[[l1, l2]]", GenVector(g), _bracket(l1, l2)),
        Expectation("llstar_bialgebroid", True, lambda: c.llstar_bialgebroid),
        Expectation("e_pair_bialgebroid", True, lambda: c.e_pair_bialgebroid),
    ]


def _h3_inf(_p) -> Gacs:
    return from_cosymplectic(h3(), parse_tensor("e1", 3, "e", 1), parse_tensor("-e2^e3", 3, "e", 2),
                             name="h3_cosymplectic_inf")


def _h3_inf_expect(_p, j: Gacs) -> list[Expectation]:
    c = classify(j)
    return [
        Expectation("kind", "cosymplectic", lambda: j.kind),
        Expectation("F", _vec(3, 1), lambda: j.F),
        Expectation("level", Level.STRONG, lambda: c.level),
        Expectation("llstar_bialgebroid", True, lambda: c.llstar_bialgebroid),
        Expectation("e_pair_bialgebroid", True, lambda: c.e_pair_bialgebroid),
    ]


def _family_check(p):
    _real(p, "r", "c", "s")
    if p["c"] * p["c"] + p["s"] * p["s"] != ONE:
        raise BadParams("c and s must satisfy c^2 + s^2 = 1")
    if p["r"] * p["r"] == ONE:
        raise BadParams("r = 1 or r = -1 makes 1 - r^2 vanish")


def h3_family_structure(r, c, s) -> Gacs:
    """``J_t`` for ``t = r (c + i s)``: ``phi_t``, ``theta_t``, ``pi_t`` over ``eta = e1``, ``F = X1``."""
    r, c, s = (as_scalar(x) for x in (r, c, s))
    den = ONE - r * r
    g = h3()
    phi = (2 * r * c / den) * parse_endo("X2*e2 + X3*e3", 3)
    theta = ((r * r - 2 * r * s + 1) / den) * parse_tensor("e2^e3", 3, "e", 2)
    pi = ((r * r + 2 * r * s + 1) / den) * parse_tensor("X2^X3", 3, "X", 2)
    return Gacs(g, _vec(3, 1), parse_tensor("e1", 3, "e", 1), pi, theta, phi, name="h3_family")


def family_gamma(g: LieAlgebra) -> DeformParam:
    """``Gamma = (e2 + i X3) ^ (e3 - i X2)``."""
    return DeformParam.from_pair(gen(g, "e2 + i*X3"), gen(g, "e3 - i*X2"))


def family_generators(g: LieAlgebra, r, c, s) -> tuple[list[GenVector], list[GenVector]]:
    """The displayed generators of ``L_t`` and ``L_t*``."""
    G = lambda t: gen(g, t)  # noqa: E731
    rs, rc = r * s, r * c
    L = [G("X1"),
         (1 + rs) * G("X2") + rc * G("e3") - I * (1 - rs) * G("e3") - I * rc * G("X2"),
         (1 + rs) * G("X3") - rc * G("e2") + I * (1 - rs) * G("e2") - I * rc * G("X3")]
    Ls = [G("e1"),
          (1 - rs) * G("e2") - rc * G("X3") + I * (1 + rs) * G("X3") - I * rc * G("e2"),
          (1 - rs) * G("e3") + rc * G("X2") - I * (1 + rs) * G("X2") - I * rc * G("e3")]
    return L, Ls


def _h3_family(p) -> Gacs:
    return h3_family_structure(p["r"], p["c"], p["s"])


def _h3_family_expect(p, j: Gacs) -> list[Expectation]:
    g = j.algebra
    r, c, s = p["r"], p["c"], p["s"]
    L, Ls = family_generators(g, r, c, s)
    t = r * (c + I * s)
    base = from_cosymplectic(g, parse_tensor("e1", 3, "e", 1), parse_tensor("e2^e3", 3, "e", 2))
    cl = classify(j)
    e = eigenbundles(j)
    out = [
        Expectation("valid", True, lambda: isinstance(validate_gacs(j), Gacs)),
        Expectation("level", Level.STRONG, lambda: cl.level),
        Expectation("L_t", span(g, *L), lambda: e.L),
        Expectation("L_t*", span(g, *Ls), lambda: e.Lstar),
        Expectation("L_t* brackets", [], lambda: bracket_table(span(g, *Ls))),
        Expectation("[[X1, l1]]", -L[2], _bracket(L[0], L[1])),
        Expectation("[[X1, l2]]", GenVector(g), _bracket(L[0], L[2])),
        Expectation("[[l1, l2]]", GenVector(g), _bracket(L[1], L[2])),
        Expectation("MC residual of t*Gamma is zero", True, lambda: mc_check(base, family_gamma(g).scaled(t)).zero),
        Expectation("graph of t*Gamma", span(g, L[1], L[2]), lambda: deform_E(base, family_gamma(g), t)),
    ]
    if not r:
        out.append(Expectation("t = 0 recovers (a, b) = (0, 0)", eigenbundles(base).L, lambda: e.L))
        out.append(Expectation("t = 0 level", classify(base).level, lambda: cl.level))
    return out


# Kodaira and its extension ----------------------------------------------------------

def _kod5_j1(_p) -> Gacs:
    return from_contact(kod5(), parse_tensor("e5", 5, "e", 1), name="kod5_J1")


def _kod5_structure_constants() -> LieAlgebra:
    return LieAlgebra(5, {(0, 1): _vec(5, 3), (0, 2): -_vec(5, 5), (1, 3): _vec(5, 5)}, "kod5")


def _kod5_j1_expect(_p, j: Gacs) -> list[Expectation]:
    c = classify(j)
    return [
        Expectation("structure constants", _kod5_structure_constants(), lambda: j.algebra),
        Expectation("F", _vec(5, 5), lambda: j.F),
        Expectation("theta", parse_tensor("e1^e3 - e2^e4", 5, "e", 2), lambda: j.theta),
        Expectation("pi", parse_tensor("X1^X3 - X2^X4", 5, "X", 2), lambda: j.pi),
        Expectation("level", Level.GENERALIZED_CONTACT, lambda: c.level),
        Expectation("strong", False, lambda: c.strong),
    ]


def kodaira_complex():
    return complex_gcs(kod4(), parse_endo(KOD_J, 4), name="complex_J")


def _kod5_j0(_p) -> Gacs:
    _, j = lift_gcs(kod4(), parse_tensor(KOD_OMEGA, 4, "e", 2), kodaira_complex(), name="kod5_J0")
    return j


def _kod5_j0_expect(_p, j: Gacs) -> list[Expectation]:
    c = classify(j)
    blocks = type_components(j, j.d_eta())
    return [
        Expectation("structure constants", _kod5_structure_constants(), lambda: j.algebra),
        Expectation("F", _vec(5, 5), lambda: j.F),
        Expectation("eta", parse_tensor("e5", 5, "e", 1), lambda: j.eta),
        Expectation("pi", KVector.zero(5, 2), lambda: j.pi),
        Expectation("theta", KForm.zero(5, 2), lambda: j.theta),
        Expectation("phi", parse_endo(KOD_J, 5), lambda: j.phi),
        Expectation("level", Level.GENERALIZED_CONTACT, lambda: c.level),
        Expectation("strong", False, lambda: c.strong),
        Expectation("(1,1) block of d eta is zero", True, lambda: not blocks.block11),
        Expectation("(2,0) block of d eta is nonzero", True, lambda: bool(blocks.block20)),
        Expectation("normal", False, lambda: is_normal(j.algebra, j.F, j.eta, j.phi).normal),
    ]


KODAIRA_SAMPLES = (
    {},
    {"t2": "1/3", "t3": "2/5"},
    {"t1": "1/2*i", "t4": "2*i"},
)


def _kodaira(p):
    return kodaira_family(kod4(), p["t1"], p["t2"], p["t3"], p["t4"], name="kodaira")


def _kodaira_expect(p, J) -> list[Expectation]:
    g = J.algebra
    ts = (p["t1"], p["t2"], p["t3"], p["t4"])
    known = any(all(ts[k] == as_scalar(s.get(f"t{k + 1}", 0)) for k in range(4)) for s in KODAIRA_SAMPLES)
    out = [Expectation("eigenspan = rows of the family matrix", kodaira_span(g, *ts), lambda: J.eigenspan(-1))]
    out.append(Expectation("integrable", True, lambda: gcs_integrable(J).closed, informational=not known))
    if ts == (ZERO,) * 4:
        out.append(Expectation("t = 0 is the complex structure J", kodaira_complex().eigenspan(-1),
                               lambda: J.eigenspan(-1)))
    if ts[1] == ZERO and ts[2] == ZERO and ts[0] and ts[3] == (ONE / ts[0].conjugate()):
        u = -2 * I * ts[0]  # t1 = i/2 (u1 + i v1)
        omega = u.re * parse_tensor("e1^e3 - e2^e4", 4, "e", 2) + u.im * parse_tensor("e1^e4 + e2^e3", 4, "e", 2)
        out.append(Expectation("symplectic point", symplectic_gcs(g, omega).eigenspan(-1), lambda: J.eigenspan(-1)))
    return out


# Darboux chart --------------------------------------------------------------------

def _darboux_check(p):
    if not 1 <= p["n"] <= 3:
        raise BadParams("the Darboux chart supports 1 <= n <= 3")


def _darboux_expect(p, report) -> list[Expectation]:
    out = [Expectation(c.name, True, (lambda c=c: c.ok)) for c in report.checks]
    out.append(Expectation("obstruction coefficient is a nonzero constant", True,
                           lambda: bool(report.obstruction_witness) and bool(report.obstruction_witness[1])))
    return out


ENTRIES: dict[str, CatalogEntry] = {}


def register(entry: CatalogEntry) -> CatalogEntry:
    if entry.name in ENTRIES:
        raise ValueError(f"duplicate catalog entry {entry.name!r}")
    ENTRIES[entry.name] = entry
    return entry


register(CatalogEntry("su2_contact", "contact form e3 on su(2)", _su2_contact, _su2_contact_expect))
register(CatalogEntry("su2_normal", "normal almost contact structure on su(2)", _su2_normal, _su2_normal_expect))
register(CatalogEntry(
    "h3_cosymplectic", "cosymplectic (e1, e2^e3 + a e1^e2 + b e1^e3) on h3", _h3_cosym, _h3_cosym_expect,
    defaults={"a": ZERO, "b": ZERO}, samples=({}, {"a": 1}, {"a": 2, "b": -3}),
    check_params=lambda p: _real(p, "a", "b"),
))
register(CatalogEntry(
    "h3_cosymplectic_inf", "cosymplectic (e1, -e2^e3) on h3", _h3_inf, _h3_inf_expect,
))
register(CatalogEntry(
    "h3_family", "strong family J_t on h3, t = r (c + i s)", _h3_family, _h3_family_expect,
    defaults={"r": as_scalar("1/2"), "c": as_scalar("3/5"), "s": as_scalar("4/5")},
    samples=({}, {"r": 2, "c": "5/13", "s": "12/13"}, {"r": "1/3", "c": "-3/5", "s": "4/5"},
             {"r": 0, "c": 1, "s": 0}),
    check_params=_family_check,
))
register(CatalogEntry("kod5_J1", "contact form e5 on kod5", _kod5_j1, _kod5_j1_expect))
register(CatalogEntry("kod5_J0", "lift of the complex structure of kod4 to kod5", _kod5_j0, _kod5_j0_expect))
register(CatalogEntry(
    "kodaira_gcs", "generalized complex family on kod4", _kodaira, _kodaira_expect,
    defaults={"t1": ZERO, "t2": ZERO, "t3": ZERO, "t4": ZERO}, samples=KODAIRA_SAMPLES,
))
register(CatalogEntry(
    "darboux", "polynomial Darboux chart of dimension 2n + 1", lambda p: darboux_model(p["n"]), _darboux_expect,
    defaults={"n": 1}, samples=({"n": 1}, {"n": 2}), check_params=_darboux_check, integer_params=("n",),
))


def entry(name: str) -> CatalogEntry:
    try:
        return ENTRIES[name]
    except KeyError:
        raise UnknownEntry(f"unknown catalog entry {name!r}; known: {', '.join(sorted(ENTRIES))}") from None


def build(name: str, params: dict | None = None):
    """The object an entry describes (a Gacs, a Gcs or a Darboux report)."""
    e = entry(name)
    return e.build(e.resolve(params))


def run_entry(e: CatalogEntry, params: dict) -> EntryRun:
    obj = e.build(params)
    outcomes = tuple(evaluate(x) for x in e.expect(params, obj))
    return EntryRun(e.name, params, outcomes)


def catalog_run(name: str | None = None, params: dict | None = None) -> list[EntryRun]:
    """Run one entry (its default samples unless ``params`` is given) or all entries, sorted by name."""
    names = sorted(ENTRIES) if name is None else [entry(name).name]
    if name is None and params:
        raise BadParams("parameters need a single entry name")
    runs = []
    for n in names:
        e = ENTRIES[n]
        sets = [e.resolve(params)] if params else e.sample_params()
        runs.extend(run_entry(e, p) for p in sets)
    return runs


def format_params(p: dict) -> str:
    return ", ".join(f"{k}={format_scalar(v) if isinstance(v, GaussRational) else v}" for k, v in sorted(p.items()))


__all__ = [
    "ALGEBRAS", "CatalogEntry", "ENTRIES", "EntryRun", "Expectation", "Outcome", "algebra", "build",
    "catalog_run", "entry", "family_gamma", "family_generators", "format_params", "gen", "h3",
    "h3_family_structure", "kod4", "kod5", "kodaira_complex", "register", "run_entry", "span", "su2",
]
