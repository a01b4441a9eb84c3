"""Integrability levels, the obstruction tensor and the bialgebroid tests."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from ..courant import ClosednessReport, GenVector, closedness, courant_bracket, gen_eval, pairing
from ..errors import LNotClosed
from ..exactnum import HALF, ONE, GaussRational
from ..multilinear import KVector, wedge
from .eigen import EigenData, TypeBlocks, eigenbundles, kernel_basis, type_components
from .gacs import Gacs, gacs_violations


class Level(str, Enum):
    INVALID = "Invalid"
    ALMOST_ONLY = "AlmostOnly"
    GENERALIZED_CONTACT = "GeneralizedContact"
    STRONG = "StrongGeneralizedContact"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    level: Level
    llstar_bialgebroid: bool = False
    e_pair_bialgebroid: bool = False
    obstruction_nonzero: bool | None = None
    violations: tuple = field(default_factory=tuple)
    L_report: ClosednessReport | None = None
    Lstar_report: ClosednessReport | None = None
    E_pair_report: ClosednessReport | None = None
    block20_zero: bool | None = None
    dEta_kernel_zero: bool | None = None

    @property
    def strong(self) -> bool:
        return self.level is Level.STRONG

    def summary(self) -> dict:
        return {
            "level": self.level.value,
            "strong": self.strong,
            "llstar_bialgebroid": self.llstar_bialgebroid,
            "e_pair_bialgebroid": self.e_pair_bialgebroid,
            "obstruction_nonzero": self.obstruction_nonzero,
        }


def nij(v0: GenVector, v1: GenVector, v2: GenVector) -> GaussRational:
    """Cyclic Nijenhuis operator ``1/3 (<[[v0,v1]],v2> + <[[v1,v2]],v0> + <[[v2,v0]],v1>)``."""
    third = ONE / 3
    return third * (pairing(courant_bracket(v0, v1), v2)
                    + pairing(courant_bracket(v1, v2), v0)
                    + pairing(courant_bracket(v2, v0), v1))


@dataclass(frozen=True)
class Obstruction:
    """``-1/2 F ^ (rho* d eta)^(2,0)`` as a generalized 3-vector, plus its direct check."""

    tensor: KVector
    checked_triples: int

    def __bool__(self):
        return bool(self.tensor)

    def value(self, *vs: GenVector) -> GaussRational:
        return gen_eval(self.tensor, *vs)


def obstruction(j: Gacs, eigen: EigenData | None = None, blocks: TypeBlocks | None = None) -> Obstruction:
    """The obstruction to closedness of ``L*`` given that ``L`` is closed.

    The closed form is compared with :func:`nij` on every basis triple of
    ``L*``; a mismatch raises AssertionError.
    """
    e = eigen or eigenbundles(j)
    report = closedness(e.L)
    if not report.closed:
        raise LNotClosed(f"L is not closed: {report.witnesses[0]}")
    blocks = blocks or type_components(j, j.d_eta())
    F = KVector.from_list(j.F_gen().coords())
    tensor = -HALF * wedge(F, blocks.block20) if blocks.block20 else KVector.zero(2 * j.dim, 3)
    basis = e.Lstar.basis
    count = 0
    for a, b, c in combinations(range(len(basis)), 3):
        triple = (basis[a], basis[b], basis[c])
        direct = nij(*triple)
        closed_form = gen_eval(tensor, *triple)
        if direct != closed_form:
            raise AssertionError(f"obstruction mismatch on L* triple {(a, b, c)}: {direct} vs {closed_form}")
        count += 1
    return Obstruction(tensor, count)


def dEta_on_kernel(j: Gacs) -> list[tuple[int, int, GaussRational]]:
    """Nonzero values of ``d eta`` on pairs from a basis of ``ker eta``."""
    vecs = [v.vec for v in kernel_basis(j) if v.vec]
    d = j.d_eta()
    out = []
    for a, b in combinations(range(len(vecs)), 2):
        val = d.eval(vecs[a], vecs[b])
        if val:
            out.append((a, b, val))
    return out


def classify(j: Gacs) -> Classification:
    """Level plus the two bialgebroid flags, with witnesses.

    ``llstar_bialgebroid`` is the type-(1,1) criterion for ``d eta`` on a
    structure with closed ``L``; it must agree with closedness of ``L*``.
    The result is memoized on the (frozen) structure.
    """
    memo = j.__dict__.get("_classification")
    if memo is None:
        memo = j.__dict__["_classification"] = _classify(j)
    return memo


def _classify(j: Gacs) -> Classification:
    bad = gacs_violations(j)
    if bad:
        return Classification(Level.INVALID, violations=tuple(bad))
    e = eigenbundles(j)
    L_rep = closedness(e.L)
    if not L_rep.closed:
        return Classification(Level.ALMOST_ONLY, L_report=L_rep)
    Ls_rep = closedness(e.Lstar)
    blocks = type_components(j, j.d_eta())
    b20_zero = not blocks.block20
    if b20_zero != Ls_rep.closed:
        raise AssertionError("closedness of L* disagrees with the (2,0) block of d eta")
    obs = obstruction(j, e, blocks)
    level = Level.STRONG if Ls_rep.closed else Level.GENERALIZED_CONTACT
    kernel_zero = not dEta_on_kernel(j)
    E_rep = closedness(e.E10 + e.E01)
    e_pair = level is Level.STRONG and kernel_zero
    return Classification(
        level,
        llstar_bialgebroid=b20_zero,
        e_pair_bialgebroid=e_pair,
        obstruction_nonzero=bool(obs),
        L_report=L_rep,
        Lstar_report=Ls_rep,
        E_pair_report=E_rep,
        block20_zero=b20_zero,
        dEta_kernel_zero=kernel_zero,
    )


__all__ = [
    "Classification", "Level", "Obstruction", "TypeBlocks", "classify", "dEta_on_kernel", "nij",
    "obstruction",
]
