"""m-dissections: pulling out the q^{mn+j} terms of a series, and the six
3-dissection identities checked to a truncation bound."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from colorpart.etatheta import ThetaKind, theta_direct, theta_eta
from colorpart.series import EtaQuotient, Series, SeriesError, expand_eta_quotient, one


def extract(a: Series, m: int, j: int) -> Series:
    """Coefficients a(mn + j) for n = 0, 1, ..., reindexed to q^n."""
    if m < 1:
        raise SeriesError("m must be >= 1")
    if not 0 <= j < m:
        raise SeriesError(f"residue {j} outside [0, {m - 1}]")
    if a.trunc < j:
        raise SeriesError(f"series known only to q^{a.trunc}, cannot reach q^{j}")
    return Series._raw(a.coeffs[j::m], a.modulus)


def component_vanishes(a: Series, m: int, j: int, modulus: int | None = None) -> tuple[bool, int | None]:
    """Does a(mn + j) vanish (mod ``modulus`` if given) for every n in range?

    Returns ``(True, None)`` or ``(False, n)`` with the smallest offending n.
    """
    comp = extract(a, m, j)
    if modulus is not None:
        comp = comp.reduce(modulus) if comp.modulus is None else _recast(comp, modulus)
    n = comp.first_nonzero()
    return n is None, n


def _recast(s: Series, modulus: int) -> Series:
    if s.modulus % modulus:
        raise SeriesError(f"cannot read a series over ZZ/{s.modulus} modulo {modulus}")
    return Series(s.coeffs, modulus)


def reassemble(parts: list[Series], trunc: int) -> Series:
    """Inverse of dissection: sum of q^j * parts[j](q^m), m = len(parts)."""
    m = len(parts)
    out = [0] * (trunc + 1)
    for j, part in enumerate(parts):
        if j <= trunc and part.trunc < (trunc - j) // m:
            raise SeriesError(f"component {j} too short to rebuild up to q^{trunc}")
        out[j :: m] = part.coeffs[: len(range(j, trunc + 1, m))]
    return Series(out, parts[0].modulus)


# -- identity catalogue ----------------------------------------------------


@dataclass(frozen=True)
class Factor:
    """A theta/eta building block evaluated at q^arg and raised to ``power``."""

    base: EtaQuotient | ThetaKind
    arg: int = 1
    power: int = 1

    def expand(self, trunc: int, modulus: int | None = None) -> Series:
        inner = -(-trunc // self.arg)
        if isinstance(self.base, EtaQuotient):
            s = expand_eta_quotient(self.base, inner, modulus)
        elif self.base is ThetaKind.PQ:
            s = theta_eta(self.base, inner, modulus)
        else:
            s = theta_direct(self.base, inner, modulus)
        s = s.substitute(self.arg).truncate(trunc)
        return s**self.power


@dataclass(frozen=True)
class Term:
    scalar: int
    shift: int
    factors: tuple[Factor, ...]

    def expand(self, trunc: int, modulus: int | None = None) -> Series:
        s = one(trunc, modulus)
        for f in self.factors:
            s = s * f.expand(trunc, modulus)
        return s.shift(self.shift).scale(self.scalar)


class DissectionId(enum.Enum):
    E4_3 = "e4.3"
    E4_4 = "e4.4"
    E4_5 = "e4.5"
    E2_5 = "e2.5"
    EL2_9 = "el2.9"
    EL2_10 = "el2.10"


@dataclass(frozen=True)
class DissectionIdentity:
    id: DissectionId
    description: str
    lhs: tuple[Factor, ...]
    rhs: tuple[Term, ...]


def _eta(**subs) -> Factor:
    return Factor(EtaQuotient({int(k[1:]): v for k, v in subs.items()}))


def _t(scalar, shift, *factors) -> Term:
    return Term(scalar, shift, tuple(factors))


_PSI = ThetaKind.PSI
_P = ThetaKind.PQ

IDENTITIES: dict[DissectionId, DissectionIdentity] = {
    d.id: d
    for d in (
        DissectionIdentity(
            DissectionId.E4_3,
            "f2^3/f1^3",
            (_eta(f2=3, f1=-3),),
            (
                _t(1, 0, _eta(f6=1, f3=-1)),
                _t(3, 1, _eta(f6=4, f9=5, f3=-8, f18=-1)),
                _t(6, 2, _eta(f6=3, f9=2, f18=2, f3=-7)),
                _t(12, 3, _eta(f6=2, f18=5, f3=-6, f9=-1)),
            ),
        ),
        DissectionIdentity(
            DissectionId.E4_4,
            "1/(f1 f2)",
            (_eta(f1=-1, f2=-1),),
            (
                _t(1, 0, _eta(f9=9, f3=-6, f6=-2, f18=-3)),
                _t(1, 1, _eta(f9=6, f3=-5, f6=-3)),
                _t(3, 2, _eta(f9=3, f18=3, f3=-4, f6=-4)),
                _t(-2, 3, _eta(f18=6, f3=-3, f6=-5)),
                # weight balance forces f18^9 here; with f18^1 the sides differ at q^22
                _t(4, 4, _eta(f18=9, f3=-2, f6=-6, f9=-3)),
            ),
        ),
        DissectionIdentity(
            DissectionId.E4_5,
            "f1 f2",
            (_eta(f1=1, f2=1),),
            (
                _t(1, 0, _eta(f6=1, f9=4, f3=-1, f18=-2)),
                _t(-1, 1, _eta(f9=1, f18=1)),
                _t(-2, 2, _eta(f3=1, f18=4, f6=-1, f9=-2)),
            ),
        ),
        DissectionIdentity(
            DissectionId.E2_5,
            "f1^2/f2",
            (_eta(f1=2, f2=-1),),
            (
                _t(1, 0, _eta(f9=2, f18=-1)),
                _t(-2, 1, _eta(f3=1, f18=2, f6=-1, f9=-1)),
            ),
        ),
        DissectionIdentity(
            DissectionId.EL2_9,
            "psi(q)",
            (Factor(_PSI),),
            (
                _t(1, 0, Factor(_P, 3)),
                _t(1, 1, Factor(_PSI, 9)),
            ),
        ),
        DissectionIdentity(
            DissectionId.EL2_10,
            "1/psi(q)",
            (Factor(_PSI, 1, -1),),
            (
                _t(1, 0, Factor(_PSI, 9), Factor(_PSI, 3, -4), Factor(_P, 3, 2)),
                _t(-1, 1, Factor(_PSI, 9, 2), Factor(_PSI, 3, -4), Factor(_P, 3)),
                _t(1, 2, Factor(_PSI, 9, 3), Factor(_PSI, 3, -4)),
            ),
        ),
    )
}


def expand_side(factors_or_terms, trunc: int, modulus: int | None = None) -> Series:
    if factors_or_terms and isinstance(factors_or_terms[0], Term):
        total = None
        for t in factors_or_terms:
            s = t.expand(trunc, modulus)
            total = s if total is None else total + s
        return total
    return Term(1, 0, tuple(factors_or_terms)).expand(trunc, modulus)


def verify_dissection(ident: DissectionIdentity | DissectionId | str, trunc: int) -> tuple[bool, int | None]:
    """Expand both sides over ZZ and compare through q^trunc."""
    if not isinstance(ident, DissectionIdentity):
        ident = IDENTITIES[DissectionId(ident)]
    if trunc < 9:
        raise SeriesError("dissection checks need trunc >= 9 (f_9 and f_18 appear)")
    left = expand_side(ident.lhs, trunc)
    right = expand_side(ident.rhs, trunc)
    for n, (x, y) in enumerate(zip(left.coeffs, right.coeffs)):
        if x != y:
            return False, n
    return True, None
