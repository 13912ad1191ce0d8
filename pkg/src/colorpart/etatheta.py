"""Classical theta and eta expansions, each available as a sparse sum and,
where one exists, as an eta quotient so the two can be compared."""

from __future__ import annotations

import enum

from colorpart.series import EtaQuotient, Series, SeriesError, euler_product, expand_eta_quotient


class ThetaKind(enum.Enum):
    PENTAGONAL_F1 = "f1"
    CUBE_F1 = "f1^3"
    LEPQ_F2_5_F1_2 = "f2^5/f1^2"
    PHI = "phi(q)"
    PHI_NEG = "phi(-q)"
    PSI = "psi(q)"
    PQ = "P(q)"


ETA_FORMS: dict[ThetaKind, EtaQuotient] = {
    ThetaKind.CUBE_F1: EtaQuotient({1: 3}),
    ThetaKind.LEPQ_F2_5_F1_2: EtaQuotient({2: 5, 1: -2}),
    ThetaKind.PHI_NEG: EtaQuotient({1: 2, 2: -1}),
    ThetaKind.PSI: EtaQuotient({2: 2, 1: -1}),
    ThetaKind.PQ: EtaQuotient({2: 1, 3: 2, 1: -1, 6: -1}),
}

DUAL_KINDS = (
    ThetaKind.PENTAGONAL_F1,
    ThetaKind.CUBE_F1,
    ThetaKind.LEPQ_F2_5_F1_2,
    ThetaKind.PSI,
    ThetaKind.PHI_NEG,
)


def _bilateral(trunc, exponent, weight):
    """Sum weight(k) q^exponent(k) over all integers k with exponent(k) <= trunc.

    ``exponent`` must be nondecreasing in |k| on each side of zero (true for
    all the quadratics used here), so each side stops at its first overshoot.
    """
    cs = [0] * (trunc + 1)
    for start, step in ((0, 1), (-1, -1)):
        k = start
        while (e := exponent(k)) <= trunc:
            cs[e] += weight(k)
            k += step
    return cs


def theta_direct(kind: ThetaKind, trunc: int, modulus: int | None = None) -> Series:
    if trunc < 0:
        raise SeriesError("truncation order must be >= 0")
    if kind is ThetaKind.PENTAGONAL_F1:
        cs = _bilateral(trunc, lambda k: (3 * k * k - k) // 2, lambda k: -1 if k & 1 else 1)
    elif kind is ThetaKind.CUBE_F1:
        cs = [0] * (trunc + 1)
        k = 0
        while k * (k + 1) // 2 <= trunc:
            cs[k * (k + 1) // 2] += (-1) ** k * (2 * k + 1)
            k += 1
    elif kind is ThetaKind.LEPQ_F2_5_F1_2:
        cs = _bilateral(trunc, lambda k: 3 * k * k + 2 * k, lambda k: (-1) ** (k & 1) * (3 * k + 1))
    elif kind is ThetaKind.PHI:
        cs = _bilateral(trunc, lambda k: k * k, lambda k: 1)
    elif kind is ThetaKind.PHI_NEG:
        cs = _bilateral(trunc, lambda k: k * k, lambda k: -1 if k & 1 else 1)
    elif kind is ThetaKind.PSI:
        cs = [0] * (trunc + 1)
        k = 0
        while k * (k + 1) // 2 <= trunc:
            cs[k * (k + 1) // 2] = 1
            k += 1
    else:
        raise SeriesError(f"{kind.value} has no sparse sum; use theta_eta")
    return Series(cs, modulus)


def theta_eta(kind: ThetaKind, trunc: int, modulus: int | None = None) -> Series:
    if kind is ThetaKind.PENTAGONAL_F1:
        # the eta expander itself is built on the pentagonal sum, so compare
        # against the multiplied-out product instead
        return euler_product(trunc, 1, modulus)
    if kind is ThetaKind.PHI:
        raise SeriesError("phi(q) is only available as a sparse sum")
    return expand_eta_quotient(ETA_FORMS[kind], trunc, modulus)


def check_theta_identity(kind: ThetaKind, trunc: int) -> tuple[bool, int | None]:
    """Compare both forms over ZZ; returns (agree, first mismatching exponent)."""
    if kind not in DUAL_KINDS:
        raise SeriesError(f"{kind.value} has only one form")
    a = theta_direct(kind, trunc)
    b = theta_eta(kind, trunc)
    for n, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return False, n
    return True, None
