"""Truncated formal power series over Z or Z/mZ.

A :class:`Series` stores the coefficients of ``q^0 .. q^T``; everything past
``q^T`` is unknown, so reading beyond the truncation raises instead of
returning zero.

Multiplication packs both operands into single Python integers (Kronecker
substitution) and lets CPython's big-integer multiply do the convolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Series",
    "EtaQuotient",
    "SeriesError",
    "RingMismatchError",
    "TruncationError",
    "NonUnitError",
    "make_series",
    "one",
    "zero",
    "pentagonal_f1",
    "euler_product",
    "expand_eta_quotient",
]

# below this many coefficients the schoolbook product beats packing
_SCHOOLBOOK_CUTOFF = 24


class SeriesError(ValueError):
    pass


class RingMismatchError(SeriesError):
    pass


class NonUnitError(SeriesError):
    pass


class TruncationError(IndexError):
    pass


def _check_modulus(modulus):
    if modulus is not None and (not isinstance(modulus, int) or modulus < 2):
        raise SeriesError(f"modulus must be an integer >= 2, got {modulus!r}")


class Series:
    """Immutable truncated power series.

    ``modulus`` is ``None`` for the exact integer ring, otherwise the
    coefficients live in ``[0, modulus)``.
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, coeffs: Iterable[int], modulus: int | None = None):
        _check_modulus(modulus)
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise SeriesError("a series needs at least the q^0 coefficient")
        if modulus is not None:
            cs = tuple(c % modulus for c in cs)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple, modulus: int | None) -> "Series":
        # trusted constructor: coeffs already normalized
        s = object.__new__(cls)
        object.__setattr__(s, "modulus", modulus)
        object.__setattr__(s, "coeffs", coeffs)
        return s

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ring(self) -> str:
        return "ZZ" if self.modulus is None else f"ZZ/{self.modulus}"

    def coeff(self, n: int) -> int:
        if n < 0:
            raise IndexError(f"negative exponent {n}")
        if n > self.trunc:
            raise TruncationError(
                f"coefficient of q^{n} requested but series is only known to O(q^{self.trunc + 1})"
            )
        return self.coeffs[n]

    __getitem__ = coeff

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if len(self.coeffs) > 8 else ""
        return f"Series([{head}{more}], ring={self.ring}, trunc={self.trunc})"

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    # -- helpers ---------------------------------------------------------

    def _same_ring(self, other: "Series"):
        if self.modulus != other.modulus:
            raise RingMismatchError(f"cannot combine {self.ring} with {other.ring}")

    def _norm(self, cs) -> tuple:
        if self.modulus is None:
            return tuple(cs)
        m = self.modulus
        return tuple(c % m for c in cs)

    def truncate(self, trunc: int) -> "Series":
        if trunc < 0:
            raise SeriesError("truncation order must be >= 0")
        if trunc > self.trunc:
            raise TruncationError(f"cannot extend a series known to q^{self.trunc} up to q^{trunc}")
        return Series._raw(self.coeffs[: trunc + 1], self.modulus)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def first_nonzero(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = self._scalar(other)
        if not isinstance(other, Series):
            return NotImplemented
        self._same_ring(other)
        return Series._raw(self._norm(a + b for a, b in zip(self.coeffs, other.coeffs)), self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(self._norm(-c for c in self.coeffs), self.modulus)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self._scalar(other)
        if not isinstance(other, Series):
            return NotImplemented
        self._same_ring(other)
        return Series._raw(self._norm(a - b for a, b in zip(self.coeffs, other.coeffs)), self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def _scalar(self, c: int) -> "Series":
        return Series((c,) + (0,) * self.trunc, self.modulus)

    def scale(self, c: int) -> "Series":
        return Series._raw(self._norm(c * x for x in self.coeffs), self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        self._same_ring(other)
        n = min(len(self.coeffs), len(other.coeffs))
        cs = _convolve(self.coeffs[:n], other.coeffs[:n], n, self.modulus)
        return Series._raw(cs, self.modulus)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def invert(self) -> "Series":
        """Multiplicative inverse to the same truncation.

        Sparse inputs (eta products, theta series) use the coefficient
        recurrence over the nonzero terms; dense inputs use Newton iteration.
        """
        a0 = self.coeffs[0]
        m = self.modulus
        if m is None:
            if a0 not in (1, -1):
                raise NonUnitError(f"constant term {a0} is not a unit in ZZ")
            inv0 = a0
        else:
            if math.gcd(a0, m) != 1:
                raise NonUnitError(f"constant term {a0} is not a unit mod {m}")
            inv0 = pow(a0, -1, m)
        support = [(k, c) for k, c in enumerate(self.coeffs) if c and k]
        n = len(self.coeffs)
        if len(support) <= 4 * math.isqrt(n) + 8:
            return Series._raw(_invert_sparse(support, inv0, n, m), m)
        return self._invert_newton(inv0)

    def _invert_newton(self, inv0: int) -> "Series":
        m = self.modulus
        n = len(self.coeffs)
        b = (inv0,)
        prec = 1
        while prec < n:
            prec = min(2 * prec, n)
            a = self.coeffs[:prec]
            b = b + (0,) * (prec - len(b))
            ab = _convolve(a, b, prec, m)
            # b <- b * (2 - a b)
            corr = tuple((-c if i else 2 - c) for i, c in enumerate(ab))
            if m is not None:
                corr = tuple(c % m for c in corr)
            b = _convolve(b, corr, prec, m)
        return Series._raw(b, m)

    def __pow__(self, e: int) -> "Series":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.invert() ** (-e)
        result = self._scalar(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self * other.invert()

    def substitute(self, m: int) -> "Series":
        """Replace q by q^m; the truncation order scales by m."""
        if m < 1:
            raise SeriesError("substitution power must be >= 1")
        if m == 1:
            return self
        out = [0] * (self.trunc * m + 1)
        out[::m] = self.coeffs
        return Series._raw(tuple(out), self.modulus)

    def shift(self, s: int) -> "Series":
        """Multiply by q^s, keeping the truncation order."""
        if s < 0:
            raise SeriesError("shift must be >= 0")
        if s == 0:
            return self
        n = len(self.coeffs)
        return Series._raw(((0,) * s + self.coeffs)[:n], self.modulus)

    def reduce(self, m: int) -> "Series":
        """Image in ZZ/m of an exact series."""
        if self.modulus is not None:
            raise RingMismatchError("reduce expects a series over the exact integers")
        _check_modulus(m)
        return Series._raw(tuple(c % m for c in self.coeffs), m)


def make_series(coeffs: Sequence[int], trunc: int | None = None, modulus: int | None = None) -> Series:
    if trunc is not None and len(coeffs) != trunc + 1:
        raise SeriesError(f"expected {trunc + 1} coefficients for truncation {trunc}, got {len(coeffs)}")
    return Series(coeffs, modulus)


def one(trunc: int, modulus: int | None = None) -> Series:
    return Series((1,) + (0,) * trunc, modulus)


def zero(trunc: int, modulus: int | None = None) -> Series:
    return Series((0,) * (trunc + 1), modulus)


# -- convolution kernels -------------------------------------------------


def _schoolbook(a, b, n):
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), n - i)):
                out[i + j] += x * b[j]
    return out


def _pack(cs, width):
    return int.from_bytes(b"".join(c.to_bytes(width, "little") for c in cs), "little")


def _pack_signed(cs, width):
    pos = _pack([c if c > 0 else 0 for c in cs], width)
    neg = _pack([-c if c < 0 else 0 for c in cs], width)
    return pos - neg


def _unpack(x, width, n):
    raw = x.to_bytes(width * n + width, "little")[: width * n] if x else b""
    if not raw:
        return [0] * n
    fb = int.from_bytes
    return [fb(raw[i : i + width], "little") for i in range(0, width * n, width)]


def _unpack_signed(x, width, n):
    sign = 1
    if x < 0:
        sign, x = -1, -x
    x &= (1 << (8 * width * n)) - 1
    digits = _unpack(x, width, n)
    base = 1 << (8 * width)
    half = base >> 1
    carry = 0
    out = []
    for d in digits:
        d += carry
        if d >= half:
            out.append(sign * (d - base))
            carry = 1
        else:
            out.append(sign * d)
            carry = 0
    return out


def _convolve(a: Sequence[int], b: Sequence[int], n: int, modulus: int | None) -> tuple:
    """First n coefficients of the product of a and b."""
    a = a[:n]
    b = b[:n]
    if n <= _SCHOOLBOOK_CUTOFF:
        out = _schoolbook(a, b, n)
    elif modulus is not None:
        bound = (modulus - 1) ** 2 * n
        width = max(1, (bound.bit_length() + 7) // 8)
        prod = _pack(a, width) * _pack(b, width)
        out = _unpack(prod & ((1 << (8 * width * n)) - 1), width, n)
    else:
        ma = max(abs(c) for c in a)
        mb = max(abs(c) for c in b)
        if not ma or not mb:
            return (0,) * n
        bound = ma * mb * n
        # one extra bit for the sign of balanced digits
        width = (bound.bit_length() + 2 + 7) // 8
        out = _unpack_signed(_pack_signed(a, width) * _pack_signed(b, width), width, n)
    if modulus is not None:
        return tuple(c % modulus for c in out)
    return tuple(out)


def _invert_sparse(support, inv0, n, modulus):
    b = [0] * n
    b[0] = inv0
    if modulus is None:
        for i in range(1, n):
            acc = 0
            for k, c in support:
                if k > i:
                    break
                acc += c * b[i - k]
            b[i] = -inv0 * acc
    else:
        for i in range(1, n):
            acc = 0
            for k, c in support:
                if k > i:
                    break
                acc += c * b[i - k]
            b[i] = (-inv0 * acc) % modulus
    return tuple(b)


# -- eta products --------------------------------------------------------


def pentagonal_f1(trunc: int, modulus: int | None = None) -> Series:
    """(q;q)_inf to O(q^{trunc+1}) via the pentagonal number sum."""
    if trunc < 0:
        raise SeriesError("truncation order must be >= 0")
    cs = [0] * (trunc + 1)
    cs[0] = 1
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        if e1 > trunc:
            break
        sign = -1 if k & 1 else 1
        cs[e1] += sign
        e2 = e1 + k
        if e2 <= trunc:
            cs[e2] += sign
        k += 1
    return Series(cs, modulus)


def euler_product(trunc: int, m: int = 1, modulus: int | None = None) -> Series:
    """(q^m;q^m)_inf by multiplying out the factors (1 - q^{mn}) one at a time."""
    cs = [1] + [0] * trunc
    step = m
    while step <= trunc:
        cs = cs[:step] + [cs[i] - cs[i - step] for i in range(step, trunc + 1)]
        step += m
    return Series(cs, modulus)


@dataclass(frozen=True)
class EtaQuotient:
    """A finite product of f_m^e, with f_m = (q^m; q^m)_inf."""

    factors: tuple[tuple[int, int], ...]

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        merged: dict[int, int] = {}
        for m, e in items:
            if not isinstance(m, int) or m < 1:
                raise SeriesError(f"eta subscript must be a positive integer, got {m!r}")
            if e == 0:
                raise SeriesError(f"zero exponent for f_{m}")
            merged[m] = merged.get(m, 0) + e
        object.__setattr__(
            self, "factors", tuple(sorted((m, e) for m, e in merged.items() if e))
        )

    @classmethod
    def colored(cls, r: int, s: int) -> "EtaQuotient":
        """Generating function of a_{r,s}: f_2^{s-r} / f_1^s."""
        if r < 1 or s < 1:
            raise SeriesError(f"color counts must be >= 1, got r={r}, s={s}")
        return cls(((2, s - r), (1, -s)) if s != r else ((1, -s),))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        merged = self.as_dict()
        for m, e in other.factors:
            merged[m] = merged.get(m, 0) + e
        return EtaQuotient((m, e) for m, e in merged.items() if e)

    def __pow__(self, k: int) -> "EtaQuotient":
        if k == 0:
            return EtaQuotient()
        return EtaQuotient((m, e * k) for m, e in self.factors)

    def inverse(self) -> "EtaQuotient":
        return self ** -1

    def is_function_of(self, m: int) -> bool:
        return all(sub % m == 0 for sub, _ in self.factors)

    def __str__(self):
        from colorpart.quotient import format_quotient

        return format_quotient(self)


def expand_eta_quotient(eq: EtaQuotient | Mapping[int, int], trunc: int, modulus: int | None = None) -> Series:
    """Expand prod f_m^e to O(q^{trunc+1})."""
    if not isinstance(eq, EtaQuotient):
        eq = EtaQuotient(eq)
    if trunc < 0:
        raise SeriesError("truncation order must be >= 0")
    result = one(trunc, modulus)
    for m, e in eq.factors:
        base = pentagonal_f1(trunc // m, modulus).substitute(m)
        if base.trunc < trunc:
            base = Series._raw(base.coeffs + (0,) * (trunc - base.trunc), modulus)
        result = result * base**e
    return result
