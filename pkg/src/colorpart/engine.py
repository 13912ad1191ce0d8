"""Congruence registry and the checks that run it.

Every family is evaluated the same way: expand f_2^{s-r}/f_1^s over ZZ/p to
the requested depth and read off the arithmetic progressions it claims.
"""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable

from colorpart.dissect import component_vanishes, extract
from colorpart.series import EtaQuotient, Series, expand_eta_quotient

log = logging.getLogger(__name__)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"
DEFAULT_PRIMES = (3, 5, 7, 11, 13)
DEFAULT_DEPTH = 2000


class PrimeConstraintError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre needs an odd prime, got {p}")
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


# -- residue rules ---------------------------------------------------------


class Mode(enum.Enum):
    QNR = "QNR"
    DIVISIBLE = "DIVISIBLE"
    QNR_OR_DIVISIBLE = "QNR_OR_DIVISIBLE"
    R_ITSELF_QNR = "R_ITSELF_QNR"


@dataclass(frozen=True)
class ResidueCondition:
    """A rule on r in [1, p-1] phrased through the linear form c*r + d."""

    c: int
    d: int
    mode: Mode

    def value(self, r: int) -> int:
        return self.c * r + self.d

    def holds(self, r: int, p: int) -> bool:
        v = self.value(r)
        if self.mode is Mode.DIVISIBLE:
            return v % p == 0
        if self.mode is Mode.QNR_OR_DIVISIBLE:
            return v % p == 0 or legendre(v, p) == -1
        # QNR and R_ITSELF_QNR; the latter is the form 1*r + 0
        return legendre(v, p) == -1

    def form(self) -> str:
        if (self.c, self.d) == (1, 0):
            return "r"
        return f"{self.c}r+{self.d}" if self.d else f"{self.c}r"

    def describe(self, r: int, p: int) -> str:
        v = self.value(r)
        if v % p == 0:
            verdict = f"≡ 0 mod {p}"
        else:
            verdict = "non-residue" if legendre(v, p) == -1 else "residue"
            verdict = f"≡ {v % p} mod {p}, quadratic {verdict}"
        return f"r={r}: {self.form()}={v} {verdict}"


# -- families --------------------------------------------------------------

Colors = Callable[[int, int, int, object], "tuple[int, int]"]


@dataclass(frozen=True)
class Cell:
    """One grid point of a family run."""

    family: str
    p: int
    k: int | None = None
    j: int | None = None
    variant: str | None = None
    alpha: int | None = None


@dataclass
class VerificationReport:
    family: str
    p: int
    k: int | None
    j: int | None
    variant: str | None
    alpha: int | None
    colors: tuple[int, int] | None
    modulus: int
    residues: tuple[int, ...]
    depth: int
    status: str
    checked: int = 0
    witness: dict | None = None
    note: str = ""
    ms: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("ms")
        d["colors"] = list(self.colors) if self.colors else None
        d["residues"] = list(self.residues)
        return d


@dataclass(frozen=True)
class Family:
    """Fields shared by every registered congruence family.

    ``params`` says which of k, j the family ranges over: ``"kj"`` for the
    usual k >= j >= 0 grid, ``"j"`` for j only, ``"none"`` for a single case.
    """

    id: str
    statement: str
    prime_ok: Callable[[int], bool]
    prime_text: str
    params: str = "none"
    variants: tuple = (None,)

    def check_prime(self, p: int) -> None:
        if not is_prime(p) or not self.prime_ok(p):
            raise PrimeConstraintError(f"{self.id}: p={p} violates the constraint {self.prime_text}")

    def parameter_grid(self, kmax: int):
        if self.params == "kj":
            return [(k, j) for k in range(kmax + 1) for j in range(k + 1)]
        if self.params == "j":
            return [(None, j) for j in range(kmax + 1)]
        return [(None, None)]

    def cells(self, primes, kmax: int) -> list[Cell]:
        out = []
        for p in primes:
            if not (is_prime(p) and self.prime_ok(p)):
                continue
            for k, j in self.parameter_grid(kmax):
                for v in self.variants:
                    out.append(Cell(self.id, p, k, j, _label(v)))
        return out


def _label(v):
    return None if v is None else str(v[0])


@dataclass(frozen=True)
class VanishingFamily(Family):
    """a_{colors}(A n + b) = 0 mod p for every admitted residue b."""

    colors: Colors = None
    modulus: Callable[[int], int] = lambda p: p
    fixed_residues: Callable[[int, object], tuple] | None = None
    residue_rule: ResidueCondition | None = None

    def color_pair(self, p, k, j, v=None) -> tuple[int, int]:
        r, s = self.colors(p, k or 0, j or 0, v)
        if r < 1 or s < 1:
            raise PrimeConstraintError(f"{self.id}: colors ({r}, {s}) at p={p}, k={k}, j={j}")
        return r, s

    def progression(self, p: int, v=None) -> tuple[int, tuple[int, ...]]:
        if self.fixed_residues is not None:
            return self.modulus(p), tuple(self.fixed_residues(p, v))
        return self.modulus(p), admissible_residues(self, p)


@dataclass(frozen=True)
class InternalFamily(Family):
    """a_{left}(A1 n + b1) = a_{right}(A2 n + b2) mod p, coefficientwise."""

    left: Callable[[int, int], tuple] = None
    right: Callable[[int, int], tuple] = None


@dataclass(frozen=True)
class IteratedFamily(Family):
    """A vanishing family whose progression depends on alpha >= 0."""

    colors: tuple[int, int] = (1, 1)
    progression_at: Callable[[int], tuple[int, tuple[int, ...]]] = None
    alpha_max: int = 1

    def cells(self, primes, kmax: int) -> list[Cell]:
        if not any(is_prime(p) and self.prime_ok(p) for p in primes):
            return []
        (p,) = [p for p in primes if is_prime(p) and self.prime_ok(p)]
        return [Cell(self.id, p, alpha=a) for a in range(self.alpha_max + 1)]


def _only(q):
    return (lambda p: p == q), f"p = {q}"


def _at_least(q):
    return (lambda p: p >= q), f"p >= {q}"


def _t1_2_progression(alpha):
    num = 153 * 9**alpha - 1
    if num % 8:
        raise ArithmeticError(f"(153*9^{alpha} - 1)/8 is not an integer")
    return 3 ** (2 * alpha + 3), (num // 8,)


def _c4_2_progression(alpha):
    b = 9 ** (alpha + 1)
    return 3 ** (2 * alpha + 3), (b, 2 * b)


_T1_1_ROWS = ((1, 5), (3, 2), (4, 4), (5, 6), (7, 3))

FAMILIES: tuple[Family, ...] = (
    VanishingFamily(
        "t1.1",
        "a_{7j+c}(7n+b) = 0 (mod 7) for (c, b) in (1,5), (3,2), (4,4), (5,6), (7,3)",
        *_only(7),
        params="j",
        variants=tuple((f"c={c},b={b}", c, b) for c, b in _T1_1_ROWS),
        colors=lambda p, k, j, v: (1, 7 * j + v[1]),
        modulus=lambda p: 7,
        fixed_residues=lambda p, v: (v[2],),
    ),
    IteratedFamily(
        "t1.2",
        "a_{1,5}(3^{2a+3} n + (153*9^a - 1)/8) = 0 (mod 3)",
        *_only(3),
        colors=(1, 5),
        progression_at=_t1_2_progression,
    ),
    VanishingFamily(
        "t1.3",
        "a_{1,5}(5n+3) = 0 (mod 5)",
        *_only(5),
        colors=lambda p, k, j, v: (1, 5),
        modulus=lambda p: 5,
        fixed_residues=lambda p, v: (3,),
    ),
    VanishingFamily(
        "t1.4",
        "a_{1,3t+2}(27n+18+t) = 0 (mod 3), 0 <= t <= 8",
        *_only(3),
        variants=tuple((f"t={t}", t) for t in range(9)),
        colors=lambda p, k, j, v: (1, 3 * v[1] + 2),
        modulus=lambda p: 27,
        fixed_residues=lambda p, v: (18 + v[1],),
    ),
    VanishingFamily(
        "t1.5",
        "a_{p-1,1}(pn+r) = 0 (mod p) when 8r+1 is a non-residue mod p",
        lambda p: p >= 3,
        "p odd prime",
        colors=lambda p, k, j, v: (p - 1, 1),
        residue_rule=ResidueCondition(8, 1, Mode.QNR),
    ),
    VanishingFamily(
        "t1.6",
        "a_{3(k-j)+3,3k+6}(3n+b) = 0 (mod 3), b = 1, 2",
        *_only(3),
        params="kj",
        colors=lambda p, k, j, v: (3 * (k - j) + 3, 3 * k + 6),
        modulus=lambda p: 3,
        fixed_residues=lambda p, v: (1, 2),
    ),
    VanishingFamily(
        "t1.8",
        "a_{27(k-j)+2,27k+4}(27n+b) = 0 (mod 3), b = 9, 18",
        *_only(3),
        params="kj",
        colors=lambda p, k, j, v: (27 * (k - j) + 2, 27 * k + 4),
        modulus=lambda p: 27,
        fixed_residues=lambda p, v: (9, 18),
    ),
    InternalFamily(
        "t1.9",
        "a_{2,4}(27n) = a_{2,4}(3n) (mod 3)",
        *_only(3),
        left=lambda k, j: ((2, 4), 27, 0),
        right=lambda k, j: ((2, 4), 3, 0),
    ),
    VanishingFamily(
        "t1.10",
        "a_{9(k-j)+4,9k+2}(9n+7) = 0 (mod 3)",
        *_only(3),
        params="kj",
        colors=lambda p, k, j, v: (9 * (k - j) + 4, 9 * k + 2),
        modulus=lambda p: 9,
        fixed_residues=lambda p, v: (7,),
    ),
    VanishingFamily(
        "t1.11",
        "a_{3(k-j)+5,3k+1}(3n+2) = 0 (mod 3)",
        *_only(3),
        params="kj",
        colors=lambda p, k, j, v: (3 * (k - j) + 5, 3 * k + 1),
        modulus=lambda p: 3,
        fixed_residues=lambda p, v: (2,),
    ),
    # printed with 3(k-j)+5, 3k+1, which fails at (k, j) = (1, 0); the lift
    # carried out for this congruence uses steps of 9
    VanishingFamily(
        "t1.12",
        "a_{9(k-j)+5,9k+1}(9n+6) = 0 (mod 3)",
        *_only(3),
        params="kj",
        colors=lambda p, k, j, v: (9 * (k - j) + 5, 9 * k + 1),
        modulus=lambda p: 9,
        fixed_residues=lambda p, v: (6,),
    ),
    VanishingFamily(
        "t1.13",
        "a_{p(k-j)+p-4,pk+p}(pn+r) = 0 (mod p) when p | 3r+1",
        lambda p: p % 12 in (5, 11),
        "p = 5, 11 (mod 12)",
        params="kj",
        colors=lambda p, k, j, v: (p * (k - j) + p - 4, p * k + p),
        residue_rule=ResidueCondition(3, 1, Mode.DIVISIBLE),
    ),
    VanishingFamily(
        "t1.15",
        "a_{p(k-j)+p-3,pk+p}(pn+r) = 0 (mod p) when 4r+1 is a non-residue",
        *_at_least(5),
        params="kj",
        colors=lambda p, k, j, v: (p * (k - j) + p - 3, p * k + p),
        residue_rule=ResidueCondition(4, 1, Mode.QNR),
    ),
    VanishingFamily(
        "t1.15b",
        "a_{p(k-j)+p-3,pk+p}(pn+r) = 0 (mod p) when p | 4r+1",
        *_at_least(5),
        params="kj",
        colors=lambda p, k, j, v: (p * (k - j) + p - 3, p * k + p),
        residue_rule=ResidueCondition(4, 1, Mode.DIVISIBLE),
    ),
    VanishingFamily(
        "t1.16",
        "a_{p(k-j)+p-1,pk+p-2}(pn+r) = 0 (mod p) when r is a non-residue",
        *_at_least(5),
        params="kj",
        colors=lambda p, k, j, v: (p * (k - j) + p - 1, p * k + p - 2),
        residue_rule=ResidueCondition(1, 0, Mode.R_ITSELF_QNR),
    ),
    VanishingFamily(
        "t1.18",
        "a_{p(k-j)+p-1,pk+p}(pn+r) = 0 (mod p) when 12r+1 is a non-residue",
        *_at_least(5),
        params="kj",
        colors=lambda p, k, j, v: (p * (k - j) + p - 1, p * k + p),
        residue_rule=ResidueCondition(12, 1, Mode.QNR),
    ),
    VanishingFamily(
        "t1.19",
        "a_{p(k-j)+p-1,pk+p+1}(pn+r) = 0 (mod p) when 8r+1 is a non-residue",
        *_at_least(3),
        params="kj",
        colors=lambda p, k, j, v: (p * (k - j) + p - 1, p * k + p + 1),
        residue_rule=ResidueCondition(8, 1, Mode.QNR),
    ),
    VanishingFamily(
        "t1.20",
        "a_{p(k-j)+p-3,pk+p+2}(pn+r) = 0 (mod p) when 3r+1 is a non-residue or 0 mod p",
        *_at_least(5),
        params="kj",
        colors=lambda p, k, j, v: (p * (k - j) + p - 3, p * k + p + 2),
        residue_rule=ResidueCondition(3, 1, Mode.QNR_OR_DIVISIBLE),
    ),
    InternalFamily(
        "e1.5",
        "a_{1,5}(27n+10) = a_{1,5}(3n+1) (mod 3)",
        *_only(3),
        left=lambda k, j: ((1, 5), 27, 10),
        right=lambda k, j: ((1, 5), 3, 1),
    ),
    VanishingFamily(
        "e1.6",
        "a_{27(k-j)+1,27k+5}(27n+19) = 0 (mod 3)",
        *_only(3),
        params="kj",
        colors=lambda p, k, j, v: (27 * (k - j) + 1, 27 * k + 5),
        modulus=lambda p: 27,
        fixed_residues=lambda p, v: (19,),
    ),
    InternalFamily(
        "c3.2",
        "a_{27(k-j)+1,27k+5}(27n+10) = a_{3(k-j)+1,3k+5}(3n+1) (mod 3)",
        *_only(3),
        params="kj",
        left=lambda k, j: ((27 * (k - j) + 1, 27 * k + 5), 27, 10),
        right=lambda k, j: ((3 * (k - j) + 1, 3 * k + 5), 3, 1),
    ),
    InternalFamily(
        "c4.1",
        "a_{27(k-j)+2,27k+4}(27n) = a_{3(k-j)+2,3k+4}(3n) (mod 3)",
        *_only(3),
        params="kj",
        left=lambda k, j: ((27 * (k - j) + 2, 27 * k + 4), 27, 0),
        right=lambda k, j: ((3 * (k - j) + 2, 3 * k + 4), 3, 0),
    ),
    IteratedFamily(
        "c4.2",
        "a_{2,4}(3^{2a+3} n + b*9^{a+1}) = 0 (mod 3), b = 1, 2",
        *_only(3),
        colors=(2, 4),
        progression_at=_c4_2_progression,
    ),
)

REGISTRY: dict[str, Family] = {f.id: f for f in FAMILIES}
_ORDER = {f.id: i for i, f in enumerate(FAMILIES)}


def get_family(family_id: str) -> Family:
    try:
        return REGISTRY[family_id]
    except KeyError:
        raise KeyError(f"unknown family {family_id!r}; known: {', '.join(REGISTRY)}") from None


def _validate_registry():
    for fam in FAMILIES:
        if isinstance(fam, VanishingFamily):
            for p in range(3, 60):
                if is_prime(p) and fam.prime_ok(p):
                    for k, j in fam.parameter_grid(2):
                        for v in fam.variants:
                            fam.color_pair(p, k, j, v)
        if isinstance(fam, IteratedFamily):
            for a in range(4):
                fam.progression_at(a)


_validate_registry()


def admissible_residues(family: Family | str, p: int) -> tuple[int, ...]:
    """All r in [1, p-1] that the family's residue rule admits."""
    if isinstance(family, str):
        family = get_family(family)
    family.check_prime(p)
    rule = getattr(family, "residue_rule", None)
    if rule is None:
        raise ValueError(f"{family.id} has fixed residues, not a residue rule")
    if family.id == "t1.13" and legendre(-3, p) != -1:
        raise AssertionError(f"-3 should be a non-residue mod {p}")
    return tuple(r for r in range(1, p) if rule.holds(r, p))


# -- verification ----------------------------------------------------------


@lru_cache(maxsize=64)
def colored_series(r: int, s: int, depth: int, modulus: int | None) -> Series:
    return expand_eta_quotient(EtaQuotient.colored(r, s), depth, modulus)


def _variant(family: Family, label):
    for v in family.variants:
        if _label(v) == label:
            return v
    raise KeyError(f"{family.id} has no variant {label!r}")


def _check_progressions(series, A, residues, p):
    """Returns (checked count, first witness or None)."""
    checked = 0
    for b in residues:
        ok, n = component_vanishes(series, A, b)
        if not ok:
            return checked, {"residue": b, "n": n, "index": A * n + b, "value": series[A * n + b] % p}
        checked += (series.trunc - b) // A + 1
    return checked, None


def verify_family(family, p: int, k: int | None = None, j: int | None = None, depth: int = DEFAULT_DEPTH, variant=None) -> VerificationReport:
    if isinstance(family, str):
        family = get_family(family)
    if not isinstance(family, VanishingFamily):
        raise TypeError(f"{family.id} is not a vanishing family")
    family.check_prime(p)
    if k is not None and j is not None and not k >= j >= 0:
        raise ValueError(f"need k >= j >= 0, got k={k}, j={j}")
    v = _variant(family, variant)
    started = time.perf_counter()
    colors = family.color_pair(p, k, j, v)
    A, residues = family.progression(p, v)
    if depth < A:
        raise ValueError(f"depth {depth} is shorter than one step of the progression {A}n+b")
    common = dict(family=family.id, p=p, k=k, j=j, variant=_label(v), alpha=None, colors=colors, modulus=A, residues=residues, depth=depth)
    if not residues:
        return VerificationReport(**common, status=SKIPPED, note="no admissible residue")
    series = colored_series(*colors, depth, p)
    checked, witness = _check_progressions(series, A, residues, p)
    status = PASS if witness is None else FAIL
    return VerificationReport(**common, status=status, checked=checked, witness=witness, ms=_ms(started))


def verify_internal(family, depth: int = DEFAULT_DEPTH, k: int | None = None, j: int | None = None) -> VerificationReport:
    if isinstance(family, str):
        family = get_family(family)
    if not isinstance(family, InternalFamily):
        raise TypeError(f"{family.id} is not an internal congruence")
    started = time.perf_counter()
    p = 3
    (lc, la, lb) = family.left(k or 0, j or 0)
    (rc, ra, rb) = family.right(k or 0, j or 0)
    if depth < max(la + lb, ra + rb):
        raise ValueError(f"depth {depth} is shorter than one step of {la}n+{lb}")
    left = extract(colored_series(*lc, depth, p), la, lb)
    right = extract(colored_series(*rc, depth, p), ra, rb)
    count = min(len(left), len(right))
    witness = None
    for n in range(count):
        if left[n] != right[n]:
            witness = {"n": n, "left_index": la * n + lb, "left": left[n], "right_index": ra * n + rb, "right": right[n]}
            break
    return VerificationReport(
        family=family.id, p=p, k=k, j=j, variant=None, alpha=None, colors=lc,
        modulus=la, residues=(lb,), depth=depth,
        status=PASS if witness is None else FAIL,
        checked=count if witness is None else witness["n"],
        witness=witness, note=f"compared with a_{{{rc[0]},{rc[1]}}}({ra}n+{rb})", ms=_ms(started),
    )


def verify_iterated(family, alpha: int, depth: int = DEFAULT_DEPTH) -> VerificationReport:
    if isinstance(family, str):
        family = get_family(family)
    if not isinstance(family, IteratedFamily):
        raise TypeError(f"{family.id} is not an iterated family")
    started = time.perf_counter()
    p = 3
    A, residues = family.progression_at(alpha)
    common = dict(family=family.id, p=p, k=None, j=None, variant=None, alpha=alpha, colors=family.colors, modulus=A, residues=residues, depth=depth)
    if min(residues) > depth:
        return VerificationReport(**common, status=SKIPPED, note=f"empty range: {A}n+{min(residues)} exceeds depth")
    series = colored_series(*family.colors, depth, p)
    checked, witness = _check_progressions(series, A, [b for b in residues if b <= depth], p)
    return VerificationReport(**common, status=PASS if witness is None else FAIL, checked=checked, witness=witness, ms=_ms(started))


def run_cell(cell: Cell, depth: int) -> VerificationReport:
    family = get_family(cell.family)
    if isinstance(family, VanishingFamily):
        return verify_family(family, cell.p, cell.k, cell.j, depth, cell.variant)
    if isinstance(family, InternalFamily):
        return verify_internal(family, depth, cell.k, cell.j)
    return verify_iterated(family, cell.alpha, depth)


def grid_cells(family_ids, primes=DEFAULT_PRIMES, kmax: int = 2) -> list[Cell]:
    cells = []
    for fid in family_ids:
        cells.extend(get_family(fid).cells(primes, kmax))
    return cells


def sort_key(report: VerificationReport):
    none_last = lambda x: (1, 0) if x is None else (0, x)
    return (_ORDER[report.family], report.p, none_last(report.k), none_last(report.j), report.variant or "", none_last(report.alpha))


def _ms(started):
    return round((time.perf_counter() - started) * 1000, 3)


# -- lifting machinery -----------------------------------------------------


def check_binomial_lemma(m: int, p: int, k: int, depth: int = 300) -> tuple[bool, int | None]:
    """f_m^{p^k} against f_{mp}^{p^{k-1}} over ZZ/p^k."""
    if not is_prime(p) or m < 1 or k < 1:
        raise ValueError("need p prime and m, k >= 1")
    mod = p**k
    lhs = expand_eta_quotient({m: p**k}, depth, mod)
    rhs = expand_eta_quotient({m * p: p ** (k - 1)}, depth, mod)
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return False, n
    return True, None


def check_lifting(base: EtaQuotient, lifted: EtaQuotient, p: int, lam: int, C: int, depth: int = DEFAULT_DEPTH) -> VerificationReport:
    """Check A(p^lam n + C) = 0 and, separately, B(p^lam n + C) = 0 mod p.

    ``lifted`` must differ from ``base`` by exponents divisible by p^lam.
    """
    step = p**lam
    if not 1 <= C <= step - 1:
        raise ValueError(f"C={C} must lie in [1, {step - 1}]")
    diff = (lifted * base.inverse()).as_dict()
    bad = {m: e for m, e in diff.items() if e % step}
    if bad:
        raise ValueError(f"exponent changes {bad} are not multiples of {p}^{lam}")
    started = time.perf_counter()
    label = f"lift:{base}->{lifted}"
    witness = None
    for side, eq in (("base", base), ("lifted", lifted)):
        series = expand_eta_quotient(eq, depth, p)
        ok, n = component_vanishes(series, step, C)
        if not ok:
            witness = {"side": side, "n": n, "index": step * n + C, "value": series[step * n + C]}
            break
    return VerificationReport(
        family=label, p=p, k=None, j=None, variant=None, alpha=None, colors=None,
        modulus=step, residues=(C,), depth=depth, status=PASS if witness is None else FAIL,
        checked=2 * ((depth - C) // step + 1), witness=witness, ms=_ms(started),
    )


def negative_control(family, p: int, residues, depth: int = DEFAULT_DEPTH, k: int = 0, j: int = 0, variant=None) -> dict[int, int | None]:
    """Smallest n with a nonzero coefficient in each progression the family
    does NOT claim; ``None`` means the progression vanished to depth, which
    is logged as a warning since it points at a vacuous harness."""
    if isinstance(family, str):
        family = get_family(family)
    v = _variant(family, variant)
    colors = family.color_pair(p, k, j, v)
    A, _ = family.progression(p, v)
    series = colored_series(*colors, depth, p)
    found = {}
    for b in residues:
        ok, n = component_vanishes(series, A, b)
        found[b] = n
        if ok:
            log.warning("%s: progression %dn+%d is identically zero mod %d to depth %d", family.id, A, b, p, depth)
    return found
