"""Parsing and printing of eta-quotient expressions such as ``f2^3/f1^6``.

Grammar (whitespace ignored)::

    expr   := "1" | term (("*" | "/") term)*
    term   := "f" INT ("^" ["-"] INT)?

Operators are left-associative: ``f2/f1/f3`` is ``f2 / (f1 f3)`` and
``f2/f1*f3`` is ``f2 f3 / f1``.
"""

from __future__ import annotations

import re

from colorpart.series import EtaQuotient


class QuotientSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_TERM = re.compile(r"f(\d+)(?:\^(-?\d+))?")


def parse_quotient(text: str) -> EtaQuotient:
    src = text
    # keep original positions for error messages
    chars = [(i, ch) for i, ch in enumerate(src) if not ch.isspace()]
    s = "".join(ch for _, ch in chars)

    def where(k):
        return chars[k][0] if k < len(chars) else len(src)

    if not s:
        raise QuotientSyntaxError("empty expression", src, 0)
    if s == "1":
        return EtaQuotient()
    pos = 0
    sign = 1
    acc: dict[int, int] = {}
    if s.startswith("1/"):
        pos = 2
        sign = -1
    while True:
        m = _TERM.match(s, pos)
        if not m:
            raise QuotientSyntaxError("expected a factor like f2^3", src, where(pos))
        sub = int(m.group(1))
        if sub < 1:
            raise QuotientSyntaxError("subscript must be positive", src, where(pos + 1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        acc[sub] = acc.get(sub, 0) + sign * exp
        pos = m.end()
        if pos == len(s):
            break
        op = s[pos]
        if op == "*":
            sign = 1
        elif op == "/":
            sign = -1
        else:
            raise QuotientSyntaxError(f"unexpected {op!r}", src, where(pos))
        pos += 1
    return EtaQuotient((k, v) for k, v in acc.items() if v)


def format_quotient(eq: EtaQuotient) -> str:
    def term(m, e):
        return f"f{m}" if e == 1 else f"f{m}^{e}"

    num = [term(m, e) for m, e in eq.factors if e > 0]
    den = [term(m, -e) for m, e in eq.factors if e < 0]
    head = "*".join(num) if num else "1"
    return "/".join([head] + den)
