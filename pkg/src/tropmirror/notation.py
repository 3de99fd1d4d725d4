"""Text form of half-integer monomials.

Grammar::

    monomial := "1" | term ("*" term)*
    term     := "z" INDEX ("^" EXP)?
    EXP      := integer | p "/2" with p odd
"""

from __future__ import annotations

import re

from .pants import HalfMonomial


class MonomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class MonomialIndexError(ValueError):
    pass


class DenominatorError(ValueError):
    pass


_TERM = re.compile(r"z(\d+)(?:\^(\d+)(?:/(\d+))?)?")


def parse_monomial(text: str, n: int) -> HalfMonomial:
    doubled = [0] * (n + 2)
    s = text.strip()
    if s == "1":
        return HalfMonomial(tuple(doubled))
    pos = 0
    while True:
        m = _TERM.match(s, pos)
        if m is None:
            raise MonomialSyntaxError(f"expected a term z<index> in {text!r}", pos)
        idx = int(m.group(1))
        if idx > n + 1:
            raise MonomialIndexError(f"index {idx} outside 0..{n + 1} in {text!r}")
        num = int(m.group(2)) if m.group(2) is not None else 1
        den = int(m.group(3)) if m.group(3) is not None else 1
        if den not in (1, 2):
            raise DenominatorError(f"exponent {num}/{den} in {text!r}: denominators must be 1 or 2")
        if m.group(3) is not None and num % 2 == 0:
            raise MonomialSyntaxError(f"half-integer exponent {num}/2 must have an odd numerator", m.start(3))
        doubled[idx] += num * 2 // den
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] != "*":
            raise MonomialSyntaxError(f"expected '*' in {text!r}", pos)
        pos += 1
    return HalfMonomial(tuple(doubled))


def format_monomial(m: HalfMonomial) -> str:
    parts = []
    for j, d in enumerate(m.doubled):
        if d == 0:
            continue
        if d % 2:
            parts.append(f"z{j}^{d}/2")
        elif d == 2:
            parts.append(f"z{j}")
        else:
            parts.append(f"z{j}^{d // 2}")
    return "*".join(parts) or "1"
