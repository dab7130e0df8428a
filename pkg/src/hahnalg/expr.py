"""Text syntax for standard basic atoms and multibasic sums.

Grammar::

    expr  := "0" | atom ("+" atom)*
    atom  := "K" | "A" | "Igt0" | "Theta" | "Phi" | "F"
           | "A/Iq(r)" | "A/Igt(r)" | "Igt0/Iq(r)" | "Igt0/Igt(r)"

``r`` is a positive integer or ``p/q``. ``Θ`` and ``Φ`` are accepted as
input aliases; output is ASCII only.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .basic import Kind, Multibasic, StandardBasic
from .series import format_exponent


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_PLAIN = {
    "K": Kind.K,
    "A": Kind.A,
    "Igt0": Kind.IGT0,
    "Theta": Kind.THETA,
    "Θ": Kind.THETA,
    "Phi": Kind.PHI,
    "Φ": Kind.PHI,
    "F": Kind.F,
}
_PARAM = {
    "A/Iq": Kind.A_MOD_I,
    "A/Igt": Kind.A_MOD_IGT,
    "Igt0/Iq": Kind.IGT0_MOD_I,
    "Igt0/Igt": Kind.IGT0_MOD_IGT,
}
_NAMES = {v: k for k, v in _PLAIN.items() if k.isascii()}
_NAMES.update({v: k for k, v in _PARAM.items()})

_TOKEN = re.compile(r"\s*(Igt0/Igt|Igt0/Iq|A/Igt|A/Iq|Igt0|Theta|Phi|[KAFΘΦ0+(])")
_RATIONAL = re.compile(r"\s*(-?\d+)(?:\s*/\s*(-?\d+))?\s*\)")


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _parse_atom_at(text: str, pos: int) -> tuple[StandardBasic, int]:
    m = _TOKEN.match(text, pos)
    if not m or m.group(1) in ("+", "(", "0"):
        pos += len(text[pos:]) - len(text[pos:].lstrip())
        raise ParseError("expected a module atom", _byte_offset(text, pos))
    name = m.group(1)
    start = m.start(1)
    pos = m.end()
    if name in _PLAIN:
        return StandardBasic(_PLAIN[name]), pos
    kind = _PARAM[name]
    if pos >= len(text) or text[pos] != "(":
        raise ParseError(f"{name} needs a parameter in parentheses", _byte_offset(text, pos))
    r = _RATIONAL.match(text, pos + 1)
    if not r:
        raise ParseError("malformed rational", _byte_offset(text, pos + 1))
    den = int(r.group(2)) if r.group(2) is not None else 1
    if den == 0:
        raise ParseError("zero denominator", _byte_offset(text, r.start(2)))
    q = Fraction(int(r.group(1)), den)
    if q <= 0:
        raise ParseError("parameter must be > 0", _byte_offset(text, start))
    return StandardBasic(kind, q), r.end()


def parse_atom(text: str) -> StandardBasic:
    atom, pos = _parse_atom_at(text, 0)
    if text[pos:].strip():
        raise ParseError("trailing input", _byte_offset(text, pos))
    return atom


def parse(text: str) -> Multibasic:
    """Parse a multibasic expression such as ``"A/Iq(1/2) + Theta"``."""
    if text.strip() == "0":
        return Multibasic()
    atoms = []
    pos = 0
    while True:
        atom, pos = _parse_atom_at(text, pos)
        atoms.append(atom)
        rest = text[pos:]
        stripped = rest.lstrip()
        if not stripped:
            break
        if stripped[0] != "+":
            raise ParseError("expected '+'", _byte_offset(text, len(text) - len(stripped)))
        pos = len(text) - len(stripped) + 1
    return Multibasic(atoms)


def render_atom(b: StandardBasic) -> str:
    name = _NAMES[b.kind]
    if b.kind.parameterized:
        return f"{name}({format_exponent(b.q)})"
    return name


def render(m: Multibasic) -> str:
    if not m:
        return "0"
    return " + ".join(render_atom(s) for s in m)
