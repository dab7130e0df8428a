"""Transcribed functor tables for the ten standard basic modules.

Rows carry the parameter ``p`` and columns ``q``, with ``r = min(p, q)``,
``X_pq = I_p`` if ``p <= q`` else ``I_{>q}``, and ``Y_pq = I_{>0}`` if
``p <= q`` else ``A``. Cells are kept in their printed notation and
evaluated by :func:`evaluate_cell`. The formula engine in
:mod:`hahnalg.functors` is authoritative; these tables are the independent
fixture it is checked against.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from . import lattice as L
from .basic import Kind, Multibasic, StandardBasic, normalize
from .expr import render, render_atom
from .functors import FunctorName, apply
from .series import Rational, as_exponent, format_exponent

HEADER = ("K", "A", "I_{>0}", r"\Ta", r"\Phi", r"\F", "A/I_q", "A/I_{>q}", "I_{>0}/I_q", "I_{>0}/I_{>q}")

DUAL_ROW = ("K", r"\Ta", r"\Phi", "A", "I_{>0}", r"\F", "I_{>0}/I_{>q}", "A/I_{>q}", "I_{>0}/I_q", "A/I_q")

_TENSOR = r"""
K | K | K | 0 | 0 | 0 | 0 | 0 | 0 | 0
K | A | I_{>0} | \Ta | \Phi | \F | A/I_q | A/I_{>q} | I_{>0}/I_q | I_{>0}/I_{>q}
K | I_{>0} | I_{>0} | \Ta | \Ta | 0 | I_{>0}/I_{>q} | I_{>0}/I_{>q} | I_{>0}/I_{>q} | I_{>0}/I_{>q}
0 | \Ta | \Ta | 0 | 0 | 0 | 0 | 0 | 0 | 0
0 | \Phi | \Ta | 0 | 0 | 0 | 0 | 0 | 0 | 0
0 | \F | 0 | 0 | 0 | \F | \F | \F | 0 | 0
0 | A/I_p | I_{>0}/I_{>p} | 0 | 0 | \F | A/I_r | A/X_{pq} | I_{>0}/X_{qp} | I_{>0}/I_{>r}
0 | A/I_{>p} | I_{>0}/I_{>p} | 0 | 0 | \F | A/X_{qp} | A/I_{>r} | I_{>0}/X_{qp} | I_{>0}/I_{>r}
0 | I_{>0}/I_p | I_{>0}/I_{>p} | 0 | 0 | 0 | I_{>0}/X_{pq} | I_{>0}/X_{pq} | I_{>0}/I_{>r} | I_{>0}/I_{>r}
0 | I_{>0}/I_{>p} | I_{>0}/I_{>p} | 0 | 0 | 0 | I_{>0}/I_{>r} | I_{>0}/I_{>r} | I_{>0}/I_{>r} | I_{>0}/I_{>r}
"""

_HOM = r"""
K | 0 | 0 | K | K | 0 | 0 | 0 | 0 | 0
K | A | I_{>0} | \Ta | \Phi | \F | A/I_q | A/I_{>q} | I_{>0}/I_q | I_{>0}/I_{>q}
K | A | A | \Phi | \Phi | 0 | A/I_q | A/I_q | A/I_q | A/I_q
0 | 0 | 0 | A | A | 0 | 0 | 0 | 0 | 0
0 | 0 | 0 | I_{>0} | A | 0 | 0 | 0 | 0 | 0
0 | 0 | 0 | \F | 0 | \F | 0 | \F | 0 | \F
0 | 0 | 0 | I_{>0}/I_{>p} | A/I_p | \F | A/I_r | Y_{pq}/I_{>r} | Y_{qp}/I_r | I_{>0}/I_{>r}
0 | 0 | 0 | A/I_{>p} | A/I_p | \F | A/I_r | A/I_{>r} | Y_{qp}/I_r | Y_{qp}/I_{>r}
0 | 0 | 0 | I_{>0}/I_p | A/I_p | 0 | A/I_r | Y_{pq}/I_r | A/I_r | Y_{pq}/I_r
0 | 0 | 0 | A/I_p | A/I_p | 0 | A/I_r | A/I_r | A/I_r | A/I_r
"""

_TOR = r"""
0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0
0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0
0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0
0 | 0 | 0 | \Ta | \Ta | 0 | I_{>0}/I_{>q} | I_{>0}/I_{>q} | I_{>0}/I_{>q} | I_{>0}/I_{>q}
0 | 0 | 0 | \Ta | \Phi | \F | A/I_q | A/I_{>q} | I_{>0}/I_q | I_{>0}/I_{>q}
0 | 0 | 0 | 0 | \F | 0 | \F | 0 | \F | 0
0 | 0 | 0 | I_{>0}/I_{>p} | A/I_p | \F | A/I_r | Y_{pq}/I_{>r} | Y_{qp}/I_r | I_{>0}/I_{>r}
0 | 0 | 0 | I_{>0}/I_{>p} | A/I_{>p} | 0 | Y_{qp}/I_{>r} | I_{>0}/I_{>r} | Y_{qp}/I_{>r} | I_{>0}/I_{>r}
0 | 0 | 0 | I_{>0}/I_{>p} | I_{>0}/I_p | \F | Y_{pq}/I_r | Y_{pq}/I_{>r} | I_{>0}/I_r | I_{>0}/I_{>r}
0 | 0 | 0 | I_{>0}/I_{>p} | I_{>0}/I_{>p} | 0 | I_{>0}/I_{>r} | I_{>0}/I_{>r} | I_{>0}/I_{>r} | I_{>0}/I_{>r}
"""

_EXT = r"""
0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0
0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0
0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0
0 | A | A | 0 | 0 | 0 | A/I_q | A/I_q | A/I_q | A/I_q
0 | A | I_{>0} | 0 | 0 | \F | A/I_q | A/I_{>q} | I_{>0}/I_q | I_{>0}/I_{>q}
0 | 0 | \F | 0 | 0 | 0 | 0 | 0 | \F | \F
0 | A/I_p | I_{>0}/I_{>p} | 0 | 0 | \F | A/I_r | A/X_{pq} | I_{>0}/X_{qp} | I_{>0}/I_{>r}
0 | A/I_p | A/I_{>p} | 0 | 0 | 0 | A/I_r | A/I_r | A/X_{qp} | A/X_{qp}
0 | A/I_p | I_{>0}/I_p | 0 | 0 | \F | A/I_r | A/X_{pq} | I_{>0}/I_r | I_{>0}/X_{pq}
0 | A/I_p | A/I_p | 0 | 0 | 0 | A/I_r | A/I_r | A/I_r | A/I_r
"""


def _grid(text: str) -> tuple[tuple[str, ...], ...]:
    rows = tuple(tuple(c.strip() for c in line.split("|")) for line in text.strip().splitlines())
    assert len(rows) == 10 and all(len(r) == 10 for r in rows)
    return rows


GRIDS = {
    FunctorName.TENSOR: _grid(_TENSOR),
    FunctorName.HOM: _grid(_HOM),
    FunctorName.TOR: _grid(_TOR),
    FunctorName.EXT: _grid(_EXT),
}

_ATOMS = {
    "K": StandardBasic(Kind.K),
    "A": StandardBasic(Kind.A),
    "I_{>0}": StandardBasic(Kind.IGT0),
    r"\Ta": StandardBasic(Kind.THETA),
    r"\Phi": StandardBasic(Kind.PHI),
    r"\F": StandardBasic(Kind.F),
}


def _x(a: Fraction, b: Fraction) -> L.KSubmodule:
    return L.I(a) if a <= b else L.Igt(b)


def _y(a: Fraction, b: Fraction) -> L.KSubmodule:
    return L.IGT0 if a <= b else L.A


def evaluate_cell(cell: str, p: Optional[Fraction], q: Optional[Fraction]) -> Multibasic:
    """Evaluate a printed cell such as ``Y_{pq}/I_{>r}`` at the given parameters."""
    if cell == "0":
        return Multibasic()
    if cell in _ATOMS:
        return Multibasic.of(_ATOMS[cell])
    num, _, den = cell.partition("/")
    r = min(p, q) if p is not None and q is not None else None
    numerators = {
        "A": lambda: L.A,
        "I_{>0}": lambda: L.IGT0,
        "Y_{pq}": lambda: _y(p, q),
        "Y_{qp}": lambda: _y(q, p),
    }
    denominators = {
        "I_p": lambda: L.I(p),
        "I_q": lambda: L.I(q),
        "I_r": lambda: L.I(r),
        "I_{>p}": lambda: L.Igt(p),
        "I_{>q}": lambda: L.Igt(q),
        "I_{>r}": lambda: L.Igt(r),
        "X_{pq}": lambda: _x(p, q),
        "X_{qp}": lambda: _x(q, p),
    }
    try:
        u = numerators[num]()
        v = denominators[den]()
    except KeyError:
        raise ValueError(f"unrecognised table cell {cell!r}") from None
    return Multibasic.of(normalize(u, v))


def table_lookup(functor, row: StandardBasic, col: Optional[StandardBasic] = None) -> Multibasic:
    """Printed-table value of ``functor(row, col)`` (``col`` unused for D)."""
    name = FunctorName(functor) if not isinstance(functor, FunctorName) else functor
    if name is FunctorName.DUAL:
        return evaluate_cell(DUAL_ROW[row.kind.value], None, row.q)
    if col is None:
        raise ValueError(f"{name.value} needs a column module")
    cell = GRIDS[name][row.kind.value][col.kind.value]
    return evaluate_cell(cell, row.q, col.q)


def table_basics(param: Rational) -> list[StandardBasic]:
    """The ten standard basics in table order, parameterized ones at ``param``."""
    q = as_exponent(param)
    return [StandardBasic(k, q if k.parameterized else None) for k in Kind]


def compute_table(functor, p: Rational, q: Rational, source: str = "formula") -> list[list[Multibasic]]:
    """Regenerate a whole table; ``source`` is ``"formula"`` or ``"table"``."""
    name = FunctorName(functor) if not isinstance(functor, FunctorName) else functor
    rows, cols = table_basics(p), table_basics(q)
    if source == "formula":
        evaluate = lambda a, b: apply(name, a) if name is FunctorName.DUAL else apply(name, a, b)
    elif source == "table":
        evaluate = lambda a, b: table_lookup(name, a, b)
    else:
        raise ValueError(f"unknown source {source!r}")
    if name is FunctorName.DUAL:
        return [[evaluate(c, None) for c in cols]]
    return [[evaluate(a, b) for b in cols] for a in rows]


def to_markdown(functor, p: Rational, q: Rational, source: str = "formula") -> str:
    name = FunctorName(functor) if not isinstance(functor, FunctorName) else functor
    p, q = as_exponent(p), as_exponent(q)
    grid = compute_table(name, p, q, source)
    cols = [render_atom(b) for b in table_basics(q)]
    lines = [f"<!-- {name.value} p={format_exponent(p)} q={format_exponent(q)} -->"]
    if name is FunctorName.DUAL:
        lines.append("| M | " + " | ".join(cols) + " |")
        lines.append("|---" * (len(cols) + 1) + "|")
        lines.append("| DM | " + " | ".join(render(m) for m in grid[0]) + " |")
    else:
        lines.append(f"| {name.value}(M,N) | " + " | ".join(cols) + " |")
        lines.append("|---" * (len(cols) + 1) + "|")
        for b, row in zip(table_basics(p), grid):
            lines.append(f"| {render_atom(b)} | " + " | ".join(render(m) for m in row) + " |")
    return "\n".join(lines) + "\n"


def to_json(functor, p: Rational, q: Rational, source: str = "formula") -> str:
    name = FunctorName(functor) if not isinstance(functor, FunctorName) else functor
    p, q = as_exponent(p), as_exponent(q)
    grid = compute_table(name, p, q, source)
    payload = {
        "functor": name.value,
        "p": format_exponent(p),
        "q": format_exponent(q),
        "columns": [render_atom(b) for b in table_basics(q)],
        "rows": ["M"] if name is FunctorName.DUAL else [render_atom(b) for b in table_basics(p)],
        "cells": [[render(m) for m in row] for row in grid],
    }
    return json.dumps(payload, indent=2) + "\n"
