"""Invariant factors of finitely generated submodules of ``A^n``.

A matrix whose rows generate ``M <= A^n`` has ``A^n / M`` isomorphic to a sum
of ``A/I_{s_i}`` and a free part. The ``s_i`` are read off from minimum
valuations of minors, which are exact because determinants of finite-support
matrices have finite support. Gaussian elimination modulo ``I_{>N}`` is kept
as an independent cross-check.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import basic as B
from . import lattice as L
from .basic import Multibasic
from .lattice import KSubmodule
from .series import INFINITY, DomainError, FiniteSeries, Rational, as_exponent, divide

DEFAULT_PRECISION = Fraction(8)
MAX_PRECISION = Fraction(4096)


class PrecisionExhausted(ArithmeticError):
    """Elimination could not certify its answer below the precision cap."""


class SeriesMatrix:
    """An ``m x n`` matrix over A whose rows generate a submodule of ``A^n``."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Sequence[Sequence[FiniteSeries]], ncols: Optional[int] = None):
        rows = tuple(tuple(r) for r in rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("rows have different lengths")
        width = widths.pop() if widths else (ncols or 0)
        if ncols is not None and ncols != width:
            raise ValueError("ncols does not match the rows")
        for r in rows:
            for x in r:
                if not isinstance(x, FiniteSeries):
                    raise TypeError("entries must be FiniteSeries")
                if not x.in_ring():
                    raise DomainError(f"entry {x} is not in A")
        self.rows = rows
        self.ncols = width

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_exponents(cls, rows) -> "SeriesMatrix":
        """Build from nested lists of exponent lists, e.g. ``[[[1], [1]], [[1], ["1/2"]]]``."""
        return cls([[FiniteSeries.from_json(e) for e in r] for r in rows])

    @classmethod
    def diagonal(cls, entries: Sequence[FiniteSeries]) -> "SeriesMatrix":
        n = len(entries)
        zero = FiniteSeries.zero()
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "SeriesMatrix":
        return cls.diagonal([FiniteSeries.one()] * n)

    @classmethod
    def from_json(cls, data) -> "SeriesMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or not isinstance(data.get("rows"), list):
            raise ValueError('matrix JSON must be an object with a "rows" list')
        return cls.from_exponents(data["rows"])

    def to_json(self) -> dict:
        return {"rows": [[x.to_json() for x in r] for r in self.rows]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"SeriesMatrix({self.to_json()['rows']!r})"


def _minor_tables(rows):
    """Permanents of all square submatrices, keyed by row mask then column mask.

    Over F2 the determinant equals the permanent, so no signs are needed.
    Rows are added in increasing order, so every bijection is counted once.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    tables = {0: {0: FiniteSeries.one()}}
    for rmask in range(1, 1 << m):
        top = rmask.bit_length() - 1
        prev = tables[rmask & ~(1 << top)]
        row = rows[top]
        cur: dict[int, FiniteSeries] = {}
        for cmask, value in prev.items():
            if value.is_zero():
                continue
            for j in range(n):
                bit = 1 << j
                if cmask & bit or row[j].is_zero():
                    continue
                term = value * row[j]
                key = cmask | bit
                cur[key] = cur[key] + term if key in cur else term
        tables[rmask] = cur
    return tables


def minor_valuations(m: SeriesMatrix) -> list:
    """``delta_k`` = least valuation of a ``k x k`` minor, for ``k = 1..rank``."""
    if not m.rows or m.ncols == 0:
        return []
    best: dict[int, Fraction] = {}
    for rmask, cols in _minor_tables(m.rows).items():
        k = bin(rmask).count("1")
        if k == 0:
            continue
        for value in cols.values():
            v = value.valuation()
            if v != INFINITY and (k not in best or v < best[k]):
                best[k] = v
    out = []
    k = 1
    while k in best:
        out.append(best[k])
        k += 1
    return out


def smith_valuations(m: SeriesMatrix) -> list:
    """Invariant valuations ``s_1 <= ... <= s_rank`` from minors."""
    deltas = minor_valuations(m)
    prev = Fraction(0)
    out = []
    for d in deltas:
        out.append(d - prev)
        prev = d
    return out


def _eliminate(rows, n: Fraction) -> list:
    """Smith valuations of the matrix over ``A / I_{>n}``; only those ``<= n`` survive."""
    work = [[x.truncate(n) for x in r] for r in rows]
    found = []
    while work and work[0]:
        pivot = None
        for i, r in enumerate(work):
            for j, x in enumerate(r):
                if x.is_zero():
                    continue
                v = x.valuation()
                if pivot is None or v < pivot[0]:
                    pivot = (v, i, j)
        if pivot is None:
            break
        v, pi, pj = pivot
        p = work[pi][pj]
        prow = work[pi]
        rest = []
        for i, r in enumerate(work):
            if i == pi:
                continue
            if r[pj].is_zero():
                rest.append(r)
                continue
            c = divide(r[pj], p, n - v).head
            rest.append([(x + c.mul_truncated(y, n)).truncate(n) for x, y in zip(r, prow)])
        # the pivot column is now zero off the pivot; clearing the pivot row
        # with column operations touches only the pivot row, which is dropped
        found.append(v)
        work = [[x for j, x in enumerate(r) if j != pj] for r in rest]
    return sorted(found)


def elimination_bound(m: SeriesMatrix) -> Fraction:
    """Upper bound for the sum of the invariant valuations.

    A nonzero ``r x r`` minor has valuation at most the sum of the largest
    exponents of its rows, so the sum over all rows bounds every ``s_i``.
    """
    total = Fraction(0)
    for r in m.rows:
        tops = [x.support[-1] for x in r if not x.is_zero()]
        if tops:
            total += max(tops)
    return total


def smith_by_elimination(
    m: SeriesMatrix,
    n: Optional[Rational] = None,
    max_precision: Rational = MAX_PRECISION,
) -> list:
    """Invariant valuations by pivoting on least-valuation entries modulo ``I_{>N}``.

    The precision starts at ``n`` and doubles until two consecutive precisions
    agree and the larger one exceeds :func:`elimination_bound`; past
    ``max_precision`` a :class:`PrecisionExhausted` error is raised.
    """
    cur = as_exponent(n) if n is not None else DEFAULT_PRECISION
    if cur <= 0:
        raise DomainError("precision must be positive")
    cap = as_exponent(max_precision)
    bound = elimination_bound(m)
    prev = _eliminate(m.rows, cur)
    while True:
        nxt_prec = cur * 2
        if nxt_prec > cap:
            raise PrecisionExhausted(
                f"no certified answer below precision {cap} (valuation bound {bound})"
            )
        nxt = _eliminate(m.rows, nxt_prec)
        if nxt == prev and nxt_prec >= bound:
            return nxt
        cur, prev = nxt_prec, nxt


@dataclass(frozen=True)
class SmithResult:
    valuations: tuple
    ideals: tuple
    submodule_class: Multibasic
    cokernel_class: Multibasic

    @property
    def rank(self) -> int:
        return len(self.valuations)

    def to_json(self) -> dict:
        from .expr import render
        from .series import format_exponent

        return {
            "valuations": [format_exponent(s) for s in self.valuations],
            "ideals": [L.format_submodule(i) for i in self.ideals],
            "submodule": render(self.submodule_class),
            "cokernel": render(self.cokernel_class),
        }


def _cokernel(valuations, ncols: int) -> Multibasic:
    out = [B.A_mod_I(s) for s in valuations if s > 0]
    out.extend([B.A] * (ncols - len(valuations)))
    return Multibasic(out)


def smith(m: SeriesMatrix) -> SmithResult:
    s = smith_valuations(m)
    ideals: list[KSubmodule] = [L.ZERO] * (m.ncols - len(s))
    ideals.extend(L.I(x) for x in reversed(s))
    return SmithResult(
        valuations=tuple(s),
        ideals=tuple(ideals),
        submodule_class=Multibasic([B.A] * len(s)),
        cokernel_class=_cokernel(s, m.ncols),
    )


def cokernel_class(m: SeriesMatrix) -> Multibasic:
    """``A^n / M`` as a multibasic module."""
    return _cokernel(smith_valuations(m), m.ncols)


def random_series(rng: random.Random, exponents, max_terms: int = 3) -> FiniteSeries:
    k = rng.randint(0, max_terms)
    return FiniteSeries(rng.sample(list(exponents), min(k, len(exponents))))


def random_matrix(
    rng: random.Random,
    max_size: int = 5,
    exponents=(0, Fraction(1, 3), Fraction(1, 2), 1, 2),
    max_terms: int = 3,
) -> SeriesMatrix:
    m = rng.randint(1, max_size)
    n = rng.randint(1, max_size)
    return SeriesMatrix([[random_series(rng, exponents, max_terms) for _ in range(n)] for _ in range(m)])


def random_unimodular_transform(
    m: SeriesMatrix,
    rng: random.Random,
    steps: int = 4,
    exponents=(0, Fraction(1, 3), Fraction(1, 2), 1),
) -> SeriesMatrix:
    """Apply random invertible row and column operations over A.

    Operations are adding an A-multiple of one row (column) to another,
    swapping two rows (columns) and multiplying one by a unit of A.
    """
    rows = [list(r) for r in m.rows]
    nr, nc = len(rows), m.ncols
    positive = [e for e in exponents if e > 0]
    for _ in range(steps):
        on_rows = rng.random() < 0.5
        size = nr if on_rows else nc
        if size == 0:
            continue
        op = rng.choice(("add", "swap", "unit")) if size > 1 else "unit"
        i = rng.randrange(size)
        j = rng.choice([x for x in range(size) if x != i]) if size > 1 else i
        if op == "add":
            c = random_series(rng, exponents)
            if on_rows:
                rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
            else:
                for r in rows:
                    r[i] = r[i] + c * r[j]
        elif op == "swap":
            if on_rows:
                rows[i], rows[j] = rows[j], rows[i]
            else:
                for r in rows:
                    r[i], r[j] = r[j], r[i]
        else:
            u = FiniteSeries.one() + random_series(rng, positive, 2)
            if on_rows:
                rows[i] = [u * x for x in rows[i]]
            else:
                for r in rows:
                    r[i] = u * r[i]
    return SeriesMatrix(rows, ncols=nc)
