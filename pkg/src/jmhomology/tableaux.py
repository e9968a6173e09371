"""Partitions, standard Young tableaux and the fixed-point weights.

Cells are ``(row, col)`` pairs, 0-indexed, in English notation (rows grow
downward).  The co-arm of a cell is its column and the co-leg its row, so
the box labelled ``i`` carries the weight ``Q^col * T^row``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterator

from .symbolic import FactoredRat, LaurentMonomial
from .symbolic.laurent import as_mono, var_index


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, length in enumerate(self.parts) for c in range(length)]

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def hook_length(self, cell: tuple[int, int]) -> int:
        r, c = cell
        arm = self.parts[r] - c - 1
        leg = sum(1 for rr in range(r + 1, len(self.parts)) if self.parts[rr] > c)
        return arm + leg + 1

    def syt_count(self) -> int:
        """Number of standard tableaux by the hook length formula."""
        return factorial(self.n) // prod(self.hook_length(c) for c in self.cells())

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order.

    >>> [str(p) for p in partitions(4)]
    ['(4)', '(3,1)', '(2,2)', '(2,1,1)', '(1,1,1,1)']
    """
    if n < 1:
        raise ValueError("n must be positive")

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in rec(n, n)]


@dataclass(frozen=True)
class Tableau:
    """A standard filling of ``shape``, stored as rows of labels."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(tuple(len(r) for r in rows))
        labels = sorted(x for r in rows for x in r)
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError(f"labels must be 1..n exactly once: {rows}")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c and row[c - 1] > x:
                    raise ValueError(f"row {r} not increasing: {rows}")
                if r and rows[r - 1][c] > x:
                    raise ValueError(f"column {c} not increasing: {rows}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        return {x: (r, c) for r, row in enumerate(self.rows) for c, x in enumerate(row)}

    def co_arm(self, i: int) -> int:
        return self.positions[i][1]

    def co_leg(self, i: int) -> int:
        return self.positions[i][0]

    def transpose(self) -> "Tableau":
        width = len(self.rows[0]) if self.rows else 0
        return Tableau(tuple(tuple(r[c] for r in self.rows if len(r) > c) for c in range(width)))

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows], separators=(",", ":"))

    def __str__(self):
        return self.to_json()


def syt_enumerate(shape: Partition) -> list[Tableau]:
    """All standard Young tableaux of ``shape``.

    Labels are placed in increasing order; at each step the candidate
    cells are tried from the top row down, which fixes the output order.
    """
    parts = shape.parts
    n = shape.n
    out = []
    filling = [[0] * p for p in parts]
    lengths = [0] * len(parts)

    def rec(label):
        if label > n:
            out.append(Tableau(tuple(tuple(r) for r in filling)))
            return
        for r in range(len(parts)):
            c = lengths[r]
            if c < parts[r] and (r == 0 or lengths[r - 1] > c):
                filling[r][c] = label
                lengths[r] += 1
                rec(label + 1)
                lengths[r] -= 1

    rec(1)
    return out


def all_tableaux(n: int) -> Iterator[Tableau]:
    for shape in partitions(n):
        yield from syt_enumerate(shape)


def box_weights(t: Tableau) -> list[LaurentMonomial]:
    """Weights ``Q^co-arm * T^co-leg`` of the boxes labelled 1..n."""
    return [LaurentMonomial.of(Q=t.co_arm(i), T=t.co_leg(i)) for i in range(1, t.n + 1)]


def _shifted(x, name: str) -> tuple:
    m = as_mono(x)
    width = max(len(m), var_index(name) + 1)
    e = list(m) + [0] * (width - len(m))
    e[var_index(name)] += 1
    return tuple(e)


def zeta(x) -> FactoredRat:
    """The pair kernel ``(1-x)(1-QTx) / ((1-Qx)(1-Tx))``."""
    m = as_mono(x)
    return FactoredRat(
        1,
        [m, _shifted(_shifted(m, "Q"), "T")],
        [_shifted(m, "Q"), _shifted(m, "T")],
    )


def zeta_tilde(x) -> FactoredRat:
    """The push-forward kernel ``(1-x) / ((1-Qx)(1-Tx))``."""
    m = as_mono(x)
    return FactoredRat(1, [m], [_shifted(m, "Q"), _shifted(m, "T")])
