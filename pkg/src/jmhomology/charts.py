"""Nested-set pairs labelling the affine charts of the free flag Hilbert scheme.

An element of NS_n is a pair of chains ``S_x^1 ⊇ ... ⊇ S_x^n = ∅`` and
``S_y^1 ⊇ ... ⊇ S_y^n = ∅`` with ``S^k ⊆ {k+1..n}`` and
``|S_x^k| + |S_y^k| = n - k``.  Going from level ``k+1`` to ``k`` exactly one
new element enters exactly one of the two sets, which is how
:func:`nested_sets` generates them.

This module is an audit of the chart combinatorics; nothing here feeds the
residue engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InvariantViolation


@dataclass(frozen=True)
class NestedSetPair:
    sx: tuple[frozenset, ...]
    sy: tuple[frozenset, ...]

    @property
    def n(self) -> int:
        return len(self.sx)

    def level(self, axis: str, k: int) -> frozenset:
        """``S^k`` for 1-based ``k``; ``S^{n+1}`` is taken to be empty."""
        chain = self.sx if axis == "x" else self.sy
        return chain[k - 1] if k <= len(chain) else frozenset()

    def is_valid(self) -> bool:
        n = self.n
        if len(self.sy) != n or n == 0:
            return False
        for k in range(1, n + 1):
            for axis in "xy":
                s = self.level(axis, k)
                if not s <= set(range(k + 1, n + 1)):
                    return False
                if not self.level(axis, k + 1) <= s:
                    return False
            if len(self.level("x", k)) + len(self.level("y", k)) != n - k:
                return False
        return True

    def as_lists(self) -> dict:
        return {
            "sx": [sorted(s) for s in self.sx],
            "sy": [sorted(s) for s in self.sy],
        }


@dataclass(frozen=True)
class ChartLayout:
    pivots_x: frozenset
    pivots_y: frozenset
    zeros_x: frozenset
    zeros_y: frozenset
    free_x: frozenset
    free_y: frozenset

    @property
    def free_count(self) -> int:
        return len(self.free_x) + len(self.free_y)


def nested_sets(n: int) -> list[NestedSetPair]:
    """Every element of NS_n once, in a fixed order (|NS_n| = n!)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []

    def rec(k, sx, sy):
        # sx, sy hold levels k+1..n (innermost last)
        if k == 0:
            out.append(NestedSetPair(tuple(reversed(sx)), tuple(reversed(sy))))
            return
        prev_x = sx[-1] if sx else frozenset()
        prev_y = sy[-1] if sy else frozenset()
        for j in range(k + 1, n + 1):
            if j not in prev_x:
                rec(k - 1, sx + [prev_x | {j}], sy + [prev_y])
        for j in range(k + 1, n + 1):
            if j not in prev_y:
                rec(k - 1, sx + [prev_x], sy + [prev_y | {j}])

    rec(n - 1, [frozenset()], [frozenset()])
    return out


def pivots(s: NestedSetPair) -> tuple[frozenset, frozenset]:
    """Pairs ``(i, j)`` with ``j`` in ``S^i`` but not in ``S^{i+1}``."""
    out = []
    for axis in "xy":
        out.append(
            frozenset(
                (i, j)
                for i in range(1, s.n + 1)
                for j in s.level(axis, i) - s.level(axis, i + 1)
            )
        )
    return out[0], out[1]


def free_coordinates(s: NestedSetPair) -> ChartLayout:
    """Split the strictly upper-triangular entries of X and Y.

    Pivots are pinned to 1, entries ``(i-1, j)`` with ``j`` in ``S^i`` are
    pinned to 0, everything else is free.
    """
    n = s.n
    upper = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    px, py = pivots(s)
    layout = {}
    for axis, piv in (("x", px), ("y", py)):
        zeros = frozenset((i - 1, j) for i in range(2, n + 1) for j in s.level(axis, i))
        if zeros & piv:
            raise InvariantViolation(f"entries pinned to both 0 and 1 on axis {axis}")
        layout[axis] = (piv, zeros, frozenset(upper - piv - zeros))
    out = ChartLayout(
        layout["x"][0], layout["y"][0], layout["x"][1], layout["y"][1],
        layout["x"][2], layout["y"][2],
    )
    if out.free_count != n * (n - 1) // 2:
        raise InvariantViolation(f"chart has {out.free_count} free entries, expected {n * (n - 1) // 2}")
    return out


def atlas_report(n: int) -> dict:
    charts = []
    for s in nested_sets(n):
        layout = free_coordinates(s)
        px, py = pivots(s)
        entry = s.as_lists()
        entry["pivots_x"] = sorted(list(p) for p in px)
        entry["pivots_y"] = sorted(list(p) for p in py)
        entry["free_x"] = sorted(list(p) for p in layout.free_x)
        entry["free_y"] = sorted(list(p) for p in layout.free_y)
        entry["free_count"] = layout.free_count
        charts.append(entry)
    return {"n": n, "charts": charts, "count": len(charts)}


def atlas_json(n: int) -> str:
    return json.dumps(atlas_report(n), sort_keys=True, separators=(",", ":"))
