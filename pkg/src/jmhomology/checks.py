"""Invariant suites run by ``jmh check``.

Each check returns a dict ``{"property", "n", "pass", "detail"}``; a failed
hard invariant makes the command exit with status 3.
"""

from __future__ import annotations

import itertools
from typing import Callable

from . import engine
from .charts import free_coordinates, nested_sets, pivots
from .errors import JMHError
from .homology import JMVector, fulltwist_shift_check, parallel_map
from .symbolic import gens
from .tableaux import all_tableaux, box_weights, partitions, syt_enumerate

EXPONENT_RANGE = range(4)


def exponent_grid(n: int) -> list[tuple[int, ...]]:
    """``e_1 = 0`` and ``e_i`` in ``{0, 1, 2, 3}`` for ``i >= 2``."""
    return [(0,) + rest for rest in itertools.product(EXPONENT_RANGE, repeat=n - 1)]


def _result(prop, n, ok, detail=""):
    return {"property": prop, "n": n, "pass": bool(ok), "detail": detail}


def _both(e):
    try:
        full = engine.evaluate_full(e)
    except JMHError as exc:
        full = f"error: {exc}"
    try:
        syt = engine.evaluate_syt_sum(e)
    except JMHError as exc:
        syt = f"error: {exc}"
    return e, full, syt


def check_oracles(n: int) -> list[dict]:
    a, Q, T = gens("a", "Q", "T")
    known = {
        1: {(0,): 1 + a},
        2: {(0, 0): (1 + a) ** 2, (0, 1): (1 + a) * (a + Q + T - Q * T)},
    }
    out = []
    for e, want in known.get(n, {}).items():
        got_full = engine.evaluate_full(e)
        got_syt = engine.evaluate_syt_sum(e)
        ok = got_full == want and got_syt == want
        out.append(_result("hand_oracle", n, ok, f"e={e}: {got_full}"))
    return out


def check_grid(n: int, threads: int = 1) -> list[dict]:
    """Dual-evaluator equivalence, polynomiality and Q<->T symmetry on the grid."""
    rows = parallel_map(_both, exponent_grid(n), threads)
    mismatches = [e for e, f, s in rows if f != s]
    errors = [e for e, f, s in rows if isinstance(f, str) or isinstance(s, str)]
    asym = [
        e for e, f, s in rows
        if not isinstance(f, str) and engine.swap_qt(f) != f
    ]
    return [
        _result("oracle_equivalence", n, not mismatches, f"{len(rows)} exponent vectors; mismatches {mismatches}"),
        _result("polynomiality", n, not errors, f"non-polynomial at {errors}"),
        _result("qt_symmetry", n, not asym, f"asymmetric at {asym}"),
    ]


def check_z1_inertia(n: int) -> list[dict]:
    bad = []
    for e in exponent_grid(n):
        base = engine.evaluate_full(e)
        for c in (1, 2):
            if engine.evaluate_full((c,) + e[1:]) != base:
                bad.append(((c,) + e[1:]))
    return [_result("z1_inertia", n, not bad, f"changed at {bad}")]


def check_chain_vanishing(n: int) -> list[dict]:
    values = sorted({w for t in all_tableaux(n) for w in box_weights(t)}, key=str)
    e = exponent_grid(n)[-1]
    bad = []
    count = 0
    for chain in itertools.product(values, repeat=n):
        if len(set(chain)) == n:
            continue
        count += 1
        if not engine.evaluate_chain(e, chain).is_zero():
            bad.append([str(v) for v in chain])
    return [_result("chain_vanishing", n, not bad, f"{count} repeated chains; nonzero {bad}")]


def check_kernel_factorization(n: int) -> list[dict]:
    bad = [e for e in exponent_grid(n) if engine.evaluate_full(e) != engine.evaluate_full(e, kernel="zeta_tilde")]
    return [_result("kernel_factorization", n, not bad, f"differs at {bad}")]


def check_fulltwist(n: int) -> list[dict]:
    bad = []
    for e in exponent_grid(n):
        rep = fulltwist_shift_check(JMVector(n, e[1:]))
        if not rep["pass"]:
            bad.append(e)
    return [_result("fulltwist_shift", n, not bad, f"failed at base points {bad}")]


def check_combinatorics(n: int) -> list[dict]:
    hook_ok = all(len(syt_enumerate(p)) == p.syt_count() for p in partitions(n))
    total = sum(p.syt_count() for p in partitions(n))
    charts = nested_sets(n)
    free_ok = all(free_coordinates(s).free_count == n * (n - 1) // 2 for s in charts)
    piv_ok = all(sum(map(len, pivots(s))) == n - 1 for s in charts)
    valid = all(s.is_valid() for s in charts) and len(set(charts)) == len(charts)
    return [
        _result("syt_hook_length", n, hook_ok, f"{total} tableaux"),
        _result("charts", n, free_ok and piv_ok and valid, f"|NS_n| = {len(charts)}"),
    ]


SUITES: list[tuple[str, Callable, int]] = [
    # name, function, largest n it runs at
    ("oracles", check_oracles, 2),
    ("combinatorics", check_combinatorics, 6),
    ("grid", check_grid, 4),
    ("fulltwist", check_fulltwist, 4),
    ("z1_inertia", check_z1_inertia, 3),
    ("chain_vanishing", check_chain_vanishing, 3),
    ("kernel_factorization", check_kernel_factorization, 3),
]


def run_checks(n_max: int, threads: int = 1) -> list[dict]:
    results = []
    for n in range(1, n_max + 1):
        for name, fn, limit in SUITES:
            if n > limit:
                continue
            try:
                results.extend(fn(n, threads) if name == "grid" else fn(n))
            except JMHError as exc:
                results.append(_result(name, n, False, f"raised {type(exc).__name__}: {exc}"))
    return results
