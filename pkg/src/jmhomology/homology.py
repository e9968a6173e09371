"""Jucys-Murphy braid bookkeeping and the scans built on the residue engine."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import engine
from .errors import MethodDisagreement, NonPolynomialResult
from .symbolic import FactoredRat, LaurentMonomial, LaurentPoly, specialize_qt
from .tableaux import Tableau, all_tableaux, box_weights

METHODS = ("syt", "residue", "both")
CONVENTIONS = ("padleft", "padright", "reversed")


@dataclass(frozen=True)
class JMVector:
    """Exponents ``a = (a_1, ..., a_{n-1})`` of the braid ``delta^a`` on ``n`` strands."""

    n: int
    a: tuple[int, ...] = ()

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(a) != self.n - 1:
            raise ValueError(f"JM vector for n={self.n} needs {self.n - 1} entries, got {len(a)}")

    @classmethod
    def compose(cls, b: "JMVector", k: int = 0, m: int = 0) -> "JMVector":
        """``b + k*(1,...,1) + m*(1,2,...,n-1)``."""
        return cls(b.n, tuple(x + k + m * (i + 1) for i, x in enumerate(b.a)))

    def __add__(self, other: "JMVector") -> "JMVector":
        if not isinstance(other, JMVector) or other.n != self.n:
            return NotImplemented
        return JMVector(self.n, tuple(x + y for x, y in zip(self.a, other.a)))

    @classmethod
    def ones(cls, n: int) -> "JMVector":
        return cls(n, (1,) * (n - 1))

    @classmethod
    def rho(cls, n: int) -> "JMVector":
        return cls(n, tuple(range(1, n)))


def jm_to_exponents(a: JMVector, convention: str = "padleft") -> tuple[int, ...]:
    """Exponent vector of ``z_1..z_n`` attached to a JM vector.

    ``padleft`` (default) gives ``(0, a_1, ..., a_{n-1})``: ``a_j`` twists
    ``z_{j+1}`` and the inert ``z_1`` gets nothing.  ``padright`` gives
    ``(a_1, ..., a_{n-1}, 0)`` and ``reversed`` gives
    ``(0, a_{n-1}, ..., a_1)``; both exist for comparison only.
    """
    if convention == "padleft":
        return (0,) + a.a
    if convention == "padright":
        return a.a + (0,)
    if convention == "reversed":
        return (0,) + tuple(reversed(a.a))
    raise ValueError(f"unknown convention {convention!r}")


@dataclass(frozen=True)
class Superpolynomial:
    value: LaurentPoly
    jm: JMVector
    convention: str
    methods: tuple[str, ...]
    exponents: tuple[int, ...] = field(default=())

    def qt(self) -> LaurentPoly:
        return specialize_qt(self.value)


def superpolynomial(a: JMVector, method: str = "both", convention: str = "padleft") -> Superpolynomial:
    """Character of the closure of ``delta^a`` in the variables ``a, Q, T``.

    With ``method="both"`` the tableau sum and the descending residue
    integral are both evaluated and must agree exactly.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    e = jm_to_exponents(a, convention)
    values = {}
    if method in ("syt", "both"):
        values["syt"] = engine.evaluate_syt_sum(e)
    if method in ("residue", "both"):
        values["residue"] = engine.evaluate_full(e)
    if method == "both" and values["syt"] != values["residue"]:
        raise MethodDisagreement(
            f"exponents {e}: syt gives {values['syt']}, residue gives {values['residue']}"
        )
    return Superpolynomial(next(iter(values.values())), a, convention, tuple(values), e)


def det_weight(t: Tableau) -> LaurentMonomial:
    """Product of the weights of boxes 2..n; the full-twist factor at ``t``."""
    out = LaurentMonomial()
    for w in box_weights(t)[1:]:
        out = out * w
    return out


def fulltwist_shift_check(a: JMVector, convention: str = "padleft") -> dict:
    """Check that ``a -> a + (1,...,1)`` multiplies each tableau term by its det weight."""
    e0 = jm_to_exponents(a, convention)
    e1 = jm_to_exponents(a + JMVector.ones(a.n), convention)
    rows = []
    for t in all_tableaux(a.n):
        base = engine.evaluate_tableau(e0, t)
        twisted = engine.evaluate_tableau(e1, t)
        w = det_weight(t)
        ok = twisted == base * LaurentPoly.monomial(w)
        rows.append({"tableau": t.to_json(), "weight": str(w), "pass": bool(ok)})
    return {
        "n": a.n,
        "jm": list(a.a),
        "tableaux": rows,
        "pass": all(r["pass"] for r in rows),
    }


def is_positive(p: LaurentPoly) -> bool:
    """All coefficients are nonnegative integers."""
    return all(isinstance(c, int) and c >= 0 for _, c in p.items())


def parallel_map(fn: Callable, items: Sequence, threads: int = 1) -> list:
    """Map over ``items``, in worker processes when ``threads != 1`` (0 = all cores)."""
    if threads == 0:
        threads = os.cpu_count() or 1
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _scan_point(args):
    b, k, m, method, convention = args
    a = JMVector.compose(b, k, m)
    try:
        sp = superpolynomial(a, method, convention)
    except NonPolynomialResult as exc:
        return {"k": k, "m": m, "jm": list(a.a), "status": "non-polynomial", "detail": str(exc)}
    coeffs = [c for _, c in sp.value.items()]
    return {
        "k": k,
        "m": m,
        "jm": list(a.a),
        "status": "ok",
        "positive": is_positive(sp.value),
        "negative_terms": sum(1 for c in coeffs if c < 0),
        "min_coeff": str(min(coeffs)) if coeffs else "0",
        "value": str(sp.value),
    }


def positivity_scan(
    b: JMVector,
    k_range: Iterable[int] = range(5),
    m_range: Iterable[int] = range(5),
    method: str = "residue",
    convention: str = "padleft",
    threads: int = 1,
) -> dict:
    """Coefficient positivity over the grid ``a = b + k*ones + m*rho``.

    Pure report; nothing here raises on negative coefficients.  For each
    ``k`` the frontier is the least ``m`` from which every scanned point is
    positive (``None`` if the last point is not), and ``monotone`` says
    whether positivity, once reached in ``m``, persists in the window.
    ``thresholds`` lists the minimal ``(k, m)`` whose upper-right corner of
    the window is entirely positive.
    """
    ks, ms = list(k_range), list(m_range)
    jobs = [(b, k, m, method, convention) for k in ks for m in ms]
    points = parallel_map(_scan_point, jobs, threads)
    pos = {(p["k"], p["m"]): p.get("positive", False) for p in points}

    frontier = {}
    monotone = {}
    for k in ks:
        row = [pos[(k, m)] for m in ms]
        first = next((i for i, v in enumerate(row) if v), None)
        monotone[str(k)] = first is None or all(row[first:])
        start = None
        for i in range(len(ms) - 1, -1, -1):
            if not row[i]:
                break
            start = ms[i]
        frontier[str(k)] = start

    thresholds = []
    for k in ks:
        for m in ms:
            corner = all(pos[(kk, mm)] for kk in ks if kk >= k for mm in ms if mm >= m)
            if corner and not any(
                (kk, mm) != (k, m) and kk <= k and mm <= m for kk, mm in thresholds
            ):
                thresholds.append((k, m))
    return {
        "n": b.n,
        "b": list(b.a),
        "k_range": ks,
        "m_range": ms,
        "method": method,
        "convention": convention,
        "points": points,
        "frontier": frontier,
        "monotone": monotone,
        "all_monotone": all(monotone.values()),
        "thresholds": [list(t) for t in thresholds],
    }


def tableau_contributions(a: JMVector, convention: str = "padleft") -> list[tuple[Tableau, FactoredRat]]:
    e = jm_to_exponents(a, convention)
    return [(t, engine.evaluate_tableau(e, t)) for t in all_tableaux(a.n)]
