"""Iterated residue evaluation of the localization integrand.

The integrand for an exponent vector ``e`` of length ``n`` is

    prod_i z_i^e_i (1 + a/z_i) / (1 - 1/z_i) * prod_{i<j} zeta(z_i/z_j)

integrated against ``dz_1/z_1 ... dz_n/z_n``.  Two evaluators are provided
and are meant to check each other:

* :func:`evaluate_full` integrates ``z_n, ..., z_1`` in turn, at each step
  summing the residues at the kernel poles ``z_k = 1, Q z_i, T z_i``
  (``i < k``) with the earlier variables still symbolic;
* :func:`evaluate_syt_sum` sums, over standard Young tableaux, the
  ascending residue chain that sends ``z_i`` to the weight of box ``i``.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .errors import NonPolynomialResult
from .symbolic import FactoredRat, LaurentMonomial, LaurentPoly, frat_sum, pole_set, residue_dlog
from .symbolic.laurent import z_index
from .tableaux import Tableau, all_tableaux, box_weights, zeta, zeta_tilde

KERNELS = ("zeta", "zeta_tilde")


def zvar(i: int) -> str:
    return f"z{i}"


def _zmono(**powers: int) -> LaurentMonomial:
    return LaurentMonomial.of(**powers)


def integrand(e: Sequence[int], kernel: str = "zeta") -> FactoredRat:
    """The integrand as a factored rational function (no measure factors).

    With ``kernel="zeta_tilde"`` every pair factor is assembled as
    ``zeta_tilde(x) * (1 - QTx)``, the latter multiplied in as an expanded
    polynomial rather than a binomial factor.  Mathematically identical,
    structurally different.
    """
    if kernel not in KERNELS:
        raise ValueError(f"unknown kernel {kernel!r}")
    n = len(e)
    f = FactoredRat.one()
    for i in range(1, n + 1):
        z = zvar(i)
        zi = _zmono(**{z: 1})
        num = (LaurentPoly.monomial(zi) + LaurentPoly.var("a")).mul_monomial(zi ** (e[i - 1] - 1))
        f = f * FactoredRat(num, [], [zi.inverse()])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            x = _zmono(**{zvar(i): 1, zvar(j): -1})
            if kernel == "zeta":
                f = f * zeta(x)
            else:
                qtx = _zmono(Q=1, T=1, **{zvar(i): 1, zvar(j): -1})
                f = f * zeta_tilde(x) * (1 - LaurentPoly.monomial(qtx))
    return f


def enclosed_poles(k: int, specialized: Iterable | None = None) -> list[LaurentMonomial]:
    """Kernel poles of ``z_k``: ``1`` and ``Q v``, ``T v`` for each earlier value ``v``.

    ``specialized`` defaults to the symbolic ``z_1, ..., z_{k-1}``.
    """
    if specialized is None:
        specialized = [_zmono(**{zvar(i): 1}) for i in range(1, k)]
    out = [LaurentMonomial()]
    for v in specialized:
        v = v if isinstance(v, LaurentMonomial) else LaurentMonomial(v)
        for g in ("Q", "T"):
            p = v * _zmono(**{g: 1})
            if p not in out:
                out.append(p)
    return out


def _step_terms(terms: list, k: int, specialized=None, method: str = "auto", audit: list | None = None) -> list:
    z = zvar(k)
    poles = enclosed_poles(k, specialized)
    out = []
    for f in terms:
        for p in poles:
            r = residue_dlog(f, z, p, method=method)
            if not r.is_zero():
                out.append(r)
    if audit is not None:
        audit.extend(_audit_step(terms, k, poles, method))
    return out


def _audit_step(terms: list, k: int, enclosed: list, method: str) -> list:
    """Total residue at every non-enclosed pole of ``z_k``; nonzero ones are findings."""
    z = zvar(k)
    others = set()
    for f in terms:
        others.update(p for p in pole_set(f, z) if p not in enclosed)
    findings = []
    for p in sorted(others, key=str):
        total = frat_sum((residue_dlog(f, z, p, method=method) for f in terms), reduce=True)
        if not total.is_zero():
            findings.append({"variable": z, "pole": str(p), "residue": str(total)})
    return findings


def pushforward_step(f: FactoredRat, k: int, specialized=None, method: str = "auto") -> FactoredRat:
    """Integrate out ``z_k`` by summing residues at the enclosed kernel poles.

    Poles coming from powers of ``z_k`` (``0`` and ``infinity``) are never
    enclosed; only ``z_k = 1`` and the ``Q``/``T`` shifts of the values in
    ``specialized`` (default: the symbolic earlier variables) are.
    """
    return frat_sum(_step_terms([f], k, specialized, method), reduce=False)


def _to_poly(total: FactoredRat, what: str) -> LaurentPoly:
    try:
        return total.to_poly()
    except NonPolynomialResult as exc:
        raise NonPolynomialResult(f"{what}: {exc}", exc.factors) from None


def evaluate_full_terms(e: Sequence[int], kernel: str = "zeta", method: str = "auto", audit: list | None = None) -> list:
    """The surviving residue terms after integrating ``z_n, ..., z_1``."""
    terms = [integrand(e, kernel)]
    for k in range(len(e), 0, -1):
        terms = _step_terms(terms, k, method=method, audit=audit)
    return terms


def evaluate_full(e: Sequence[int], kernel: str = "zeta", method: str = "auto", audit: list | None = None) -> LaurentPoly:
    """Descending iterated residue integral; a Laurent polynomial in a, Q, T.

    If ``audit`` is a list, residues found at non-enclosed poles (summed
    over all terms of a step) are appended to it.
    """
    terms = evaluate_full_terms(e, kernel, method, audit)
    return _to_poly(frat_sum(terms, reduce=True), f"evaluate_full{tuple(e)}")


def evaluate_chain(e: Sequence[int], values: Sequence, kernel: str = "zeta", method: str = "auto") -> FactoredRat:
    """Ascending residue chain ``z_1 -> values[0], ..., z_n -> values[n-1]``."""
    if len(values) != len(e):
        raise ValueError("need one value per variable")
    f = integrand(e, kernel)
    for i, v in enumerate(values, start=1):
        f = residue_dlog(f, zvar(i), v, method=method)
        if f.is_zero():
            return f
    return f


def evaluate_tableau(e: Sequence[int], t: Tableau, kernel: str = "zeta", method: str = "auto") -> FactoredRat:
    """Contribution of one fixed point: the chain along the box weights of ``t``."""
    if t.n != len(e):
        raise ValueError(f"tableau of size {t.n} for {len(e)} variables")
    return evaluate_chain(e, box_weights(t), kernel, method)


def evaluate_syt_sum(e: Sequence[int], kernel: str = "zeta", method: str = "auto") -> LaurentPoly:
    """Sum of :func:`evaluate_tableau` over all standard tableaux of size ``n``."""
    n = len(e)
    terms = [evaluate_tableau(e, t, kernel, method) for t in all_tableaux(n)]
    return _to_poly(frat_sum(terms, reduce=True), f"evaluate_syt_sum{tuple(e)}")


def swap_qt(p: LaurentPoly) -> LaurentPoly:
    return p.swap("Q", "T")


__all__ = [
    "KERNELS",
    "enclosed_poles",
    "evaluate_chain",
    "evaluate_full",
    "evaluate_full_terms",
    "evaluate_syt_sum",
    "evaluate_tableau",
    "integrand",
    "pushforward_step",
    "swap_qt",
    "z_index",
    "zvar",
]
