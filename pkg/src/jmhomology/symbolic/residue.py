"""Poles and residues of ``f(z) dz/z`` at monomial points.

Two independent routes compute a residue:

* the local-parameter expansion: put ``z = p(1 + eps)``, expand every
  factor as a truncated power series in ``eps`` and read off the
  coefficient of ``eps^-1``.  Handles any pole order.
* the simple-pole shortcut: when the pole order is one, each vanishing
  factor ``1 - c z^d`` contributes ``-d*eps`` to leading order and every
  other factor is evaluated at ``p``.  The result keeps its factored form.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb

from .._backend import mono_mul, mono_pow
from ..errors import InversionDepthExceeded, NonMonomialPole
from .laurent import LaurentMonomial, LaurentPoly, as_mono, drop_var, exponent, var_index
from .rational import FactoredRat, binomial_power


def gen_binomial(d: int, k: int) -> int:
    """Coefficient of eps^k in (1 + eps)^d for any integer d."""
    if d >= 0:
        return comb(d, k)
    # (-1)^k C(k - d - 1, k)
    return (-1) ** k * comb(k - d - 1, k)


def _at(m: tuple, vi: int, p: tuple) -> tuple:
    d = exponent(m, vi)
    return mono_mul(drop_var(m, vi), mono_pow(p, d)) if d else m


def pole_set(f: FactoredRat, var) -> dict:
    """Poles of ``f`` in ``var`` mapped to their order after cancellation.

    Each denominator factor ``1 - c*var^d`` contributes the pole
    ``var = c^(-1/d)``.  Only ``|d| = 1`` is accepted: for larger ``|d|``
    the remaining roots carry roots of unity and are not monomials.
    """
    vi = var_index(var)
    _, nf, df = f.raw_parts()
    locations = set()
    for m in df:
        d = exponent(m, vi)
        if not d:
            continue
        if abs(d) != 1:
            raise NonMonomialPole(f"factor with {var}^{d} has non-monomial poles")
        c = drop_var(m, vi)
        locations.add(tuple(-e for e in c) if d == 1 else c)
    out = {}
    for p in locations:
        order = sum(k for m, k in df.items() if exponent(m, vi) and not _at(m, vi, p))
        order -= sum(k for m, k in nf.items() if exponent(m, vi) and not _at(m, vi, p))
        if order > 0:
            out[LaurentMonomial(p)] = order
    return out


class _Split:
    """Factors of ``f`` classified relative to the point ``var = p``."""

    def __init__(self, f: FactoredRat, vi: int, p: tuple):
        num, nf, df = f.raw_parts()
        self.numerator = num
        self.through_num: Counter = Counter()
        self.through_den: Counter = Counter()
        self.reg_num: list = []
        self.reg_den: list = []
        self.van_num: list = []
        self.van_den: list = []
        for src, through, reg, van in (
            (nf, self.through_num, self.reg_num, self.van_num),
            (df, self.through_den, self.reg_den, self.van_den),
        ):
            for m, k in src.items():
                d = exponent(m, vi)
                if not d:
                    through[m] += k
                    continue
                mp = _at(m, vi, p)
                if mp:
                    reg.extend([(mp, d)] * k)
                else:
                    van.extend([d] * k)
        self.order = len(self.van_den) - len(self.van_num)
        # numerator grouped by the power of var: {d: polynomial at p}
        groups: dict = {}
        for m, c in num.items():
            d = exponent(m, vi)
            key = _at(m, vi, p)
            g = groups.setdefault(d, {})
            g[key] = g.get(key, 0) + c
        self.num_groups = {d: LaurentPoly(g) for d, g in groups.items()}


def _scalar_inverse(s: list, terms: int, bound: int) -> list:
    if terms > bound:
        raise InversionDepthExceeded(f"asked for {terms} terms, bound is {bound}")
    inv = [Fraction(1, 1) / s[0]]
    for k in range(1, terms):
        acc = sum(s[j] * inv[k - j] for j in range(1, min(k, len(s) - 1) + 1))
        inv.append(-acc / s[0])
    return inv


def _scalar_mul(a: list, b: list, terms: int) -> list:
    out = [0] * terms
    for i, x in enumerate(a[:terms]):
        if x:
            for j in range(terms - i):
                out[i + j] += x * b[j]
    return out


def _poly_series_mul(a: list, b: list, terms: int) -> list:
    out = [LaurentPoly() for _ in range(terms)]
    for i in range(min(terms, len(a))):
        if a[i].is_zero():
            continue
        for j in range(min(terms - i, len(b))):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + a[i] * b[j]
    return out


def _residue_series(sp: _Split) -> FactoredRat:
    P = sp.order
    # scalar part: Jacobian of dz/z, then the eps-stripped vanishing factors
    scalar = [(-1) ** k for k in range(P)]
    for d in sp.van_num:
        h = [-gen_binomial(d, k + 1) for k in range(P)]
        scalar = _scalar_mul(scalar, h, P)
    for d in sp.van_den:
        h = [-gen_binomial(d, k + 1) for k in range(P)]
        scalar = _scalar_mul(scalar, _scalar_inverse(h, P, bound=P), P)

    series = [
        sum((g.scale(gen_binomial(d, k)) for d, g in sp.num_groups.items()), LaurentPoly())
        for k in range(P)
    ]
    for mp, d in sp.reg_num:
        fac = [LaurentPoly._wrap({(): 1, mp: -1})]
        fac += [LaurentPoly.monomial(mp, -gen_binomial(d, k)) for k in range(1, P)]
        series = _poly_series_mul(series, fac, P)
    # (1 - mp)^P / (1 - mp (1+eps)^d) = sum_j mp^j u^j (1 - mp)^(P-1-j), u = (1+eps)^d - 1
    for mp, d in sp.reg_den:
        u = [0] + [gen_binomial(d, k) for k in range(1, P)]
        upow = [1] + [0] * (P - 1)
        fac = [LaurentPoly() for _ in range(P)]
        for j in range(P):
            weight = binomial_power(mp, P - 1 - j).mul_monomial(mono_pow(mp, j))
            for k in range(P):
                if upow[k]:
                    fac[k] = fac[k] + weight.scale(upow[k])
            upow = _scalar_mul(upow, u, P)
        series = _poly_series_mul(series, fac, P)

    coeff = LaurentPoly()
    for k in range(P):
        if scalar[P - 1 - k]:
            coeff = coeff + series[k].scale(scalar[P - 1 - k])
    den = list(sp.through_den.elements())
    for mp, _ in sp.reg_den:
        den.extend([mp] * P)
    return FactoredRat(LaurentPoly(coeff.terms), list(sp.through_num.elements()), den)


def _residue_simple(sp: _Split) -> FactoredRat:
    value = sum(sp.num_groups.values(), LaurentPoly())
    if value.is_zero():
        return FactoredRat.zero()
    ratio = Fraction(1)
    for d in sp.van_num:
        ratio *= -d
    for d in sp.van_den:
        ratio /= -d
    num = list(sp.through_num.elements()) + [mp for mp, _ in sp.reg_num]
    den = list(sp.through_den.elements()) + [mp for mp, _ in sp.reg_den]
    return FactoredRat(value.scale(ratio), num, den)


def residue_dlog(f: FactoredRat, var, pole, method: str = "auto") -> FactoredRat:
    """Residue of ``f(var) d(var)/var`` at ``var = pole``.

    ``method`` is ``"auto"`` (shortcut for simple poles), ``"series"`` or
    ``"simple"``.  A point that is not a pole gives zero.
    """
    vi = var_index(var)
    p = as_mono(pole)
    if exponent(p, vi):
        raise ValueError("pole location must not involve the integration variable")
    if f.is_zero():
        return FactoredRat.zero()
    sp = _Split(f, vi, p)
    if sp.order <= 0:
        return FactoredRat.zero()
    if method == "series" or (method == "auto" and sp.order > 1):
        return _residue_series(sp)
    if sp.order != 1:
        raise ValueError(f"simple-pole method used at a pole of order {sp.order}")
    return _residue_simple(sp)
