"""Rational functions whose denominators are products of binomials ``1 - m``."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable

from .._backend import mono_mul, mono_pow
from ..errors import NonPolynomialResult, ZeroDenominator
from .laurent import (
    LaurentMonomial,
    LaurentPoly,
    as_mono,
    drop_var,
    exponent,
    mono_inv,
    mono_str,
    sort_key,
    var_index,
)


def normalize_binomial(m: tuple) -> tuple[int, tuple, tuple]:
    """Write ``1 - m`` as ``sign * shift * (1 - m')``.

    ``m'`` has a positive first nonzero exponent, so ``1 - m`` and
    ``1 - 1/m`` share one canonical factor.
    """
    if not m:
        raise ValueError("1 - 1 is not a binomial factor")
    lead = next(e for e in m if e)
    if lead > 0:
        return 1, (), m
    return -1, m, mono_inv(m)


class BinomialFactor:
    """The factor ``1 - m`` for a Laurent monomial ``m != 1``."""

    __slots__ = ("m",)

    def __init__(self, m):
        m = as_mono(m)
        if not m:
            raise ValueError("1 - 1 is not a binomial factor")
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("BinomialFactor is immutable")

    @property
    def monomial(self) -> LaurentMonomial:
        return LaurentMonomial(self.m)

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly._wrap({(): 1, self.m: -1})

    def __eq__(self, other):
        return isinstance(other, BinomialFactor) and other.m == self.m

    def __hash__(self):
        return hash(("BinomialFactor", self.m))

    def __str__(self):
        return f"(1-{mono_str(self.m)})"

    __repr__ = __str__


def _factor_mono(f) -> tuple:
    if isinstance(f, BinomialFactor):
        return f.m
    return as_mono(f)


_BINOM_POW_CACHE: dict = {}


def binomial_power(m: tuple, k: int) -> LaurentPoly:
    """Expanded ``(1 - m)^k``."""
    key = (m, k)
    p = _BINOM_POW_CACHE.get(key)
    if p is None:
        p = LaurentPoly._wrap({(): 1, m: -1}) ** k
        if len(_BINOM_POW_CACHE) > 4096:
            _BINOM_POW_CACHE.clear()
        _BINOM_POW_CACHE[key] = p
    return p


def _factor_str(factors: Counter) -> str:
    width = max((len(m) for m in factors), default=0)
    items = sorted(factors.items(), key=lambda mk: sort_key(mk[0], width))
    return "[" + ", ".join(f"(1-{mono_str(m)})^{k}" for m, k in items) + "]"


class FactoredRat:
    """``numerator * prod(num_factors) / prod(den_factors)``.

    Every factor is stored in the canonical form of
    :func:`normalize_binomial`, with the sign and monomial shift absorbed
    into the numerator; matching factors above and below the line cancel
    on construction.  Values are immutable.
    """

    __slots__ = ("_numerator", "_num", "_den")

    def __init__(self, numerator=1, num_factors: Iterable = (), den_factors: Iterable = ()):
        num = LaurentPoly._coerce(numerator)
        if num is None:
            raise TypeError(f"bad numerator {numerator!r}")
        shift: tuple = ()
        sign = 1
        nf: Counter = Counter()
        df: Counter = Counter()
        zero = num.is_zero()
        for f in num_factors:
            m = _factor_mono(f)
            if not m:
                zero = True
                continue
            s, sh, mm = normalize_binomial(m)
            sign *= s
            shift = mono_mul(shift, sh)
            nf[mm] += 1
        for f in den_factors:
            m = _factor_mono(f)
            if not m:
                raise ZeroDenominator("denominator factor (1-1)")
            s, sh, mm = normalize_binomial(m)
            sign *= s
            shift = mono_mul(shift, mono_inv(sh))
            df[mm] += 1
        if zero:
            self._set(LaurentPoly(), Counter(), Counter())
            return
        common = nf & df
        nf -= common
        df -= common
        if shift or sign != 1:
            num = num.mul_monomial(shift, sign)
        self._set(num, nf, df)

    def _set(self, num, nf, df):
        object.__setattr__(self, "_numerator", num)
        object.__setattr__(self, "_num", nf)
        object.__setattr__(self, "_den", df)

    def __setattr__(self, name, value):
        raise AttributeError("FactoredRat is immutable")

    @classmethod
    def _make(cls, num: LaurentPoly, nf: Counter, df: Counter) -> "FactoredRat":
        """Build from already-normalized parts, cancelling common factors."""
        obj = object.__new__(cls)
        if num.is_zero():
            obj._set(num, Counter(), Counter())
            return obj
        common = nf & df
        if common:
            nf = nf - common
            df = df - common
        obj._set(num, nf, df)
        return obj

    @classmethod
    def from_poly(cls, p) -> "FactoredRat":
        return cls._make(LaurentPoly._coerce(p), Counter(), Counter())

    @classmethod
    def zero(cls) -> "FactoredRat":
        return cls.from_poly(LaurentPoly())

    @classmethod
    def one(cls) -> "FactoredRat":
        return cls.from_poly(LaurentPoly.constant(1))

    # -- accessors -------------------------------------------------------

    @property
    def numerator(self) -> LaurentPoly:
        return self._numerator

    @property
    def num_factors(self) -> Counter:
        return Counter({BinomialFactor(m): k for m, k in self._num.items()})

    @property
    def den_factors(self) -> Counter:
        return Counter({BinomialFactor(m): k for m, k in self._den.items()})

    def raw_parts(self) -> tuple[LaurentPoly, Counter, Counter]:
        """Numerator and factor multisets keyed by exponent tuples."""
        return self._numerator, Counter(self._num), Counter(self._den)

    def is_zero(self) -> bool:
        return self._numerator.is_zero()

    def variables(self) -> set[str]:
        out = self._numerator.variables()
        for m in list(self._num) + list(self._den):
            out |= LaurentPoly._wrap({m: 1}).variables()
        return out

    def involves(self, name) -> bool:
        i = var_index(name)
        if any(exponent(m, i) for m in self._numerator._terms):
            return True
        return any(exponent(m, i) for m in self._num) or any(exponent(m, i) for m in self._den)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, FactoredRat):
            return other
        p = LaurentPoly._coerce(other)
        return None if p is None else FactoredRat.from_poly(p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FactoredRat._make(self._numerator * o._numerator, self._num + o._num, self._den + o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        if not o._numerator.is_monomial():
            raise ValueError("can only divide by a monomial times binomial factors")
        (m, c), = o._numerator.items()
        num = self._numerator.mul_monomial(mono_inv(m), Fraction(1, c) if c not in (1, -1) else c)
        return FactoredRat._make(num, self._num + o._den, self._den + o._num)

    def __neg__(self):
        return FactoredRat._make(-self._numerator, self._num, self._den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return frat_sum([self, o], reduce=False)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return frat_sum([self, -o], reduce=False)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def expanded_numerator(self) -> LaurentPoly:
        out = self._numerator
        for m, k in self._num.items():
            out = out * binomial_power(m, k)
        return out

    def reduce(self) -> "FactoredRat":
        """Expand the numerator and cancel every denominator factor dividing it."""
        num = self.expanded_numerator()
        if num.is_zero():
            return FactoredRat.zero()
        den = Counter()
        for m, k in self._den.items():
            left = k
            while left:
                q = num.divide_binomial(m)
                if q is None:
                    break
                num = q
                left -= 1
            if left:
                den[m] = left
        return FactoredRat._make(num, Counter(), den)

    def is_polynomial(self) -> bool:
        return not self.reduce()._den

    def to_poly(self) -> LaurentPoly:
        r = self.reduce()
        if r._den:
            factors = [BinomialFactor(m) for m in r._den.elements()]
            raise NonPolynomialResult(
                "binomial denominators survive: " + _factor_str(r._den), factors
            )
        return r._numerator

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        lhs = self.expanded_numerator()
        rhs = o.expanded_numerator()
        for m, k in o._den.items():
            lhs = lhs * binomial_power(m, k)
        for m, k in self._den.items():
            rhs = rhs * binomial_power(m, k)
        return lhs == rhs

    __hash__ = None

    # -- substitution ----------------------------------------------------

    def substitute(self, name, value) -> "FactoredRat":
        """Substitute a Laurent monomial for a variable.

        Raises ZeroDenominator when a denominator factor becomes ``1 - 1``.
        """
        i = var_index(name)
        v = as_mono(value)

        def sub(m):
            e = exponent(m, i)
            return mono_mul(drop_var(m, i), mono_pow(v, e)) if e else m

        den = []
        for m, k in self._den.items():
            mm = sub(m)
            if not mm:
                raise ZeroDenominator(
                    f"factor (1-{mono_str(m)}) vanishes at {mono_str(v)}; take a residue instead"
                )
            den.extend([mm] * k)
        num = []
        for m, k in self._num.items():
            mm = sub(m)
            if not mm:
                return FactoredRat.zero()
            num.extend([mm] * k)
        return FactoredRat(self._numerator.substitute(name, LaurentMonomial(v)), num, den)

    def swap(self, x, y) -> "FactoredRat":
        def sw(m):
            return next(iter(LaurentPoly._wrap({m: 1}).swap(x, y).items()))[0]

        return FactoredRat(
            self._numerator.swap(x, y),
            [sw(m) for m in self._num.elements()],
            [sw(m) for m in self._den.elements()],
        )

    def __str__(self):
        body = str(self._numerator)
        if len(self._numerator) > 1 and (self._num or self._den):
            body = f"({body})"
        if self._num:
            body = f"{body} * {_factor_str(self._num)}"
        if self._den:
            body = f"{body} / {_factor_str(self._den)}"
        return body

    def __repr__(self):
        return f"FactoredRat({str(self)!r})"


def frat_mul(f: FactoredRat, g: FactoredRat) -> FactoredRat:
    return f * g


def frat_substitute(f: FactoredRat, var, value) -> FactoredRat:
    return f.substitute(var, value)


def frat_sum(terms: Iterable[FactoredRat], reduce: bool = True) -> FactoredRat:
    """Sum over a common denominator (the multiset union of denominators)."""
    terms = [t for t in terms if not t.is_zero()]
    if not terms:
        return FactoredRat.zero()
    if len(terms) == 1:
        return terms[0].reduce() if reduce else terms[0]
    den: Counter = Counter()
    for t in terms:
        den |= t._den
    total = LaurentPoly()
    for t in terms:
        num = t.expanded_numerator()
        for m, k in den.items():
            missing = k - t._den.get(m, 0)
            if missing:
                num = num * binomial_power(m, missing)
        total = total + num
    out = FactoredRat._make(total, Counter(), den)
    return out.reduce() if reduce else out
