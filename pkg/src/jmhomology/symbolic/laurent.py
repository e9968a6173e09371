"""Laurent monomials and sparse integer Laurent polynomials.

Variables live in one global registry with the canonical order

    a < Q < T < q < t < z1 < z2 < ...

so a monomial is just a tuple of exponents indexed by that order (trailing
zeros stripped).  ``q`` and ``t`` only appear after :func:`specialize_qt`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .._backend import mono_mul, mono_pow, poly_add, poly_mul, poly_mul_term
from ..errors import UnexpectedVariable

BASE_VARIABLES = ("a", "Q", "T", "q", "t")
_Z_OFFSET = len(BASE_VARIABLES) - 1  # z_i sits at index _Z_OFFSET + i
_ZNAME = re.compile(r"z(\d+)$")


def var_index(name) -> int:
    """Index of a variable in the canonical order; accepts names or ints."""
    if isinstance(name, int):
        return name
    try:
        return BASE_VARIABLES.index(name)
    except ValueError:
        pass
    m = _ZNAME.match(name)
    if m and int(m.group(1)) >= 1:
        return _Z_OFFSET + int(m.group(1))
    raise ValueError(f"unknown variable {name!r}")


def var_name(index: int) -> str:
    if index < len(BASE_VARIABLES):
        return BASE_VARIABLES[index]
    return f"z{index - _Z_OFFSET}"


def z_index(i: int) -> int:
    """Registry index of the auxiliary variable z_i (1-based)."""
    if i < 1:
        raise ValueError("z variables are numbered from 1")
    return _Z_OFFSET + i


def _trim(exps) -> tuple:
    exps = tuple(int(e) for e in exps)
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return exps[:n]


def exponent(mono: tuple, index: int) -> int:
    return mono[index] if index < len(mono) else 0


def drop_var(mono: tuple, index: int) -> tuple:
    if index >= len(mono) or mono[index] == 0:
        return mono
    out = list(mono)
    out[index] = 0
    return _trim(out)


def mono_inv(mono: tuple) -> tuple:
    return tuple(-e for e in mono)


def mono_str(mono: tuple) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(var_name(i))
        elif e:
            parts.append(f"{var_name(i)}^{e}")
    return "*".join(parts) if parts else "1"


def sort_key(mono: tuple, width: int) -> tuple:
    return mono + (0,) * (width - len(mono))


class LaurentMonomial:
    """A product of variables raised to integer powers.

    >>> LaurentMonomial.of(Q=1, z1=1, z2=-1)
    LaurentMonomial('Q*z1*z2^-1')
    """

    __slots__ = ("exps",)

    def __init__(self, exps: Iterable[int] = ()):
        object.__setattr__(self, "exps", _trim(exps))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentMonomial is immutable")

    @classmethod
    def _raw(cls, exps: tuple) -> "LaurentMonomial":
        obj = object.__new__(cls)
        object.__setattr__(obj, "exps", exps)
        return obj

    @classmethod
    def of(cls, **powers: int) -> "LaurentMonomial":
        return cls.from_dict(powers)

    @classmethod
    def from_dict(cls, powers: Mapping) -> "LaurentMonomial":
        items = {var_index(k): int(v) for k, v in powers.items()}
        width = max(items, default=-1) + 1
        exps = [0] * width
        for i, e in items.items():
            exps[i] += e
        return cls(exps)

    @classmethod
    def var(cls, name, power: int = 1) -> "LaurentMonomial":
        return cls.from_dict({name: power})

    def as_dict(self) -> dict:
        return {var_name(i): e for i, e in enumerate(self.exps) if e}

    def degree(self, name) -> int:
        return exponent(self.exps, var_index(name))

    def is_one(self) -> bool:
        return not self.exps

    def involves(self, name) -> bool:
        return self.degree(name) != 0

    def inverse(self) -> "LaurentMonomial":
        return LaurentMonomial._raw(mono_inv(self.exps))

    def __mul__(self, other):
        if isinstance(other, LaurentMonomial):
            return LaurentMonomial._raw(mono_mul(self.exps, other.exps))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, LaurentMonomial):
            return LaurentMonomial._raw(mono_mul(self.exps, mono_inv(other.exps)))
        return NotImplemented

    def __pow__(self, k: int):
        return LaurentMonomial._raw(mono_pow(self.exps, int(k)))

    def __eq__(self, other):
        if isinstance(other, LaurentMonomial):
            return self.exps == other.exps
        if other == 1:
            return not self.exps
        return NotImplemented

    def __hash__(self):
        return hash(("LaurentMonomial", self.exps))

    def __str__(self):
        return mono_str(self.exps)

    def __repr__(self):
        return f"LaurentMonomial({str(self)!r})"


def as_mono(m) -> tuple:
    """Coerce a LaurentMonomial, exponent tuple or the integer 1 to a tuple."""
    if isinstance(m, LaurentMonomial):
        return m.exps
    if isinstance(m, tuple):
        return _trim(m)
    if m == 1:
        return ()
    raise TypeError(f"cannot interpret {m!r} as a monomial")


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class LaurentPoly:
    """Finite sum of Laurent monomials with exact coefficients.

    Coefficients are Python integers.  Residues at poles of a factor
    ``1 - c*z^d`` with ``|d| > 1`` can produce :class:`fractions.Fraction`
    coefficients; those are kept exact and collapse back to ``int`` when
    integral.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _norm_coeff(c)
                if c:
                    key = as_mono(m)
                    v = clean.get(key, 0) + c
                    if v:
                        clean[key] = v
                    else:
                        clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        c = _norm_coeff(c)
        return cls._wrap({(): c} if c else {})

    @classmethod
    def var(cls, name, power: int = 1) -> "LaurentPoly":
        return cls._wrap({LaurentMonomial.var(name, power).exps: 1})

    @classmethod
    def monomial(cls, m, coeff=1) -> "LaurentPoly":
        coeff = _norm_coeff(coeff)
        return cls._wrap({as_mono(m): coeff} if coeff else {})

    @property
    def terms(self) -> dict:
        """A copy of the ``{exponent tuple: coefficient}`` map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_term(self):
        return self._terms.get((), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> set[str]:
        out = set()
        for m in self._terms:
            out.update(var_name(i) for i, e in enumerate(m) if e)
        return out

    def degree_range(self, name) -> tuple[int, int]:
        i = var_index(name)
        degs = [exponent(m, i) for m in self._terms]
        return (min(degs), max(degs)) if degs else (0, 0)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, LaurentMonomial):
            return LaurentPoly._wrap({other.exps: 1})
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LaurentPoly._wrap(poly_add(self._terms, o._terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LaurentPoly._wrap(poly_add(self._terms, o._terms, -1))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return LaurentPoly._wrap({m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LaurentMonomial):
            return self.mul_monomial(other.exps)
        if isinstance(other, LaurentPoly):
            return LaurentPoly._wrap(poly_mul(self._terms, other._terms))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.is_monomial():
                (m, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._wrap({mono_pow(m, k): c ** (-k)})
            raise ValueError("negative power of a non-unit polynomial")
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def scale(self, c) -> "LaurentPoly":
        return self.mul_monomial((), c)

    def mul_monomial(self, mono, coeff=1) -> "LaurentPoly":
        coeff = _norm_coeff(coeff)
        terms = poly_mul_term(self._terms, as_mono(mono), coeff)
        if isinstance(coeff, Fraction) or any(isinstance(c, Fraction) for c in self._terms.values()):
            return LaurentPoly(terms)
        return LaurentPoly._wrap(terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution ----------------------------------------------------

    def substitute(self, name, value) -> "LaurentPoly":
        """Replace a variable by a Laurent monomial."""
        return self.substitute_many({name: value})

    def substitute_many(self, mapping: Mapping) -> "LaurentPoly":
        subs = [(var_index(k), as_mono(v)) for k, v in mapping.items()]
        out: dict = {}
        for m, c in self._terms.items():
            new = m
            for i, v in subs:
                e = exponent(m, i)
                if e:
                    new = mono_mul(drop_var(new, i), mono_pow(v, e))
            out[new] = out.get(new, 0) + c
        return LaurentPoly._wrap({m: c for m, c in out.items() if c})

    def swap(self, x, y) -> "LaurentPoly":
        """Exchange the exponents of two variables in every term."""
        i, j = var_index(x), var_index(y)
        width = max(i, j) + 1
        out = {}
        for m, c in self._terms.items():
            e = list(m) + [0] * max(0, width - len(m))
            e[i], e[j] = e[j], e[i]
            out[_trim(e)] = c
        return LaurentPoly._wrap(out)

    def divide_binomial(self, m) -> "LaurentPoly | None":
        """Exact quotient by ``1 - m``, or None when it does not divide.

        Monomials are grouped into cosets of the cyclic group generated by
        ``m``; on each coset the polynomial is a one-variable Laurent
        polynomial in ``m``, and ``1 - m`` divides it iff its coefficients
        sum to zero.  The quotient coefficients are the partial sums.
        """
        v = as_mono(m)
        if not v:
            raise ZeroDivisionError("division by 1 - 1")
        piv = next(i for i, e in enumerate(v) if e)
        step = v[piv]
        if step < 0:
            # 1 - m = -m (1 - 1/m)
            q = self.divide_binomial(mono_inv(v))
            return None if q is None else q.mul_monomial(mono_inv(v), -1)
        cosets: dict = {}
        vinv = mono_inv(v)
        for mono, c in self._terms.items():
            k = exponent(mono, piv) // step
            rep = mono_mul(mono, mono_pow(vinv, k)) if k else mono
            cosets.setdefault(rep, {})[k] = c
        out = {}
        for rep, coeffs in cosets.items():
            if sum(coeffs.values()) != 0:
                return None
            ks = sorted(coeffs)
            acc = 0
            for k in range(ks[0], ks[-1]):
                acc += coeffs.get(k, 0)
                if acc:
                    out[mono_mul(rep, mono_pow(v, k))] = acc
        return LaurentPoly._wrap(out)

    # -- output ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        width = max((len(m) for m in self._terms), default=0)
        return sorted(self._terms.items(), key=lambda mc: sort_key(mc[0], width))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            if not m:
                body = str(mag)
            elif mag == 1:
                body = mono_str(m)
            else:
                body = f"{mag}*{mono_str(m)}"
            if k == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def poly(spec: Mapping | int = 0) -> LaurentPoly:
    """Small convenience constructor.

    >>> str(poly({(): 1, (1,): 2, (2,): 1}))
    '1 + 2*a + a^2'
    """
    if isinstance(spec, int):
        return LaurentPoly.constant(spec)
    return LaurentPoly(spec)


def gens(*names: str) -> tuple[LaurentPoly, ...]:
    """Polynomial generators, e.g. ``a, Q, T = gens("a", "Q", "T")``."""
    return tuple(LaurentPoly.var(n) for n in names)


def specialize_qt(f: LaurentPoly) -> LaurentPoly:
    """Rewrite a character in ``(a, Q, T)`` in terms of ``(a, q, t)``.

    Uses ``Q = q^2`` and ``T = t^2/q^2``.
    """
    allowed = {"a", "Q", "T"}
    extra = f.variables() - allowed
    if extra:
        raise UnexpectedVariable(f"specialize_qt: unexpected variables {sorted(extra)}")
    q2 = LaurentMonomial.of(q=2)
    t2q = LaurentMonomial.of(t=2, q=-2)
    return f.substitute_many({"Q": q2, "T": t2q})
