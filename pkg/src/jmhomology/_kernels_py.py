"""Pure-Python arithmetic kernels for sparse Laurent polynomials.

A monomial is a tuple of integer exponents with trailing zeros stripped;
a polynomial is a dict mapping monomials to nonzero coefficients.  The
compiled module ``_kernels`` exposes the same functions with the same
semantics; ``_backend`` picks one at import time.
"""

BACKEND = "python"


def mono_mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    n = len(out)
    while n and out[n - 1] == 0:
        n -= 1
    return tuple(out[:n])


def mono_pow(a, k):
    if k == 0:
        return ()
    return tuple(e * k for e in a)


def poly_add(f, g, sign=1):
    """Return ``f + sign*g`` as a new dict."""
    out = dict(f)
    for m, c in g.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def poly_mul(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = {}
    get = out.get
    for mg, cg in g.items():
        for mf, cf in f.items():
            m = mono_mul(mf, mg)
            out[m] = get(m, 0) + cf * cg
    return {m: c for m, c in out.items() if c}


def poly_mul_term(f, mono, coeff):
    if not coeff:
        return {}
    if not mono:
        if coeff == 1:
            return dict(f)
        return {m: c * coeff for m, c in f.items()}
    return {mono_mul(m, mono): c * coeff for m, c in f.items()}
