"""Dense integer polynomials as coefficient tuples, lowest degree first."""

from math import comb

from .errors import DimensionError


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def add(*ps):
    out = [0] * max((len(p) for p in ps), default=0)
    for p in ps:
        for i, c in enumerate(p):
            out[i] += c
    return trim(out)


def scale(p, k):
    return trim(k * c for c in p)


def sub(p, q):
    return add(p, scale(q, -1))


def mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p, k):
    out = (1,)
    for _ in range(k):
        out = mul(out, p)
    return out


def shift(p, k):
    """Multiply by ``t**k``."""
    return trim((0,) * k + tuple(p)) if p else ()


def compose_linear(p, a, b):
    """``p(a*t + b)``."""
    out = ()
    lin = (b, a)
    for k, c in enumerate(p):
        if c:
            out = add(out, scale(power(lin, k), c))
    return out


def reverse(p, degree):
    """``t**degree * p(1/t)``."""
    p = tuple(p) + (0,) * (degree + 1 - len(p))
    if len(p) > degree + 1:
        raise DimensionError(f"polynomial of degree > {degree}")
    return trim(reversed(p))


def coefficients(p, length):
    """Pad or check ``p`` to exactly ``length`` coefficients."""
    p = tuple(p)
    if len(p) > length and any(p[length:]):
        raise DimensionError(f"polynomial does not fit in {length} coefficients")
    return (p + (0,) * length)[:length]


def f_polynomial(f, n):
    """``t^n + sum_i f_i t^(n-1-i)`` for an n-dimensional object with faces ``f``."""
    if len(f) != n:
        raise DimensionError(f"f-vector {tuple(f)} must have {n} entries")
    p = [0] * (n + 1)
    p[n] = 1
    for i, fi in enumerate(f):
        p[n - 1 - i] += fi
    return trim(p)


def h_polynomial(f, n):
    """``f_Q(t - 1)``; its coefficient of ``t^(n-i)`` is ``h_i``."""
    return compose_linear(f_polynomial(f, n), 1, -1)


def h_vector(f, n):
    """h-vector from face numbers.

    Solves ``sum_i h_i t^(n-i) = (t-1)^n + sum_i f_i (t-1)^(n-1-i)`` where
    ``f_i`` counts the faces of codimension ``i + 1``.
    """
    coeffs = coefficients(h_polynomial(f, n), n + 1)
    return tuple(coeffs[n - i] for i in range(n + 1))


def binomial(n, k):
    return comb(n, k) if 0 <= k <= n else 0
