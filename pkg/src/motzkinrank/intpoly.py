"""Dense univariate polynomials as coefficient tuples.

Lowest degree first, no trailing zeros; the zero polynomial is the
empty tuple.  Coefficients are ints (Fractions also work for evaluate).
Small and boring on purpose: these polynomials multiply recurrence
terms and bivariate equation coefficients, where degrees stay tiny.
"""

from __future__ import annotations

from math import gcd

from . import backend


def trim(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def add(p, q) -> tuple:
    n = max(len(p), len(q))
    return trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def neg(p) -> tuple:
    return tuple(-v for v in p)


def sub(p, q) -> tuple:
    return add(p, neg(q))


def mul(p, q) -> tuple:
    if not p or not q:
        return ()
    return trim(backend.conv_trunc(list(p), list(q), len(p) + len(q) - 1))


def scale(p, k) -> tuple:
    if k == 0:
        return ()
    return tuple(v * k for v in p)


def evaluate(p, x):
    acc = 0
    for v in reversed(p):
        acc = acc * x + v
    return acc


def content(p) -> int:
    g = 0
    for v in p:
        g = gcd(g, abs(v))
    return g


def to_str(p, var: str = "x") -> str:
    """Human form, descending degree: ``2*x^3 - x + 1``."""
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        v = p[k]
        if not v:
            continue
        mag = abs(v)
        if k == 0:
            body = str(mag)
        else:
            x = var if k == 1 else f"{var}^{k}"
            body = x if mag == 1 else f"{mag}*{x}"
        terms.append((v < 0, body))
    neg_first, body = terms[0]
    out = ("-" if neg_first else "") + body
    for is_neg, body in terms[1:]:
        out += (" - " if is_neg else " + ") + body
    return out
