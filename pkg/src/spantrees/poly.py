"""Dense univariate polynomials over Z and Q.

A polynomial is a list of coefficients in ascending degree order; the zero
polynomial is the empty list.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

Poly = list


def trim(p) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    p = trim(p)
    return len(p) - 1 if p else -1


def add(p, q) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q) -> list:
    return add(p, [-c for c in q])


def scale(p, c) -> list:
    return trim([c * x for x in p])


def mul(p, q) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def pow_(p, e: int) -> list:
    out = [1]
    for _ in range(e):
        out = mul(out, p)
    return out


def product(factors) -> list:
    """Multiply out ``[(poly, exponent), ...]``."""
    out = [1]
    for f, e in factors:
        out = mul(out, pow_(f, e))
    return out


def deriv(p, times: int = 1) -> list:
    for _ in range(times):
        p = trim([i * c for i, c in enumerate(p)][1:])
    return p


def evaluate(p, x):
    acc = 0 * x
    for c in reversed(p):
        acc = acc * x + c
    return acc


def truncate(p, n: int) -> list:
    """Keep degrees < n."""
    return trim(list(p)[:n])


def content(p) -> int:
    g = 0
    for c in p:
        g = gcd(g, int(c))
    return g


def primitive(p) -> list:
    """Integer primitive part with positive leading coefficient."""
    p = to_integer(p)
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def to_integer(p) -> list:
    """Clear denominators of a rational polynomial (no content removal)."""
    p = trim(p)
    den = 1
    for c in p:
        if isinstance(c, Rational):
            den = lcm(den, Fraction(c).denominator)
    return [int(Fraction(c) * den) for c in p]


def divmod_(p, q) -> tuple[list, list]:
    """Division with remainder over Q."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    lead = Fraction(q[-1])
    out = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    while len(r) >= len(q) and r:
        shift = len(r) - len(q)
        c = r[-1] / lead
        out[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r = trim(r)
    return trim(out), r


def exact_div(p, q) -> list:
    """p / q when the division is exact over Q; raises ValueError otherwise."""
    quo, rem = divmod_(p, q)
    if rem:
        raise ValueError("polynomial does not divide")
    return [int(c) if c.denominator == 1 else c for c in quo]


def divides(q, p) -> bool:
    return not divmod_(p, q)[1]


def poly_gcd(p, q) -> list:
    """gcd as a primitive integer polynomial (positive leading coefficient)."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_(a, b)[1]
        b = primitive(b) if b else b
    return primitive(a) if a else []


def squarefree_decomposition(p) -> list[tuple[list, int]]:
    """Yun's algorithm: p = c * prod f_i^i with each f_i squarefree and pairwise coprime.

    Returns the nonconstant ``(f_i, i)`` as primitive integer polynomials.
    """
    p = primitive(p)
    if degree(p) < 1:
        return []
    dp = deriv(p)
    a = poly_gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    d = sub(c, deriv(b))
    out = []
    i = 1
    while degree(b) >= 1:
        f = poly_gcd(b, d)
        if degree(f) >= 1:
            out.append((f, i))
        b = exact_div(b, f)
        c = exact_div(d, f)
        d = sub(c, deriv(b))
        i += 1
    return out


def is_palindromic(p) -> bool:
    """Coefficients read the same reversed, up to a global sign."""
    p = trim(p)
    if not p:
        return True
    rev = p[::-1]
    return rev == p or rev == [-c for c in p]


def from_descending(coeffs) -> list:
    return trim(list(reversed(coeffs)))


def to_str(p, var: str = "t") -> str:
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
