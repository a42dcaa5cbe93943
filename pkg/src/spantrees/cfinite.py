"""Guessing C-finite recurrences and rational generating functions from exact terms."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd, lcm
from typing import Sequence

from spantrees import poly
from spantrees.errors import FitFailure, InsufficientData, InvalidGF, InvalidParameter
from spantrees.matrix_tree import IntSequence


@dataclass(frozen=True)
class Recurrence:
    """a[n+r] = c[r-1] a[n+r-1] + ... + c[0] a[n] for every n >= offset.

    ``offset`` counts leading terms the recurrence does not govern; it is
    nonzero when the generating function numerator has degree >= r.
    """

    order: int
    coeffs: tuple[Fraction, ...]
    offset: int = 0
    guard_verified: int = 0

    def __post_init__(self):
        if self.order < 1 or len(self.coeffs) != self.order:
            raise InvalidParameter("recurrence needs order >= 1 and exactly `order` coefficients")
        if self.coeffs[0] == 0:
            raise InvalidParameter("c0 must be nonzero")

    def holds_on(self, terms: Sequence[int]) -> bool:
        r = self.order
        for n in range(self.offset, len(terms) - r):
            if sum(c * terms[n + j] for j, c in enumerate(self.coeffs)) != terms[n + r]:
                return False
        return True

    def extend(self, initial: Sequence[int], count: int) -> list:
        out = list(initial)
        r = self.order
        while len(out) < count:
            out.append(sum(c * out[len(out) - r + j] for j, c in enumerate(self.coeffs)))
        return [int(x) if Fraction(x).denominator == 1 else x for x in out[:count]]


@dataclass(frozen=True)
class RationalGF:
    """num(t) / den(t), integer coefficients in ascending degree order."""

    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(int(c) for c in poly.trim(self.num)))
        object.__setattr__(self, "den", tuple(int(c) for c in poly.trim(self.den)))
        if not self.den:
            raise InvalidGF("denominator is zero")

    @classmethod
    def normalized(cls, num, den) -> RationalGF:
        """Scale so den(0) = +1, then clear denominators and common content."""
        num = [Fraction(c) for c in poly.trim(num)]
        den = [Fraction(c) for c in poly.trim(den)]
        if not den:
            raise InvalidGF("denominator is zero")
        if den[0] != 0:
            d0 = den[0]
            num = [c / d0 for c in num]
            den = [c / d0 for c in den]
        common = 1
        for c in num + den:
            common = lcm(common, c.denominator)
        num = [int(c * common) for c in num]
        den = [int(c * common) for c in den]
        g = 0
        for c in num + den:
            g = gcd(g, c)
        num = [c // g for c in num]
        den = [c // g for c in den]
        return cls(tuple(num), tuple(den))

    @property
    def num_degree(self) -> int:
        return len(self.num) - 1

    @property
    def den_degree(self) -> int:
        return len(self.den) - 1

    def to_dict(self) -> dict:
        return {"num": [str(c) for c in self.num], "den": [str(c) for c in self.den]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, data: dict) -> RationalGF:
        return cls(tuple(int(c) for c in data["num"]), tuple(int(c) for c in data["den"]))

    @classmethod
    def from_json(cls, text: str) -> RationalGF:
        return cls.from_dict(json.loads(text))

    def __str__(self):
        return f"({poly.to_str(self.num)}) / ({poly.to_str(self.den)})"


def solve_exact(a: list[list[int]], b: list[int]) -> list[Fraction] | None:
    """Solve a square system exactly; None if singular.

    Forward elimination is fraction-free on the augmented matrix, back
    substitution is done over Q.
    """
    n = len(a)
    m = [list(map(int, row)) + [int(rhs)] for row, rhs in zip(a, b)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                return None
        pk = m[k][k]
        rowk = m[k][k + 1:]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            m[i] = ri[:k] + [0] + [(x * pk - f * y) // prev for x, y in zip(ri[k + 1:], rowk)]
        prev = pk
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = Fraction(s) / m[i][i]
    return x


def guard_size(max_order: int) -> int:
    return max(5, ceil(max_order / 2))


def required_terms(max_order: int) -> int:
    return 2 * max_order + guard_size(max_order)


def _candidate(terms: Sequence[int], r: int) -> Recurrence | None:
    hankel = [[terms[i + j] for j in range(r)] for i in range(r)]
    sol = solve_exact(hankel, [terms[i + r] for i in range(r)])
    if sol is None:
        return None
    # Leading zero coefficients mean the recurrence only starts after a few
    # initial terms; peel them off into the offset.
    shift = 0
    while shift < r and sol[shift] == 0:
        shift += 1
    if shift == r:
        # Terms vanish from index r on (a polynomial generating function); any
        # c0 works on a zero tail, so use a[n+1] = a[n] from there.
        return Recurrence(order=1, coeffs=(Fraction(1),), offset=r)
    return Recurrence(order=r - shift, coeffs=tuple(sol[shift:]), offset=shift)


def guess_recurrence(seq: IntSequence | Sequence[int], max_order: int) -> Recurrence:
    """Minimal-order C-finite recurrence that reproduces every supplied term.

    Orders 1..max_order are tried in turn; at order r the first 2r terms fix
    the coefficients and all remaining terms must satisfy them.
    """
    terms = list(seq.terms if isinstance(seq, IntSequence) else seq)
    if max_order < 1:
        raise InvalidParameter("max_order must be >= 1")
    need = required_terms(max_order)
    if len(terms) < need:
        raise InsufficientData(
            f"max order {max_order} needs {need} terms (2*{max_order} + guard {guard_size(max_order)}), got {len(terms)}"
        )
    for r in range(1, max_order + 1):
        rec = _candidate(terms, r)
        if rec is None or not rec.holds_on(terms):
            continue
        return Recurrence(rec.order, rec.coeffs, rec.offset, guard_verified=len(terms) - 2 * r)
    raise FitFailure(f"no recurrence of order <= {max_order} fits {len(terms)} terms")


def recurrence_to_gf(rec: Recurrence, initial: Sequence[int]) -> RationalGF:
    """Generating function of the sequence with the given first ``order + offset`` terms."""
    need = rec.order + rec.offset
    if len(initial) != need:
        raise InvalidParameter(f"need exactly {need} initial terms, got {len(initial)}")
    den = [Fraction(1)] + [-c for c in reversed(rec.coeffs)]
    num = poly.truncate(poly.mul([Fraction(a) for a in initial], den), need)
    return RationalGF.normalized(num, den)


def expand_gf(gf: RationalGF, count: int) -> IntSequence:
    """First ``count`` power-series coefficients of the GF, exactly."""
    den = gf.den
    if den[0] == 0:
        raise InvalidGF("denominator vanishes at t = 0")
    out: list[int] = []
    for n in range(count):
        acc = gf.num[n] if n < len(gf.num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            acc -= den[j] * out[n - j]
        q, r = divmod(acc, den[0])
        if r:
            raise InvalidGF(f"coefficient {n} is not an integer")
        out.append(q)
    return IntSequence(family="expansion", start_n=0, terms=tuple(out))


def verify_gf(gf: RationalGF, seq: IntSequence | Sequence[int]) -> bool:
    terms = tuple(seq.terms if isinstance(seq, IntSequence) else seq)
    try:
        return expand_gf(gf, len(terms)).terms == terms
    except InvalidGF:
        return False


def gf_equal(a: RationalGF, b: RationalGF) -> bool:
    return poly.mul(a.num, b.den) == poly.mul(b.num, a.den)


def palindrome_check(p: Sequence[int]) -> bool:
    return poly.is_palindromic(p)


def fit_gf(seq: IntSequence | Sequence[int], max_order: int) -> tuple[RationalGF, Recurrence]:
    """guess_recurrence + recurrence_to_gf, with the result re-verified against every term."""
    terms = list(seq.terms if isinstance(seq, IntSequence) else seq)
    rec = guess_recurrence(terms, max_order)
    gf = recurrence_to_gf(rec, terms[: rec.order + rec.offset])
    if not verify_gf(gf, terms):
        raise FitFailure("fitted generating function does not reproduce the data")
    return gf, rec
