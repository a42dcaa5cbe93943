"""Dominant-pole asymptotics of rational generating functions and B-Z constants.

Multiplicities come from an exact square-free decomposition; only the
square-free factors are solved numerically (numpy seeds, Aberth iteration in
mpmath), so repeated roots never have to be separated numerically.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

import mpmath
import numpy as np

from spantrees import poly
from spantrees.cfinite import RationalGF
from spantrees.errors import (
    AmbiguousDominance,
    InvalidParameter,
    NoConvergence,
    PrecisionFailure,
    RemovableSingularity,
    StructureError,
)
from spantrees.matrix_tree import IntSequence

DEFAULT_PRECISION = 256
MAX_PRECISION = 4096


@dataclass(frozen=True)
class PoleInfo:
    location: mpmath.mpc
    multiplicity: int
    modulus: mpmath.mpf

    @property
    def is_real(self) -> bool:
        return abs(self.location.imag) <= mpmath.mpf(2) ** (-mpmath.mp.prec // 2) * max(1, self.modulus)


@dataclass(frozen=True)
class BZResult:
    value: mpmath.mpf
    method: str
    error_bound: mpmath.mpf
    family: str = ""

    def to_dict(self, digits: int = 30) -> dict:
        return {
            "family": self.family,
            "value": mpmath.nstr(self.value, digits, strip_zeros=False),
            "method": self.method,
            "error_bound": mpmath.nstr(self.error_bound, 5),
        }

    def to_json(self, digits: int = 30) -> str:
        return json.dumps(self.to_dict(digits), indent=1)


def _aberth(coeffs_asc: list[int], prec: int, max_iter: int = 200) -> list[mpmath.mpc]:
    """All roots of a square-free integer polynomial to ``prec`` bits."""
    deg = len(coeffs_asc) - 1
    if deg == 1:
        return [mpmath.mpc(mpmath.mpf(-coeffs_asc[0]) / coeffs_asc[1])]
    seeds = np.roots([float(c) for c in reversed(coeffs_asc)])
    # Aberth stalls if two seeds coincide; nudge duplicates apart.
    zs = []
    for s in seeds:
        z = complex(s)
        while any(abs(z - w) < 1e-12 for w in zs):
            z += 1e-7 * (1 + 1j)
        zs.append(z)
    with mpmath.workprec(prec + 32):
        z = [mpmath.mpc(x) for x in zs]
        coeffs_desc = [mpmath.mpf(c) for c in reversed(coeffs_asc)]
        dcoeffs_desc = [mpmath.mpf(c) for c in reversed(poly.deriv(coeffs_asc))]
        tol = mpmath.mpf(2) ** (-prec)
        for _ in range(max_iter):
            biggest = mpmath.mpf(0)
            new = []
            for k, zk in enumerate(z):
                f = mpmath.polyval(coeffs_desc, zk)
                df = mpmath.polyval(dcoeffs_desc, zk)
                if f == 0:
                    new.append(zk)
                    continue
                ratio = f / df
                s = mpmath.fsum(1 / (zk - zj) for j, zj in enumerate(z) if j != k)
                w = ratio / (1 - ratio * s)
                new.append(zk - w)
                biggest = max(biggest, abs(w) / max(1, abs(zk)))
            z = new
            if biggest < tol:
                break
        else:
            raise PrecisionFailure(f"Aberth iteration did not reach {prec} bits on a degree-{deg} factor")
    return z


def poly_roots(p: Sequence[int], precision_bits: int = DEFAULT_PRECISION) -> list[PoleInfo]:
    """All complex roots of an integer polynomial (ascending coefficients) with multiplicities."""
    p = poly.trim([int(c) for c in p])
    if len(p) < 2:
        raise InvalidParameter("polynomial must have degree >= 1")
    out = []
    for factor, mult in poly.squarefree_decomposition(p):
        for z in _aberth(factor, precision_bits):
            out.append(PoleInfo(location=z, multiplicity=mult, modulus=abs(z)))
    out.sort(key=lambda r: (r.modulus, r.location.imag))
    return out


def poly_roots_adaptive(p: Sequence[int], precision_bits: int = DEFAULT_PRECISION) -> tuple[list[PoleInfo], int]:
    """poly_roots, doubling the precision on failure up to MAX_PRECISION."""
    prec = precision_bits
    while True:
        try:
            with mpmath.workprec(prec):
                return poly_roots(p, prec), prec
        except PrecisionFailure:
            if prec >= MAX_PRECISION:
                raise
            prec *= 2


def reduced(gf: RationalGF) -> RationalGF:
    """Cancel any common polynomial factor of numerator and denominator."""
    g = poly.poly_gcd(list(gf.num), list(gf.den)) if gf.num else [1]
    if len(g) <= 1:
        return gf
    return RationalGF.normalized(poly.exact_div(list(gf.num), g), poly.exact_div(list(gf.den), g))


def dominant_pole(gf: RationalGF, precision_bits: int = DEFAULT_PRECISION) -> PoleInfo:
    gf = reduced(gf)
    if not gf.num:
        raise RemovableSingularity("zero generating function has no poles")
    roots, prec = poly_roots_adaptive(gf.den, precision_bits)
    if not roots:
        raise StructureError("polynomial generating function has no poles")
    with mpmath.workprec(prec):
        best = roots[0]
        tie = mpmath.mpf(2) ** (-prec // 2) * max(1, best.modulus)
        rivals = [r for r in roots[1:] if abs(r.modulus - best.modulus) <= tie]
        if rivals:
            raise AmbiguousDominance(
                f"{len(rivals) + 1} roots share the minimal modulus {mpmath.nstr(best.modulus, 12)}"
            )
        num_at = abs(mpmath.polyval([mpmath.mpf(c) for c in reversed(gf.num)], best.location))
        scale = sum(abs(mpmath.mpf(c)) * best.modulus ** i for i, c in enumerate(gf.num))
        if num_at <= scale * mpmath.mpf(2) ** (-prec // 2):
            raise RemovableSingularity("numerator vanishes at the dominant root")
    return best


def leading_asymptotic(gf: RationalGF, precision_bits: int = DEFAULT_PRECISION) -> tuple[mpmath.mpf, mpmath.mpf, int]:
    """(C, rho, m - 1) with a_n ~ C * n^(m-1) * rho^(-n).

    rho is the dominant pole and m its multiplicity. Writing den = (t - rho)^m R(t),
    the principal part at rho is num(rho) / (R(rho) (-rho)^m (1 - t/rho)^m), and
    [t^n] (1 - t/rho)^(-m) ~ n^(m-1) / (m-1)! * rho^(-n).
    """
    gf = reduced(gf)
    pole = dominant_pole(gf, precision_bits)
    with mpmath.workprec(max(precision_bits, mpmath.mp.prec) + 64):
        if not pole.is_real:
            raise AmbiguousDominance("dominant pole is not real")
        rho = pole.location.real
        if rho <= 0:
            raise StructureError("dominant pole is not positive")
        m = pole.multiplicity
        dm = poly.deriv(list(gf.den), m)
        r_at = mpmath.polyval([mpmath.mpf(c) for c in reversed(dm)], rho) / factorial(m)
        p_at = mpmath.polyval([mpmath.mpf(c) for c in reversed(gf.num)], rho)
        amp = p_at / (r_at * (-rho) ** m)
        const = amp / factorial(m - 1)
    return +const, +rho, m - 1


def bz_constant(
    gf_tau: RationalGF,
    gf_leaves: RationalGF,
    vertex_map: tuple[int, int],
    precision_bits: int = DEFAULT_PRECISION,
    family: str = "",
) -> BZResult:
    """Limit of leaves_i / (v_i * tau_i), v_i = s*i + t, from the two leading terms.

    tau_i ~ C_T i^(m-1) rho^-i and leaves_i ~ C_L i^m rho^-i, so the limit is
    C_L / (s * C_T). The error bound is the change between two working
    precisions plus 2^-precision.
    """
    s, _ = vertex_map
    if s < 1:
        raise InvalidParameter("vertex map slope must be >= 1")

    def evaluate(prec):
        with mpmath.workprec(prec):
            pt = dominant_pole(gf_tau, prec)
            pl = dominant_pole(gf_leaves, prec)
            tol = mpmath.mpf(2) ** (-prec // 2)
            if abs(pt.location - pl.location) > tol * max(1, pt.modulus):
                raise StructureError("tree and leaf generating functions have different dominant poles")
            if pl.multiplicity != pt.multiplicity + 1:
                raise StructureError(
                    f"leaf pole multiplicity {pl.multiplicity} is not tree multiplicity {pt.multiplicity} + 1"
                )
            c_t, _, _ = leading_asymptotic(gf_tau, prec)
            c_l, _, _ = leading_asymptotic(gf_leaves, prec)
            return c_l / (s * c_t)

    value = evaluate(precision_bits)
    check = evaluate(precision_bits + 64)
    with mpmath.workprec(precision_bits):
        err = abs(value - check) + mpmath.mpf(2) ** (-precision_bits)
        _check_unit_interval(value, err)
        return BZResult(value=+value, method="pole-based", error_bound=+err, family=family)


def _check_unit_interval(value, err):
    if value < -err or value > 1 + err:
        raise NoConvergence(f"B-Z estimate {mpmath.nstr(value, 15)} lies outside [0, 1]")


def neville_extrapolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """Polynomial extrapolation to x = 0 using the last 1, 2, ..., len(xs) points.

    Returns the successive estimates; entry k uses the final k + 1 points.
    """
    xs = list(xs)[::-1]
    ys = list(ys)[::-1]
    table = list(ys)
    estimates = [table[0]]
    for level in range(1, len(xs)):
        table = [
            (xs[i + level] * table[i] - xs[i] * table[i + 1]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        estimates.append(table[0])
    return estimates


def ratio_terms(seq_tau: IntSequence, seq_leaves: IntSequence, vertex_map: tuple[int, int]) -> list[tuple[Fraction, Fraction]]:
    """(1/v_i, leaves_i / (v_i tau_i)) for every position i."""
    s, t = vertex_map
    out = []
    for i, (tau, leaves) in enumerate(zip(seq_tau.terms, seq_leaves.terms)):
        v = s * i + t
        out.append((Fraction(1, v), Fraction(leaves, v * tau)))
    return out


def bz_direct(
    seq_tau: IntSequence,
    seq_leaves: IntSequence,
    vertex_map: tuple[int, int],
    extrapolation_depth: int = 4,
    family: str = "",
) -> BZResult:
    """Richardson (polynomial-in-1/v) extrapolation of leaves_i / (v_i tau_i).

    All arithmetic is exact until the final conversion; the error bound is the
    size of the last correction. Depths beyond about 4 amplify the exponentially
    small corrections that a polynomial in 1/v cannot model, so larger is not
    better.
    """
    if len(seq_tau) != len(seq_leaves):
        raise InvalidParameter("sequences must have equal length")
    if len(seq_tau) < 10:
        raise InvalidParameter("need at least 10 terms")
    if any(t == 0 for t in seq_tau.terms):
        raise InvalidParameter("spanning tree counts must be nonzero")
    depth = min(extrapolation_depth, len(seq_tau) - 1)
    pts = ratio_terms(seq_tau, seq_leaves, vertex_map)[-(depth + 1):]
    est = neville_extrapolate([x for x, _ in pts], [y for _, y in pts])
    corrections = [abs(b - a) for a, b in zip(est, est[1:])]
    if depth >= 2 and corrections[0] != 0 and corrections[-1] > corrections[0]:
        raise NoConvergence("extrapolation corrections grow with depth")
    with mpmath.workprec(DEFAULT_PRECISION):
        value = mpmath.mpf(est[-1].numerator) / est[-1].denominator
        err = mpmath.mpf(corrections[-1].numerator) / corrections[-1].denominator if corrections else mpmath.mpf(0)
        _check_unit_interval(value, err)
    return BZResult(value=value, method="ratio-extrapolated", error_bound=err, family=family)
