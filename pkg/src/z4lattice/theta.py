"""Jacobi theta functions on the imaginary axis and lattice theta series.

Every theta value here is taken at z = i*tau, i.e. with nome q = exp(-pi*tau),
so "theta3(4z)" in the usual notation is ``jacobi_theta(3, 4 * tau)``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from z4lattice.enumerators import JwePolynomial, SwePolynomial
from z4lattice.errors import CapacityError, DomainError, ParseError
from z4lattice.z4core import Z4Code, codeword_array

TAU_MIN = 1e-3
MAX_TERMS = 10_000
REL_STOP = 1e-17
QEXP_MAX_N = 12
QEXP_MAX_NORM = 16
QEXP_BUDGET = 1 << 16


def _check_tau(tau: float) -> float:
    tau = float(tau)
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau}")
    if tau < TAU_MIN:
        raise DomainError(f"tau={tau} below supported minimum {TAU_MIN}")
    return tau


_PI_HI = math.pi
_PI_LO = 1.2246467991473532e-16  # pi - float(pi)


def _split(a: float) -> tuple[float, float]:
    c = 134217729.0 * a  # 2^27 + 1
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a: float, b: float) -> tuple[float, float]:
    """Dekker's error-free product: a * b == p + e exactly."""
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _exp_neg_pi(tau: float, s: float, inverse: bool) -> float:
    """exp(-pi * x) with x = tau * s (or s / tau), the exponent carried in
    double-double so rounding of a large argument does not leak into the result."""
    if inverse:
        hi = s / tau
        p, e = _two_prod(hi, tau)
        lo = ((s - p) - e) / tau
    else:
        hi, lo = _two_prod(tau, s)
    h, e = _two_prod(_PI_HI, hi)
    tail = e + _PI_HI * lo + _PI_LO * hi
    return math.exp(-h) * (1.0 - tail)


def _series(tau: float, offset: float, alternating: bool, inverse: bool = False) -> float:
    """2 * sum_{m >= 0} s_m q^{(m + offset)^2}, with the m = 0 term halved when offset == 0.

    With ``inverse`` the nome is exp(-pi / tau).
    """
    total = 0.0
    for m in range(MAX_TERMS):
        term = _exp_neg_pi(tau, (m + offset) ** 2, inverse)
        if offset == 0 and m == 0:
            term *= 0.5
        if alternating and m % 2:
            term = -term
        if m > 0 and abs(term) < REL_STOP * abs(total):
            break
        total += term
    return 2.0 * total


def jacobi_theta(kind: int, tau: float) -> float:
    """theta_kind(i*tau) for kind in {2, 3, 4}.

    theta2 and theta3 are summed directly (all terms positive).  theta4
    alternates, so for tau < 1 it is taken from theta4(i tau) =
    tau^(-1/2) theta2(i / tau) to avoid cancellation.
    """
    tau = _check_tau(tau)
    if kind == 3:
        return _series(tau, 0.0, False)
    if kind == 2:
        return _series(tau, 0.5, False)
    if kind == 4:
        if tau < 1.0:
            return _series(tau, 0.5, False, inverse=True) / math.sqrt(tau)
        return _series(tau, 0.0, True)
    raise DomainError(f"theta kind must be 2, 3 or 4, got {kind}")


def theta_a4(p: SwePolynomial, tau: float) -> float:
    """Theta series of the Construction A4 lattice of a code with swe ``p``."""
    tau = _check_tau(tau)
    return p.evaluate(jacobi_theta(3, 4 * tau), jacobi_theta(2, tau) / 2, jacobi_theta(2, 4 * tau))


def theta_construction_c(j: JwePolynomial, tau: float) -> float:
    """Theta series of the packing C1 + 2C2 + 4Z^n (scaled by 1/2) from jwe(C1, C2)."""
    tau = _check_tau(tau)
    half = jacobi_theta(2, tau) / 2
    return j.evaluate(jacobi_theta(3, 4 * tau), jacobi_theta(2, 4 * tau), half, half)


def theta_zn(nu: float, n: int, tau: float) -> float:
    """Theta series of the scaled integer lattice nu * Z^n."""
    if not nu > 0 or n < 1:
        raise DomainError("theta_zn needs nu > 0 and n >= 1")
    tau = _check_tau(tau)
    return jacobi_theta(3, nu * nu * tau) ** n


def jacobi_transform_residual(p: SwePolynomial, p_dual: SwePolynomial, vol_dual: float, tau: float) -> float:
    """Theta(i tau) - vol(dual) * tau^(-n/2) * Theta_dual(i / tau)."""
    tau = _check_tau(tau)
    lhs = theta_a4(p, tau)
    rhs = vol_dual * tau ** (-p.n / 2) * theta_a4(p_dual, 1.0 / tau)
    return lhs - rhs


@dataclass(frozen=True)
class QExpansion:
    """Lattice point counts keyed by 4 * squared norm, up to ``max_norm4 / 4``."""

    n: int
    max_norm4: int
    counts: dict[int, int]

    @property
    def max_norm(self) -> Fraction:
        return Fraction(self.max_norm4, 4)

    def count(self, norm: Fraction | float | int) -> int:
        key = Fraction(norm) * 4
        if key.denominator != 1:
            return 0
        return self.counts.get(int(key), 0)

    def to_text(self) -> str:
        lines = [f"QEXP {self.n} {self.max_norm4}"]
        lines += [f"{k} {v}" for k, v in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> QExpansion:
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0][0] != "QEXP" or len(lines[0]) != 3:
            raise ParseError("expected header 'QEXP <n> <maxNorm4>'")
        try:
            counts = {int(a): int(b) for a, b in lines[1:]}
            return cls(int(lines[0][1]), int(lines[0][2]), counts)
        except ValueError as exc:
            raise ParseError(f"bad QEXP line: {exc}") from None


def _norm4_bound(max_norm) -> int:
    bound = Fraction(max_norm) * 4
    if bound <= 0:
        raise DomainError("maxNorm must be positive")
    if bound > QEXP_MAX_NORM * 4:
        raise CapacityError(f"maxNorm above {QEXP_MAX_NORM} is not supported")
    return math.floor(bound)


def _coset_squares(symbol: int, bound: int) -> list[int]:
    """Values v^2 <= bound over integers v congruent to ``symbol`` mod 4."""
    out = []
    r = math.isqrt(bound)
    for v in range(-r, r + 1):
        if v % 4 == symbol and v * v <= bound:
            out.append(v * v)
    return out


def q_expansion_a4(code: Z4Code, max_norm, budget: int = QEXP_BUDGET) -> QExpansion:
    """Count points of (C + 4Z^n)/2 by norm, codeword by codeword.

    A point is x = (c + 4z)/2, so 4||x||^2 = sum_i (c_i + 4 z_i)^2; for each
    codeword the admissible integers c_i + 4 z_i are listed per coordinate
    and combined with a truncated convolution.
    """
    if code.n > QEXP_MAX_N:
        raise CapacityError(f"q-expansion enumeration supports n <= {QEXP_MAX_N}")
    if code.cardinality > budget:
        raise CapacityError(f"{code.cardinality} codewords exceed the q-expansion budget {budget}")
    bound = _norm4_bound(max_norm)
    squares = {s: _coset_squares(s, bound) for s in range(4)}
    totals = np.zeros(bound + 1, dtype=np.int64)
    for word in codeword_array(code):
        acc = np.zeros(bound + 1, dtype=np.int64)
        acc[0] = 1
        for s in word:
            nxt = np.zeros_like(acc)
            for sq in squares[int(s)]:
                nxt[sq:] += acc[: bound + 1 - sq]
            acc = nxt
            if not acc.any():
                break
        totals += acc
    return QExpansion(code.n, bound, {k: int(v) for k, v in enumerate(totals) if v})


def _series_poly(exponents: Iterable[int], bound: int) -> np.ndarray:
    out = np.zeros(bound + 1, dtype=object)
    out[:] = 0
    for e in exponents:
        if e <= bound:
            out[e] += 1
    return out


def _truncated_mul(a: np.ndarray, b: np.ndarray, bound: int) -> np.ndarray:
    out = np.zeros(bound + 1, dtype=object)
    out[:] = 0
    for i in np.nonzero(a != 0)[0]:
        out[i:] = out[i:] + a[i] * b[: bound + 1 - i]
    return out


def q_expansion_from_swe(p: SwePolynomial, max_norm) -> QExpansion:
    """Formal expansion of swe(theta3(4z), theta2(z)/2, theta2(4z)) in powers q^(k/4)."""
    bound = _norm4_bound(max_norm)
    r = math.isqrt(bound) + 2
    # in units of q^(1/4): theta3(4z) -> 16 m^2, theta2(z)/2 -> (2m+1)^2 for m >= 0,
    # theta2(4z) -> 4 (2m+1)^2
    series = (
        _series_poly((16 * m * m for m in range(-r, r + 1)), bound),
        _series_poly(((2 * m + 1) ** 2 for m in range(0, r + 1)), bound),
        _series_poly((4 * (2 * m + 1) ** 2 for m in range(-r, r)), bound),
    )
    powers = [[_series_poly([0], bound)] for _ in range(3)]
    for v in range(3):
        for _ in range(p.n):
            powers[v].append(_truncated_mul(powers[v][-1], series[v], bound))
    total = _series_poly([], bound)
    for (i, j, k), c in p.terms.items():
        prod = _truncated_mul(_truncated_mul(powers[0][i], powers[1][j], bound), powers[2][k], bound)
        total = total + c * prod
    return QExpansion(p.n, bound, {e: int(v) for e, v in enumerate(total) if v})
