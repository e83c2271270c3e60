"""Secrecy function and secrecy gain of Construction A4 lattices.

For a formally self-dual code the inverse secrecy function is
h(t) / 2^n with h(t) = swe(1 + t, (1 - t^4)^(1/4), 1 - t) and
t = theta4(i tau) / theta3(i tau), so the gain is found by minimising h on
(0, 1).
"""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from z4lattice.enumerators import SwePolynomial, is_formally_self_dual
from z4lattice.errors import DomainError
from z4lattice.theta import TAU_MIN, jacobi_theta, theta_a4, theta_zn

SCAN_POINTS = 4096
T_TOL = 1e-12
TAU_TOL = 1e-9
_INVPHI = (math.sqrt(5) - 1) / 2


def secrecy_function(p: SwePolynomial, code_cardinality: int | None, tau: float) -> float:
    """Xi(tau) = Theta_{nu Z^n}(i tau) / Theta_Lambda(i tau), vol(Lambda) = 2^n / |C| = nu^n."""
    card = p.mass if code_cardinality is None else code_cardinality
    if card <= 0:
        raise DomainError("code cardinality must be positive")
    nu = (2**p.n / card) ** (1.0 / p.n)
    return theta_zn(nu, p.n, tau) / theta_a4(p, tau)


def _h_terms(p: SwePolynomial):
    exps = np.array(list(p.terms), dtype=np.float64).reshape(-1, 3)
    coeffs = np.array([float(c) for c in p.terms.values()])
    return exps, coeffs


def h_eval(p: SwePolynomial, t) -> float | np.ndarray:
    """h(t) = swe(1 + t, (1 - t^4)^(1/4), 1 - t) for 0 < t < 1; vectorised over t."""
    arr = np.asarray(t, dtype=np.float64)
    if np.any(arr <= 0) or np.any(arr >= 1):
        raise DomainError("h is defined on the open interval (0, 1)")
    exps, coeffs = _h_terms(p)
    flat = arr.reshape(-1, 1)
    vals = (
        coeffs[None, :]
        * (1 + flat) ** exps[None, :, 0]
        * (1 - flat**4) ** (exps[None, :, 1] / 4)
        * (1 - flat) ** exps[None, :, 2]
    )
    out = vals.sum(axis=1)
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def h_derivative(p: SwePolynomial, t: float) -> float:
    """dh/dt, term by term (logarithmic derivative of each monomial)."""
    if not 0 < t < 1:
        raise DomainError("h is defined on the open interval (0, 1)")
    total = 0.0
    u = 1 - t**4
    for (i, j, k), c in p.terms.items():
        mono = c * (1 + t) ** i * u ** (j / 4) * (1 - t) ** k
        total += mono * (i / (1 + t) - j * t**3 / u - k / (1 - t))
    return total


def tau_to_t(tau: float) -> float:
    """t(tau) = theta4(i tau) / theta3(i tau), increasing from 0 to 1."""
    return jacobi_theta(4, tau) / jacobi_theta(3, tau)


def t_to_tau(t: float, tol: float = TAU_TOL) -> float:
    """Invert :func:`tau_to_t` by bisection on log(tau)."""
    if not 0 < t < 1:
        raise DomainError("t must lie in (0, 1)")
    lo, hi = 1.0, 1.0
    while tau_to_t(lo) > t:
        lo /= 2
        if lo < TAU_MIN:
            raise DomainError(f"t={t} corresponds to tau below {TAU_MIN}")
    while tau_to_t(hi) < t:
        hi *= 2
        if hi > 1e4:
            raise DomainError(f"t={t} too close to 1 to invert")
    while hi - lo > tol * 1e-3 * hi:
        mid = math.sqrt(lo * hi)
        if mid in (lo, hi):
            break
        if tau_to_t(mid) < t:
            lo = mid
        else:
            hi = mid
    return math.sqrt(lo * hi)


def golden_section(f, a: float, b: float, tol: float = T_TOL) -> float:
    """Minimiser of a unimodal ``f`` on [a, b], bracket shrunk to width ``tol``."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return (a + b) / 2


def _polish(p: SwePolynomial, t: float, a: float, b: float) -> float:
    """Refine a golden-section minimiser on the sign change of h'."""
    # h is flat to ~sqrt(eps) near its minimum; the derivative resolves t much further.
    width = max(1e-6, 4 * (b - a))
    lo, hi = max(a, t - width), min(b, t + width)
    dlo, dhi = h_derivative(p, lo), h_derivative(p, hi)
    if not (dlo < 0 < dhi):
        return t
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if h_derivative(p, mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class SecrecyProfile:
    """Outcome of a secrecy-gain search.

    ``minima`` lists every scan-local minimum whose value is within 1e-9
    (relative) of the best one; more than one entry means the maximiser of
    the secrecy function is not unique and ``ambiguous`` is set.
    """

    n: int
    nu: float
    t_star: float
    tau_star: float
    gain: float
    samples: tuple[tuple[float, float], ...] = ()
    minima: tuple[float, ...] = ()
    ambiguous: bool = False
    h_min: float = field(default=0.0)

    def summary(self) -> str:
        return f"gain={self.gain:.10g} t*={self.t_star:.7f} tau*={self.tau_star:.7f}"


def secrecy_gain(p: SwePolynomial, scan_points: int = SCAN_POINTS, sample_taus: Sequence[float] = ()) -> SecrecyProfile:
    """Maximise the secrecy function of a formally self-dual code via min h(t).

    A uniform scan over (0, 1) locates the global minimum before
    golden-section refinement, since h need not be unimodal.
    """
    if not is_formally_self_dual(p):
        raise DomainError(
            "secrecy_gain requires a formally self-dual swe; use secrecy_function for other codes"
        )
    grid = (np.arange(scan_points) + 0.5) / scan_points
    values = h_eval(p, grid)
    best = int(np.argmin(values))
    local = [
        i
        for i in range(scan_points)
        if (i == 0 or values[i] <= values[i - 1])
        and (i == scan_points - 1 or values[i] <= values[i + 1])
        and values[i] <= values[best] * (1 + 1e-9)
    ]
    minima = []
    for i in local:
        a = grid[max(i - 1, 0)] if i > 0 else grid[0] / 2
        b = grid[min(i + 1, scan_points - 1)] if i < scan_points - 1 else (1 + grid[-1]) / 2
        f = lambda t: float(h_eval(p, t))  # noqa: E731
        t = golden_section(f, a, b)
        minima.append(_polish(p, t, a, b))
    # adjacent scan points can both flag the same plateau-free minimum
    distinct: list[float] = []
    for t in sorted(minima):
        if not distinct or t - distinct[-1] > 2.0 / scan_points:
            distinct.append(t)
    t_star = float(min(distinct, key=lambda t: float(h_eval(p, t))))
    h_min = float(h_eval(p, t_star))
    gain = 2**p.n / h_min
    tau_star = t_to_tau(t_star)
    samples = tuple((float(tau), secrecy_function(p, None, tau)) for tau in sample_taus)
    return SecrecyProfile(
        n=p.n,
        nu=(2**p.n / p.mass) ** (1.0 / p.n),
        t_star=t_star,
        tau_star=tau_star,
        gain=gain,
        samples=samples,
        minima=tuple(float(t) for t in distinct),
        ambiguous=len(distinct) > 1,
        h_min=h_min,
    )


@dataclass(frozen=True)
class ConjectureReport:
    """Observed behaviour of the secrecy function on a tau grid (never an assertion)."""

    taus: tuple[float, ...]
    values: tuple[float, ...]
    xi_at_one: float
    argmax_tau: float
    max_value: float
    max_at_symmetry_point: bool
    symmetry_residuals: tuple[tuple[float, float], ...]


def conjecture_report(p: SwePolynomial, tau_grid: Sequence[float], tol: float = 1e-9) -> ConjectureReport:
    """Evaluate Xi on ``tau_grid`` and report whether its maximum sits at tau = 1."""
    taus = tuple(float(t) for t in tau_grid)
    values = tuple(secrecy_function(p, None, t) for t in taus)
    xi1 = secrecy_function(p, None, 1.0)
    k = int(np.argmax(values)) if values else 0
    best = values[k] if values else xi1
    residuals = tuple(
        (t, secrecy_function(p, None, t) / secrecy_function(p, None, 1.0 / t) - 1.0) for t in taus
    )
    return ConjectureReport(
        taus=taus,
        values=values,
        xi_at_one=xi1,
        argmax_tau=taus[k] if taus else 1.0,
        max_value=best,
        max_at_symmetry_point=best <= xi1 * (1 + tol),
        symmetry_residuals=residuals,
    )


def secrecy_csv(p: SwePolynomial, taus: Sequence[float], code_cardinality: int | None = None) -> str:
    """CSV with header ``tau,xi`` and 17 significant digits."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["tau", "xi"])
    for tau in taus:
        writer.writerow([f"{tau:.17g}", f"{secrecy_function(p, code_cardinality, tau):.17g}"])
    return buf.getvalue()
