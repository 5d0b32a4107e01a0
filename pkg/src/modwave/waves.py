"""Wave profiles: regularized quadrature for (T, M, P, H) and the moments
zeta_k, profile evaluation by inverting z(u), and the explicit
cnoidal/dnoidal families used as cross checks.

All loop integrals over the oscillation interval are reduced to smooth
integrals by the substitution w = w- + (w+ - w-) sin^2(theta), which
removes the square-root endpoint singularities at both turning points:
with P(w) = (w - w-)(w+ - w) G(w),

    dw / sqrt(P) = 2 dtheta / sqrt(G(w(theta))).

G comes from synthetic deflation of P, so the integrand is analytic on
[0, pi/2] whenever the endpoints are simple roots.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numpy.polynomial import polynomial as npoly
from numpy.polynomial.chebyshev import Chebyshev
from scipy.integrate import IntegrationWarning, quad

from .elliptic import elliptic_K, jacobi_cn, jacobi_dn
from .equations import (Classification, EquationSpec, PotentialPolynomial,
                        WaveParams, classify_parameters, potential_polynomial)
from .errors import (DegenerateRoots, DomainError, NoBoundedOrbit,
                     QuadratureFailure)

TOL_QUAD = 1e-11
SQRT2 = np.sqrt(2.0)


def _require_periodic(spec, params, branch):
    cls = classify_parameters(spec, params, branch)
    if cls.status == "on-gamma":
        raise DegenerateRoots("parameters lie on the discriminant variety")
    if cls.status == "no-bounded-orbit":
        raise NoBoundedOrbit("no positivity interval of E - V")
    return cls


def _reduced_poly(poly: PotentialPolynomial, lo: float, hi: float) -> np.ndarray:
    """G with P(w) = (w - lo)(hi - w) G(w), by synthetic division."""
    q1, _ = npoly.polydiv(np.asarray(poly.coeffs, float), np.array([-lo, 1.0]))
    G, _ = npoly.polydiv(q1, np.array([-hi, 1.0]))
    return -G


def _theta_integral(func, tol: float) -> float:
    # near the roundoff floor quad warns while still meeting the target;
    # silence it and judge by the returned error estimate instead
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        val, err = quad(func, 0.0, np.pi / 2, epsabs=tol, epsrel=tol, limit=400)
    if not np.isfinite(val):
        raise QuadratureFailure("non-finite quadrature value")
    if err > 1e3 * tol * max(1.0, abs(val)):
        raise QuadratureFailure(f"error estimate {err:.2e} above tolerance")
    return val


def _moment_integrals(poly: PotentialPolynomial, lo: float, hi: float,
                      weights, tol: float):
    """sqrt(2) * int weight(w)/sqrt(P) dw over [lo, hi] for several weights."""
    G = _reduced_poly(poly, lo, hi)
    if np.any(npoly.polyval(np.linspace(lo, hi, 17), G) <= 0.0):
        raise QuadratureFailure("reduced polynomial not positive on the interval")

    def make(fw):
        def f(theta):
            w = lo + (hi - lo) * np.sin(theta) ** 2
            g = npoly.polyval(w, G)
            return fw(w) * 2.0 / np.sqrt(g)
        return f

    return [SQRT2 * _theta_integral(make(fw), tol) for fw in weights]


def zeta_moments(spec: EquationSpec, params: WaveParams, k_max: int,
                 branch: int = 0, tol_quad: float = TOL_QUAD) -> "MomentTable":
    """Moments zeta_0..zeta_kmax of the wave.

    zeta_k = sqrt(2) * int mu(w) w^k / sqrt(E - V) dw over the oscillation
    interval, with measure weight mu = 1 for polynomial nonlinearities and
    mu = 2v for the Schamel substitution u = v^2.  With this normalization
    the physical quantities are  (T, M, P) = (zeta_i0, zeta_i1, zeta_i2)
    at the indices carried by the potential polynomial ((0,1,2) or (1,3,5)).
    """
    cls = _require_periodic(spec, params, branch)
    poly = potential_polynomial(spec, params)
    # Schamel measure is 2 v^k dv (the u = v^2 Jacobian lives in the odd
    # moment indices (T,M,P) = (zeta_1, zeta_3, zeta_5), not in the weight)
    wfac = 2.0 if poly.var == "v" else 1.0
    weights = [(lambda k: (lambda w: wfac * w ** k))(k) for k in range(k_max + 1)]
    vals = _moment_integrals(poly, cls.w_minus, cls.w_plus, weights, tol_quad)
    return MomentTable(zeta=np.array(vals), poly=poly, classification=cls,
                       convention="sqrt2-denominator, physical zeta")


@dataclass
class MomentTable:
    """zeta moments (filled here) and singular moments I (filled by the
    Picard-Fuchs solver).  ``convention`` records the normalization."""

    zeta: np.ndarray
    poly: PotentialPolynomial
    classification: Classification
    convention: str
    I: Optional[np.ndarray] = None

    @property
    def tmp(self):
        i0, i1, i2 = self.poly.tmp_indices
        return self.zeta[i0], self.zeta[i1], self.zeta[i2]


def quadrature_TMPH(spec: EquationSpec, params: WaveParams, branch: int = 0,
                    tol_quad: float = TOL_QUAD):
    """Period T, mass M, momentum P, Hamiltonian H by regularized quadrature.

    T = sqrt(2) oint dw/sqrt(E-V) (loop = twice the one-way integral),
    M = int u dx, P = int u^2 dx, H = int (u_x^2/2 - F(u)) dx over a period.
    """
    cls = _require_periodic(spec, params, branch)
    poly = potential_polynomial(spec, params)
    if poly.var == "u":
        F = spec.F_coeffs()
        weights = [
            lambda w: np.ones_like(np.asarray(w, float)),
            lambda w: w,
            lambda w: w ** 2,
            lambda w: poly(w) - npoly.polyval(w, F),
        ]
    else:
        # u = v^2: u dx weight 2v^3, u^2 dx weight 2v^5, H weight 2v (P_v - F(v^2))
        lead = spec.power_coeff * 2.0 / 5.0
        weights = [
            lambda w: 2.0 * w,
            lambda w: 2.0 * w ** 3,
            lambda w: 2.0 * w ** 5,
            lambda w: 2.0 * w * (poly(w) - lead * w ** 5),
        ]
    T, M, P, H = _moment_integrals(poly, cls.w_minus, cls.w_plus, weights, tol_quad)
    return T, M, P, H


# ---------------------------------------------------------------------------
# profile evaluation: invert z(w) = int dw/sqrt(2 P) via a Chebyshev
# antiderivative in theta and Newton iteration; avoids stiff ODE shooting
# near the turning points.
# ---------------------------------------------------------------------------

@dataclass
class WaveProfile:
    """A resolved periodic traveling wave.

    The evaluator is even about z = 0 with u(0) = u_minus and period T.
    """

    spec: EquationSpec
    params: WaveParams
    u_minus: float
    u_plus: float
    period: float
    evaluator: Callable[[np.ndarray], np.ndarray]
    classification: Classification = None

    def __call__(self, z):
        return self.evaluator(z)


def _chebyshev_z_of_theta(poly: PotentialPolynomial, lo: float, hi: float,
                          degree: int = 256, tail_tol: float = 1e-13):
    """Chebyshev model of h(theta) = sqrt(2)/sqrt(G) and its antiderivative
    Z with Z(0) = 0, so z = Z(theta) along the half period."""
    G = _reduced_poly(poly, lo, hi)

    def h(theta):
        w = lo + (hi - lo) * np.sin(theta) ** 2
        return SQRT2 / np.sqrt(npoly.polyval(w, G))

    deg = degree
    while True:
        ch = Chebyshev.interpolate(h, deg, domain=[0.0, np.pi / 2])
        tail = np.max(np.abs(ch.coef[-8:])) / max(np.max(np.abs(ch.coef)), 1e-300)
        if tail < tail_tol or deg >= 8192:
            break
        deg *= 2
    Z = ch.integ(lbnd=0.0)
    return ch, Z


def resolve_profile(spec: EquationSpec, params: WaveParams, branch: int = 0,
                    degree: int = 256) -> WaveProfile:
    """Build a WaveProfile whose evaluator inverts the quadrature.

    For each requested z the phase is folded into [0, T/2] by periodicity
    and evenness, then theta solves Z(theta) = z by safeguarded Newton
    (machine accurate; Z' = h > 0).
    """
    cls = _require_periodic(spec, params, branch)
    poly = potential_polynomial(spec, params)
    lo, hi = cls.w_minus, cls.w_plus
    h, Z = _chebyshev_z_of_theta(poly, lo, hi, degree)
    half = float(Z(np.pi / 2))
    T = 2.0 * half
    square = poly.var == "v"

    def evaluator(z):
        scalar = np.ndim(z) == 0
        z = np.atleast_1d(np.asarray(z, dtype=float)) - params.z0
        zf = np.mod(z, T)
        zf = np.where(zf > half, T - zf, zf)
        theta = np.pi / 2 * zf / half            # monotone initial guess
        for _ in range(60):
            r = Z(theta) - zf
            step = r / h(theta)
            theta = np.clip(theta - step, 0.0, np.pi / 2)
            if np.max(np.abs(r)) < 1e-14 * max(half, 1.0):
                break
        w = lo + (hi - lo) * np.sin(theta) ** 2
        u = w * w if square else w
        return float(u[0]) if scalar else u

    return WaveProfile(spec=spec, params=params, u_minus=cls.u_minus,
                       u_plus=cls.u_plus, period=T, evaluator=evaluator,
                       classification=cls)


# ---------------------------------------------------------------------------
# explicit families
# ---------------------------------------------------------------------------

def cnoidal_eval(alpha: float, beta: float, gamma: float, z0: float, z):
    """KdV cnoidal wave  u = beta + (alpha-beta) cn^2(sqrt((alpha-gamma)/12)(z+z0); m),
    m = (alpha-beta)/(alpha-gamma); solves u_z^2 = (alpha-u)(u-beta)(u-gamma)/3.
    Crest u = alpha at z = -z0; period 4 sqrt(3) K(m)/sqrt(alpha-gamma)."""
    if not gamma < beta < alpha:
        raise DomainError("need gamma < beta < alpha")
    m = (alpha - beta) / (alpha - gamma)
    nu = np.sqrt((alpha - gamma) / 12.0)
    cn = jacobi_cn(nu * (np.asarray(z, float) + z0), m)
    return beta + (alpha - beta) * cn ** 2


def cnoidal_period(alpha: float, beta: float, gamma: float) -> float:
    m = (alpha - beta) / (alpha - gamma)
    return 4.0 * np.sqrt(3.0) * elliptic_K(m) / np.sqrt(alpha - gamma)


def dnoidal_eval(E: float, c: float, z):
    """Focusing-mKdV dnoidal wave (a = 0, c < 0, E < 0):

        u = k2 dn(k2 z / sqrt(6); k),   k^2 = 1 - k1^2/k2^2,
        k1^2, k2^2 = -3(c +- sqrt(c^2 + 4E/3)),

    solving u_z^2 = 2E - c u^2 - u^4/6."""
    disc = c * c + 4.0 * E / 3.0
    if not (c < 0.0 and E < 0.0 and disc > 0.0):
        raise DomainError("dnoidal branch needs c < 0, E < 0, c^2 + 4E/3 > 0")
    k1sq = -3.0 * (c + np.sqrt(disc))
    k2sq = -3.0 * (c - np.sqrt(disc))
    k2 = np.sqrt(k2sq)
    m = 1.0 - k1sq / k2sq
    return k2 * jacobi_dn(k2 * np.asarray(z, float) / np.sqrt(6.0), m)


def dnoidal_period(E: float, c: float) -> float:
    disc = c * c + 4.0 * E / 3.0
    k2sq = -3.0 * (c - np.sqrt(disc))
    m = 1.0 - (-3.0 * (c + np.sqrt(disc))) / k2sq
    return 2.0 * elliptic_K(m) * np.sqrt(6.0) / np.sqrt(k2sq)
