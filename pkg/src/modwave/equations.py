"""Equation specifications, effective potential, admissible-parameter classification.

The traveling-wave reduction of  u_t = u_xxx + f(u)_x  (or its nonlocal
analogue) is  (1/2) u_z^2 = E - V(u; a, c)  with effective potential

    V(u; a, c) = F(u) + (c/2) u^2 - a u,      F' = f, F(0) = 0.

Periodic waves correspond to oscillation intervals [u-, u+] on which the
potential polynomial P(u) = E - V(u) is positive with simple roots at the
endpoints.  Power-law (Schamel) nonlinearities are reduced to polynomial
form by u = v^2; the module then stores and classifies the v-side quintic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DegenerateRoots, DomainError, NonlocalUnsupported

TOL_ROOT = 1e-9          # realness/multiplicity decisions, relative to coeff norm


@dataclass(frozen=True)
class EquationSpec:
    """Which dispersive equation is being analyzed.

    kind is one of "local-polynomial", "local-power", "nonlocal".  For
    local-polynomial equations ``f_coeffs`` are the ascending coefficients
    of f.  For the power law ``f(u) = power_coeff * |u|^power_exponent``
    (Schamel: 5/2 |u|^{3/2}) profiles are positive and handled through
    u = v^2.  Nonlocal equations carry a dispersion symbol and are analyzed
    by the small-amplitude and Bloch machinery instead.
    """

    kind: str
    name: str = ""
    f_coeffs: tuple = ()
    power_exponent: float = 1.5
    power_coeff: float = 2.5
    symbol: Optional[object] = None

    def __post_init__(self):
        if self.kind not in ("local-polynomial", "local-power", "nonlocal"):
            raise DomainError(f"unknown equation kind {self.kind!r}")
        if self.kind == "local-polynomial":
            if len(self.f_coeffs) < 2 or self.f_coeffs[-1] == 0:
                raise DomainError("polynomial nonlinearity must have degree >= 1")
        if self.kind == "local-power" and self.power_exponent != 1.5:
            raise DomainError("only the Schamel exponent 3/2 is supported")

    @property
    def is_local(self) -> bool:
        return self.kind != "nonlocal"

    def F_coeffs(self) -> np.ndarray:
        """Ascending coefficients of the antiderivative F (F(0)=0)."""
        if self.kind != "local-polynomial":
            raise NonlocalUnsupported("F is polynomial only for local-polynomial specs")
        f = np.asarray(self.f_coeffs, dtype=float)
        return np.concatenate([[0.0], f / np.arange(1, len(f) + 1)])

    def fprime(self) -> Callable[[np.ndarray], np.ndarray]:
        """f'(u) as a callable (used by the Bloch assembler)."""
        if self.kind == "local-polynomial":
            der = npoly.polyder(np.asarray(self.f_coeffs, dtype=float))
            return lambda u: npoly.polyval(np.asarray(u, dtype=float), der)
        if self.kind == "local-power":
            p, s = self.power_exponent, self.power_coeff
            return lambda u: s * p * np.asarray(u, dtype=float) ** (p - 1.0)
        raise NonlocalUnsupported("pointwise f' undefined for nonlocal specs")


def kdv_spec(scale: float = 0.5) -> EquationSpec:
    """KdV, f(u) = scale*u^2.  Canonical choice scale = 1/2."""
    return EquationSpec("local-polynomial", name="kdv", f_coeffs=(0.0, 0.0, scale))


def mkdv_spec(sign: int = +1, scale: float = 1.0 / 3.0) -> EquationSpec:
    """Modified KdV, f(u) = sign*scale*u^3; sign=+1 focusing, -1 defocusing."""
    if sign not in (+1, -1):
        raise DomainError("mKdV sign must be +1 or -1")
    name = "mkdv-focusing" if sign > 0 else "mkdv-defocusing"
    return EquationSpec("local-polynomial", name=name, f_coeffs=(0.0, 0.0, 0.0, sign * scale))


def schamel_spec(coeff: float = 2.5) -> EquationSpec:
    """Schamel equation, f(u) = coeff*|u|^{3/2} on positive profiles."""
    return EquationSpec("local-power", name="schamel", power_exponent=1.5, power_coeff=coeff)


@dataclass(frozen=True)
class WaveParams:
    """ODE parameters of the profile equation: integration constant a,
    energy E, speed c, translation z0."""

    a: float
    E: float
    c: float
    z0: float = 0.0


@dataclass(frozen=True)
class PotentialPolynomial:
    """P(w) = E - V in the integration variable w (w = u, or w = v = sqrt(u)
    for Schamel).  ``weight_power`` is the extra w-power in the moment
    measure (0 for u-side, 1 for the 2v dv Schamel measure)."""

    coeffs: tuple                 # ascending
    var: str                      # "u" or "v"
    weight_power: int = 0         # measure weight w^weight_power (with factor 2 for v)
    tmp_indices: tuple = (0, 1, 2)
    grad_offsets: tuple = (1, 0, 2)   # moment-index offsets for d/da, d/dE, d/dc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, w):
        return npoly.polyval(np.asarray(w, dtype=float), np.asarray(self.coeffs))

    def derivative_coeffs(self) -> np.ndarray:
        return npoly.polyder(np.asarray(self.coeffs))

    @property
    def coeff_norm(self) -> float:
        return float(np.max(np.abs(self.coeffs)))


def effective_potential(spec: EquationSpec, a: float, c: float, u) -> float:
    """V(u; a, c) = F(u) + (c/2) u^2 - a u."""
    u = np.asarray(u, dtype=float)
    if spec.kind == "local-polynomial":
        F = npoly.polyval(u, spec.F_coeffs())
    elif spec.kind == "local-power":
        p1 = spec.power_exponent + 1.0
        F = spec.power_coeff / p1 * np.abs(u) ** p1
    else:
        raise NonlocalUnsupported("no pointwise potential for nonlocal dispersion")
    out = F + 0.5 * c * u ** 2 - a * u
    return float(out) if out.ndim == 0 else out


def potential_polynomial(spec: EquationSpec, params: WaveParams) -> PotentialPolynomial:
    """P = E - V as a polynomial, in u for polynomial f, in v for Schamel."""
    a, E, c = params.a, params.E, params.c
    if spec.kind == "local-polynomial":
        F = spec.F_coeffs()
        coeffs = -F
        coeffs[0] += E
        coeffs[1] += a
        coeffs[2] -= 0.5 * c
        return PotentialPolynomial(tuple(coeffs), var="u")
    if spec.kind == "local-power":
        # u = v^2:  P_v(v) = E + a v^2 - (c/2) v^4 - (coeff*2/5) v^5
        lead = spec.power_coeff * 2.0 / 5.0
        coeffs = (E, 0.0, a, 0.0, -0.5 * c, -lead)
        return PotentialPolynomial(coeffs, var="v", weight_power=1,
                                   tmp_indices=(1, 3, 5), grad_offsets=(2, 0, 4))
    raise NonlocalUnsupported("no potential polynomial for nonlocal dispersion")


def potential_roots(poly: PotentialPolynomial, raise_on_degenerate: bool = True):
    """Real roots of P ascending + count of complex-conjugate pairs.

    Root finding is companion-matrix based (numpy.roots).  A root is real
    if |Im| < TOL_ROOT * (1 + coeff norm); two roots closer than that are a
    repeated root and raise DegenerateRoots (parameters on the variety).
    """
    if poly.degree < 2:
        raise DomainError("potential polynomial must have degree >= 2")
    tol = TOL_ROOT * (1.0 + poly.coeff_norm)
    r = np.roots(np.asarray(poly.coeffs)[::-1])
    real = np.sort(r[np.abs(r.imag) < tol].real)
    n_complex_pairs = (len(r) - len(real)) // 2
    if len(real) >= 2 and np.min(np.diff(real)) < tol:
        if raise_on_degenerate:
            raise DegenerateRoots("repeated real root of E - V", roots=real)
    return real, n_complex_pairs


def _sylvester(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Sylvester matrix of p (deg m) and q (deg l), ascending input."""
    m, l = len(p) - 1, len(q) - 1
    S = np.zeros((m + l, m + l))
    pd, qd = p[::-1], q[::-1]
    for i in range(l):
        S[i, i:i + m + 1] = pd
    for i in range(m):
        S[l + i, i:i + l + 1] = qd
    return S


def resultant(p, q) -> float:
    return float(np.linalg.det(_sylvester(np.asarray(p, float), np.asarray(q, float))))


def discriminant(poly: PotentialPolynomial) -> float:
    """Polynomial discriminant of P via the resultant of (P, P')."""
    p = np.asarray(poly.coeffs, dtype=float)
    n = poly.degree
    return (-1.0) ** (n * (n - 1) // 2) * resultant(p, npoly.polyder(p)) / p[-1]


@dataclass(frozen=True)
class Classification:
    """Outcome of classify_parameters.  status is "periodic", "on-gamma",
    or "no-bounded-orbit".  For periodic orbits, (w_minus, w_plus) is the
    oscillation interval in the integration variable and (u_minus, u_plus)
    the physical one; ``intervals`` lists all coexisting branches."""

    status: str
    w_minus: float = np.nan
    w_plus: float = np.nan
    u_minus: float = np.nan
    u_plus: float = np.nan
    intervals: tuple = ()
    branch: int = 0

    @property
    def is_periodic(self) -> bool:
        return self.status == "periodic"


def classify_parameters(spec: EquationSpec, params: WaveParams,
                        branch: int = 0) -> Classification:
    """Decide whether (a, E, c) supports a periodic orbit.

    Periodic intervals are adjacent pairs of simple real roots with P > 0
    between them, ordered by left endpoint; ``branch`` selects among
    coexisting families (focusing mKdV has two).  Repeated roots classify
    as on-gamma, no positivity interval as no-bounded-orbit.
    """
    if not spec.is_local:
        raise NonlocalUnsupported("classification requires a local equation")
    poly = potential_polynomial(spec, params)
    try:
        real, _ = potential_roots(poly)
    except DegenerateRoots:
        return Classification(status="on-gamma")
    intervals = []
    for i in range(len(real) - 1):
        lo, hi = real[i], real[i + 1]
        if poly.var == "v" and lo <= 0.0:
            continue          # Schamel profiles must stay positive
        if poly(0.5 * (lo + hi)) > 0.0:
            intervals.append((lo, hi))
    if not intervals:
        return Classification(status="no-bounded-orbit")
    if not 0 <= branch < len(intervals):
        raise DomainError(f"branch {branch} out of range; {len(intervals)} interval(s)")
    lo, hi = intervals[branch]
    if poly.var == "v":
        u_lo, u_hi = lo * lo, hi * hi
    else:
        u_lo, u_hi = lo, hi
    return Classification(status="periodic", w_minus=lo, w_plus=hi,
                          u_minus=u_lo, u_plus=u_hi,
                          intervals=tuple(intervals), branch=branch)


def kdv_params_from_roots(alpha: float, beta: float, gamma: float) -> WaveParams:
    """(alpha, beta, gamma) -> (a, E, c) for canonical KdV (f = u^2/2).

    Re-derived under the V = F + (c/2)u^2 - au convention so that E - V =
    -(u-alpha)(u-beta)(u-gamma)/6 exactly:

        E = abg/6,  a = -(ab+ag+bg)/6,  c = -(a+b+g)/3.

    The c-component differs in sign from the commonly printed map; the
    round trip through potential_roots is exact with this form.
    """
    if not gamma < beta < alpha:
        raise DomainError("roots must satisfy gamma < beta < alpha")
    E = alpha * beta * gamma / 6.0
    a = -(alpha * beta + alpha * gamma + beta * gamma) / 6.0
    c = -(alpha + beta + gamma) / 3.0
    return WaveParams(a=a, E=E, c=c)
