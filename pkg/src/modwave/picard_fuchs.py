"""Picard-Fuchs linear system and the parameter Jacobian of (T, M, P).

For a degree-n potential polynomial P(w) = a0 + a1 w + ... + an w^n with
only simple roots, the 2n-1 singular moments

    I_k = oint mu(w) w^k / (2 P)^{3/2} dw      (regularized loop integrals,
                                                scaled so the system below
                                                closes; mu is the moment
                                                measure weight)

satisfy a linear system whose matrix is the Sylvester matrix of (P, P'):
n-1 band rows of P-coefficients with right side zeta_m, and n band rows of
P'-coefficients with right side 2m zeta_{m-1} (zero for m = 0).  Solving
it expresses every I_k through the n-1 regular moments, which is what
makes the instability index explicitly computable.

Derivatives of the regular moments follow from differentiating under the
(regularized) integral sign; with V = F + (c/2)w_u^2 - a w_u the
oracle-verified map is

    d zeta_k / dE = -I_k / 2
    d zeta_k / da = -I_{k+da} / 2     da = 1 (u-side), 2 (v-side)
    d zeta_k / dc = +I_{k+dc} / 4     dc = 2 (u-side), 4 (v-side)

For the Schamel quintic the c-derivative needs I_9, one index beyond the
square system; it is produced by extending the integration-by-parts
recurrence one more row.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.linalg import lu_factor, lu_solve

from .equations import EquationSpec, PotentialPolynomial, WaveParams
from .errors import IllConditioned, SingularSystem
from .waves import MomentTable, zeta_moments

COND_MAX = 1e12


@dataclass
class PicardFuchsSystem:
    matrix: np.ndarray          # (2n-1) x (2n-1) Sylvester matrix of (P, P')
    rhs: np.ndarray
    poly: PotentialPolynomial
    moments: MomentTable
    solution: np.ndarray = None
    cond: float = np.nan


def build_system(poly: PotentialPolynomial, moments: MomentTable) -> PicardFuchsSystem:
    """Assemble the (2n-1)-square system: n-1 shifted rows of P-coefficients
    with rhs (zeta_0..zeta_{n-2}), then n shifted rows of P'-coefficients
    with rhs (0, 2 zeta_0, ..., 2(n-1) zeta_{n-2})."""
    a = np.asarray(poly.coeffs, dtype=float)
    n = poly.degree
    if n < 3:
        raise ValueError("Picard-Fuchs machinery needs degree >= 3")
    if len(moments.zeta) < n - 1:
        raise ValueError(f"need zeta_0..zeta_{n-2}")
    N = 2 * n - 1
    A = np.zeros((N, N))
    rhs = np.zeros(N)
    for i in range(n - 1):
        A[i, i:i + n + 1] = a
        rhs[i] = moments.zeta[i]
    da = npoly.polyder(a)                  # (a1, 2 a2, ..., n an)
    for i in range(n):
        A[n - 1 + i, i:i + n] = da
        rhs[n - 1 + i] = 0.0 if i == 0 else 2.0 * i * moments.zeta[i - 1]
    return PicardFuchsSystem(matrix=A, rhs=rhs, poly=poly, moments=moments)


def solve_moments(system: PicardFuchsSystem, extend_to: int = None,
                  cond_max: float = COND_MAX) -> np.ndarray:
    """LU solve (partial pivoting) for I_0..I_{2n-2}, optionally extended to
    I_{extend_to} by further integration-by-parts rows

        sum_j j a_j I_{j+m-1} = 2 m zeta_{m-1},   m = n, n+1, ...

    Raises SingularSystem on a repeated root of P, IllConditioned above
    cond_max, and on residual failure."""
    A, rhs = system.matrix, system.rhs
    cond = float(np.linalg.cond(A))
    system.cond = cond
    if not np.isfinite(cond):
        raise SingularSystem("Picard-Fuchs matrix is singular (repeated root)")
    if cond > cond_max:
        raise IllConditioned(f"condition number {cond:.3e} exceeds {cond_max:.1e}")
    try:
        lu, piv = lu_factor(A)
    except np.linalg.LinAlgError as exc:    # pragma: no cover
        raise SingularSystem(str(exc)) from exc
    I = lu_solve((lu, piv), rhs)
    resid = np.linalg.norm(A @ I - rhs)
    if resid > 1e-10 * max(np.linalg.norm(rhs), 1.0):
        raise IllConditioned(f"residual {resid:.3e} too large")
    n = system.poly.degree
    if extend_to is not None and extend_to > 2 * n - 2:
        a = np.asarray(system.poly.coeffs, dtype=float)
        zeta = system.moments.zeta
        I = np.concatenate([I, np.zeros(extend_to - (2 * n - 2))])
        for m in range(n, extend_to - n + 2):
            if m - 1 >= len(zeta):
                raise ValueError(f"extension to I_{extend_to} needs zeta_{m-1}")
            acc = 2.0 * m * zeta[m - 1]
            for j in range(1, n):
                acc -= j * a[j] * I[j + m - 1]
            I[n + m - 1] = acc / (n * a[n])
    system.solution = I
    system.moments.I = I
    return I


@dataclass
class ParamJacobian:
    """All nine partials of (T, M, P) with respect to (a, E, c) and the named
    bracket determinants.  Rows of J are (T, M, P), columns (a, E, c).

    The two brackets involving the c column ({T,P}_{E,c} and
    {T,M,P}_{a,E,c}) are reported in the orientation of the classical
    index formulas (the c column negated relative to the raw J), so that
    {T,M,P}_{a,E,c} > 0 for KdV waves and Delta_MI takes its standard
    form verbatim; the raw matrix J is untouched, so finite-difference
    oracles compare against J entrywise.
    """

    J: np.ndarray
    T: float
    M: float
    P: float
    T_E: float
    TM_aE: float
    TMP_aEc: float
    TP_Ec: float
    MP_aE: float
    cond: float

    @classmethod
    def from_matrix(cls, J: np.ndarray, T: float, M: float, P: float,
                    cond: float = np.nan) -> "ParamJacobian":
        return cls(
            J=J, T=T, M=M, P=P,
            T_E=J[0, 1],
            TM_aE=float(np.linalg.det(J[np.ix_([0, 1], [0, 1])])),
            TMP_aEc=-float(np.linalg.det(J)),
            TP_Ec=-float(np.linalg.det(J[np.ix_([0, 2], [1, 2])])),
            MP_aE=float(np.linalg.det(J[np.ix_([1, 2], [0, 1])])),
            cond=cond,
        )


def param_jacobian(spec: EquationSpec, params: WaveParams, branch: int = 0,
                   tol_quad: float = None) -> ParamJacobian:
    """Full pipeline: moments -> Picard-Fuchs solve -> gradient map -> brackets."""
    kw = {} if tol_quad is None else {"tol_quad": tol_quad}
    poly_probe = None
    # moment demand: rhs needs zeta_0..zeta_{n-2}; the extension rows (if any)
    # need zeta up to m-1; (T,M,P) sit at tmp_indices.
    from .equations import potential_polynomial
    poly_probe = potential_polynomial(spec, params)
    n = poly_probe.degree
    i0, i1, i2 = poly_probe.tmp_indices
    da, dE_, dc = poly_probe.grad_offsets
    need_I = i2 + dc
    k_need = max(n - 2, i2)
    if need_I > 2 * n - 2:
        k_need = max(k_need, need_I - n)       # zeta_{m-1} for extension rows
    moments = zeta_moments(spec, params, k_need, branch, **kw)
    system = build_system(moments.poly, moments)
    I = solve_moments(system, extend_to=need_I if need_I > 2 * n - 2 else None)
    J = np.zeros((3, 3))
    for row, k in enumerate((i0, i1, i2)):
        J[row, 0] = -I[k + da] / 2.0
        J[row, 1] = -I[k] / 2.0
        J[row, 2] = +I[k + dc] / 4.0
    T, M, P = moments.tmp
    return ParamJacobian.from_matrix(J, T, M, P, cond=system.cond)
