"""Modulational-instability index, effective dispersion cubic, and the
per-equation closed-form classifiers.

With S := {T,P}_{E,c} + 2{M,P}_{a,E} and D := {T,M,P}_{a,E,c} (brackets
as reported by ParamJacobian, whose c-column orientation was fixed
against the mKdV root-structure dichotomy and direct Floquet-Bloch
spectra),

    Delta_MI = S^3/2 - (27/4) D^2,
    D(nu)    = -nu^3 + (S/2) nu - D/2.

Delta_MI is the discriminant of the depressed cubic: three distinct real
roots iff Delta_MI > 0 (modulational stability), one real root and a
complex-conjugate pair iff Delta_MI < 0 (instability).  The physical
Bloch-branch slopes lambda_j(xi) = i mu_j xi recover from the roots as
mu_j = -T/nu_j (measured law, regression tested against the Bloch
eigensolver).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .conventions import fingerprint
from .equations import (EquationSpec, WaveParams, discriminant, mkdv_spec,
                        potential_polynomial, potential_roots)
from .errors import (DegenerateDiscriminant, DegenerateRoots, HypothesisFailed,
                     ModwaveError)
from .picard_fuchs import ParamJacobian, param_jacobian

TOL_HYP = 1e-10
TOL_IM = 1e-8
TOL_SEP = 1e-8


def _index_parts(J: ParamJacobian):
    S = J.TP_Ec + 2.0 * J.MP_aE
    D = J.TMP_aEc
    return S, D


def check_hypotheses(J: ParamJacobian, tol_hyp: float = TOL_HYP) -> dict:
    """Nondegeneracy flags; raises HypothesisFailed when any of T_E,
    {T,M}_{a,E}, {T,M,P}_{a,E,c} vanishes to tolerance."""
    flags = {"T_E": J.T_E, "TM_aE": J.TM_aE, "TMP_aEc": J.TMP_aEc}
    for name, val in flags.items():
        if abs(val) < tol_hyp:
            raise HypothesisFailed(f"{name} = {val:.3e} within tol_hyp of zero")
    return flags


def delta_mi(J: ParamJacobian, tol_hyp: float = TOL_HYP) -> float:
    check_hypotheses(J, tol_hyp)
    S, D = _index_parts(J)
    return 0.5 * S ** 3 - 6.75 * D ** 2


def effective_dispersion_roots(J: ParamJacobian, tol_hyp: float = TOL_HYP) -> np.ndarray:
    """Roots nu_j of the depressed cubic, sorted by (Re, Im); they sum to 0."""
    check_hypotheses(J, tol_hyp)
    S, D = _index_parts(J)
    r = np.roots([-1.0, 0.0, 0.5 * S, -0.5 * D])
    return np.sort_complex(r)


def modulation_slope_prediction(J: ParamJacobian, tol_hyp: float = TOL_HYP) -> np.ndarray:
    """Predicted physical Bloch slopes mu_j = -T/nu_j, sorted by (Re, Im)."""
    nus = effective_dispersion_roots(J, tol_hyp)
    return np.sort_complex(-J.T / nus)


@dataclass
class StabilityReport:
    delta_mi: float
    mu_roots: np.ndarray                    # roots of the depressed cubic
    classification: str                     # stable/unstable/degenerate/hypothesis-failed
    hypothesis_flags: dict
    diagnostics: dict = field(default_factory=dict)

    @property
    def is_stable(self) -> bool:
        return self.classification == "stable"


def _tol_deg(S: float, D: float) -> float:
    return 1e-8 * max(abs(S) ** 3, 6.75 * D * D, 1.0)


def classify(spec: EquationSpec, params: WaveParams, branch: int = 0,
             tol_hyp: float = TOL_HYP, tol_quad: float = None) -> StabilityReport:
    """Full pipeline: classification -> quadrature -> Picard-Fuchs ->
    Delta_MI and the cubic roots.  Near-zero indices report as degenerate,
    upstream nondegeneracy failures as hypothesis-failed."""
    diagnostics = {"convention_fingerprint": fingerprint(), "branch": branch}
    try:
        J = param_jacobian(spec, params, branch=branch, tol_quad=tol_quad)
        flags = check_hypotheses(J, tol_hyp)
    except HypothesisFailed as exc:
        return StabilityReport(np.nan, np.full(3, np.nan, complex),
                               "hypothesis-failed", {}, {**diagnostics, "reason": str(exc)})
    except (DegenerateRoots, ModwaveError) as exc:
        return StabilityReport(np.nan, np.full(3, np.nan, complex),
                               "hypothesis-failed", {},
                               {**diagnostics, "reason": f"{type(exc).__name__}: {exc}"})
    S, D = _index_parts(J)
    delta = 0.5 * S ** 3 - 6.75 * D ** 2
    roots = np.sort_complex(np.roots([-1.0, 0.0, 0.5 * S, -0.5 * D]))
    tol = _tol_deg(S, D)
    if delta > tol:
        label = "stable"
    elif delta < -tol:
        label = "unstable"
    else:
        label = "degenerate"
    diagnostics.update({
        "T": J.T, "M": J.M, "P": J.P, "S": S, "D": D,
        "pf_condition": J.cond, "tol_deg": tol, "tol_hyp": tol_hyp,
        "TP_Ec": J.TP_Ec, "MP_aE": J.MP_aE,
        "slopes": list(-J.T / roots),
    })
    return StabilityReport(delta, roots, label, flags, diagnostics)


def mkdv_root_classifier(a: float, E: float, c: float, sign: int = +1,
                         tol_disc: float = 1e-10) -> str:
    """Root-structure dichotomy for mKdV: the wave at (a, E, c) is
    modulationally stable iff the quartic E - V has four distinct real
    roots, unstable iff exactly two (plus a complex pair).  Returns
    "stable-4-real-roots" / "unstable-2-real-2-complex" / "degenerate"."""
    spec = mkdv_spec(sign)
    poly = potential_polynomial(spec, WaveParams(a, E, c))
    disc = discriminant(poly)
    scale = (1.0 + poly.coeff_norm) ** (2 * poly.degree - 2)
    if abs(disc) < tol_disc * scale:
        return "degenerate"
    try:
        real, n_pairs = potential_roots(poly)
    except DegenerateRoots:
        return "degenerate"
    if len(real) == 4:
        return "stable-4-real-roots"
    if len(real) == 2 and n_pairs == 1:
        return "unstable-2-real-2-complex"
    return "degenerate"


def kdv_closed_forms(T: float, M: float, a: float, E: float, c: float):
    """Closed forms for the canonical KdV (f = u^2/2), re-derived under the
    V = F + (c/2)u^2 - au convention:

        12 disc   = 8a^3 + 3a^2c^2 + 18aEc + 6Ec^3 - 9E^2
        T_E       = (3ET + 2Ma + Mc^2 - Tac) / (2 * 12 disc)
        {T,M}_aE  = (2T^2 a - 2MTc - M^2) / (4 * 12 disc)
        {T,M,P}   = (M^3 + 3M^2Tc - 6MT^2a - 6ET^3) / (2 * 12 disc)
        2 Delta_MI = N^2 / (512 disc^3)

    with N = a30 T^3 + a21 T^2 M + a12 T M^2 + a03 M^3 and the corrected
    coefficient table

        a30 = 8a^3 + 18aEc - 18E^2        a21 = -6a^2c - 18aE - 18Ec^2
        a12 = -12a^2 - 3ac^2 - 9Ec        a03 = c^3 + 3ac - 3E.

    Returns (T_E, {T,M}_{a,E}, {T,M,P}_{a,E,c}, 2*Delta_MI); an independent
    cross-check of the Picard-Fuchs route.
    """
    Q = 8 * a ** 3 + 3 * a ** 2 * c ** 2 + 18 * a * E * c + 6 * E * c ** 3 - 9 * E ** 2
    disc = Q / 12.0
    if disc <= 0.0:
        raise DegenerateDiscriminant(f"disc = {disc:.3e} <= 0")
    T_E = (3 * E * T + 2 * M * a + M * c ** 2 - T * a * c) / (2 * Q)
    TM_aE = (2 * T ** 2 * a - 2 * M * T * c - M ** 2) / (4 * Q)
    TMP = (6 * E * T ** 3 + 6 * M * T ** 2 * a - 3 * M ** 2 * T * c - M ** 3) / (2 * Q)
    a30 = 8 * a ** 3 + 18 * a * E * c - 18 * E ** 2
    a21 = -6 * a ** 2 * c - 18 * a * E - 18 * E * c ** 2
    a12 = -12 * a ** 2 - 3 * a * c ** 2 - 9 * E * c
    a03 = c ** 3 + 3 * a * c - 3 * E
    N = a30 * T ** 3 + a21 * T ** 2 * M + a12 * T * M ** 2 + a03 * M ** 3
    two_delta = N ** 2 / (512.0 * disc ** 3)
    return T_E, TM_aE, TMP, two_delta
