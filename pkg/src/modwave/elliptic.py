"""Jacobi elliptic functions and the complete elliptic integral K.

K is computed by the arithmetic-geometric mean; sn, cn, dn by the
descending Landen (Gauss) transformation, A&S 16.4 / DLMF 22.20(ii).
Parameter convention: m = k^2 (the elliptic *parameter*), m in [0, 1).
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError

_MAX_ITER = 40


def _check_m(m: float) -> float:
    m = float(m)
    if not 0.0 <= m < 1.0:
        raise DomainError(f"elliptic parameter m={m} outside [0, 1)")
    return m


def elliptic_K(m: float) -> float:
    """Complete elliptic integral of the first kind, K(m) = pi/(2 agm(1, sqrt(1-m)))."""
    m = _check_m(m)
    a, b = 1.0, np.sqrt(1.0 - m)
    for _ in range(_MAX_ITER):
        if abs(a - b) <= 1e-16 * a:
            break
        a, b = 0.5 * (a + b), np.sqrt(a * b)
    return np.pi / (2.0 * a)


def jacobi_sn_cn_dn(u, m: float):
    """sn(u|m), cn(u|m), dn(u|m) for real u (scalar or array)."""
    m = _check_m(m)
    u = np.asarray(u, dtype=float)
    if m == 0.0:
        return np.sin(u), np.cos(u), np.ones_like(u)
    # descending Landen: AGM scale then backward phase recursion
    a = [1.0]
    c = [np.sqrt(m)]
    b = np.sqrt(1.0 - m)
    n = 0
    while abs(c[n]) > 1e-16 * a[n] and n < _MAX_ITER:
        a.append(0.5 * (a[n] + b))
        c.append(0.5 * (a[n] - b))
        b = np.sqrt(a[n] * b)
        n += 1
    phi = (2.0 ** n) * a[n] * u
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + np.arcsin(np.clip(c[j] / a[j] * np.sin(phi), -1.0, 1.0)))
    sn = np.sin(phi)
    cn = np.cos(phi)
    # dn via the exact invariant; the cos(phi_1 - phi_0) quotient form is
    # 0/0 at quarter periods
    dn = np.sqrt(1.0 - m * sn ** 2)
    if u.ndim == 0:
        return float(sn), float(cn), float(dn)
    return sn, cn, dn


def jacobi_sn(u, m: float):
    return jacobi_sn_cn_dn(u, m)[0]


def jacobi_cn(u, m: float):
    return jacobi_sn_cn_dn(u, m)[1]


def jacobi_dn(u, m: float):
    return jacobi_sn_cn_dn(u, m)[2]
