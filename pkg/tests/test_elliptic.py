import numpy as np
import pytest
import scipy.special as sp

from modwave import elliptic_K, jacobi_cn, jacobi_dn, jacobi_sn, jacobi_sn_cn_dn
from modwave.errors import DomainError


def test_K_degenerate_modulus():
    assert elliptic_K(0.0) == pytest.approx(np.pi / 2, abs=1e-15)


def test_K_against_scipy():
    for m in (0.1, 0.5, 0.9, 0.999):
        assert elliptic_K(m) == pytest.approx(float(sp.ellipk(m)), rel=1e-13)


def test_cn_modulus_zero_is_cos():
    for z in (0.0, 1.0, np.pi / 2):
        assert jacobi_cn(z, 0.0) == pytest.approx(np.cos(z), abs=1e-15)


def test_sech_limit():
    # m -> 1^- : cn -> sech
    m = 1.0 - 1e-8
    for z in (0.3, 1.0, 2.0):
        assert jacobi_cn(z, m) == pytest.approx(1.0 / np.cosh(z), abs=1e-3)


def test_against_scipy_ellipj():
    zs = np.linspace(-8.0, 8.0, 41)
    for m in (0.05, 0.3, 0.6, 0.9, 0.99):
        sn, cn, dn = jacobi_sn_cn_dn(zs, m)
        s2, c2, d2, _ = sp.ellipj(zs, m)
        assert np.max(np.abs(sn - s2)) < 1e-12
        assert np.max(np.abs(cn - c2)) < 1e-12
        assert np.max(np.abs(dn - d2)) < 1e-12


def test_bounds():
    zs = np.linspace(0.0, 20.0, 101)
    for m in (0.2, 0.8):
        sn, cn, dn = jacobi_sn_cn_dn(zs, m)
        assert np.all(np.abs(sn) <= 1 + 1e-12)
        assert np.all(np.abs(cn) <= 1 + 1e-12)
        assert np.all(np.abs(dn) <= 1 + 1e-12)


def test_identity_sn2_cn2():
    zs = np.linspace(0.0, 10.0, 37)
    sn, cn, dn = jacobi_sn_cn_dn(zs, 0.7)
    assert np.max(np.abs(sn ** 2 + cn ** 2 - 1)) < 1e-12
    assert np.max(np.abs(dn ** 2 + 0.7 * sn ** 2 - 1)) < 1e-12


def test_domain_errors():
    for m in (-0.1, 1.0, 1.5):
        with pytest.raises(DomainError):
            elliptic_K(m)
        with pytest.raises(DomainError):
            jacobi_sn(1.0, m)
        with pytest.raises(DomainError):
            jacobi_dn(1.0, m)


def test_dn_quarter_period():
    # dn(K(m)) = sqrt(1-m); the naive Landen quotient form is 0/0 here
    for m in (0.3, 0.7321, 0.95):
        K = elliptic_K(m)
        assert jacobi_dn(K, m) == pytest.approx(np.sqrt(1 - m), rel=1e-10)
        assert abs(jacobi_cn(K, m)) < 1e-12
