import pytest

from colorpart.etatheta import DUAL_KINDS, ThetaKind, check_theta_identity, theta_direct, theta_eta
from colorpart.series import SeriesError
from conftest import naive_mul, naive_product


def test_pentagonal_direct():
    # exponents (3k^2 - k)/2 for k = 0, 1, -1, 2, -2 are 0, 1, 2, 5, 7
    assert theta_direct(ThetaKind.PENTAGONAL_F1, 7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_cube_direct():
    assert theta_direct(ThetaKind.CUBE_F1, 3).coeffs == (1, -3, 0, 5)


def test_psi_direct():
    assert theta_direct(ThetaKind.PSI, 6).coeffs == (1, 1, 0, 1, 0, 0, 1)


def test_pq_has_no_direct_form():
    with pytest.raises(SeriesError):
        theta_direct(ThetaKind.PQ, 10)


def test_phi_has_no_eta_form():
    with pytest.raises(SeriesError):
        theta_eta(ThetaKind.PHI, 10)


@pytest.mark.parametrize("kind", [ThetaKind.PSI, ThetaKind.LEPQ_F2_5_F1_2])
def test_eta_matches_direct_t500(kind):
    assert theta_eta(kind, 500) == theta_direct(kind, 500)


def test_pq_constant_term():
    assert theta_eta(ThetaKind.PQ, 0).coeffs == (1,)


def test_pq_against_naive_products():
    t = 40
    f = lambda m: naive_product(t, m)
    num = naive_mul(naive_mul(f(2), f(3), t), f(3), t)
    from colorpart.series import Series

    den = Series(naive_mul(f(1), f(6), t)).invert()
    assert theta_eta(ThetaKind.PQ, t) == Series(num) * den


@pytest.mark.parametrize("kind", DUAL_KINDS, ids=lambda k: k.name)
def test_dual_forms_agree_t2000(kind):
    assert check_theta_identity(kind, 2000) == (True, None)


def test_check_requires_two_forms():
    with pytest.raises(SeriesError):
        check_theta_identity(ThetaKind.PQ, 10)


def test_value_ranges():
    psi = theta_direct(ThetaKind.PSI, 1000).coeffs
    phi = theta_direct(ThetaKind.PHI, 1000).coeffs
    assert set(psi) == {0, 1}
    assert set(phi) == {0, 1, 2} and phi[0] == 1
    squares = {k * k for k in range(1, 32)}
    assert all(phi[n] == (2 if n in squares else 0) for n in range(1, 1001))


@pytest.mark.parametrize("kind", [k for k in ThetaKind if k is not ThetaKind.PQ], ids=lambda k: k.name)
def test_prefix_stable_under_deeper_truncation(kind):
    shallow = theta_direct(kind, 137).coeffs
    deep = theta_direct(kind, 1000).coeffs
    assert deep[:138] == shallow


def test_modular_ring():
    assert theta_direct(ThetaKind.CUBE_F1, 3, 3).coeffs == (1, 0, 0, 2)
