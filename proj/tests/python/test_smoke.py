import json

import numpy as np
import pytest

import cspin

I2 = np.eye(2, dtype=complex)
BASE = np.array([1, 0, 0, 0], dtype=complex)


def test_clifford_anticommutators():
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    for mu in range(4):
        for nu in range(4):
            g, h = cspin.gamma(mu), cspin.gamma(nu)
            assert np.array_equal(g @ h + h @ g, 2 * eta[mu, nu] * np.eye(4))
    omega = cspin.volume_form()
    assert np.allclose(omega @ omega, np.eye(4), atol=1e-14)


def test_sigma_round_trip():
    v = np.array([1 + 2j, 0.5, -1j, 3], dtype=complex)
    assert np.allclose(cspin.sigma_unmap(cspin.sigma_map(v)), v, atol=1e-15)
    assert abs(np.linalg.det(cspin.sigma_map(v)) - cspin.eta(v, v)) < 1e-12


def test_classify():
    assert cspin.classify(I2)["tag"] == "mass"
    assert cspin.classify(np.zeros((2, 2)))["tag"] == "zero"
    assert cspin.classify(np.diag([1, 0]))["tag"] == "null"


@pytest.mark.parametrize("method", ["beta1", "beta2", "beta3", "beta3p"])
@pytest.mark.parametrize("z_m", [1, 1j, 2 * np.exp(1j * np.pi / 3)])
def test_boost_embedding(method, z_m):
    a, b = cspin.random_spin(3, 0.7)
    v = cspin.act(a, b, z_m * BASE)
    ba, bb = cspin.boost(method, v, z_m)
    assert np.allclose(cspin.act(ba, bb, z_m * BASE), v, atol=1e-9)


def test_wigner_cocycle_on_little_group():
    a, _ = cspin.random_spin(5, 1.0)
    h = cspin.wigner_cocycle("beta3", a, a, BASE, 1.0)
    assert np.allclose(h, a, atol=1e-12)


def test_errors_carry_codes():
    with pytest.raises(cspin.CspinError) as info:
        cspin.boost("beta2", 2 * BASE, 1.0)
    assert info.value.code == "OffOrbit"
    with pytest.raises(cspin.CspinError) as info:
        cspin.boost("wigner", 1j * BASE, 1j)
    assert info.value.code == "NotRealMassShell"


def test_radon_nikodym_identity():
    assert cspin.radon_nikodym(I2, I2, 0.3, -0.2, 1.1, 1.0) == 1.0


def test_sample_chart_deterministic():
    x = cspin.sample_chart(20, seed=4, z_m=1j)
    assert x.shape == (20, 6)
    assert np.array_equal(x, cspin.sample_chart(20, seed=4, z_m=1j))


def test_verify_and_cli():
    report = cspin.verify("clifford", samples=100)
    assert report["pass"]
    assert "clifford" in cspin.suite_names()
    code, out, _ = cspin.run_cli(["classify", "--vector", "[[1,0],[0,0],[0,0],[0,0]]"])
    assert code == 0
    assert json.loads(out)["class"]["tag"] == "mass"
    assert cspin.run_cli(["verify", "--suite", "bogus"])[0] == 2
