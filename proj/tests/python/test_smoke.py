"""End-to-end smoke tests for the python bindings."""

import math

import pytest

import repgrowth as rg


def test_growth_series_sl2():
    spec = rg.RepSpec("A1", [([1], 1)])
    assert spec.dim == 2
    assert spec.u == 1
    rows = rg.growth_series(spec, 6)
    assert [r["b"] for r in rows] == [1, 2, 3, 6, 10, 20]
    assert [r["support_size"] for r in rows] == [2, 3, 4, 5, 6, 7]


def test_growth_series_torus():
    spec = rg.RepSpec("T1", [([1], 1), ([0], 1), ([-1], 1)])
    rows = rg.growth_series(spec, 5)
    assert rows[-1]["b"] == 243
    assert rows[-1]["b_normalized"] == 1.0


def test_normalized_mode():
    spec = rg.RepSpec("A2", [([1, 0], 1)])
    rows = rg.growth_series(spec, 10, mode="normalized")
    assert all(r["b"] is None for r in rows)
    assert all(r["b_normalized"] > 0 for r in rows)


def test_group_info():
    info = rg.group_info("G2")
    assert info["u"] == 6
    assert info["r"] == 2
    product = rg.group_info("A2xT1")
    assert product["rank_ss"] == 2
    assert product["rank_torus"] == 1
    assert len(product["positive_roots"]) == 3


def test_weyl_dimension():
    assert rg.weyl_dimension("A2", [1, 1]) == 8
    assert rg.weyl_dimension("E8", [0, 0, 0, 0, 0, 0, 0, 1]) == 248
    with pytest.raises(ValueError):
        rg.weyl_dimension("A1", [1, 0])


def test_rep_character():
    spec = rg.RepSpec("A1", [([1], 1)])
    assert spec.character() == {(1,): 1, (-1,): 1}


def test_decompose_routes_agree():
    spec = rg.RepSpec("A2", [([1, 0], 1)])
    for n in range(1, 4):
        assert rg.decompose(spec, n) == rg.peel_decompose(spec, n)
    cubed = rg.decompose(spec, 3)
    assert cubed == {(0, 0): 1, (1, 1): 2, (3, 0): 1}


def test_local_clt():
    spec = rg.RepSpec("A1", [([1], 1)])
    estimate = rg.local_clt(spec, 100, [0])
    exact = math.comb(100, 50) / 2**100
    assert abs(estimate / exact - 1) < 0.01
    assert rg.local_clt(spec, 100, [1]) == 0.0


def test_approximations():
    spec = rg.RepSpec("A1", [([1], 1)])
    exact_a0 = (math.comb(100, 50) - math.comb(100, 49)) / 2**100
    assert abs(rg.approx_a_lambda(spec, 100, [0]) / exact_a0 - 1) < 0.10
    exact_b = math.comb(100, 50) / 2**100
    assert abs(rg.approx_b_n(spec, 100) / exact_b - 1) < 0.10


def test_fit_exponent():
    ns = list(range(10, 101))
    values = [n**-1.5 for n in ns]
    fit = rg.fit_exponent(ns, values, 10, 100, -1.5)
    assert abs(fit["r_hat"] + 1.5) < 1e-9
    assert abs(fit["C_hat"] - 1.0) < 1e-9


def test_moments():
    spec = rg.RepSpec("A1", [([1], 1)])
    moments = spec.moments()
    assert moments["spanning"] is True
    assert moments["covolume"] == 2
    assert abs(moments["covariance"][0][0] - 1.0) < 1e-12


def test_degenerate_covariance_raises():
    spec = rg.RepSpec("T2", [([1, 1], 1), ([-1, -1], 1)])
    with pytest.raises(RuntimeError):
        rg.local_clt(spec, 10, [0, 0])


def test_run_checks():
    spec = rg.RepSpec("B2", [([1, 0], 1)])
    assert all(item["pass"] for item in rg.run_checks(spec, 3))
