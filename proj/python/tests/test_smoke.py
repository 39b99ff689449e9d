import pytest

import liebider as lb


def test_catalog_and_jacobi():
    assert "sl2" in lb.catalog_names()
    sl2 = lb.Algebra.catalog("sl2")
    assert sl2.dim == 3
    assert lb.check_jacobi(sl2) == []
    assert lb.center(sl2)["dim"] == 0
    with pytest.raises(KeyError):
        lb.Algebra.catalog("nope")


def test_sl2_spaces():
    m = lb.adjoint("sl2")
    assert lb.centroid(m)["dim"] == 1
    assert lb.skew_biderivations(m)["dim"] == 1
    assert lb.commuting_maps(m)["dim"] == 1
    assert lb.check_module(m) == []


def test_json_round_trip():
    h = lb.Algebra.catalog("heisenberg")
    j = h.to_json()
    back = lb.Algebra.from_json(j)
    assert back.to_json() == j
    with pytest.raises(lb.JsonInputError):
        lb.Algebra.from_json('{"field": "Q", "dim": 2, "brackets": [{"i": 1, "j": 0, "coeffs": {}}]}')


def test_heisenberg_tower():
    t = lb.center_tower(lb.Algebra.catalog("heisenberg"))
    # H / Z is abelian, so the tower collapses there
    assert t["dims"] == [3, 2]
    assert t["collapsed"]


def test_oracle_matches_solver():
    m = lb.adjoint("nonabelian2", 3)
    r = lb.oracle(m, "skew")
    assert r["closed"]
    assert r["dim"] == lb.skew_biderivations(m)["dim"]
    with pytest.raises(ValueError):
        lb.oracle(lb.adjoint("sl2"), "skew")


def test_lift_obstruction():
    assert lb.lift_obstruction(0, 6)["solvable"]
    assert not lb.lift_obstruction("1", 6)["solvable"]
    assert lb.lift_obstruction("1", 6, c3=False)["solvable"]


def test_window_and_reproduce():
    w = lb.window("wab", 4, a="1/2", b="1/3")
    assert w.is_partial
    assert lb.check_jacobi(w) == []
    assert "thm-2.3-sl2" in lb.registry_names()
    assert lb.reproduce("thm-2.3-sl2")["passed"]
