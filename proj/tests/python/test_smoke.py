import pytest

import drgeo


def test_analyze_hamming():
    report, anomaly = drgeo.analyze("{6,4,2;1,2,3}")
    assert anomaly is None
    assert report["spectrum"]["theta_min_is_minus3"] is True
    assert report["geometry"]["tau"] == [1, 2, 3]
    assert report["classification"]["gdrg"][0]["case"] == "gdrg-viii"


def test_errors_carry_kind():
    with pytest.raises(drgeo.DrgError) as info:
        drgeo.analyze("{3,2;1,4}")
    assert info.value.args[0] == "InvalidArray"
    with pytest.raises(drgeo.DrgError):
        drgeo.normalize("{6,4;1")


def test_table7():
    rows = drgeo.ruleout_table7()
    assert [r["verdict"] for r in rows] == ["nonexistent"] * 7
    assert rows[6]["mu_bound"] == "61/6"


def test_classify_known_array():
    c = drgeo.classify("{45,30,7;1,2,27}")
    assert c["gdrg"][0]["params"] == {"alpha": 14, "beta": 9}
    assert drgeo.is_theta_min_minus3("{45,30,7;1,2,27}")
    assert not drgeo.is_theta_min_minus3("{55,36,11;1,4,45}")


def test_families():
    assert len(drgeo.families(3, labels=["gdrg-i"])) == 8


def test_graph_round_trip():
    halved = drgeo.halve(drgeo.build("lcf", "foster"), 0)
    report = drgeo.verify(halved)
    assert report["vertices"] == 45
    assert report["array"] == "{6,4,2,1;1,1,4,6}"
    assert report["classification"]["gdrg"][0]["case"] == "gdrg-ix"
    assert drgeo.verify(drgeo.build("hamming", 3, 3))["claw4"] is None
