import os

import pytest

import ap2

CATALOG = os.environ.get("AP2_BUNDLED_CATALOG")


def test_build_and_group_ops():
    g = ap2.build_family("extraspecial_plus p=3")
    assert g.order == 27
    assert len(g) == 27
    assert g.exponent == 3
    assert not g.abelian
    assert g.is_p_group(3)
    e = g.identity
    assert g.mul(e, 5) == 5
    assert g.mul(5, g.inverse(5)) == e
    assert g.element_order(e) == 1
    assert "order 27" in repr(g)


def test_subgroup_helpers():
    g = ap2.build_family("extraspecial_plus p=3")
    z = ap2.center(g)
    assert len(z) == 3
    assert ap2.derived_subgroup(g) == z
    assert len(ap2.centralizer(g, z)) == 27
    assert len(ap2.closure(g, [x for x in range(27) if x != g.identity][:2])) >= 3


def test_direct_product_and_from_table():
    c2 = ap2.from_table("C2", [[0, 1], [1, 0]])
    assert c2.order == 2
    v4 = ap2.direct_product(c2, c2)
    assert v4.order == 4 and v4.abelian
    with pytest.raises(ValueError):
        ap2.from_table("bad", [[0, 0], [0, 0]])


def test_theorem_and_analyze_reports():
    g = ap2.build_family("jordan_semidirect d=3 p=3")
    verdict = ap2.check_theorem(g, 3)
    assert verdict["outcome"] == "single_degree"
    assert verdict["hypotheses"] == {
        "p_odd": True,
        "derived_rank2": True,
        "center_cyclic": True,
    }
    assert verdict["signature"] == "single_degree(0, 3)"

    report = ap2.analyze("jordan33", g, 3)
    assert report["schema"] == "ap2.analysis.v1"
    assert report["group"]["order"] == 81
    assert report["homology"]["signature"] == "single_degree(0, 3)"


def test_limits_surface_as_cap_error():
    with pytest.raises(RuntimeError):
        ap2.build_family("jordan_semidirect d=3 p=5", max_order=100)


@pytest.mark.skipif(CATALOG is None, reason="bundled catalog path not set")
def test_verify_over_bundled_catalog():
    run = ap2.verify(CATALOG, mode="theorem", jobs=2)
    assert run["schema"] == "ap2.verify.v1"
    assert run["summary"]["violations"] == 0
    assert run["summary"]["entries"] == len(run["results"])
    names = [row["name"] for row in run["results"]]
    assert "jordan33" in names
