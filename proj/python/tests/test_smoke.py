import pytest

import kzindex as kz


def test_l_shape_and_parse():
    o = kz.Origami.l_shape(2, 4)
    assert o.degree == 5
    assert o.h == "(1 2)"
    assert o.v == "(1 3 4 5)"
    assert kz.Origami("h=(1 2)\nv=(1 3 4 5)\n") == o
    assert o.cone_orders == [2]
    assert o.genus == 2
    assert o.is_primitive()
    assert kz.record(o)["orbit_label"] == "A_5"


def test_errors():
    with pytest.raises(kz.InvalidShape):
        kz.Origami.l_shape(1, 3)
    with pytest.raises(kz.ParseError):
        kz.Origami("h=(1 2)\n")
    with pytest.raises(kz.InvalidDirection):
        kz.decompose(kz.Origami.l_shape(2, 4), (2, 4))
    with pytest.raises(kz.IndexExceedsCap):
        kz.index_in_sl2([((1, 1), (0, 1))], cap=50)
    assert issubclass(kz.IndexExceedsCap, kz.KzError)


def test_decompose():
    res = kz.decompose(kz.Origami.l_shape(2, 4), (2, 3))["results"][0]["decomposition"]
    assert sorted(c["f"] for c in res["cylinders"]) == [2, 3]
    assert len(res["saddle_connections"]) == 3


def test_generators_and_index():
    odd = kz.kz_generators(kz.Origami.l_shape(2, 6), [(3, 4), (0, 1)])
    assert odd == [[[2, 1], [-1, 0]], [[1, 0], [-1, 1]]]
    assert kz.index_in_sl2(odd) == 1
    even = kz.kz_generators(kz.Origami.l_shape(2, 5), [(5, 7), (6, 5)])
    assert kz.index_in_sl2(even) == 3
    assert kz.contains_minus_identity(even)


def test_orbits_and_census():
    assert len(kz.orbit(kz.Origami.l_shape(2, 4))) == 18
    assert not kz.same_orbit(kz.Origami.l_shape(2, 4), kz.Origami.l_shape(3, 3))
    assert len(kz.h2_origamis(5)) == 27
    c = kz.census(5)["results"][0]
    assert c["orbit_count"] == 2


def test_homology_and_monodromy():
    h = kz.homology(kz.Origami.l_shape(2, 4))
    assert h["status"] == "ok"
    m = kz.monodromy(kz.Origami.l_shape(2, 4), [(2, 3), (0, 1)])
    assert m["results"][0]["subgroup"]["index"] == 1


def test_verify_and_conjecture():
    assert kz.verify(2)["status"] == "ok"
    r = kz.conjecture([(3, 3)])
    assert r["results"][0]["index"] == 3
