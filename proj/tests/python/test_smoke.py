"""Smoke tests for the python bindings.

Run against either the build-tree module (PYTHONPATH pointing at the
directory containing _core) or an installed twofactorlab wheel.
"""

import json

import pytest

try:
    import _core as core
except ImportError:  # installed package layout
    from twofactorlab import _core as core


def test_graph_roundtrip():
    g = core.parse_graph6("Dhc")
    assert g.n == 5
    assert g.m == 5
    assert g.graph6() == "Dhc"
    assert core.write_graph6(g) == "Dhc"

    tri = core.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert tri.graph6() == "Bw"
    assert tri.adjacent(0, 2)
    assert tri.degree(1) == 2
    assert sorted(tri.edges()) == [(0, 1), (0, 2), (1, 2)]


def test_generate_and_chromatic_index():
    pet = core.generate("petersen")
    assert pet.n == 10
    assert pet.max_degree() == 3
    assert core.chromatic_index(pet) == 4
    assert core.chromatic_index(core.generate("C6")) == 2
    assert core.chromatic_index(pet, budget=5) is None

    coloring = core.vizing_color(pet)
    assert len(coloring) == pet.m
    seen = {}
    for u, v, c in coloring:
        assert 1 <= c <= 4
        for w in (u, v):
            assert (w, c) not in seen
            seen[(w, c)] = True


def test_criticality_and_toughness():
    assert core.is_delta_critical(core.generate("C5")) is True
    assert core.is_delta_critical(core.generate("petersen")) is False

    t = core.toughness(core.generate("petersen"))
    assert t["value"] == "4/3"
    assert len(t["cut"]) == 4
    assert t["component_count"] == 3
    assert core.toughness(core.generate("K4"))["value"] == "inf"


def test_two_factor_and_barriers():
    r = core.find_two_factor(core.generate("C5"))
    assert r["exists"]
    assert len(r["cycles"]) == 1

    star = core.generate("S3")
    r = core.find_two_factor(star)
    assert not r["exists"]
    assert r["barrier"]["S"] == []
    assert r["barrier"]["T"] == [0]
    assert r["barrier"]["delta"] == -2

    good = core.find_barriers(star, mode="good_biased")
    assert len(good) == 3
    assert good[0]["S"] == [0]
    assert good[0]["tier"] == "good_biased"

    assert core.delta_st(star, [], [0]) == -2


def test_enumerate_small():
    assert len(core.enumerate_small(4, False)) == 11
    assert len(core.enumerate_small(4, True)) == 6
    with pytest.raises(Exception):
        core.enumerate_small(8, False)


def test_certify_verify_roundtrip():
    g = core.generate("S3")
    for kind in ("two_factor", "barrier", "toughness", "coloring", "h_construction"):
        doc = core.certify(g, kind)
        parsed = json.loads(doc)
        assert parsed["schema"] == 1
        ok, message = core.verify_certificate(doc)
        assert ok, f"{kind}: {message}"

    tampered = json.loads(core.certify(g, "two_factor"))
    tampered["result"] = {"exists": True, "cycles": [[0, 1, 2, 3]]}
    ok, _ = core.verify_certificate(json.dumps(tampered))
    assert not ok


def test_scan_one():
    rec = core.scan_one(core.generate("C5"))
    assert rec["chi_prime"] == 3
    assert rec["critical"] is True
    assert rec["toughness"] == "1"
    assert rec["two_factor"] is True
    assert rec["conj_2factor"] == "applies+holds"
    assert rec["thm_1_3"] == "not-applicable"
