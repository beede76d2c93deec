import pytest

import dimertoric as dt


def test_bundled_models_present():
    assert sorted(dt.fixture_names()) == ["c3", "dp0", "f0", "f1", "wf1"]


def test_validate_and_canonical_roundtrip():
    doc = dt.fixture("dp0")
    rep = dt.validate(doc)
    assert rep["valid"] is True
    assert rep["faces"] == 3
    canon = dt.canonical_document(doc)
    assert dt.canonical_document(canon) == canon
    assert dt.validate(canon) == rep


def test_face_count_matches_polygon_area():
    for name in dt.fixture_names():
        doc = dt.fixture(name)
        q = dt.quiver(doc)
        poly = dt.polygon(doc)
        assert q["vertices"] == poly["twice_area"]


def test_zigzag_classes_cancel():
    rep = dt.zigzag(dt.fixture("wf1"))
    assert rep["class_sum"] == [0, 0]
    assert rep["consistency"]["pass"] is True


def test_matchings_and_classification():
    doc = dt.fixture("dp0")
    assert dt.matchings(doc)["count"] == 6
    cls = dt.classification(doc)
    assert cls["origin"] == [-1, 0]
    assert cls["central_candidates"] == [1, 2, 3]
    explicit = dt.classification(doc, origin=(-1, 0))
    assert explicit["central_candidates"] == [1, 2, 3]


def test_verification_and_crosscheck():
    doc = dt.fixture("dp0")
    ver = dt.verify(doc)
    assert ver["pass"] is True
    assert ver["order"] == [0, 1, 2]
    assert all(p["h1"] == 0 and p["h2"] == 0 for p in ver["pairs"])
    cc = dt.crosscheck(doc, pm=2)
    assert cc["equal"] is True
    assert cc["first_mismatch"] is None
    assert sum(map(sum, cc["path_side"])) == 15
    assert cc["path_side"] == cc["toric_side"]


def test_collection_reports_fan_and_bundles():
    col = dt.collection(dt.fixture("f0"))
    assert len(col["fan"]) == 4
    assert len(col["bundles"]) == 4


def test_superpotential_report():
    rep = dt.superpotential(dt.fixture("c3"), lift_bound=1)
    assert rep["unit_weight"] is True
    assert rep["centrality"]["pass"] is True
    entries = rep["truncated_dims"]["entries"]
    assert len(entries) == 1
    assert entries[0]["count"] == 9 and entries[0]["stabilized"] is True


def test_curved_diagram_checks():
    rep = dt.curved_diagram(dt.fixture("f1"))
    assert rep["pass"] is True
    assert len(rep["morphisms"]) == 2 * len(rep["edge_objects"])


def test_figures_are_svg():
    figs = dt.figures(dt.fixture("dp0"), seed=3)
    assert sorted(figs) == ["dimer.svg", "hom.svg", "polygon.svg", "quiver.svg"]
    assert all(svg.startswith("<svg") for svg in figs.values())
    assert figs == dt.figures(dt.fixture("dp0"), seed=3)


def test_structural_errors_become_value_errors():
    with pytest.raises(ValueError, match="no central candidate"):
        dt.verify(dt.fixture("c3"))
    with pytest.raises(ValueError, match="not a central candidate"):
        dt.collection(dt.fixture("dp0"), pm=0)
    with pytest.raises(ValueError, match="unknown fixture"):
        dt.fixture("p2")
    with pytest.raises(ValueError, match="invalid JSON"):
        dt.validate("{")
