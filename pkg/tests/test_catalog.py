import json

import pytest

from qslope import (
    CATALOG_PATH,
    CatalogLookupError,
    adequacy,
    apply_moves,
    catalog_diagram,
    catalog_get,
    catalog_list,
    is_alternating,
    writhe,
)
from qslope._helpers import crossing_number_from_label
from qslope.core.reports import render_catalog

LABELS = ["0_1", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "P(-2,-3,3,3)"]


def test_labels():
    assert catalog_list() == LABELS


def test_variant_labels_follow_their_knot():
    labels = catalog_list(variants=True)
    assert labels.index("3_1") < labels.index("3_1+kink") < labels.index("4_1")
    assert set(LABELS) < set(labels)


def test_data_file_is_versioned():
    with open(CATALOG_PATH, encoding="utf-8") as fp:
        data = json.load(fp)
    assert data["version"] == 1
    assert [k["label"] for k in data["knots"]] == LABELS


@pytest.mark.parametrize("label", LABELS)
def test_crossing_numbers(catalog, label):
    entry = catalog[label]
    assert entry.minimal_diagram.crossing_number == entry.crossing_number
    assert entry.minimal_diagram.label == label
    if crossing_number_from_label(label) is not None:
        assert crossing_number_from_label(label) == entry.crossing_number


@pytest.mark.parametrize("label", LABELS)
def test_alternating_flag(catalog, label):
    entry = catalog[label]
    assert is_alternating(entry.minimal_diagram) == entry.alternating


@pytest.mark.parametrize("label", LABELS[1:])
def test_expected_summaries(catalog, label):
    entry = catalog[label]
    assert adequacy(entry.minimal_diagram) == entry.expected_summary
    for name, summary in entry.expected_variants.items():
        assert adequacy(entry.variants[name]) == summary, name


def test_variants_add_crossings(catalog):
    for entry in catalog.values():
        for name, d in entry.variants.items():
            assert d.label == name
            assert d.crossing_number > entry.crossing_number
            assert d.is_knot


def test_lookup():
    assert catalog_get("3_1+kink").label == "3_1"
    assert catalog_diagram("3_1+kink").label == "3_1+kink"
    assert catalog_diagram("3_1").crossing_number == 3
    with pytest.raises(CatalogLookupError) as info:
        catalog_get("10_124")
    assert info.value.label == "10_124"
    with pytest.raises(LookupError):
        catalog_diagram("3_1+twist")


def test_apply_moves(catalog):
    trefoil = catalog["3_1"].minimal_diagram
    kinked = apply_moves(trefoil, [{"move": "r1", "sign": 1}, {"move": "r1", "sign": -1}], label="twice")
    assert kinked.label == "twice"
    assert kinked.crossing_number == 5
    assert writhe(kinked) == writhe(trefoil)
    assert apply_moves(trefoil, [{"move": "r2"}]).crossing_number == 5
    assert apply_moves(trefoil, []) is trefoil


def test_apply_unknown_move(catalog):
    from qslope import DiagramValidationError

    with pytest.raises(DiagramValidationError):
        apply_moves(catalog["3_1"].minimal_diagram, [{"move": "r3"}])


def test_render_catalog(catalog):
    entries = [catalog["3_1"], catalog["4_1"]]
    text = render_catalog(entries)
    assert text.splitlines()[0].split() == ["label", "crossings", "alternating", "variants"]
    assert "3_1+kink" in text

    details = render_catalog(entries, details=True)
    assert "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)" in details

    assert json.loads(render_catalog(entries, "json")) == ["3_1", "4_1"]
    rows = render_catalog(entries, "csv").splitlines()
    assert rows[0] == "label,crossing_number,alternating,variants"
    assert rows[1].startswith("3_1,3,true,")
