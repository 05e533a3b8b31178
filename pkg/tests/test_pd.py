import json

import pytest

import qslope
from qslope import (
    DiagramValidationError,
    PDParseError,
    UnsupportedDiagram,
    add_kink,
    braid_closure,
    build_diagram,
    cable,
    catalog_diagram,
    catalog_list,
    crossing_counts,
    diagram_from_json,
    diagram_to_json,
    faces,
    is_alternating,
    is_connected,
    load_diagrams,
    mirror,
    parse_pd,
    r2_move,
    serialize_pd,
    unknot,
    writhe,
)

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
HOPF = "X(4,1,3,2) X(2,3,1,4)"


def test_parse_trefoil():
    d = parse_pd(TREFOIL, label="3_1")
    assert d.label == "3_1"
    assert d.crossing_number == 3
    assert d.components == 1
    assert d.is_knot
    assert [c.sign for c in d.crossings] == [-1, -1, -1]
    assert crossing_counts(d) == (0, 3)
    assert writhe(d) == -3


def test_parse_separators():
    spaced = parse_pd(TREFOIL)
    assert parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)") == spaced
    assert parse_pd("  X( 1, 4, 2, 5 )\nX(3,6,4,1) ,X(5,2,6,3)  ") == spaced


def test_serialize_round_trip():
    assert serialize_pd(parse_pd(TREFOIL)) == TREFOIL
    assert parse_pd(serialize_pd(parse_pd(FIGURE_EIGHT))) == parse_pd(FIGURE_EIGHT)


def test_empty_text_is_empty_diagram():
    d = parse_pd("")
    assert d.is_empty
    assert d.components == 0


@pytest.mark.parametrize(
    "text, position, token",
    [
        ("X(1,4,2,5) Y(3,6,4,1)", 11, "Y(3"),
        ("X(1,4,2)", 0, "X(1"),
        ("X(0,1,1,2)", 2, "0"),
    ],
)
def test_parse_errors_report_position(text, position, token):
    with pytest.raises(PDParseError) as info:
        parse_pd(text)
    assert info.value.position == position
    assert info.value.token == token


def test_arc_must_appear_twice():
    with pytest.raises(DiagramValidationError, match="arc 1 appears 3"):
        parse_pd("X(1,1,1,2)")
    with pytest.raises(DiagramValidationError):
        parse_pd("X(1,2,3,4)")


def test_inconsistent_orientation():
    with pytest.raises(DiagramValidationError, match="orientation"):
        parse_pd("X(1,3,2,4) X(1,4,2,3)")


@pytest.mark.parametrize("text", [TREFOIL, FIGURE_EIGHT])
def test_arc_head_and_tail(text):
    d = parse_pd(text)
    arcs = d.arcs
    for arc in arcs:
        (ti, tp), (hi, hp) = d.tail(arc), d.head(arc)
        assert d.crossings[ti].arcs[tp] == arc
        assert d.crossings[hi].arcs[hp] == arc
        assert hp in d.crossings[hi].incoming_slots()
        assert tp not in d.crossings[ti].incoming_slots()
        assert (d.tail(arc), d.head(arc)) == d.ends()[arc]
    # consecutive labels run along the knot
    for arc in arcs:
        following = arc % len(arcs) + 1
        assert d.head(arc)[0] == d.tail(following)[0]


def test_trefoil_arc_ends():
    d = parse_pd(TREFOIL)
    assert (d.tail(1), d.head(1)) == ((1, 3), (0, 0))
    assert (d.tail(4), d.head(4)) == ((1, 2), (0, 1))
    assert (d.tail(6), d.head(6)) == ((2, 3), (1, 1))


def test_non_planar_code_is_rejected():
    # Gauss code O1 O2 U1 U2, the virtual trefoil.
    with pytest.raises(DiagramValidationError, match="not planar"):
        parse_pd("X(4,2,1,3) X(1,3,2,4)")
    with pytest.raises(DiagramValidationError, match="not planar"):
        build_diagram([[4, 2, 1, 3], [1, 3, 2, 4]])


def test_link_components():
    d = parse_pd(HOPF)
    assert d.components == 2
    assert not d.is_knot
    with pytest.raises(UnsupportedDiagram):
        writhe(d)
    with pytest.raises(UnsupportedDiagram):
        cable(d, 2)


def test_figure_eight_has_zero_writhe():
    assert writhe(parse_pd(FIGURE_EIGHT)) == 0
    assert crossing_counts(parse_pd(FIGURE_EIGHT)) == (2, 2)


def test_unknot():
    d = unknot()
    assert d.label == "0_1"
    assert d.crossing_number == 0
    assert d.free_loops == 1
    assert d.components == 1
    assert writhe(d) == 0
    assert is_connected(d)


def test_cable():
    d = parse_pd(TREFOIL, label="3_1")
    cabled = cable(d, 2)
    assert cabled.label == "3_1^2"
    assert cabled.crossing_number == 12
    assert cabled.components == 2
    assert list(cabled.blocks) == [0] * 4 + [1] * 4 + [2] * 4
    assert [c.sign for c in cabled.crossings] == [-1] * 12
    assert sorted(cabled.arcs) == list(range(1, 25))
    assert cable(d, 3).components == 3
    assert cable(d, 1) is d
    assert cable(d, 0).is_empty
    with pytest.raises(ValueError):
        cable(d, -1)


@pytest.mark.parametrize("label", catalog_list(variants=True))
@pytest.mark.parametrize("m", range(5))
def test_cable_counts_on_catalog(label, m):
    d = catalog_diagram(label)
    cabled = cable(d, m)
    assert cabled.crossing_number == m * m * d.crossing_number
    assert cabled.components == m
    if m == 0:
        assert cabled.is_empty
    if m == 1:
        assert cabled is d


@pytest.mark.parametrize("label", catalog_list(variants=True))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_cable_writhe_on_catalog(label, m):
    d = catalog_diagram(label)
    # cables are links, so the signs are summed directly
    plus, minus = crossing_counts(cable(d, m))
    assert plus - minus == m * m * writhe(d)


def test_cable_is_deterministic():
    d = parse_pd(FIGURE_EIGHT)
    assert serialize_pd(cable(d, 3)) == serialize_pd(cable(d, 3))


def test_cable_of_unknot():
    cabled = cable(unknot(), 3)
    assert cabled.free_loops == 3
    assert cabled.components == 3


def test_mirror():
    d = parse_pd(TREFOIL, label="3_1")
    m = mirror(d)
    assert m.label == "3_1*"
    assert crossing_counts(m) == (3, 0)
    assert writhe(m) == 3
    assert mirror(m) == d


@pytest.mark.parametrize("sign", [1, -1])
def test_add_kink(sign):
    d = parse_pd(FIGURE_EIGHT)
    kinked = add_kink(d, sign)
    assert kinked.crossing_number == 5
    assert kinked.components == 1
    assert writhe(kinked) == writhe(d) + sign
    assert kinked.crossings[-1].sign == sign


def test_add_kink_to_free_loop():
    kinked = add_kink(unknot(), 1)
    assert kinked.pd == [(1, 1, 2, 2)]
    assert kinked.free_loops == 0
    assert writhe(kinked) == 1
    assert writhe(add_kink(unknot(), -1)) == -1


def test_add_kink_errors():
    d = parse_pd(TREFOIL)
    with pytest.raises(ValueError):
        add_kink(d, 2)
    with pytest.raises(ValueError):
        add_kink(d, 1, arc=99)
    with pytest.raises(ValueError):
        add_kink(parse_pd(""), 1)


@pytest.mark.parametrize("text", [TREFOIL, FIGURE_EIGHT])
def test_faces_of_connected_diagram(text):
    d = parse_pd(text)
    regions = faces(d)
    assert len(regions) == d.crossing_number + 2
    assert sum(len(r) for r in regions) == 4 * d.crossing_number


@pytest.mark.parametrize("text", [TREFOIL, FIGURE_EIGHT])
def test_r2_move(text):
    d = parse_pd(text)
    moved = r2_move(d)
    assert moved.crossing_number == d.crossing_number + 2
    assert moved.components == 1
    assert writhe(moved) == writhe(d)
    assert crossing_counts(moved) == tuple(x + 1 for x in crossing_counts(d))
    assert len(faces(moved)) == moved.crossing_number + 2


def test_r2_move_needs_a_region():
    with pytest.raises(ValueError):
        r2_move(parse_pd(TREFOIL), over_arc=1, under_arc=99)


def test_braid_closure():
    trefoil = braid_closure([1, 1, 1], label="T")
    assert trefoil.label == "T"
    assert trefoil.crossing_number == 3
    assert trefoil.components == 1
    assert writhe(trefoil) == 3

    assert writhe(braid_closure([-1, -1, -1])) == -3
    assert braid_closure([1, -2, 1, -2]).components == 1
    assert braid_closure([1, 2, 1]).components == 2


def test_braid_closure_free_loops():
    d = braid_closure([1, 1, 1], strands=3)
    assert d.free_loops == 1
    assert d.components == 2
    assert not is_connected(d)
    with pytest.raises(ValueError):
        braid_closure([3], strands=3)
    with pytest.raises(ValueError):
        braid_closure([0])


def test_is_alternating(catalog):
    for label in ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"):
        assert is_alternating(catalog[label].minimal_diagram), label
    assert not is_alternating(catalog["P(-2,-3,3,3)"].minimal_diagram)


def test_json_codec(tmp_path):
    d = parse_pd(TREFOIL, label="3_1")
    data = diagram_to_json(d)
    assert data == {"label": "3_1", "pd": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]}
    assert diagram_from_json(data) == d
    assert diagram_from_json({"label": "3_1", "pd": TREFOIL}) == d
    assert diagram_to_json(unknot()) == {"label": "0_1", "pd": [], "free_loops": 1}
    assert diagram_from_json({"pd": [], "free_loops": 1}) == unknot()

    path = tmp_path / "batch.json"
    path.write_text(json.dumps([data, {"label": "4_1", "pd": FIGURE_EIGHT}]))
    loaded = load_diagrams(path)
    assert [x.label for x in loaded] == ["3_1", "4_1"]

    path.write_text(json.dumps(data))
    assert load_diagrams(path) == [d]


@pytest.mark.parametrize(
    "data",
    [
        {"label": "x"},
        {"pd": 5},
        {"pd": [], "label": 3},
        {"pd": [[1, 2, 3]]},
        {"pd": [], "free_loops": -1},
    ],
)
def test_json_validation(data):
    with pytest.raises(DiagramValidationError):
        diagram_from_json(data)


def test_invalid_json_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    with pytest.raises(DiagramValidationError, match="invalid JSON"):
        load_diagrams(path)


def test_build_diagram_blocks_must_match():
    with pytest.raises(DiagramValidationError):
        build_diagram([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], blocks=[0])


def test_exports():
    assert qslope.Diagram is type(unknot())
