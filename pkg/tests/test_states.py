import networkx as nx
import pytest

from qslope import (
    Crossing,
    Diagram,
    DiagramValidationError,
    Side,
    StateSummary,
    UnsupportedDiagram,
    add_kink,
    adequacy,
    braid_closure,
    is_connected,
    parse_pd,
    resolve,
    state_graph,
    surface_summary,
    unknot,
)

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def random_connected_diagrams(rng, count):
    diagrams = []
    while len(diagrams) < count:
        strands = rng.randint(2, 4)
        length = rng.randint(strands - 1, 9)
        word = [rng.choice([-1, 1]) * rng.randint(1, strands - 1) for _ in range(length)]
        for i in range(1, strands):
            if i not in (abs(g) for g in word):
                word.insert(rng.randint(0, len(word)), rng.choice([-i, i]))
        d = braid_closure(word, strands)
        if is_connected(d):
            diagrams.append(d)
    return diagrams


def test_resolve_all_a_and_all_b():
    d = parse_pd(TREFOIL)
    assert resolve(d, Side.A).circles == ((1, 4), (2, 5), (3, 6))
    assert resolve(d, Side.B).circles == ((1, 3, 5), (2, 4, 6))


def test_resolve_mixed_state():
    d = parse_pd(TREFOIL)
    resolution = resolve(d, "ABB")
    assert resolution.state == ("A", "B", "B")
    assert resolution.to_dict()["state"] == "ABB"
    every_arc = sorted(a for circle in resolution.circles for a in circle)
    assert every_arc == [1, 2, 3, 4, 5, 6]
    assert resolution.circles[resolution.circle_of(4)] == resolution.circles[resolution.circle_of(1)]


def test_resolve_validates_state():
    d = parse_pd(TREFOIL)
    with pytest.raises(ValueError):
        resolve(d, "AB")
    with pytest.raises(ValueError):
        resolve(d, "ABC")


def test_free_loops_are_circles():
    assert resolve(unknot(), Side.A).circle_count == 1
    assert resolve(unknot(), Side.B).circles == ((),)


def test_state_graph():
    d = parse_pd(TREFOIL)
    graph = state_graph(d, Side.A)
    assert graph.number_of_nodes() == 3
    assert graph.number_of_edges() == 3
    assert nx.number_of_selfloops(graph) == 0
    assert graph.nodes[0]["arcs"] == (1, 4)

    graph = state_graph(d, Side.B)
    assert graph.number_of_nodes() == 2
    assert graph.number_of_edges() == 3


def test_state_graph_of_kink_has_a_loop():
    graph = state_graph(add_kink(unknot(), 1), Side.B)
    assert graph.number_of_nodes() == 1
    assert list(graph.edges(keys=True)) == [(0, 0, 0)]


def test_adequacy_of_trefoil():
    summary = adequacy(parse_pd(TREFOIL))
    assert summary == StateSummary(v_A=3, v_B=2, g_T_diagram=0)
    assert summary.adequate
    assert summary.circles(Side.A) == 3
    assert summary.to_dict() == {
        "v_A": 3,
        "v_B": 2,
        "a_adequate": True,
        "b_adequate": True,
        "g_T_diagram": 0,
        "loops_A": [],
        "loops_B": [],
    }


def test_adequacy_of_kinked_unknot():
    summary = adequacy(add_kink(unknot(), 1))
    assert (summary.v_A, summary.v_B) == (2, 1)
    assert summary.a_adequate
    assert not summary.b_adequate
    assert summary.loops_B == (0,)
    assert not summary.is_adequate(Side.B)


def test_adequacy_needs_connected_diagram():
    with pytest.raises(UnsupportedDiagram):
        adequacy(braid_closure([1, 1, 1], strands=3))


def test_adequacy_rejects_non_planar_crossings():
    # The two real crossings of the virtual trefoil, built without validation.
    d = Diagram([Crossing((4, 2, 1, 3), -1), Crossing((1, 3, 2, 4), -1)], components=1)
    with pytest.raises(DiagramValidationError, match="Turaev genus"):
        adequacy(d)


def test_other_side():
    assert Side.other(Side.A) == Side.B
    assert Side.other(Side.B) == Side.A
    with pytest.raises(ValueError):
        Side.other("C")


def test_catalog_summaries(catalog):
    for entry in catalog.values():
        assert adequacy(entry.minimal_diagram) == entry.expected_summary, entry.label
        for label, expected in entry.expected_variants.items():
            assert adequacy(entry.variants[label]) == expected, label


def test_alternating_catalog_knots_are_adequate(catalog):
    for label in ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"):
        summary = adequacy(catalog[label].minimal_diagram)
        assert summary.adequate
        assert summary.g_T_diagram == 0


def test_turaev_identity_on_catalog(catalog):
    for entry in catalog.values():
        for d in [entry.minimal_diagram, *entry.variant_diagrams]:
            summary = adequacy(d)
            assert summary.v_A + summary.v_B - d.crossing_number == 2 - 2 * summary.g_T_diagram


def test_turaev_identity_on_random_diagrams(rng):
    diagrams = random_connected_diagrams(rng, 120)
    for d in diagrams:
        summary = adequacy(d)
        assert summary.g_T_diagram >= 0
        assert summary.v_A + summary.v_B - d.crossing_number == 2 - 2 * summary.g_T_diagram


def test_kink_keeps_turaev_genus(rng):
    for d in random_connected_diagrams(rng, 20):
        for sign in (1, -1):
            assert adequacy(add_kink(d, sign)).g_T_diagram == adequacy(d).g_T_diagram


def test_surface_summary():
    d = parse_pd(TREFOIL)
    surface = surface_summary(d, Side.A)
    assert (surface.euler, surface.boundary_components, surface.slope) == (0, 1, -6)
    surface = surface_summary(d, Side.B)
    assert (surface.euler, surface.slope) == (-1, 0)
    assert surface.to_dict() == {"side": "B", "euler": -1, "boundary_components": 1, "slope": 0}


def test_surface_summary_needs_a_knot():
    with pytest.raises(UnsupportedDiagram):
        surface_summary(parse_pd("X(4,1,3,2) X(2,3,1,4)"), Side.A)
    with pytest.raises(ValueError):
        surface_summary(parse_pd(TREFOIL), "C")
