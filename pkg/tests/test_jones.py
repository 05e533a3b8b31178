import pytest
import sympy

from qslope import (
    ColoredJones,
    DegreeSequence,
    Engine,
    EngineConfig,
    LaurentPoly,
    UnsupportedDiagram,
    braid_closure,
    chebyshev,
    colored_jones,
    degree_sequence,
    jones_polynomial,
    mirror,
    unknot,
    unknot_closed_form,
)

TREFOIL_J2 = LaurentPoly({18: -1, 10: 1, 6: 1, 2: 1})
SMALL = ("3_1", "4_1", "5_1", "5_2")
SIX = ("6_1", "6_2", "6_3")


@pytest.mark.parametrize("n", range(1, 9))
def test_chebyshev_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.expand(sympy.chebyshevu(n - 1, x / 2)), x)
    coeffs = {m: int(c) for (m,), c in expected.as_dict().items()}
    expansion = chebyshev(n)
    assert expansion.coeffs == coeffs
    assert expansion.degree == n - 1


def test_chebyshev_rejects_bad_colors():
    with pytest.raises(ValueError):
        chebyshev(0)
    with pytest.raises(ValueError):
        colored_jones(unknot(), 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_unknot(n):
    assert colored_jones(unknot(), n) == unknot_closed_form(n)


def test_unknot_closed_form_in_t():
    assert unknot_closed_form(1) == 1
    assert unknot_closed_form(2).to_t_string() == "t^(1/2) + t^(-1/2)"
    assert unknot_closed_form(3).t_degrees() == (-4, 4)


def test_first_color_is_trivial(catalog):
    for label in ("3_1", "4_1", "P(-2,-3,3,3)"):
        assert colored_jones(catalog[label].minimal_diagram, 1) == 1


def test_trefoil_jones(catalog):
    d = catalog["3_1"].minimal_diagram
    assert jones_polynomial(d) == TREFOIL_J2
    assert TREFOIL_J2.t_degrees() == (-18, -2)


def test_figure_eight_is_amphichiral(catalog):
    d = catalog["4_1"].minimal_diagram
    j = jones_polynomial(d)
    assert j == j.invert()


@pytest.mark.parametrize("label", ("3_1", "4_1", "5_2"))
def test_mirror_inverts(catalog, label):
    d = catalog[label].minimal_diagram
    for n in (2, 3):
        assert colored_jones(mirror(d), n) == colored_jones(d, n).invert()


@pytest.mark.parametrize("label", ("0_1", *SMALL))
def test_invariance_under_moves(catalog, label, sweep_config):
    entry = catalog[label]
    reference = ColoredJones(entry.minimal_diagram, sweep_config)
    for variant in entry.variant_diagrams:
        other = ColoredJones(variant, sweep_config)
        for n in (2, 3):
            assert other.value(n) == reference.value(n), variant.label


def test_invariance_of_pretzel_kink(catalog):
    entry = catalog["P(-2,-3,3,3)"]
    base = jones_polynomial(entry.minimal_diagram)
    for variant in entry.variant_diagrams:
        assert jones_polynomial(variant) == base


def test_braid_closures_agree():
    # Both words close up to the trefoil.
    a = braid_closure([1, 1, 1])
    b = braid_closure([1, 2, 1, 2], strands=3)
    assert jones_polynomial(a) == jones_polynomial(b)


@pytest.mark.parametrize(
    "label",
    ["0_1", *SMALL, *(pytest.param(label, marks=pytest.mark.slow) for label in SIX)],
)
def test_catalog_degrees(catalog, label):
    entry = catalog[label]
    expected = entry.expected_degrees
    config = EngineConfig(engine=Engine.SWEEP, width_cap=24)
    sequence = degree_sequence(entry.minimal_diagram, len(expected.entries), config)
    assert isinstance(sequence, DegreeSequence)
    assert sequence == expected


@pytest.mark.slow
def test_pretzel_degrees(catalog):
    entry = catalog["P(-2,-3,3,3)"]
    config = EngineConfig(engine=Engine.SWEEP, width_cap=24)
    assert degree_sequence(entry.minimal_diagram, 3, config) == entry.expected_degrees


def test_brackets_are_shared_between_colors(catalog, sweep_config):
    jones = ColoredJones(catalog["3_1"].minimal_diagram, sweep_config)
    jones.degree_sequence(3)
    assert sorted(jones.brackets) == [0, 1, 2]
    assert jones.brackets[1].value.max_degree == 9


def test_degree_sequence_rejects_bad_range(catalog):
    with pytest.raises(ValueError):
        degree_sequence(catalog["3_1"].minimal_diagram, 0)


def test_links_are_rejected():
    with pytest.raises(UnsupportedDiagram):
        ColoredJones(braid_closure([1, 1]))


def test_parallel_cables(catalog):
    d = catalog["4_1"].minimal_diagram
    serial = degree_sequence(d, 3, EngineConfig(engine="sweep"))
    parallel = degree_sequence(d, 3, EngineConfig(engine="sweep", jobs=2))
    assert serial == parallel
