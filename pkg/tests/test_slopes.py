from fractions import Fraction

import pytest

from qslope import (
    DegreeSequence,
    FitError,
    QuasiQuadratic,
    Side,
    UnsupportedDiagram,
    VerdictStatus,
    adequacy,
    braid_closure,
    catalog_diagram,
    characterize,
    check_adequate_characterization,
    check_alternating_characterization,
    check_jones_surfaces,
    check_span_forms,
    check_surface_equations,
    check_surface_ratio_equation,
    fit_quasi_quadratic,
    slopes,
    span_quasi_polynomial,
    surface_summary,
    unknot,
    verify_degree_bounds,
)
from qslope.core.reports import VERDICT_ORDER


def sequence(label, entries):
    return DegreeSequence(label, entries)


def parity_sequence():
    # 4 d_plus = n^2 + (n mod 2), 4 d_minus = -4 d_plus
    return sequence("parity", [(n, -(n * n + n % 2), n * n + n % 2) for n in range(1, 7)])


def verdicts(entry):
    """Evaluates every verdict from the locked degrees of a catalog entry."""
    d = entry.minimal_diagram
    fit = fit_quasi_quadratic(entry.expected_degrees)
    summary = adequacy(d)
    c = len(d.crossings)
    g_T = summary.g_T_diagram
    sA, sB = surface_summary(d, Side.A), surface_summary(d, Side.B)
    results = [
        check_adequate_characterization(fit, summary, c),
        check_alternating_characterization(fit, c),
        *check_span_forms(fit, c, g_T),
        *check_surface_equations(sA, sB, c, g_T),
        check_surface_ratio_equation(sA, sB, c, g_T),
        check_jones_surfaces(slopes(fit), sA, sB),
    ]
    assert [v.name for v in results] == list(VERDICT_ORDER)
    return {v.name: v for v in results}


def test_unknot_fit(catalog):
    fit = fit_quasi_quadratic(catalog["0_1"].expected_degrees)
    assert fit.exact
    assert fit.plus == ((0, 2, -2),)
    assert fit.minus == ((0, -2, 2),)
    assert fit.evaluate(10) == 18
    assert fit.evaluate(10, "minus") == -18

    data = slopes(fit)
    assert data.js == {0} and data.js_star == {0}
    assert data.jx == {1} and data.jx_star == {-1}
    assert data.linear == {2}


def test_zero_sequence():
    fit = fit_quasi_quadratic(sequence("zero", [(n, 0, 0) for n in range(1, 5)]))
    assert fit.exact
    assert fit.plus == fit.minus == ((0, 0, 0),)


def test_trefoil_fit(catalog):
    fit = fit_quasi_quadratic(catalog["3_1"].expected_degrees)
    assert fit.exact
    assert fit.plus == ((0, -2, 2),)
    assert fit.minus == ((-6, 0, 6),)
    data = slopes(fit)
    assert data.js == {0} and data.js_star == {-6}
    assert data.jx == {-1} and data.jx_star == {0}
    assert span_quasi_polynomial(fit) == [(Fraction(3, 2), Fraction(-1, 2), -1)]


def test_inexact_fit_reports_residuals():
    fit = fit_quasi_quadratic(parity_sequence())
    assert not fit.exact
    assert fit.plus == ((2, -4, 4),)
    assert fit.residuals == (
        (4, "plus", -4),
        (4, "minus", 4),
        (5, "plus", -8),
        (5, "minus", 8),
        (6, "plus", -16),
        (6, "minus", 16),
    )


def test_periodic_fit():
    fit = fit_quasi_quadratic(parity_sequence(), period=2)
    assert fit.exact
    assert fit.plus == ((1, 0, 0), (1, 0, 1))
    assert fit.minus == ((-1, 0, 0), (-1, 0, -1))
    assert fit.evaluate(7) == 50
    assert slopes(fit).js == {1}
    assert slopes(fit).jx == {0}


def test_fit_start():
    fit = fit_quasi_quadratic(parity_sequence(), fit_start=4)
    assert fit.fit_start == 4
    assert fit.exact
    assert fit.plus == ((0, 10, -24),)
    with pytest.raises(FitError):
        fit_quasi_quadratic(parity_sequence(), period=2, fit_start=2)


def test_fit_errors():
    short = sequence("short", [(n, 0, 0) for n in range(1, 6)])
    with pytest.raises(FitError):
        fit_quasi_quadratic(short, period=2)
    with pytest.raises(FitError):
        fit_quasi_quadratic(sequence("two", [(1, 0, 0), (2, 0, 0)]))
    with pytest.raises(ValueError):
        fit_quasi_quadratic(short, period=0)
    with pytest.raises(ValueError):
        fit_quasi_quadratic(short, fit_start=0)


def test_fit_to_dict(catalog):
    data = fit_quasi_quadratic(catalog["3_1"].expected_degrees).to_dict()
    assert data["plus"] == [[0, -2, 2]]
    assert data["exact"] is True
    assert data["residuals"] == []


def test_periodic_slope_sets():
    fit = QuasiQuadratic(period=2, fit_start=1, plus=[(1, 1, 0), (Fraction(1, 2), 3, 0)], minus=[(0, 0, 0), (0, 0, 0)])
    data = slopes(fit)
    assert data.js == {1, Fraction(1, 2)}
    assert data.jx == {Fraction(1, 2), Fraction(3, 2)}
    assert data.linear == {1, 3}


@pytest.mark.parametrize("label", ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"])
def test_alternating_knots_satisfy_everything(catalog, label):
    results = verdicts(catalog[label])
    for name, verdict in results.items():
        assert verdict.status == VerdictStatus.TRUE, name


def test_trefoil_witnesses(catalog):
    results = verdicts(catalog["3_1"])
    adequate = results["adequate"].witnesses
    assert (adequate["s"], adequate["s_star"]) == (0, -6)
    assert (adequate["x"], adequate["x_star"]) == (-2, 0)
    assert adequate["s_minus_s_star"] == 6
    assert adequate["x_minus_x_star"] == -2


def test_pretzel_is_adequate_but_not_alternating(catalog):
    entry = catalog["P(-2,-3,3,3)"]
    assert not entry.alternating
    results = verdicts(entry)
    assert results["adequate"].holds
    assert results["adequate_span"].holds
    assert results["surface_adequate"].holds
    assert results["surface_ratio"].holds
    assert results["jones_surfaces"].holds
    assert results["alternating"].status == VerdictStatus.FALSE
    assert results["alternating_span"].status == VerdictStatus.FALSE
    assert results["surface_alternating"].status == VerdictStatus.FALSE


def test_unknot_is_not_applicable(catalog):
    results = verdicts(catalog["0_1"])
    for name in VERDICT_ORDER[:-1]:
        assert results[name].status == VerdictStatus.NOT_APPLICABLE
        assert not results[name].applicable
        assert not results[name]
    assert results["jones_surfaces"].holds


def test_verdict_to_dict(catalog):
    data = verdicts(catalog["3_1"])["adequate"].to_dict()
    assert data["name"] == "adequate"
    assert data["status"] == "true"
    assert data["witnesses"]["js_star"] == [-6]


def test_surface_equations_on_pretzel(catalog):
    d = catalog["P(-2,-3,3,3)"].minimal_diagram
    sA, sB = surface_summary(d, Side.A), surface_summary(d, Side.B)
    assert (sA.euler, sA.slope) == (-5, -12)
    assert (sB.euler, sB.slope) == (-6, 10)
    adequate, alternating = check_surface_equations(sA, sB, 11, 1)
    assert adequate.witnesses["total"] == 0
    assert alternating.witnesses["total"] == 0
    assert check_surface_ratio_equation(sA, sB, 11, 1).witnesses["total"] == 0


def test_surface_equations_fail_on_kinked_trefoil():
    kinked = catalog_diagram("3_1+kink")
    sA, sB = surface_summary(kinked, Side.A), surface_summary(kinked, Side.B)
    assert (sA.euler, sA.slope) == (0, -6)
    assert (sB.euler, sB.slope) == (-2, 2)
    adequate, alternating = check_surface_equations(sA, sB, 3, 0)
    assert adequate.status == VerdictStatus.FALSE
    assert adequate.witnesses
    assert (adequate.witnesses["s"], adequate.witnesses["s_star"], adequate.witnesses["g_T"]) == (2, -6, 0)
    assert alternating.status == VerdictStatus.FALSE

    d = catalog_diagram("3_1")
    sA, sB = surface_summary(d, Side.A), surface_summary(d, Side.B)
    adequate, _ = check_surface_equations(sA, sB, 3, 0)
    assert adequate.status == VerdictStatus.TRUE
    assert adequate.witnesses["total"] == 2


def test_fit_rejects_repeated_colors():
    seq = sequence("repeat", [(1, 0, 0), (2, -2, 2), (2, -2, 2), (3, -4, 4)])
    with pytest.raises(FitError, match="repeats a color"):
        fit_quasi_quadratic(seq)


def test_wrong_turaev_genus_fails(catalog):
    d = catalog["3_1"].minimal_diagram
    sA, sB = surface_summary(d, Side.A), surface_summary(d, Side.B)
    adequate, alternating = check_surface_equations(sA, sB, 3, 1)
    assert not adequate.holds
    assert alternating.holds
    fit = fit_quasi_quadratic(catalog["3_1"].expected_degrees)
    assert not check_span_forms(fit, 3, 1)[0].holds


def test_bounds_of_adequate_diagrams(catalog):
    for label in ("3_1", "4_1", "6_2"):
        entry = catalog[label]
        report = verify_degree_bounds(entry.minimal_diagram, entry.expected_degrees)
        assert report.bounds_hold
        assert report.equality("A") and report.equality("B")
        assert report.refined_holds("A") is None and report.refined_holds("B") is None


def test_bounds_of_positive_kink(catalog):
    entry = catalog["3_1"]
    d = entry.diagram("3_1+kink")
    report = verify_degree_bounds(d, entry.expected_degrees)
    assert report.a_adequate and not report.b_adequate
    assert report.bounds_hold
    assert report.equality("A")
    assert not report.equality("B")
    assert report.strict("B")
    assert [e.upper for e in report.entries] == [0, 2, 8, 18]
    assert [e.refined_upper for e in report.entries] == [4, 2, -4, -14]
    assert report.refined_holds("B") is True
    assert report.refined_holds("A") is None


def test_bounds_of_negative_kink(catalog):
    entry = catalog["3_1"]
    report = verify_degree_bounds(entry.diagram("3_1-kink"), entry.expected_degrees)
    assert report.b_adequate and not report.a_adequate
    assert report.equality("B")
    assert report.strict("A")
    assert [e.lower for e in report.entries] == [0, -22, -60, -114]
    assert [e.refined_lower for e in report.entries] == [4, 6, 12, 22]
    assert report.refined_holds("A") is True

    data = report.to_dict()
    assert data["strict_A"] is True
    assert data["refined_B"] is None


def test_refined_bound_violation():
    d = braid_closure([-1, -1, -1])
    seq = sequence("fake", [(1, 0, 0), (2, -18, -2), (3, -48, 100)])
    report = verify_degree_bounds(d, seq)
    assert not report.bounds_hold


def test_characterize_trefoil(catalog):
    record = characterize(catalog["3_1"].minimal_diagram, 3)
    report = record.characterization
    assert report.c == 3 and report.g_T == 0
    assert list(report.verdicts) == list(VERDICT_ORDER)
    assert all(report[name].holds for name in VERDICT_ORDER)
    assert record.degrees.entries == catalog["3_1"].expected_degrees.entries[:3]
    assert record.bounds.bounds_hold


def test_characterize_unknot():
    record = characterize(unknot(), 3)
    report = record.characterization
    assert report.c == 0
    assert report["adequate"].status == VerdictStatus.NOT_APPLICABLE
    assert report["jones_surfaces"].holds


def test_characterize_rejects_links():
    with pytest.raises(UnsupportedDiagram):
        characterize(braid_closure([1, 1]), 3)
