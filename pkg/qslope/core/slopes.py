# MIT License

# Copyright (c) 2026 The qslope developers

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

from __future__ import annotations

from qslope.core.pd import crossing_counts
from qslope.core.states import adequacy
from qslope.enums import Side, VerdictStatus
from qslope.exceptions import FitError
from qslope.models.slopes import (
    QuasiQuadratic,
    SlopeData,
    Verdict,
    BoundEntry,
    BoundReport,
)
from qslope._helpers import residue

from fractions import Fraction
import logging
import typing

if typing.TYPE_CHECKING:
    from qslope.models.diagrams import Diagram
    from qslope.models.jones import DegreeSequence
    from qslope.models.states import StateSummary, SurfaceSummary

__all__ = (
    "fit_quasi_quadratic",
    "verify_degree_bounds",
    "slopes",
    "span_quasi_polynomial",
    "check_adequate_characterization",
    "check_alternating_characterization",
    "check_span_forms",
    "check_surface_equations",
    "check_surface_ratio_equation",
    "check_jones_surfaces",
)

_LOGGER = logging.getLogger(__name__)

Triple = typing.Tuple[Fraction, Fraction, Fraction]


def _interpolate(points: typing.Sequence[typing.Tuple[int, int]]) -> Triple:
    # Newton divided differences through three points.
    (n0, y0), (n1, y1), (n2, y2) = points
    f01 = Fraction(y1 - y0, n1 - n0)
    f12 = Fraction(y2 - y1, n2 - n1)
    f012 = (f12 - f01) / (n2 - n0)
    a = f012
    b = f01 - f012 * (n0 + n1)
    c = y0 - f01 * n0 + f012 * n0 * n1
    return a, b, c

def fit_quasi_quadratic(seq: DegreeSequence, period: int = 1, fit_start: int = 1) -> QuasiQuadratic:
    r"""Fits exact quadratic quasi-polynomials to a degree sequence.

    Each residue class of ``n`` modulo ``period`` is interpolated through its
    first three points with ``n >= fit_start``. Every further point is checked
    against the fit and reported in :attr:`QuasiQuadratic.residuals` when it
    is not reproduced; such a fit is still returned.

    Parameters
    ----------
    seq: :class:`DegreeSequence`
        The observed ``(n, 4 d_minus, 4 d_plus)`` triples.
    period: :class:`builtins.int`
        The period, at least ``1``.
    fit_start: :class:`builtins.int`
        The smallest color used, at least ``1``.

    Raises
    ------
    ValueError
        ``period`` or ``fit_start`` is smaller than ``1``.
    FitError
        A residue class has fewer than three points or a color appears twice.
    """
    if not isinstance(period, int) or period < 1:
        raise ValueError("period must be an integer greater then or equal to 1.")
    if not isinstance(fit_start, int) or fit_start < 1:
        raise ValueError("fit_start must be an integer greater then or equal to 1.")

    colors = seq.colors
    if len(set(colors)) != len(colors):
        raise FitError(f"degree sequence {seq.label!r} repeats a color: {colors}")

    classes: typing.Dict[int, typing.List[typing.Tuple[int, int, int]]] = {r: [] for r in range(period)}
    for n, lo, hi in seq.entries:
        if n >= fit_start:
            classes[residue(n, period)].append((n, lo, hi))

    plus: typing.List[Triple] = []
    minus: typing.List[Triple] = []
    residuals: typing.List[typing.Tuple[int, str, Fraction]] = []

    for r in range(period):
        points = classes[r]
        if len(points) < 3:
            raise FitError(
                f"residue class {r} mod {period} has {len(points)} point(s) from n = {fit_start}, at least 3 are needed"
            )
        upper = _interpolate([(n, hi) for n, _, hi in points[:3]])
        lower = _interpolate([(n, lo) for n, lo, _ in points[:3]])
        plus.append(upper)
        minus.append(lower)

        for n, lo, hi in points[3:]:
            for side, (a, b, c), observed in (("plus", upper, hi), ("minus", lower, lo)):
                delta = observed - (a * n * n + b * n + c)
                if delta:
                    residuals.append((n, side, delta))

    if residuals:
        _LOGGER.info("Quasi-polynomial fit of %r with period %s misses %s point(s).", seq.label, period, len(residuals))

    return QuasiQuadratic(period=period, fit_start=fit_start, plus=plus, minus=minus, residuals=residuals)

def verify_degree_bounds(d: Diagram, seq: DegreeSequence, period: int = 1) -> BoundReport:
    r"""Compares the observed degrees of ``J_K(n)`` with the degree bounds of
    the diagram ``d`` they were computed from.

    On each side that is not adequate the residual of the refined bound,
    whose linear coefficient is better by ``2``, is recorded per color. See
    :class:`BoundReport` for how those residuals are judged.

    Parameters
    ----------
    d: :class:`Diagram`
        The diagram.
    seq: :class:`DegreeSequence`
        The degree sequence of ``d``.
    period: :class:`builtins.int`
        The period grouping colors for the refined bounds.
    """
    summary = adequacy(d)
    c_plus, c_minus = crossing_counts(d)
    c = len(d.crossings)
    v_A, v_B = summary.circles(Side.A), summary.circles(Side.B)

    entries = []
    for n, lo, hi in seq.entries:
        quadratic_lower = -2 * c_minus * n * n
        quadratic_upper = 2 * c_plus * n * n
        entries.append(
            BoundEntry(
                n=n,
                four_d_minus=lo,
                four_d_plus=hi,
                lower=quadratic_lower + 2 * (c - v_A) * n + 2 * v_A - 2 * c_plus,
                upper=quadratic_upper + 2 * (v_B - c) * n + 2 * c_minus - 2 * v_B,
                refined_lower=None if summary.a_adequate else lo - (quadratic_lower + 2 * (c - v_A + 1) * n),
                refined_upper=None if summary.b_adequate else hi - (quadratic_upper + 2 * (v_B - c - 1) * n),
            )
        )

    return BoundReport(
        label=d.label or seq.label,
        period=period,
        a_adequate=summary.a_adequate,
        b_adequate=summary.b_adequate,
        entries=entries,
    )

def slopes(q: QuasiQuadratic) -> SlopeData:
    r"""Returns the Jones slopes and jx sets of a fitted quasi-polynomial.

    ``js = {a_r}``, ``js* = {a*_r}``, ``jx = {b_r / 2}`` and ``jx* = {b*_r / 2}``
    where ``b_r`` is the linear coefficient of ``4 d_plus``. For the unknot
    ``jx = {1}``.
    """
    return SlopeData(
        js=(a for a, _, _ in q.plus),
        js_star=(a for a, _, _ in q.minus),
        jx=(b / 2 for _, b, _ in q.plus),
        jx_star=(b / 2 for _, b, _ in q.minus),
    )

def span_quasi_polynomial(q: QuasiQuadratic) -> typing.List[Triple]:
    r"""Returns ``(s1, s2, s3)`` per residue class where
    ``d_plus - d_minus = s1 n^2 + s2 n + s3``.
    """
    return [
        tuple((p - m) / 4 for p, m in zip(plus, minus))  # type: ignore
        for plus, minus in zip(q.plus, q.minus)
    ]


def _find_pair(
    left: typing.Iterable[Fraction],
    right: typing.Iterable[Fraction],
    target: Fraction,
) -> typing.Optional[typing.Tuple[Fraction, Fraction]]:
    right = sorted(right)
    for x in sorted(left):
        for y in right:
            if x - y == target:
                return x, y
    return None

def _not_applicable(name: str, equation: str, c: int) -> Verdict:
    return Verdict(name, VerdictStatus.NOT_APPLICABLE, equation, {"c": c, "reason": "0-crossing diagram"})

def _slope_and_linear(
    data: SlopeData,
    slope_target: Fraction,
    linear_target: Fraction,
) -> typing.Tuple[bool, typing.Dict[str, typing.Any]]:
    slope_pair = _find_pair(data.js, data.js_star, slope_target)
    linear_pair = _find_pair(data.linear, data.linear_star, linear_target)
    witnesses = {
        "js": data.js,
        "js_star": data.js_star,
        "jx": data.jx,
        "jx_star": data.jx_star,
        "s": slope_pair and slope_pair[0],
        "s_star": slope_pair and slope_pair[1],
        "x": linear_pair and linear_pair[0],
        "x_star": linear_pair and linear_pair[1],
        "s_minus_s_star": slope_target,
        "x_minus_x_star": linear_target,
    }
    return slope_pair is not None and linear_pair is not None, witnesses

def check_adequate_characterization(q: QuasiQuadratic, summary: StateSummary, c: int) -> Verdict:
    r"""Tests whether the degrees of ``J_K(n)`` single out an adequate knot.

    Holds when some ``s`` in ``js``, ``s*`` in ``js*`` satisfy ``s - s* = 2c`` and
    some linear coefficients ``x`` of ``4 d_plus`` and ``x*`` of ``4 d_minus``
    satisfy ``x - x* = 2 (2 - 2 g_T - c)``. The linear coefficients are ``2 jx``
    and ``2 jx*``; both are recorded.

    ``c`` and ``summary`` must come from a diagram realizing the crossing
    number. 0-crossing input is not applicable.
    """
    name = "adequate"
    equation = "s - s* = 2c and x - x* = 2(2 - 2g_T - c)"
    if c == 0:
        return _not_applicable(name, equation, c)

    g_T = summary.g_T_diagram
    holds, witnesses = _slope_and_linear(slopes(q), Fraction(2 * c), Fraction(2 * (2 - 2 * g_T - c)))
    witnesses.update(c=c, g_T=g_T)
    return Verdict.from_bool(name, holds, equation, witnesses)

def check_alternating_characterization(q: QuasiQuadratic, c: int) -> Verdict:
    r"""Tests whether the degrees of ``J_K(n)`` single out an alternating knot:
    ``s - s* = 2c`` and ``x - x* = 4 - 2c`` for some witnesses.
    """
    name = "alternating"
    equation = "s - s* = 2c and x - x* = 4 - 2c"
    if c == 0:
        return _not_applicable(name, equation, c)

    holds, witnesses = _slope_and_linear(slopes(q), Fraction(2 * c), Fraction(4 - 2 * c))
    witnesses.update(c=c)
    return Verdict.from_bool(name, holds, equation, witnesses)

def check_span_forms(q: QuasiQuadratic, c: int, g_T: int) -> typing.Tuple[Verdict, Verdict]:
    r"""Evaluates the characterizations in terms of the span coefficients of
    :func:`span_quasi_polynomial`.

    Returns
    -------
    Tuple[:class:`Verdict`, :class:`Verdict`]
        ``adequate_span`` (``s1 = c/2`` and ``s2 = 1 - g_T - c/2``) and
        ``alternating_span`` (``2 s1 = c`` and ``2 s1 + 2 s2 = 2``), each true
        when some residue class satisfies it.
    """
    adequate_eq = "s1 = c/2 and s2 = 1 - g_T - c/2"
    alternating_eq = "2s1 = c and 2s1 + 2s2 = 2"
    if c == 0:
        return _not_applicable("adequate_span", adequate_eq, c), _not_applicable("alternating_span", alternating_eq, c)

    spans = span_quasi_polynomial(q)
    half = Fraction(c, 2)
    adequate_hits = [r for r, (s1, s2, _) in enumerate(spans) if s1 == half and s2 == 1 - g_T - half]
    alternating_hits = [r for r, (s1, s2, _) in enumerate(spans) if 2 * s1 == c and 2 * s1 + 2 * s2 == 2]

    base = {"spans": spans, "c": c}
    return (
        Verdict.from_bool("adequate_span", bool(adequate_hits), adequate_eq, {**base, "g_T": g_T, "residues": adequate_hits}),
        Verdict.from_bool("alternating_span", bool(alternating_hits), alternating_eq, {**base, "residues": alternating_hits}),
    )

def check_surface_equations(
    sA: SurfaceSummary,
    sB: SurfaceSummary,
    c: int,
    g_T: int,
) -> typing.Tuple[Verdict, Verdict]:
    r"""Evaluates the spanning surface equations on the two state surfaces.

    ``S`` is the all-B surface with slope ``s = 2 c_plus`` and ``S*`` the
    all-A surface with slope ``s* = -2 c_minus``. The intersection number of
    their boundaries is taken as ``s - s*``.

    Parameters
    ----------
    sA: :class:`SurfaceSummary`
        The all-A state surface.
    sB: :class:`SurfaceSummary`
        The all-B state surface of the same diagram.
    c: :class:`builtins.int`
        The crossing number of the knot.
    g_T: :class:`builtins.int`
        The Turaev genus of the knot.

    Returns
    -------
    Tuple[:class:`Verdict`, :class:`Verdict`]
        ``surface_adequate``: ``s - s* = 2c`` and ``chi(S) + chi(S*) + c = 2 - 2g_T``.
        ``surface_alternating``: ``s - s* = 2c`` and ``chi(S) + chi(S*) + (s - s*)/2 = 2``.
    """
    adequate_eq = "s - s* = 2c and chi(S) + chi(S*) + c = 2 - 2g_T"
    alternating_eq = "s - s* = 2c and chi(S) + chi(S*) + (s - s*)/2 = 2"
    if c == 0:
        return _not_applicable("surface_adequate", adequate_eq, c), _not_applicable("surface_alternating", alternating_eq, c)

    span = sB.slope - sA.slope
    euler = sA.euler + sB.euler
    witnesses = {"s": sB.slope, "s_star": sA.slope, "chi": sB.euler, "chi_star": sA.euler, "c": c}

    adequate = Verdict.from_bool(
        "surface_adequate",
        span == 2 * c and euler + c == 2 - 2 * g_T,
        adequate_eq,
        {**witnesses, "g_T": g_T, "total": euler + c},
    )
    alternating = Verdict.from_bool(
        "surface_alternating",
        span == 2 * c and 2 * euler + span == 4,
        alternating_eq,
        {**witnesses, "total": euler + Fraction(span, 2)},
    )
    return adequate, alternating

def check_surface_ratio_equation(sA: SurfaceSummary, sB: SurfaceSummary, c: int, g_T: int) -> Verdict:
    r"""Evaluates ``s - s* = 2c`` and
    ``chi(S)/|dS| + chi(S*)/|dS*| + c = 2 - 2g_T`` on the state surfaces.
    """
    equation = "s - s* = 2c and chi(S)/|dS| + chi(S*)/|dS*| + c = 2 - 2g_T"
    if c == 0:
        return _not_applicable("surface_ratio", equation, c)

    total = Fraction(sB.euler, sB.boundary_components) + Fraction(sA.euler, sA.boundary_components) + c
    return Verdict.from_bool(
        "surface_ratio",
        sB.slope - sA.slope == 2 * c and total == 2 - 2 * g_T,
        equation,
        {
            "s": sB.slope,
            "s_star": sA.slope,
            "boundary": sB.boundary_components,
            "boundary_star": sA.boundary_components,
            "c": c,
            "g_T": g_T,
            "total": total,
        },
    )

def check_jones_surfaces(data: SlopeData, sA: SurfaceSummary, sB: SurfaceSummary) -> Verdict:
    r"""Tests whether the state surfaces are Jones surfaces.

    The all-B surface must have its slope in ``js`` and
    ``2 chi / |dS|`` among the linear coefficients ``2 jx``; the all-A surface
    its slope in ``js*`` and ``-2 chi / |dS|`` among ``2 jx*``. This holds for
    adequate diagrams.
    """
    x = Fraction(2 * sB.euler, sB.boundary_components)
    x_star = Fraction(-2 * sA.euler, sA.boundary_components)
    holds = (
        sB.slope in data.js
        and sA.slope in data.js_star
        and x in data.linear
        and x_star in data.linear_star
    )
    return Verdict.from_bool(
        "jones_surfaces",
        holds,
        "s in js, s* in js*, 2chi(S)/|dS| in 2jx, -2chi(S*)/|dS*| in 2jx*",
        {"s": sB.slope, "s_star": sA.slope, "x": x, "x_star": x_star, "jx": data.jx, "jx_star": data.jx_star},
    )
