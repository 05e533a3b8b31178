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

from qslope.core.cache_impl import DefaultBracketCache
from qslope.core.config import EngineConfig
from qslope.core.jones import ColoredJones
from qslope.core.pd import crossing_counts, is_connected, writhe
from qslope.core.slopes import (
    fit_quasi_quadratic,
    verify_degree_bounds,
    slopes,
    check_adequate_characterization,
    check_alternating_characterization,
    check_span_forms,
    check_surface_equations,
    check_surface_ratio_equation,
    check_jones_surfaces,
)
from qslope.core.states import adequacy, surface_summary
from qslope.enums import Side
from qslope.exceptions import UnsupportedDiagram
from qslope.models.catalog import KnotRecord
from qslope.models.slopes import CharacterizationReport

from concurrent.futures import ProcessPoolExecutor
import asyncio
import functools
import logging
import typing

if typing.TYPE_CHECKING:
    from qslope.models.diagrams import Diagram

__all__ = (
    "analyze",
    "compute_jones",
    "fit_slopes",
    "characterize",
    "run_pipelines",
)

_LOGGER = logging.getLogger(__name__)


def _diagram_fields(d: Diagram) -> typing.Dict[str, typing.Any]:
    fields: typing.Dict[str, typing.Any] = {}
    if d.is_knot:
        fields["crossing_counts"] = crossing_counts(d)
        fields["writhe"] = writhe(d)
    if is_connected(d):
        fields["summary"] = adequacy(d)
    if d.is_knot and "summary" in fields:
        fields["surfaces"] = (surface_summary(d, Side.A), surface_summary(d, Side.B))
    return fields

def analyze(d: Diagram) -> KnotRecord:
    r"""Computes the state data and state surfaces of a diagram.

    Disconnected diagrams get crossing data only; links get no surfaces.
    """
    return KnotRecord(d, **_diagram_fields(d))

def compute_jones(d: Diagram, colors: typing.Iterable[int], config: EngineConfig = None) -> KnotRecord:
    r"""Computes ``J_K(n)`` of a knot diagram for every given color."""
    calculator = ColoredJones(d, config)
    colors = sorted(set(colors))
    calculator.prefetch(colors)
    polynomials = {n: calculator.value(n) for n in colors}
    return KnotRecord(d, crossing_counts=crossing_counts(d), writhe=calculator.writhe, polynomials=polynomials)

def fit_slopes(
    d: Diagram,
    n_max: int,
    *,
    period: int = 1,
    fit_start: int = 1,
    config: EngineConfig = None,
) -> KnotRecord:
    r"""Computes the degree sequence of a knot diagram up to ``n_max``, fits
    it and derives the Jones slopes.
    """
    seq = ColoredJones(d, config).degree_sequence(n_max)
    fit = fit_quasi_quadratic(seq, period, fit_start)
    return KnotRecord(d, crossing_counts=crossing_counts(d), writhe=writhe(d), degrees=seq, fit=fit, slopes=slopes(fit))

def characterize(
    d: Diagram,
    n_max: int,
    *,
    period: int = 1,
    fit_start: int = 1,
    config: EngineConfig = None,
) -> KnotRecord:
    r"""Runs the whole pipeline on a diagram that realizes the crossing number
    of its knot.

    The crossing number and Turaev genus used by the characterization
    equations are those of ``d``; no smaller diagram is searched for.

    Parameters
    ----------
    d: :class:`Diagram`
        A minimal knot diagram.
    n_max: :class:`builtins.int`
        The largest color. At least ``3 * period`` colors are needed for the fit.
    period: :class:`builtins.int`
        The period of the fitted quasi-polynomials.
    fit_start: :class:`builtins.int`
        The smallest color used by the fit.
    config: :class:`EngineConfig`
        The bracket engine configuration.

    Returns
    -------
    :class:`KnotRecord`
        With degrees, fit, slopes, bound report and :class:`CharacterizationReport`.
    """
    if not d.is_knot or not is_connected(d):
        raise UnsupportedDiagram(d.components, "characterization needs a connected knot diagram")

    _LOGGER.info("Characterizing %r with n <= %d.", d.label, n_max)
    fields = _diagram_fields(d)
    summary = fields["summary"]
    surface_a, surface_b = fields["surfaces"]

    seq = ColoredJones(d, config).degree_sequence(n_max)
    fit = fit_quasi_quadratic(seq, period, fit_start)
    data = slopes(fit)
    c = len(d.crossings)
    g_T = summary.g_T_diagram

    verdicts = [
        check_adequate_characterization(fit, summary, c),
        check_alternating_characterization(fit, c),
        *check_span_forms(fit, c, g_T),
        *check_surface_equations(surface_a, surface_b, c, g_T),
        check_surface_ratio_equation(surface_a, surface_b, c, g_T),
        check_jones_surfaces(data, surface_a, surface_b),
    ]
    report = CharacterizationReport(label=d.label, c=c, g_T=g_T, verdicts=verdicts)
    _LOGGER.info("Characterized %r: %r", d.label, report)

    return KnotRecord(
        d,
        degrees=seq,
        fit=fit,
        slopes=data,
        bounds=verify_degree_bounds(d, seq, period),
        characterization=report,
        **fields,
    )


async def _gather(
    function: typing.Callable[..., KnotRecord],
    diagrams: typing.Sequence[Diagram],
    jobs: int,
    kwargs: typing.Dict[str, typing.Any],
) -> typing.List[KnotRecord]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [loop.run_in_executor(pool, functools.partial(function, d, **kwargs)) for d in diagrams]
        return list(await asyncio.gather(*futures))

def run_pipelines(
    function: typing.Callable[..., KnotRecord],
    diagrams: typing.Sequence[Diagram],
    *,
    jobs: int = 1,
    **kwargs: typing.Any,
) -> typing.List[KnotRecord]:
    r"""Runs a per-diagram pipeline such as :func:`characterize` on many diagrams.

    With ``jobs > 1`` the diagrams are spread over worker processes. Results
    keep the order of ``diagrams`` and the first failure is raised.

    Parameters
    ----------
    function: Callable[..., :class:`KnotRecord`]
        The pipeline; a module level function so that it can be sent to workers.
    diagrams: Sequence[:class:`Diagram`]
        The inputs.
    jobs: :class:`builtins.int`
        The number of worker processes.
    **kwargs:
        Passed to ``function`` after the diagram. A ``config`` is handed to
        workers without its cache and with ``jobs=1``.
    """
    if jobs <= 1 or len(diagrams) <= 1:
        return [function(d, **kwargs) for d in diagrams]

    config = kwargs.get("config")
    if config is not None:
        kwargs["config"] = config.replace(jobs=1, cache=DefaultBracketCache(0))

    loop = asyncio.new_event_loop()
    try:
        return loop.run_until_complete(_gather(function, diagrams, min(jobs, len(diagrams)), kwargs))
    finally:
        loop.close()
