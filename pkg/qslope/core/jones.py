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

from qslope.core.bracket import bracket
from qslope.core.cache_impl import DefaultBracketCache
from qslope.core.config import EngineConfig
from qslope.core.pd import cable, writhe
from qslope.models.jones import BracketResult, ChebyshevExpansion, DegreeSequence
from qslope.models.polynomials import LaurentPoly

from concurrent.futures import ProcessPoolExecutor
import logging
import typing

if typing.TYPE_CHECKING:
    from qslope.models.diagrams import Diagram

__all__ = (
    "ColoredJones",
    "chebyshev",
    "colored_jones",
    "jones_polynomial",
    "unknot_closed_form",
    "degree_sequence",
)

_LOGGER = logging.getLogger(__name__)


def chebyshev(n: int) -> ChebyshevExpansion:
    r"""Returns the coefficients of ``S_{n-1}(x)``.

    Raises
    ------
    ValueError
        ``n`` is less than ``1``.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("color n must be an integer greater then or equal to 1.")

    previous: typing.Dict[int, int] = {}
    current: typing.Dict[int, int] = {0: 1}
    for _ in range(n - 1):
        following = {m + 1: c for m, c in current.items()}
        for m, c in previous.items():
            following[m] = following.get(m, 0) - c
        previous, current = current, following

    return ChebyshevExpansion(n, current)

def unknot_closed_form(n: int) -> LaurentPoly:
    r"""Returns the colored Jones polynomial of the unknot, the quantum integer
    ``[n] = sum(t^((n - 1 - 2k) / 2) for k in range(n))``, expanded.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("color n must be an integer greater then or equal to 1.")
    return LaurentPoly({2 * (n - 1 - 2 * k): 1 for k in range(n)})

def _cable_bracket(d: Diagram, m: int, config: EngineConfig) -> BracketResult:
    cabled = cable(d, m)
    result = bracket(cabled, config)
    _LOGGER.info(
        "Bracket of %r cable m=%d: %d crossings, %s engine, cost %d.",
        d.label, m, len(cabled.crossings), result.engine, result.states_or_width,
    )
    return result


class ColoredJones:
    r"""Computes colored Jones polynomials of one knot diagram.

    Each cabled bracket ``<D^m>`` is evaluated once and shared between all
    colors. The normalization is::

        J(n) = ((-1)^(n-1) A^(-(n^2-1)))^w * (-1)^(n-1) * sum(S[m] * <D^m>)

    where ``S`` are the coefficients of :func:`chebyshev` and ``w`` is the
    writhe of the base diagram. ``J(1) = 1`` and ``J`` of the unknot is
    :func:`unknot_closed_form`.

    Parameters
    ----------
    diagram: :class:`Diagram`
        A knot diagram.
    config: :class:`EngineConfig`
        The bracket engine configuration.

    Raises
    ------
    UnsupportedDiagram
        The diagram is not a knot diagram.
    """

    def __init__(self, diagram: Diagram, config: EngineConfig = None) -> None:
        self.diagram = diagram
        self.config = config if config is not None else EngineConfig()
        self.writhe = writhe(diagram)
        self._brackets: typing.Dict[int, BracketResult] = {}

    @property
    def brackets(self) -> typing.Dict[int, BracketResult]:
        r"""The cabled brackets evaluated so far, by ``m``."""
        return dict(self._brackets)

    def prefetch(self, colors: typing.Iterable[int]) -> None:
        r"""Evaluates every cabled bracket needed by the given colors.

        With ``jobs > 1`` the cables are evaluated in worker processes.
        """
        needed = sorted({m for n in colors for m in chebyshev(n).coeffs} - set(self._brackets))
        if not needed:
            return

        config = self.config
        if config.jobs > 1 and len(needed) > 1:
            worker_config = config.replace(jobs=1, cache=DefaultBracketCache(0))
            with ProcessPoolExecutor(max_workers=min(config.jobs, len(needed))) as pool:
                futures = {m: pool.submit(_cable_bracket, self.diagram, m, worker_config) for m in needed}
                for m, future in futures.items():
                    self._brackets[m] = future.result()
        else:
            for m in needed:
                self._brackets[m] = _cable_bracket(self.diagram, m, config)

    def cable_bracket(self, m: int) -> BracketResult:
        r"""Returns ``<D^m>``."""
        if m not in self._brackets:
            self._brackets[m] = _cable_bracket(self.diagram, m, self.config)
        return self._brackets[m]

    def value(self, n: int) -> LaurentPoly:
        r"""Returns ``J_K(n)`` as a polynomial in ``A = t^(-1/4)``.

        Raises
        ------
        EngineCapExceeded
            A required cable is beyond the engine caps.
        """
        expansion = chebyshev(n)
        self.prefetch([n])

        total = LaurentPoly.zero()
        for m, coeff in expansion.coeffs.items():
            total = total + self.cable_bracket(m).value.scale(coeff)

        sign = -1 if ((n - 1) * (self.writhe + 1)) % 2 else 1
        return total.shift(-(n * n - 1) * self.writhe).scale(sign)

    def degree_sequence(self, n_max: int) -> DegreeSequence:
        r"""Returns ``(n, 4 d_minus, 4 d_plus)`` for ``n = 1 .. n_max``."""
        if not isinstance(n_max, int) or n_max < 1:
            raise ValueError("n_max must be an integer greater then or equal to 1.")

        self.prefetch(range(1, n_max + 1))
        entries = []
        for n in range(1, n_max + 1):
            entries.append((n, *self.value(n).t_degrees()))
        return DegreeSequence(self.diagram.label, entries)


def colored_jones(d: Diagram, n: int, config: EngineConfig = None) -> LaurentPoly:
    r"""Returns the ``n``-colored Jones polynomial ``J_K(n)`` of a knot diagram.

    See :class:`ColoredJones` for the normalization.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("color n must be an integer greater then or equal to 1.")
    return ColoredJones(d, config).value(n)

def jones_polynomial(d: Diagram, config: EngineConfig = None) -> LaurentPoly:
    r"""Returns the unreduced Jones polynomial, ``J_K(2)``."""
    return colored_jones(d, 2, config)

def degree_sequence(d: Diagram, n_max: int, config: EngineConfig = None) -> DegreeSequence:
    r"""Returns the degree sequence of ``J_K(n)`` for ``n = 1 .. n_max``."""
    return ColoredJones(d, config).degree_sequence(n_max)
