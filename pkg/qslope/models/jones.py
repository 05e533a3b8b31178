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

from qslope.models.base import BaseModel
from qslope.models.polynomials import LaurentPoly

import typing

__all__ = (
    "BracketResult",
    "ChebyshevExpansion",
    "DegreeSequence",
)


class BracketResult(BaseModel):
    r"""The Kauffman bracket of a diagram together with the cost of computing it.

    Attributes
    ----------
    value: :class:`LaurentPoly`
        The bracket.
    engine: :class:`builtins.str`
        The :class:`Engine` that produced the value, ``"statesum"`` or ``"sweep"``.
    states_or_width: :class:`builtins.int`
        ``2^c`` states for the state-sum engine, the maximal number of open
        strands for the sweep engine.
    """
    if typing.TYPE_CHECKING:
        value: LaurentPoly
        engine: str
        states_or_width: int

    __slots__ = ("value", "engine", "states_or_width")

    def __init__(self, value: LaurentPoly, engine: str, states_or_width: int) -> None:
        self.value = value
        self.engine = engine
        self.states_or_width = states_or_width

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "value": self.value.to_pairs(),
            "engine": self.engine,
            "states_or_width": self.states_or_width,
        }

    def __repr__(self) -> str:
        return f"<BracketResult engine={self.engine} states_or_width={self.states_or_width} value={self.value!r}>"


class ChebyshevExpansion(BaseModel):
    r"""The coefficients of the Chebyshev polynomial ``S_{n-1}(x)``.

    ``S_0 = 1``, ``S_1 = x`` and ``S_{k+2} = x S_{k+1} - S_k``.

    Attributes
    ----------
    n: :class:`builtins.int`
        The color, ``n >= 1``.
    coeffs: Dict[:class:`builtins.int`, :class:`builtins.int`]
        Maps the power ``m`` of ``x`` to its nonzero coefficient.
    """
    if typing.TYPE_CHECKING:
        n: int
        coeffs: typing.Dict[int, int]

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: typing.Mapping[int, int]) -> None:
        self.n = n
        self.coeffs = {m: c for m, c in sorted(coeffs.items(), reverse=True) if c}

    @property
    def degree(self) -> int:
        return self.n - 1

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {"n": self.n, "coeffs": [[m, c] for m, c in self.coeffs.items()]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChebyshevExpansion):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"<ChebyshevExpansion n={self.n} coeffs={self.coeffs}>"


class DegreeSequence(BaseModel):
    r"""Four times the minimal and maximal ``t``-degrees of ``J_K(n)`` over a
    range of colors.

    Attributes
    ----------
    label: :class:`builtins.str`
        The knot label.
    entries: Tuple[Tuple[:class:`builtins.int`, :class:`builtins.int`, :class:`builtins.int`], ...]
        ``(n, 4 d_minus, 4 d_plus)`` triples sorted by ``n``.
    """
    if typing.TYPE_CHECKING:
        label: str
        entries: typing.Tuple[typing.Tuple[int, int, int], ...]

    __slots__ = ("label", "entries")

    def __init__(self, label: str, entries: typing.Iterable[typing.Sequence[int]]) -> None:
        self.label = label
        self.entries = tuple(sorted((int(n), int(lo), int(hi)) for n, lo, hi in entries))  # type: ignore

    @property
    def colors(self) -> typing.List[int]:
        return [n for n, _, _ in self.entries]

    def lower(self) -> typing.Dict[int, int]:
        r"""Maps ``n`` to ``4 d_minus``."""
        return {n: lo for n, lo, _ in self.entries}

    def upper(self) -> typing.Dict[int, int]:
        r"""Maps ``n`` to ``4 d_plus``."""
        return {n: hi for n, _, hi in self.entries}

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {"label": self.label, "entries": [list(e) for e in self.entries]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"<DegreeSequence label={self.label!r} entries={list(self.entries)}>"
