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
from qslope.enums import Side

import typing

__all__ = (
    "Resolution",
    "StateSummary",
    "SurfaceSummary",
)


class Resolution(BaseModel):
    r"""The circles of one Kauffman state of a diagram.

    Attributes
    ----------
    state: Tuple[:class:`builtins.str`, ...]
        The chosen :class:`Side` at every crossing.
    circles: Tuple[Tuple[:class:`builtins.int`, ...], ...]
        The arc labels on each state circle, sorted. Every arc belongs to
        exactly one circle. Free loops appear as empty circles.
    """
    if typing.TYPE_CHECKING:
        state: typing.Tuple[str, ...]
        circles: typing.Tuple[typing.Tuple[int, ...], ...]

    __slots__ = ("state", "circles")

    def __init__(self, state: typing.Sequence[str], circles: typing.Iterable[typing.Iterable[int]]) -> None:
        self.state = tuple(state)
        self.circles = tuple(tuple(sorted(c)) for c in circles)

    @property
    def circle_count(self) -> int:
        return len(self.circles)

    def circle_of(self, arc: int) -> int:
        r"""Returns the index of the circle containing ``arc``."""
        for index, circle in enumerate(self.circles):
            if arc in circle:
                return index
        raise KeyError(arc)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "state": "".join(self.state),
            "circle_count": self.circle_count,
            "circles": [list(c) for c in self.circles],
        }

    def __repr__(self) -> str:
        return f"<Resolution state={''.join(self.state)!r} circles={self.circle_count}>"


class StateSummary(BaseModel):
    r"""Adequacy data and Turaev genus of a connected diagram.

    Attributes
    ----------
    v_A: :class:`builtins.int`
        The number of circles of the all-A state.
    v_B: :class:`builtins.int`
        The number of circles of the all-B state.
    a_adequate: :class:`builtins.bool`
        Whether the all-A state graph has no 1-edge loops.
    b_adequate: :class:`builtins.bool`
        Whether the all-B state graph has no 1-edge loops.
    g_T_diagram: :class:`builtins.int`
        The Turaev genus of the diagram, ``(2 - v_A - v_B + c) / 2``.
    loops_A: Tuple[:class:`builtins.int`, ...]
        Indices of crossings whose edge is a 1-edge loop of the all-A state graph.
    loops_B: Tuple[:class:`builtins.int`, ...]
        Indices of crossings whose edge is a 1-edge loop of the all-B state graph.
    """
    if typing.TYPE_CHECKING:
        v_A: int
        v_B: int
        a_adequate: bool
        b_adequate: bool
        g_T_diagram: int
        loops_A: typing.Tuple[int, ...]
        loops_B: typing.Tuple[int, ...]

    __slots__ = ("v_A", "v_B", "a_adequate", "b_adequate", "g_T_diagram", "loops_A", "loops_B")

    def __init__(
        self,
        *,
        v_A: int,
        v_B: int,
        g_T_diagram: int,
        loops_A: typing.Iterable[int] = (),
        loops_B: typing.Iterable[int] = (),
    ) -> None:
        self.v_A = v_A
        self.v_B = v_B
        self.g_T_diagram = g_T_diagram
        self.loops_A = tuple(sorted(loops_A))
        self.loops_B = tuple(sorted(loops_B))
        self.a_adequate = not self.loops_A
        self.b_adequate = not self.loops_B

    @property
    def adequate(self) -> bool:
        r"""Whether the diagram is both A-adequate and B-adequate."""
        return self.a_adequate and self.b_adequate

    def circles(self, side: str) -> int:
        return self.v_A if Side.validate(side) == Side.A else self.v_B

    def is_adequate(self, side: str) -> bool:
        return self.a_adequate if Side.validate(side) == Side.A else self.b_adequate

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "v_A": self.v_A,
            "v_B": self.v_B,
            "a_adequate": self.a_adequate,
            "b_adequate": self.b_adequate,
            "g_T_diagram": self.g_T_diagram,
            "loops_A": list(self.loops_A),
            "loops_B": list(self.loops_B),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateSummary):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return (f"<StateSummary v_A={self.v_A} v_B={self.v_B} a_adequate={self.a_adequate} "
                f"b_adequate={self.b_adequate} g_T_diagram={self.g_T_diagram}>")


class SurfaceSummary(BaseModel):
    r"""Numerical data of the all-A or all-B state surface of a knot diagram.

    Attributes
    ----------
    side: :class:`builtins.str`
        The :class:`Side` of the state.
    euler: :class:`builtins.int`
        The Euler characteristic, ``v - c``.
    boundary_components: :class:`builtins.int`
        The number of boundary components. Always ``1`` for a knot.
    slope: :class:`builtins.int`
        The boundary slope, ``-2 c_minus`` on side A and ``2 c_plus`` on side B.
    """
    if typing.TYPE_CHECKING:
        side: str
        euler: int
        boundary_components: int
        slope: int

    __slots__ = ("side", "euler", "boundary_components", "slope")

    def __init__(self, *, side: str, euler: int, boundary_components: int, slope: int) -> None:
        self.side = Side.validate(side)
        self.euler = euler
        self.boundary_components = boundary_components
        self.slope = slope

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "side": self.side,
            "euler": self.euler,
            "boundary_components": self.boundary_components,
            "slope": self.slope,
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SurfaceSummary):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f"<SurfaceSummary side={self.side} euler={self.euler} slope={self.slope}>"
