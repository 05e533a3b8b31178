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

import typing

__all__ = (
    "Crossing",
    "Diagram",
)

# PD slots that carry the over strand, by sign, as (incoming, outgoing).
OVER_SLOTS = {1: (3, 1), -1: (1, 3)}


class Crossing(BaseModel):
    r"""A signed crossing of a planar diagram.

    Arcs are listed counterclockwise starting at the incoming under-strand, so
    the under strand runs from slot ``0`` to slot ``2``. The over strand runs
    from slot ``3`` to slot ``1`` for a positive crossing and from slot ``1``
    to slot ``3`` for a negative one.

    Attributes
    ----------
    arcs: Tuple[:class:`builtins.int`, :class:`builtins.int`, :class:`builtins.int`, :class:`builtins.int`]
        The four arc labels ``(a, b, c, d)``.
    sign: :class:`builtins.int`
        ``+1`` or ``-1``.
    """
    if typing.TYPE_CHECKING:
        arcs: typing.Tuple[int, int, int, int]
        sign: int

    __slots__ = ("arcs", "sign")

    def __init__(self, arcs: typing.Sequence[int], sign: int) -> None:
        if len(arcs) != 4:
            raise ValueError("a crossing has exactly four arcs.")
        if sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1.")

        self.arcs = tuple(int(a) for a in arcs)  # type: ignore
        self.sign = sign

    @property
    def under(self) -> typing.Tuple[int, int]:
        r"""The ``(incoming, outgoing)`` arcs of the under strand."""
        return (self.arcs[0], self.arcs[2])

    @property
    def over(self) -> typing.Tuple[int, int]:
        r"""The ``(incoming, outgoing)`` arcs of the over strand."""
        i, o = OVER_SLOTS[self.sign]
        return (self.arcs[i], self.arcs[o])

    def incoming_slots(self) -> typing.Tuple[int, int]:
        r"""The slots where strands enter this crossing, under strand first."""
        return (0, OVER_SLOTS[self.sign][0])

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {"arcs": list(self.arcs), "sign": self.sign}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Crossing):
            return NotImplemented
        return self.arcs == other.arcs and self.sign == other.sign

    def __hash__(self) -> int:
        return hash((self.arcs, self.sign))

    def __repr__(self) -> str:
        a, b, c, d = self.arcs
        return f"X({a},{b},{c},{d}){'+' if self.sign > 0 else '-'}"


class Diagram(BaseModel):
    r"""An oriented planar diagram of a knot or link.

    This model is not meant to be initialized directly. Use :func:`parse_pd`,
    :func:`build_diagram` or :func:`diagram_from_json` which validate the
    input and infer the crossing signs.

    Equality compares the crossing list and the number of free loops;
    labels are ignored.

    Attributes
    ----------
    crossings: Tuple[:class:`Crossing`, ...]
        The crossings in PD order.
    components: :class:`builtins.int`
        The number of link components, free loops included.
    label: :class:`builtins.str`
        A free-form name.
    free_loops: :class:`builtins.int`
        The number of crossingless circles. The 0-crossing unknot has one free
        loop; the empty diagram has none.
    blocks: Optional[Tuple[:class:`builtins.int`, ...]]
        For cabled diagrams, the index of the base crossing each crossing
        replaces. ``None`` otherwise. Used to order the sweep engine.
    """
    if typing.TYPE_CHECKING:
        crossings: typing.Tuple[Crossing, ...]
        components: int
        label: str
        free_loops: int
        blocks: typing.Optional[typing.Tuple[int, ...]]
        _ends: typing.Optional[typing.Dict[int, typing.Tuple[typing.Tuple[int, int], typing.Tuple[int, int]]]]

    __slots__ = ("crossings", "components", "label", "free_loops", "blocks", "_ends")

    def __init__(
        self,
        crossings: typing.Iterable[Crossing],
        *,
        components: int,
        label: str = "",
        free_loops: int = 0,
        blocks: typing.Optional[typing.Sequence[int]] = None,
    ) -> None:
        self.crossings = tuple(crossings)
        self.components = components
        self.label = label
        self.free_loops = free_loops
        self.blocks = None if blocks is None else tuple(blocks)
        self._ends = None

    @property
    def crossing_number(self) -> int:
        r"""The number of crossings of this diagram, ``c(D)``."""
        return len(self.crossings)

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    @property
    def is_empty(self) -> bool:
        return not self.crossings and not self.free_loops

    @property
    def pd(self) -> typing.List[typing.Tuple[int, int, int, int]]:
        r"""The raw PD code as a list of 4-tuples."""
        return [c.arcs for c in self.crossings]

    @property
    def arcs(self) -> typing.List[int]:
        r"""The sorted arc labels."""
        return sorted(self.ends())

    def ends(self) -> typing.Dict[int, typing.Tuple[typing.Tuple[int, int], typing.Tuple[int, int]]]:
        r"""Maps every arc label to its ``(tail, head)`` slots.

        A slot is a ``(crossing_index, position)`` pair. The tail is where the
        arc leaves a crossing, the head is where it enters the next one.

        Returns
        -------
        :class:`builtins.dict`
        """
        if self._ends is None:
            tails: typing.Dict[int, typing.Tuple[int, int]] = {}
            heads: typing.Dict[int, typing.Tuple[int, int]] = {}

            for i, crossing in enumerate(self.crossings):
                incoming = crossing.incoming_slots()
                for p, arc in enumerate(crossing.arcs):
                    if p in incoming:
                        heads[arc] = (i, p)
                    else:
                        tails[arc] = (i, p)

            self._ends = {arc: (tails[arc], heads[arc]) for arc in heads}

        return self._ends

    def head(self, arc: int) -> typing.Tuple[int, int]:
        return self.ends()[arc][1]

    def tail(self, arc: int) -> typing.Tuple[int, int]:
        return self.ends()[arc][0]

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        data: typing.Dict[str, typing.Any] = {
            "label": self.label,
            "pd": [list(c.arcs) for c in self.crossings],
        }
        if self.free_loops:
            data["free_loops"] = self.free_loops
        return data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.crossings == other.crossings and self.free_loops == other.free_loops

    def __hash__(self) -> int:
        return hash((self.crossings, self.free_loops))

    def __repr__(self) -> str:
        return (f"<Diagram label={self.label!r} crossings={len(self.crossings)} "
                f"components={self.components} free_loops={self.free_loops}>")
