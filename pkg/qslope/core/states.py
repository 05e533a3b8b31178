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

from qslope.core.pd import crossing_counts, is_connected
from qslope.enums import Side
from qslope.exceptions import DiagramValidationError, UnsupportedDiagram
from qslope.models.states import Resolution, StateSummary, SurfaceSummary

from networkx.utils import UnionFind
import networkx as nx
import typing

if typing.TYPE_CHECKING:
    from qslope.models.diagrams import Diagram

__all__ = (
    "resolve",
    "state_graph",
    "adequacy",
    "surface_summary",
)

# Pairs of PD slots joined by each smoothing.
SMOOTHINGS = {
    Side.A: ((0, 1), (2, 3)),
    Side.B: ((0, 3), (1, 2)),
}


def _normalize_state(d: Diagram, state: typing.Union[str, typing.Sequence[str]]) -> typing.Tuple[str, ...]:
    if isinstance(state, str) and state in Side.ALL:
        return (state,) * len(d.crossings)

    state = tuple(state)
    if len(state) != len(d.crossings):
        raise ValueError(f"state has {len(state)} choices but the diagram has {len(d.crossings)} crossings.")
    for side in state:
        Side.validate(side)
    return state

def resolve(d: Diagram, state: typing.Union[str, typing.Sequence[str]]) -> Resolution:
    r"""Smooths every crossing of a diagram and returns the state circles.

    Parameters
    ----------
    d: :class:`Diagram`
        The diagram.
    state: Union[:class:`builtins.str`, Sequence[:class:`builtins.str`]]
        Either one :class:`Side` applied to all crossings or one side
        per crossing, e.g. ``"ABBA"``.

    Returns
    -------
    :class:`Resolution`
    """
    state = _normalize_state(d, state)
    arcs = UnionFind({a for c in d.crossings for a in c.arcs})

    for crossing, side in zip(d.crossings, state):
        for p, q in SMOOTHINGS[side]:
            arcs.union(crossing.arcs[p], crossing.arcs[q])

    circles = sorted((sorted(group) for group in arcs.to_sets()), key=lambda g: g[0])
    circles.extend([] for _ in range(d.free_loops))
    return Resolution(state, circles)

def _strand_circles(d: Diagram, resolution: Resolution, side: str) -> typing.List[typing.Tuple[int, int]]:
    lookup = {arc: index for index, circle in enumerate(resolution.circles) for arc in circle}
    pairs = []
    for crossing in d.crossings:
        (p, _), (q, _) = SMOOTHINGS[side]
        pairs.append((lookup[crossing.arcs[p]], lookup[crossing.arcs[q]]))
    return pairs

def state_graph(d: Diagram, side: str) -> nx.MultiGraph:
    r"""Returns the state graph ``G_A`` or ``G_B`` of a diagram.

    Vertices are the circle indices of :func:`resolve` for the all-``side``
    state, each carrying its ``arcs``. Every crossing contributes one edge,
    keyed by its index, joining the circles of its two smoothing strands.
    Self-loops are kept.

    Returns
    -------
    :class:`networkx.MultiGraph`
    """
    side = Side.validate(side)
    resolution = resolve(d, side)

    graph = nx.MultiGraph(side=side)
    for index, circle in enumerate(resolution.circles):
        graph.add_node(index, arcs=circle)
    for index, (u, v) in enumerate(_strand_circles(d, resolution, side)):
        graph.add_edge(u, v, key=index, crossing=index)
    return graph

def adequacy(d: Diagram) -> StateSummary:
    r"""Computes the all-A and all-B state data of a connected diagram.

    A side is adequate when its state graph has no 1-edge loops, i.e. no
    crossing joins a state circle to itself.

    Raises
    ------
    UnsupportedDiagram
        The diagram is not connected.
    DiagramValidationError
        The circle counts of the diagram contradict planarity.
    """
    if not is_connected(d):
        raise UnsupportedDiagram(d.components, "adequacy and Turaev genus need a connected diagram")

    counts = {}
    loops = {}
    for side in Side.ALL:
        resolution = resolve(d, side)
        counts[side] = resolution.circle_count
        loops[side] = [i for i, (u, v) in enumerate(_strand_circles(d, resolution, side)) if u == v]

    doubled = 2 - counts[Side.A] - counts[Side.B] + len(d.crossings)
    if doubled < 0 or doubled % 2:
        raise DiagramValidationError(
            f"state circle counts {counts} violate the Turaev genus identity, the diagram is not planar"
        )

    return StateSummary(
        v_A=counts[Side.A],
        v_B=counts[Side.B],
        g_T_diagram=doubled // 2,
        loops_A=loops[Side.A],
        loops_B=loops[Side.B],
    )

def surface_summary(d: Diagram, side: str) -> SurfaceSummary:
    r"""Returns the Euler characteristic and boundary slope of the all-``side``
    state surface of a knot diagram.

    Raises
    ------
    UnsupportedDiagram
        The diagram is not a knot diagram.
    """
    side = Side.validate(side)
    if d.components != 1:
        raise UnsupportedDiagram(d.components)

    c_plus, c_minus = crossing_counts(d)
    circles = resolve(d, side).circle_count
    return SurfaceSummary(
        side=side,
        euler=circles - len(d.crossings),
        boundary_components=1,
        slope=-2 * c_minus if side == Side.A else 2 * c_plus,
    )
