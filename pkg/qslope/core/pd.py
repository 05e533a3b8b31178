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

from qslope.models.diagrams import Crossing, Diagram, OVER_SLOTS
from qslope.exceptions import PDParseError, DiagramValidationError, UnsupportedDiagram

from collections import Counter, deque
from networkx.utils import UnionFind
import networkx as nx
import json
import logging
import re
import typing

if typing.TYPE_CHECKING:
    import os

__all__ = (
    "parse_pd",
    "serialize_pd",
    "build_diagram",
    "diagram_from_json",
    "diagram_to_json",
    "load_diagrams",
    "writhe",
    "crossing_counts",
    "cable",
    "mirror",
    "add_kink",
    "faces",
    "r2_move",
    "braid_closure",
    "is_alternating",
    "is_connected",
    "unknot",
)

_LOGGER = logging.getLogger(__name__)

_TERM = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_SEPARATOR = re.compile(r"[\s,]*")
_TOKEN = re.compile(r"[^\s,]*")

PDCode = typing.Sequence[typing.Sequence[int]]
Slot = typing.Tuple[int, int]


def unknot(label: str = "0_1") -> Diagram:
    r"""Returns the 0-crossing diagram of the unknot, a single free loop."""
    return Diagram((), components=1, label=label, free_loops=1)

def parse_pd(text: str, *, label: str = "") -> Diagram:
    r"""Parses a PD code string into a validated :class:`Diagram`.

    The grammar is a sequence of ``X(a,b,c,d)`` terms with positive integer
    labels, separated by whitespace and/or commas. The empty string is the
    empty diagram.

    Parameters
    ----------
    text: :class:`builtins.str`
        The PD code.
    label: :class:`builtins.str`
        The label of returned diagram.

    Returns
    -------
    :class:`Diagram`

    Raises
    ------
    PDParseError
        The text does not match the grammar.
    DiagramValidationError
        The code violates an invariant, e.g. an arc label does not appear
        exactly twice.
    """
    pd: typing.List[typing.Tuple[int, ...]] = []
    pos = _SEPARATOR.match(text, 0).end()  # type: ignore

    while pos < len(text):
        match = _TERM.match(text, pos)
        if match is None:
            token = _TOKEN.match(text, pos).group(0) or text[pos]  # type: ignore
            raise PDParseError(pos, token)

        arcs = []
        for group in range(1, 5):
            value = int(match.group(group))
            if value < 1:
                raise PDParseError(match.start(group), match.group(group), "arc labels must be positive")
            arcs.append(value)

        pd.append(tuple(arcs))
        pos = _SEPARATOR.match(text, match.end()).end()  # type: ignore

    return build_diagram(pd, label=label)

def serialize_pd(d: Diagram) -> str:
    r"""Serializes the crossings of a diagram back to PD text.

    Free loops cannot be expressed in PD text and are dropped.
    """
    return " ".join("X(%d,%d,%d,%d)" % c.arcs for c in d.crossings)

def _orient(pd: typing.List[typing.Tuple[int, ...]], occurrences: typing.Dict[int, typing.List[Slot]]) -> typing.List[int]:
    # True marks a slot where a strand enters its crossing.
    incoming: typing.Dict[Slot, bool] = {}
    queue: typing.Deque[typing.Tuple[Slot, bool]] = deque()

    for i in range(len(pd)):
        queue.append(((i, 0), True))
        queue.append(((i, 2), False))

    def drain() -> None:
        while queue:
            slot, value = queue.popleft()
            known = incoming.get(slot)
            if known is not None:
                if known != value:
                    i, p = slot
                    raise DiagramValidationError(
                        f"inconsistent orientation at crossing {i} arc {pd[i][p]}: "
                        "strand is open or runs against itself"
                    )
                continue

            incoming[slot] = value
            i, p = slot
            first, second = occurrences[pd[i][p]]
            queue.append((second if first == slot else first, not value))
            if p in (1, 3):
                queue.append(((i, 4 - p), not value))

    drain()

    # Components that never pass under: orient each from its lowest arc
    # label toward the smaller labelled neighbour.
    for arc in sorted(occurrences):
        first, second = occurrences[arc]
        if first in incoming:
            continue

        def neighbour(slot: Slot) -> int:
            i, p = slot
            return pd[i][4 - p]

        head = second if neighbour(second) < neighbour(first) else first
        queue.append((head, True))
        drain()

    signs = []
    for i in range(len(pd)):
        signs.append(1 if incoming[(i, 3)] else -1)
    return signs

def build_diagram(
    pd: PDCode,
    *,
    label: str = "",
    free_loops: int = 0,
    blocks: typing.Optional[typing.Sequence[int]] = None,
) -> Diagram:
    r"""Validates a raw PD code and builds a :class:`Diagram`.

    Crossing signs are inferred from the orientation. Under strands fix the
    direction of every component that passes under somewhere; a component
    that never does is oriented from its lowest arc label toward its smaller
    labelled neighbour.

    Parameters
    ----------
    pd: Sequence[Sequence[:class:`builtins.int`]]
        The crossings as 4-sequences of positive arc labels.
    label: :class:`builtins.str`
        The diagram label.
    free_loops: :class:`builtins.int`
        The number of crossingless circles.
    blocks: Optional[Sequence[:class:`builtins.int`]]
        See :attr:`Diagram.blocks`.

    Raises
    ------
    DiagramValidationError
        The code is structurally invalid or not planar.
    """
    if not isinstance(free_loops, int) or free_loops < 0:
        raise DiagramValidationError("free_loops must be a non-negative integer")

    crossings: typing.List[typing.Tuple[int, ...]] = []
    for index, entry in enumerate(pd):
        try:
            arcs = tuple(int(a) for a in entry)
        except (TypeError, ValueError):
            raise DiagramValidationError(f"crossing {index} is not a sequence of integers") from None
        if len(arcs) != 4:
            raise DiagramValidationError(f"crossing {index} has {len(arcs)} arcs, expected 4")
        if any(a < 1 for a in arcs):
            raise DiagramValidationError(f"crossing {index} has a non-positive arc label")
        crossings.append(arcs)

    if blocks is not None and len(blocks) != len(crossings):
        raise DiagramValidationError("blocks must name one block per crossing")

    counts = Counter(a for arcs in crossings for a in arcs)
    for arc, count in sorted(counts.items()):
        if count != 2:
            raise DiagramValidationError(f"arc {arc} appears {count} time(s), expected exactly 2")

    occurrences: typing.Dict[int, typing.List[Slot]] = {}
    for i, arcs in enumerate(crossings):
        for p, arc in enumerate(arcs):
            occurrences.setdefault(arc, []).append((i, p))

    signs = _orient(crossings, occurrences)

    strands = UnionFind(occurrences)
    for a, b, c, d in crossings:
        strands.union(a, c)
        strands.union(b, d)
    components = len(list(strands.to_sets())) + free_loops

    diagram = Diagram(
        (Crossing(arcs, sign) for arcs, sign in zip(crossings, signs)),
        components=components,
        label=label,
        free_loops=free_loops,
        blocks=blocks,
    )

    # Every connected piece of a planar diagram bounds c + 2 regions.
    if crossings:
        pieces = nx.number_connected_components(_crossing_graph(diagram))
        regions = len(faces(diagram))
        if regions - len(crossings) != 2 * pieces:
            raise DiagramValidationError(
                f"the code is not planar: {len(crossings)} crossings in {pieces} piece(s) "
                f"bound {regions} regions, expected {len(crossings) + 2 * pieces}"
            )

    return diagram

def diagram_from_json(data: typing.Mapping[str, typing.Any]) -> Diagram:
    r"""Builds a diagram from its JSON object.

    The schema is ``{"label": str, "pd": [[a, b, c, d], ...], "free_loops": int}``
    where ``label`` and ``free_loops`` are optional. ``pd`` may also be a PD
    code string.
    """
    if not isinstance(data, typing.Mapping) or "pd" not in data:
        raise DiagramValidationError("a diagram object needs a 'pd' member")

    label = data.get("label", "")
    if not isinstance(label, str):
        raise DiagramValidationError("'label' must be a string")

    pd = data["pd"]
    free_loops = data.get("free_loops", 0)
    if isinstance(pd, str):
        parsed = parse_pd(pd, label=label)
        return build_diagram(parsed.pd, label=label, free_loops=free_loops)
    if not isinstance(pd, list):
        raise DiagramValidationError("'pd' must be a list of 4-element lists or a PD string")

    return build_diagram(pd, label=label, free_loops=free_loops)

def diagram_to_json(d: Diagram) -> typing.Dict[str, typing.Any]:
    r"""Returns the JSON object of a diagram. See :func:`diagram_from_json`."""
    return d.to_dict()

def load_diagrams(path: typing.Union[str, os.PathLike]) -> typing.List[Diagram]:
    r"""Loads one diagram object or a batch array of them from a JSON file."""
    with open(path, "r", encoding="utf-8") as fp:
        try:
            data = json.load(fp)
        except json.JSONDecodeError as exc:
            raise DiagramValidationError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None

    if isinstance(data, list):
        return [diagram_from_json(entry) for entry in data]
    return [diagram_from_json(data)]

def _require_knot(d: Diagram, operation: str) -> None:
    if d.components != 1:
        raise UnsupportedDiagram(d.components, f"{operation} is defined for knot diagrams only, got {d.components} components")

def writhe(d: Diagram) -> int:
    r"""Returns the writhe ``c+ - c-`` of a knot diagram.

    Raises
    ------
    UnsupportedDiagram
        The diagram does not have exactly one component.
    """
    _require_knot(d, "writhe")
    return sum(c.sign for c in d.crossings)

def crossing_counts(d: Diagram) -> typing.Tuple[int, int]:
    r"""Returns ``(c_plus, c_minus)``, the numbers of positive and negative crossings."""
    plus = sum(1 for c in d.crossings if c.sign > 0)
    return (plus, len(d.crossings) - plus)

def cable(d: Diagram, m: int) -> Diagram:
    r"""Returns the blackboard framed ``m``-cable of a knot diagram.

    Each crossing becomes an ``m x m`` grid of crossings with the same sign.
    Copy ``i`` of a strand runs ``i`` steps to the right of the original.
    Arc labels follow the lexicographic order of ``(arc, copy, step)`` where
    ``step`` counts the grid crossings already passed before the arc's head.

    Parameters
    ----------
    d: :class:`Diagram`
        A knot diagram.
    m: :class:`builtins.int`
        The number of parallel copies. ``0`` gives the empty diagram and ``1``
        returns ``d`` itself.

    Raises
    ------
    ValueError
        ``m`` is negative.
    UnsupportedDiagram
        ``d`` is not a knot diagram.
    """
    if not isinstance(m, int) or m < 0:
        raise ValueError("cable multiplicity must be a non-negative integer.")

    _require_knot(d, "cable")

    label = f"{d.label}^{m}" if d.label else ""
    if m == 0:
        return Diagram((), components=0, label=label)
    if m == 1:
        return d
    if not d.crossings:
        return Diagram((), components=m * d.free_loops, label=label, free_loops=m * d.free_loops)

    Segment = typing.Tuple[int, int, int]
    raw: typing.List[typing.Tuple[Segment, Segment, Segment, Segment]] = []
    blocks: typing.List[int] = []

    def step(arc_in: int, arc_out: int, copy: int, t: int) -> typing.Tuple[Segment, Segment]:
        after = (arc_in, copy, t + 1) if t < m - 1 else (arc_out, copy, 0)
        return (arc_in, copy, t), after

    for k, crossing in enumerate(d.crossings):
        u_in, u_out = crossing.under
        o_in, o_out = crossing.over

        for i in range(m):
            for j in range(m):
                if crossing.sign > 0:
                    t_u, t_o = m - 1 - j, i
                else:
                    t_u, t_o = j, m - 1 - i

                under_in, under_out = step(u_in, u_out, i, t_u)
                over_in, over_out = step(o_in, o_out, j, t_o)

                if crossing.sign > 0:
                    raw.append((under_in, over_out, under_out, over_in))
                else:
                    raw.append((under_in, over_in, under_out, over_out))
                blocks.append(k)

    numbering = {seg: n for n, seg in enumerate(sorted({s for x in raw for s in x}), start=1)}
    pd = [tuple(numbering[s] for s in x) for x in raw]

    cabled = build_diagram(pd, label=label, blocks=blocks)
    _LOGGER.debug("Cabled %r with m=%d into %d crossings.", d.label, m, len(pd))
    return cabled

def mirror(d: Diagram) -> Diagram:
    r"""Returns the mirror image of a diagram: every crossing changes over
    and under. Orientation is kept, so every sign flips.
    """
    pd = []
    for c in d.crossings:
        a, b, x, y = c.arcs
        pd.append((y, a, b, x) if c.sign > 0 else (b, x, y, a))

    label = f"{d.label}*" if d.label else ""
    return build_diagram(pd, label=label, free_loops=d.free_loops, blocks=d.blocks)

def add_kink(d: Diagram, sign: int, arc: int = None) -> Diagram:
    r"""Applies a Reidemeister I move, inserting a kink of the given sign.

    The strand first passes under the new crossing, loops around and crosses
    over itself. The piece of ``arc`` before the kink keeps its label.

    Parameters
    ----------
    d: :class:`Diagram`
        The diagram to modify.
    sign: :class:`builtins.int`
        ``+1`` or ``-1``, the sign of the new crossing.
    arc: :class:`builtins.int`
        The arc to put the kink on. Defaults to the lowest arc label. Must be
        omitted for a diagram without crossings, in which case one free
        loop is turned into a 1-crossing kink.
    """
    if sign not in (1, -1):
        raise ValueError("kink sign must be +1 or -1.")

    if not d.crossings:
        if not d.free_loops:
            raise ValueError("the empty diagram has no strand to kink.")
        pd = [(1, 1, 2, 2) if sign > 0 else (1, 2, 2, 1)]
        return build_diagram(pd, label=d.label, free_loops=d.free_loops - 1)

    ends = d.ends()
    if arc is None:
        arc = min(ends)
    if arc not in ends:
        raise ValueError(f"arc {arc} is not part of the diagram.")

    top = max(ends)
    loop, out = top + 1, top + 2
    hi, hp = ends[arc][1]

    pd = [list(c.arcs) for c in d.crossings]
    pd[hi][hp] = out
    pd.append([arc, out, loop, loop] if sign > 0 else [arc, loop, loop, out])

    return build_diagram(pd, label=d.label, free_loops=d.free_loops)

def _crossing_graph(d: Diagram) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(d.crossings)))
    for (ti, _), (hi, _) in d.ends().values():
        graph.add_edge(ti, hi)
    return graph

def _other_end(d: Diagram, slot: Slot) -> Slot:
    tail, head = d.ends()[d.crossings[slot[0]].arcs[slot[1]]]
    if tail == head:
        return tail
    return head if slot == tail else tail

def faces(d: Diagram) -> typing.List[typing.Tuple[Slot, ...]]:
    r"""Returns the regions of the diagram as cycles of darts.

    A dart ``(i, p)`` walks the arc at slot ``p`` of crossing ``i`` to its
    other end. Each region is listed with itself on the left of the walk.
    A connected diagram with ``c > 0`` crossings has ``c + 2`` regions.
    """
    seen: typing.Set[Slot] = set()
    result: typing.List[typing.Tuple[Slot, ...]] = []

    for i in range(len(d.crossings)):
        for p in range(4):
            if (i, p) in seen:
                continue

            cycle: typing.List[Slot] = []
            dart = (i, p)
            while dart not in seen:
                seen.add(dart)
                cycle.append(dart)
                j, q = _other_end(d, dart)
                dart = (j, (q + 3) % 4)
            result.append(tuple(cycle))

    return result

def r2_move(d: Diagram, over_arc: int = None, under_arc: int = None) -> Diagram:
    r"""Applies a planar Reidemeister II move.

    A finger of ``over_arc`` is pushed across ``under_arc`` through a region
    both arcs bound, creating two new crossings where ``over_arc`` passes over.
    When the arcs are omitted, the first region with two distinct arcs is
    used.

    Raises
    ------
    ValueError
        No region is bounded by both arcs.
    """
    def arc_at(dart: Slot) -> int:
        return d.crossings[dart[0]].arcs[dart[1]]

    chosen: typing.Optional[typing.Tuple[Slot, Slot]] = None
    for face in faces(d):
        x_darts = [t for t in face if over_arc is None or arc_at(t) == over_arc]
        for x_dart in x_darts:
            y_darts = [
                t for t in face
                if arc_at(t) != arc_at(x_dart) and (under_arc is None or arc_at(t) == under_arc)
            ]
            if y_darts:
                chosen = (x_dart, y_darts[0])
                break
        if chosen is not None:
            break

    if chosen is None:
        raise ValueError("no region of the diagram is bounded by two suitable distinct arcs.")

    x_dart, y_dart = chosen
    x, y = arc_at(x_dart), arc_at(y_dart)
    ends = d.ends()

    # Draw the region between y (below) and x (above). Walking the region
    # boundary goes east along y and west along x.
    y_east = ends[y][0] == y_dart
    x_east = ends[x][1] == x_dart

    top = max(ends)
    x2, x3, y2, y3 = top + 1, top + 2, top + 3, top + 4
    xl, xr = (x, x3) if x_east else (x3, x)

    pd = [list(c.arcs) for c in d.crossings]
    hi, hp = ends[x][1]
    pd[hi][hp] = x3
    hi, hp = ends[y][1]
    pd[hi][hp] = y3

    if y_east:
        pd.append([y, x2, y2, xl])
        pd.append([y2, x2, y3, xr])
    else:
        pd.append([y2, xl, y3, x2])
        pd.append([y, xr, y2, x2])

    return build_diagram(pd, label=d.label, free_loops=d.free_loops)

def braid_closure(word: typing.Sequence[int], strands: int = None, *, label: str = "") -> Diagram:
    r"""Returns the diagram of the closure of a braid.

    Generators are written ``i`` for ``sigma_i`` and ``-i`` for its inverse,
    with ``1 <= i < strands``. Strands run upward; in ``sigma_i`` the strand
    from position ``i`` passes over. Untouched strands close up into free loops.
    """
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    if strands < 1:
        raise ValueError("a braid needs at least one strand.")

    position = list(range(1, strands + 1))
    fresh = strands + 1
    raw: typing.List[typing.List[int]] = []

    for g in word:
        i = abs(g)
        if g == 0 or i >= strands:
            raise ValueError(f"generator {g} is invalid for {strands} strands.")

        sw, se = position[i - 1], position[i]
        nw, ne = fresh, fresh + 1
        fresh += 2
        raw.append([se, ne, nw, sw] if g > 0 else [sw, se, ne, nw])
        position[i - 1], position[i] = nw, ne

    closing = {final: start for start, final in enumerate(position, start=1) if final != start}
    free_loops = sum(1 for start, final in enumerate(position, start=1) if final == start)

    raw = [[closing.get(a, a) for a in arcs] for arcs in raw]
    numbering = {a: n for n, a in enumerate(sorted({a for arcs in raw for a in arcs}), start=1)}
    pd = [[numbering[a] for a in arcs] for arcs in raw]

    return build_diagram(pd, label=label, free_loops=free_loops)

def is_alternating(d: Diagram) -> bool:
    r"""Whether every arc runs from an over passage to an under passage."""
    for arc, ((ti, tp), (hi, hp)) in d.ends().items():
        if (tp in (0, 2)) == (hp in (0, 2)):
            return False
    return True

def is_connected(d: Diagram) -> bool:
    r"""Whether the diagram is connected as a planar graph.

    The 0-crossing unknot is connected; the empty diagram and diagrams with
    free loops next to crossings are not.
    """
    if not d.crossings:
        return d.free_loops == 1
    if d.free_loops:
        return False

    return nx.is_connected(_crossing_graph(d))
