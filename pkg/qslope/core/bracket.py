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

r"""Kauffman bracket engines.

Two independent engines evaluate the same quantity: a vectorised state sum
over all ``2^c`` Kauffman states, used as the reference oracle, and a sweep
that absorbs crossings one at a time into a Temperley-Lieb state, used for
the large cabled diagrams.
"""

from __future__ import annotations

from qslope.core.config import EngineConfig
from qslope.core.states import SMOOTHINGS
from qslope.enums import Engine, Side
from qslope.exceptions import StateSumCapExceeded, SweepWidthExceeded
from qslope.models.jones import BracketResult
from qslope.models.polynomials import DELTA, LaurentPoly

from concurrent.futures import ProcessPoolExecutor
import itertools
import logging
import numpy as np
import typing

if typing.TYPE_CHECKING:
    from qslope.models.diagrams import Diagram

__all__ = (
    "bracket",
    "bracket_statesum",
    "bracket_sweep",
    "sweep_order",
)

_LOGGER = logging.getLogger(__name__)

# Partner slot inside a crossing for each smoothing, indexed by slot.
_A_PARTNER = np.array([1, 0, 3, 2], dtype=np.int64)
_B_PARTNER = np.array([3, 2, 1, 0], dtype=np.int64)

# Upper bound on slots held in memory per vectorised block.
_BLOCK_ELEMENTS = 1 << 20

_EXACT_ORDER_LIMIT = 12
_GREEDY_STARTS = 24


def _delta_power(k: int, _cache: typing.List[LaurentPoly] = [LaurentPoly.one()]) -> LaurentPoly:
    while len(_cache) <= k:
        _cache.append(_cache[-1] * DELTA)
    return _cache[k]

def _slot_partners(d: Diagram) -> np.ndarray:
    occurrences: typing.Dict[int, typing.List[int]] = {}
    for i, crossing in enumerate(d.crossings):
        for p, arc in enumerate(crossing.arcs):
            occurrences.setdefault(arc, []).append(4 * i + p)

    sigma = np.empty(4 * len(d.crossings), dtype=np.int64)
    for s, t in occurrences.values():
        sigma[s] = t
        sigma[t] = s
    return sigma

def _statesum_block(sigma: np.ndarray, start: int, stop: int) -> np.ndarray:
    # Returns hist[#B, circles] over the states start <= s < stop, where bit
    # k of s selects the B smoothing at crossing k.
    n = sigma.shape[0]
    c = n // 4
    hist = np.zeros((c + 1) * (2 * c + 1), dtype=np.int64)

    base = np.repeat(np.arange(c, dtype=np.int64) * 4, 4)
    a_slots = base + np.tile(_A_PARTNER, c)
    b_slots = base + np.tile(_B_PARTNER, c)
    shifts = np.arange(c, dtype=np.int64)
    step = max(1, _BLOCK_ELEMENTS // n)

    for lo in range(start, stop, step):
        states = np.arange(lo, min(stop, lo + step), dtype=np.int64)
        size = states.shape[0]
        bits = ((states[:, None] >> shifts) & 1).astype(bool)

        tau = np.where(np.repeat(bits, 4, axis=1), b_slots, a_slots)
        # Orbits of tau . sigma; every state circle is exactly two orbits.
        succ = (tau[:, sigma] + (np.arange(size, dtype=np.int64) * n)[:, None]).ravel()
        label = np.arange(size * n, dtype=np.int64)
        own = label.copy()

        for _ in range(n.bit_length() + 1):
            updated = np.minimum(label, label[succ])
            if np.array_equal(updated, label):
                break
            label = updated
            succ = succ[succ]

        circles = (label == own).reshape(size, n).sum(axis=1) // 2
        flips = bits.sum(axis=1)
        hist += np.bincount(flips * (2 * c + 1) + circles, minlength=hist.shape[0])

    return hist

def bracket_statesum(d: Diagram, *, cap: int = 24, jobs: int = 1) -> BracketResult:
    r"""Evaluates the Kauffman bracket by summing over all ``2^c`` states.

    Every state contributes ``A^(#A - #B) * delta^circles`` with
    ``delta = -A^2 - A^-2``; free loops contribute one ``delta`` each and the
    empty diagram evaluates to ``1``.

    Parameters
    ----------
    d: :class:`Diagram`
        The diagram, knot or link.
    cap: :class:`builtins.int`
        The largest crossing count accepted. Defaults to ``24``.
    jobs: :class:`builtins.int`
        The number of worker processes sharing disjoint blocks of states.

    Raises
    ------
    StateSumCapExceeded
        The diagram has more than ``cap`` crossings.
    """
    c = len(d.crossings)
    if c > cap:
        raise StateSumCapExceeded(cap, c)

    total = 1 << c
    if not c:
        return BracketResult(_delta_power(d.free_loops), Engine.STATESUM, total)

    sigma = _slot_partners(d)
    _LOGGER.debug("State sum over %d states of %r with %d jobs.", total, d.label, jobs)

    if jobs > 1 and total >= 1 << 12:
        chunk = -(-total // jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_statesum_block, sigma, lo, min(total, lo + chunk))
                for lo in range(0, total, chunk)
            ]
            hist = sum(f.result() for f in futures)
    else:
        hist = _statesum_block(sigma, 0, total)

    hist = hist.reshape(c + 1, 2 * c + 1)
    value = LaurentPoly.zero()
    for flips, circles in zip(*np.nonzero(hist)):
        count = int(hist[flips, circles])
        term = _delta_power(int(circles) + d.free_loops).shift(c - 2 * int(flips))
        value = value + term.scale(count)

    return BracketResult(value, Engine.STATESUM, total)


def _arc_crossings(d: Diagram) -> typing.Dict[int, typing.Tuple[int, int]]:
    return {arc: (tail[0], head[0]) for arc, (tail, head) in d.ends().items()}

def _width_along(d: Diagram, order: typing.Sequence[int]) -> int:
    arcs = _arc_crossings(d)
    done: typing.Set[int] = set()
    open_arcs: typing.Set[int] = set()
    width = 0

    for k in order:
        done.add(k)
        for arc in set(d.crossings[k].arcs):
            u, v = arcs[arc]
            if u in done and v in done:
                open_arcs.discard(arc)
            else:
                open_arcs.add(arc)
        width = max(width, len(open_arcs))
    return width

def _exact_order(
    items: typing.Sequence[typing.Sequence[int]],
    arcs: typing.Dict[int, typing.Tuple[int, int]],
    done: typing.FrozenSet[int] = frozenset(),
) -> typing.List[int]:
    # Minimal max-frontier order of the items (groups of crossings) by a DP
    # over subsets, given crossings already absorbed.
    k = len(items)
    owner = {x: i for i, group in enumerate(items) for x in group}

    weights: typing.Dict[typing.Tuple[int, int], int] = {}
    for u, v in arcs.values():
        iu, iv = owner.get(u, -1), owner.get(v, -1)
        if iu < 0 and iv < 0:
            continue
        # -1 marks an end that is either already absorbed or outside the items.
        if iu < 0 and u not in done:
            iu = -2
        if iv < 0 and v not in done:
            iv = -2
        weights[(iu, iv)] = weights.get((iu, iv), 0) + 1

    def inside(index: int, mask: int) -> bool:
        if index == -1:
            return True
        if index == -2:
            return False
        return bool(mask >> index & 1)

    full = (1 << k) - 1
    width = [0] * (full + 1)
    for mask in range(full + 1):
        width[mask] = sum(
            count for (iu, iv), count in weights.items()
            if inside(iu, mask) != inside(iv, mask)
        )

    best = [0] * (full + 1)
    last = [0] * (full + 1)
    for mask in range(1, full + 1):
        choice, value = -1, None
        for i in range(k):
            if mask >> i & 1:
                candidate = max(best[mask ^ (1 << i)], width[mask])
                if value is None or candidate < value:
                    choice, value = i, candidate
        best[mask], last[mask] = value, choice  # type: ignore

    order: typing.List[int] = []
    mask = full
    while mask:
        order.append(last[mask])
        mask ^= 1 << last[mask]
    order.reverse()
    return order

def _greedy_order(
    d: Diagram,
    candidates: typing.Sequence[int],
    arcs: typing.Dict[int, typing.Tuple[int, int]],
    done: typing.Set[int],
    starts: typing.Sequence[typing.Optional[int]] = (None,),
) -> typing.List[int]:
    best_order: typing.List[int] = []
    best_width: typing.Optional[int] = None

    for start in starts:
        absorbed = set(done)
        remaining = set(candidates)
        order: typing.List[int] = []
        open_count = sum(1 for u, v in arcs.values() if (u in absorbed) != (v in absorbed))
        width = open_count

        while remaining:
            def delta(k: int) -> typing.Tuple[int, int]:
                change = closed = 0
                for arc in d.crossings[k].arcs:
                    u, v = arcs[arc]
                    other = v if u == k else u
                    if other == k:
                        continue
                    if other in absorbed:
                        change -= 1
                        closed += 1
                    else:
                        change += 1
                return change, -closed

            if start is not None and not order:
                k = start
            else:
                adjacent = [
                    x for x in remaining
                    if any((arcs[a][0] in absorbed) or (arcs[a][1] in absorbed) for a in d.crossings[x].arcs)
                ]
                pool = adjacent or sorted(remaining)
                k = min(pool, key=lambda x: (delta(x), x))

            open_count += delta(k)[0]
            width = max(width, open_count)
            absorbed.add(k)
            remaining.discard(k)
            order.append(k)

        if best_width is None or width < best_width:
            best_order, best_width = order, width

    return best_order

def sweep_order(d: Diagram) -> typing.Tuple[typing.List[int], int]:
    r"""Returns the crossing order used by :func:`bracket_sweep` and its width.

    The width is the largest number of open strands, arcs with exactly one
    end absorbed, along the order. Diagrams with few crossings get an optimal
    order. Cabled diagrams first order their blocks optimally and then the
    crossings inside each block. Everything else uses a greedy minimum
    width order from several starting crossings.

    Returns
    -------
    Tuple[List[:class:`builtins.int`], :class:`builtins.int`]
    """
    c = len(d.crossings)
    if not c:
        return [], 0

    arcs = _arc_crossings(d)

    if c <= _EXACT_ORDER_LIMIT:
        order = _exact_order([[k] for k in range(c)], arcs)
    elif d.blocks is not None and len(set(d.blocks)) <= _EXACT_ORDER_LIMIT:
        groups: typing.Dict[int, typing.List[int]] = {}
        for k, block in enumerate(d.blocks):
            groups.setdefault(block, []).append(k)
        members = [groups[b] for b in sorted(groups)]

        order = []
        done: typing.Set[int] = set()
        for index in _exact_order(members, arcs):
            group = members[index]
            if len(group) <= _EXACT_ORDER_LIMIT:
                inner = [group[i] for i in _exact_order([[x] for x in group], arcs, frozenset(done))]
            else:
                inner = _greedy_order(d, group, arcs, done)
            order.extend(inner)
            done.update(inner)
    else:
        step = max(1, c // _GREEDY_STARTS)
        order = _greedy_order(d, range(c), arcs, set(), starts=list(range(0, c, step))[:_GREEDY_STARTS])

    return order, _width_along(d, order)

def _absorb(
    matching: typing.Tuple[typing.Tuple[int, int], ...],
    arcs: typing.Tuple[int, int, int, int],
    pairs: typing.Tuple[typing.Tuple[int, int], typing.Tuple[int, int]],
) -> typing.Tuple[typing.Tuple[typing.Tuple[int, int], ...], int]:
    partner: typing.Dict[int, int] = {}
    for x, y in matching:
        partner[x] = y
        partner[y] = x

    edges = [(arcs[p], arcs[q]) for p, q in pairs]
    touched = set(arcs)
    for x in touched:
        y = partner.get(x)
        if y is not None and (y not in touched or x < y):
            edges.append((x, y))

    adjacency: typing.Dict[int, typing.List[int]] = {}
    for index, (u, v) in enumerate(edges):
        adjacency.setdefault(u, []).append(index)
        adjacency.setdefault(v, []).append(index)

    new_pairs = [(x, y) for x, y in matching if x not in adjacency and y not in adjacency]
    loops = 0
    seen: typing.Set[int] = set()

    for start in adjacency:
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        ends = []
        while stack:
            u = stack.pop()
            if len(adjacency[u]) == 1:
                ends.append(u)
            for index in adjacency[u]:
                a, b = edges[index]
                w = b if a == u else a
                if w not in seen:
                    seen.add(w)
                    stack.append(w)

        if ends:
            x, y = ends
            new_pairs.append((x, y) if x < y else (y, x))
        else:
            loops += 1

    new_pairs.sort()
    return tuple(new_pairs), loops

def bracket_sweep(d: Diagram, *, width_cap: int = 16) -> BracketResult:
    r"""Evaluates the Kauffman bracket by a sweep over the crossings.

    The sweep keeps a map from pairings of the open strands, Temperley-Lieb
    basis elements, to polynomial weights. Each crossing is absorbed by the
    two term skein expansion; every closed loop multiplies by ``delta``.

    Parameters
    ----------
    d: :class:`Diagram`
        The diagram, knot or link.
    width_cap: :class:`builtins.int`
        The largest number of open strands accepted. Defaults to ``16``.

    Raises
    ------
    SweepWidthExceeded
        The order found by :func:`sweep_order` is wider than ``width_cap``.
    """
    order, width = sweep_order(d)
    if width > width_cap:
        raise SweepWidthExceeded(width_cap, width)

    _LOGGER.debug("Sweeping %d crossings of %r at width %d.", len(order), d.label, width)
    if width >= 14:
        _LOGGER.info("Sweep of %r runs at width %d, this may take a while.", d.label, width)

    weights: typing.Dict[typing.Tuple[typing.Tuple[int, int], ...], LaurentPoly] = {(): LaurentPoly.one()}
    for k in order:
        arcs = d.crossings[k].arcs
        updated: typing.Dict[typing.Tuple[typing.Tuple[int, int], ...], LaurentPoly] = {}

        for matching, weight in weights.items():
            for side, shift in ((Side.A, 1), (Side.B, -1)):
                state, loops = _absorb(matching, arcs, SMOOTHINGS[side])  # type: ignore
                term = weight.shift(shift)
                if loops:
                    term = term * _delta_power(loops)
                previous = updated.get(state)
                updated[state] = term if previous is None else previous + term

        weights = {state: w for state, w in updated.items() if w}

    value = weights.get((), LaurentPoly.zero()) * _delta_power(d.free_loops)
    return BracketResult(value, Engine.SWEEP, width)


def bracket(d: Diagram, config: EngineConfig = None) -> BracketResult:
    r"""Evaluates the Kauffman bracket with the configured engine.

    Results are memoized in :attr:`EngineConfig.cache`.

    Parameters
    ----------
    d: :class:`Diagram`
        The diagram.
    config: :class:`EngineConfig`
        The engine configuration. Defaults to ``EngineConfig()``.

    Raises
    ------
    EngineCapExceeded
        The chosen engine refused the diagram.
    """
    if config is None:
        config = EngineConfig()

    engine = config.engine
    if engine == Engine.AUTO:
        engine = Engine.STATESUM if len(d.crossings) <= config.statesum_cap else Engine.SWEEP

    cached = config.cache.get(d)
    if cached is not None and cached.engine == engine:
        return cached

    _LOGGER.debug("Bracket of %r (%d crossings) with the %s engine.", d.label, len(d.crossings), engine)
    if engine == Engine.STATESUM:
        result = bracket_statesum(d, cap=config.statesum_cap, jobs=config.jobs)
    else:
        result = bracket_sweep(d, width_cap=config.width_cap)

    config.cache.add(d, result)
    return result
