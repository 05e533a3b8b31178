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

from qslope.core.pd import add_kink, build_diagram, diagram_from_json, r2_move
from qslope.enums import MoveKind
from qslope.exceptions import CatalogLookupError, DiagramValidationError
from qslope.models.catalog import CatalogEntry
from qslope.models.jones import DegreeSequence
from qslope.models.states import StateSummary
from qslope._helpers import crossing_number_from_label

import functools
import json
import logging
import os
import typing

if typing.TYPE_CHECKING:
    from qslope.models.diagrams import Diagram

__all__ = (
    "CATALOG_PATH",
    "catalog_list",
    "catalog_get",
    "catalog_diagram",
    "apply_moves",
)

_LOGGER = logging.getLogger(__name__)

CATALOG_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "catalog.json")
"""The path of the versioned catalog data file shipped with the package."""

CATALOG_VERSION = 1


def apply_moves(d: Diagram, moves: typing.Iterable[typing.Mapping[str, typing.Any]], *, label: str = None) -> Diagram:
    r"""Applies a recipe of Reidemeister moves to a diagram.

    Each move is a mapping with a ``"move"`` key, a :class:`MoveKind` value.
    ``"r1"`` takes ``"sign"`` and optionally ``"arc"`` (see :func:`add_kink`),
    ``"r2"`` optionally ``"over_arc"`` and ``"under_arc"`` (see :func:`r2_move`).

    Parameters
    ----------
    d: :class:`Diagram`
        The starting diagram.
    moves: Iterable[Mapping]
        The moves, applied in order.
    label: :class:`builtins.str`
        The label of the result. Defaults to the label of ``d``.
    """
    for move in moves:
        kind = move.get("move")
        if kind == MoveKind.R1:
            d = add_kink(d, move["sign"], move.get("arc"))
        elif kind == MoveKind.R2:
            d = r2_move(d, move.get("over_arc"), move.get("under_arc"))
        else:
            raise DiagramValidationError(f"unknown move {kind!r}, expected one of {', '.join(MoveKind.ALL)}")

    if label is not None and label != d.label:
        d = build_diagram(d.pd, label=label, free_loops=d.free_loops)
    return d

def _summary_from_json(data: typing.Mapping[str, typing.Any]) -> StateSummary:
    return StateSummary(
        v_A=data["v_A"],
        v_B=data["v_B"],
        g_T_diagram=data["g_T_diagram"],
        loops_A=data.get("loops_A", ()),
        loops_B=data.get("loops_B", ()),
    )

def _entry_from_json(data: typing.Mapping[str, typing.Any]) -> CatalogEntry:
    label = data["label"]
    minimal = diagram_from_json(data)

    variants = {}
    expected_variants = {}
    for variant in data.get("variants", ()):
        name = variant["label"]
        variants[name] = apply_moves(minimal, variant["moves"], label=name)
        if "summary" in variant.get("expected", {}):
            expected_variants[name] = _summary_from_json(variant["expected"]["summary"])

    expected = data.get("expected", {})
    summary = expected.get("summary")
    degrees = expected.get("degrees")

    return CatalogEntry(
        label=label,
        crossing_number=data["crossing_number"],
        minimal_diagram=minimal,
        variants=variants,
        alternating=data.get("alternating", True),
        expected_summary=_summary_from_json(summary) if summary is not None else None,
        expected_degrees=DegreeSequence(label, degrees) if degrees is not None else None,
        expected_variants=expected_variants,
    )

@functools.lru_cache(maxsize=None)
def _load_catalog(path: str = CATALOG_PATH) -> typing.Dict[str, CatalogEntry]:
    with open(path, "r", encoding="utf-8") as fp:
        data = json.load(fp)

    if data.get("version") != CATALOG_VERSION:
        raise DiagramValidationError(f"{path}: unsupported catalog version {data.get('version')!r}")

    entries = {}
    for raw in data["knots"]:
        entry = _entry_from_json(raw)
        if len(entry.minimal_diagram.crossings) != entry.crossing_number:
            raise DiagramValidationError(
                f"catalog entry {entry.label!r} has {len(entry.minimal_diagram.crossings)} crossings, "
                f"expected {entry.crossing_number}"
            )
        from_label = crossing_number_from_label(entry.label)
        if from_label is not None and from_label != entry.crossing_number:
            raise DiagramValidationError(f"catalog entry {entry.label!r} has crossing number {entry.crossing_number}")
        entries[entry.label] = entry

    _LOGGER.debug("Loaded %s catalog entries from %s", len(entries), path)
    return entries

def catalog_list(variants: bool = False) -> typing.List[str]:
    r"""Returns the labels of the catalog knots in catalog order.

    Parameters
    ----------
    variants: :class:`builtins.bool`
        Whether to also list the labels of the variant diagrams, each right
        after its knot.
    """
    labels = []
    for entry in _load_catalog().values():
        labels.append(entry.label)
        if variants:
            labels.extend(entry.variants)
    return labels

def catalog_get(label: str) -> CatalogEntry:
    r"""Returns the catalog entry of a knot.

    A variant label resolves to the entry it belongs to.

    Raises
    ------
    CatalogLookupError
        No knot or variant has this label.
    """
    entries = _load_catalog()
    if label in entries:
        return entries[label]
    for entry in entries.values():
        if label in entry.variants:
            return entry
    raise CatalogLookupError(label)

def catalog_diagram(label: str) -> Diagram:
    r"""Returns the diagram with the given knot or variant label.

    Raises
    ------
    CatalogLookupError
        No knot or variant has this label.
    """
    return catalog_get(label).diagram(label)
