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

if typing.TYPE_CHECKING:
    from qslope.models.diagrams import Diagram
    from qslope.models.jones import DegreeSequence
    from qslope.models.polynomials import LaurentPoly
    from qslope.models.slopes import QuasiQuadratic, SlopeData, BoundReport, CharacterizationReport
    from qslope.models.states import StateSummary, SurfaceSummary

__all__ = (
    "CatalogEntry",
    "KnotRecord",
    "Report",
)


class CatalogEntry(BaseModel):
    r"""A knot shipped with the built-in catalog.

    Attributes
    ----------
    label: :class:`builtins.str`
        The knot label, e.g. ``"3_1"``.
    crossing_number: :class:`builtins.int`
        The crossing number of the knot, realized by :attr:`.minimal_diagram`.
    minimal_diagram: :class:`Diagram`
        A diagram with the minimal number of crossings.
    variants: Dict[:class:`builtins.str`, :class:`Diagram`]
        Other diagrams of the same knot, each obtained from the minimal
        diagram by Reidemeister moves.
    alternating: :class:`builtins.bool`
        Whether the knot is alternating.
    expected_summary: Optional[:class:`StateSummary`]
        The locked state data of the minimal diagram.
    expected_degrees: Optional[:class:`DegreeSequence`]
        The locked degree sequence of the knot.
    expected_variants: Dict[:class:`builtins.str`, :class:`StateSummary`]
        Locked state data of some variants.
    """
    if typing.TYPE_CHECKING:
        label: str
        crossing_number: int
        minimal_diagram: Diagram
        variants: typing.Dict[str, Diagram]
        alternating: bool
        expected_summary: typing.Optional[StateSummary]
        expected_degrees: typing.Optional[DegreeSequence]
        expected_variants: typing.Dict[str, StateSummary]

    __slots__ = (
        "label",
        "crossing_number",
        "minimal_diagram",
        "variants",
        "alternating",
        "expected_summary",
        "expected_degrees",
        "expected_variants",
    )

    def __init__(
        self,
        *,
        label: str,
        crossing_number: int,
        minimal_diagram: Diagram,
        variants: typing.Mapping[str, Diagram] = None,
        alternating: bool = True,
        expected_summary: StateSummary = None,
        expected_degrees: DegreeSequence = None,
        expected_variants: typing.Mapping[str, StateSummary] = None,
    ) -> None:
        self.label = label
        self.crossing_number = crossing_number
        self.minimal_diagram = minimal_diagram
        self.variants = dict(variants or {})
        self.alternating = alternating
        self.expected_summary = expected_summary
        self.expected_degrees = expected_degrees
        self.expected_variants = dict(expected_variants or {})

    @property
    def variant_diagrams(self) -> typing.List[Diagram]:
        return list(self.variants.values())

    def diagram(self, label: str = None) -> Diagram:
        r"""Returns the minimal diagram, or the variant with the given label."""
        if label is None or label == self.label:
            return self.minimal_diagram
        return self.variants[label]

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        data: typing.Dict[str, typing.Any] = {
            "label": self.label,
            "crossing_number": self.crossing_number,
            "alternating": self.alternating,
            "minimal_diagram": self.minimal_diagram.to_dict(),
            "variants": {label: d.to_dict() for label, d in self.variants.items()},
        }
        if self.expected_summary is not None:
            data["expected_summary"] = self.expected_summary.to_dict()
        if self.expected_degrees is not None:
            data["expected_degrees"] = [list(e) for e in self.expected_degrees.entries]
        return data

    def __repr__(self) -> str:
        return f"<CatalogEntry label={self.label!r} crossing_number={self.crossing_number} variants={len(self.variants)}>"


class KnotRecord(BaseModel):
    r"""Everything the command line computed for one diagram.

    Every attribute except :attr:`.label` and :attr:`.diagram` is optional
    and only set when the running command computes it. Reports in every
    format are rendered from these records.
    """
    if typing.TYPE_CHECKING:
        label: str
        diagram: Diagram
        crossing_counts: typing.Optional[typing.Tuple[int, int]]
        writhe: typing.Optional[int]
        summary: typing.Optional[StateSummary]
        surfaces: typing.Optional[typing.Tuple[SurfaceSummary, SurfaceSummary]]
        polynomials: typing.Dict[int, LaurentPoly]
        degrees: typing.Optional[DegreeSequence]
        fit: typing.Optional[QuasiQuadratic]
        slopes: typing.Optional[SlopeData]
        bounds: typing.Optional[BoundReport]
        characterization: typing.Optional[CharacterizationReport]

    __slots__ = (
        "label",
        "diagram",
        "crossing_counts",
        "writhe",
        "summary",
        "surfaces",
        "polynomials",
        "degrees",
        "fit",
        "slopes",
        "bounds",
        "characterization",
    )

    def __init__(self, diagram: Diagram, **fields: typing.Any) -> None:
        self.label = diagram.label
        self.diagram = diagram
        self.polynomials = dict(fields.pop("polynomials", {}))
        for name in self.__slots__[2:]:
            if name != "polynomials":
                setattr(self, name, fields.pop(name, None))
        if fields:
            raise TypeError(f"unknown record fields: {', '.join(sorted(fields))}")

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        data: typing.Dict[str, typing.Any] = {"label": self.label, "crossings": len(self.diagram.crossings)}
        if self.crossing_counts is not None:
            data["c_plus"], data["c_minus"] = self.crossing_counts
        if self.writhe is not None:
            data["writhe"] = self.writhe
        if self.summary is not None:
            data["summary"] = self.summary.to_dict()
        if self.surfaces is not None:
            data["surfaces"] = [s.to_dict() for s in self.surfaces]
        if self.polynomials:
            data["jones"] = [
                {"n": n, "polynomial": p.to_dict(), "t": p.to_t_string(), "four_d_minus": p.t_degrees()[0], "four_d_plus": p.t_degrees()[1]}
                for n, p in sorted(self.polynomials.items())
            ]
        if self.degrees is not None:
            data["degrees"] = [list(e) for e in self.degrees.entries]
        if self.fit is not None:
            data["fit"] = self.fit.to_dict()
        if self.slopes is not None:
            data["slopes"] = self.slopes.to_dict()
        if self.bounds is not None:
            data["bounds"] = self.bounds.to_dict()
        if self.characterization is not None:
            data["characterization"] = self.characterization.to_dict()
        return data

    def __repr__(self) -> str:
        return f"<KnotRecord label={self.label!r}>"


class Report(BaseModel):
    r"""The output of one command line invocation.

    Attributes
    ----------
    command: :class:`builtins.str`
        The subcommand that produced the report.
    records: Tuple[:class:`KnotRecord`, ...]
        The per-diagram results, in input order.
    provenance: Dict[:class:`builtins.str`, Any]
        Tool version and engine settings. Part of the machine section.
    elapsed: :class:`builtins.float`
        Wall time in seconds. Only shown in the human section.
    """
    if typing.TYPE_CHECKING:
        command: str
        records: typing.Tuple[KnotRecord, ...]
        provenance: typing.Dict[str, typing.Any]
        elapsed: float

    __slots__ = ("command", "records", "provenance", "elapsed")

    def __init__(
        self,
        command: str,
        records: typing.Iterable[KnotRecord],
        provenance: typing.Mapping[str, typing.Any],
        elapsed: float = 0.0,
    ) -> None:
        self.command = command
        self.records = tuple(records)
        self.provenance = dict(provenance)
        self.elapsed = elapsed

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "command": self.command,
            "provenance": self.provenance,
            "records": [r.to_dict() for r in self.records],
        }
