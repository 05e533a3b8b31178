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


class Side:
    """An enumeration that details the two Kauffman resolutions of a crossing.

    Every function that accepts a side, such as :func:`state_graph` or
    :func:`surface_summary`, takes one of these values.
    """

    A = "A"
    """The A-resolution. Joins the PD slots ``(a, b)`` and ``(c, d)`` of a crossing ``X(a, b, c, d)``."""

    B = "B"
    """The B-resolution. Joins the PD slots ``(a, d)`` and ``(b, c)`` of a crossing ``X(a, b, c, d)``."""

    ALL = ("A", "B")
    """Both sides in canonical order."""

    @classmethod
    def validate(cls, side: str) -> str:
        if side not in cls.ALL:
            raise ValueError(f"side must be 'A' or 'B', not {side!r}")
        return side

    @classmethod
    def other(cls, side: str) -> str:
        return cls.B if cls.validate(side) == cls.A else cls.A

class Engine:
    """An enumeration that details the Kauffman bracket engines.

    Passed as ``engine`` to :class:`EngineConfig` or through the ``--engine``
    command line flag.
    """

    AUTO = "auto"
    """Use :attr:`.STATESUM` while the diagram fits under the statesum cap and :attr:`.SWEEP` otherwise."""

    STATESUM = "statesum"
    """Brute force enumeration of all Kauffman states. Used as the reference oracle."""

    SWEEP = "sweep"
    """Crossing by crossing Temperley-Lieb contraction along a low width order."""

    ALL = ("auto", "statesum", "sweep")
    """All valid engine names."""

class OutputFormat:
    """An enumeration that details the report formats supported by the command line."""

    TEXT = "text"
    """Aligned plain text tables, meant for humans."""

    JSON = "json"
    """The machine section as JSON."""

    CSV = "csv"
    """The machine section flattened into CSV rows with a fixed column order."""

    ALL = ("text", "json", "csv")
    """All valid format names."""

class VerdictStatus:
    """An enumeration that details the outcome of a characterization predicate.

    See :class:`Verdict` for more information.
    """

    TRUE = "true"
    """The equation holds for some choice of witnesses."""

    FALSE = "false"
    """No choice of witnesses satisfies the equation."""

    NOT_APPLICABLE = "not applicable"
    """The input is degenerate (a crossingless diagram) and the predicate does not apply."""

class MoveKind:
    """An enumeration that details Reidemeister moves used to build catalog variants."""

    R1 = "r1"
    """Insert a kink of sign ``+1`` or ``-1`` into an arc."""

    R2 = "r2"
    """Push one arc of a face across another arc of the same face."""

    ALL = ("r1", "r2")
    """All supported moves."""
