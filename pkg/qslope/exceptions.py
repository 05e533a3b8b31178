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

import typing


__all__ = (
    "QslopeException",
    "DiagramException",
    "PDParseError",
    "DiagramValidationError",
    "UnsupportedDiagram",
    "EngineCapExceeded",
    "StateSumCapExceeded",
    "SweepWidthExceeded",
    "UndefinedDegree",
    "FitError",
    "CatalogLookupError",
)

class QslopeException(Exception):
    r"""Base exception class for all exceptions raised by the library."""

class DiagramException(QslopeException):
    r"""Base exception class for all errors that relate to a knot diagram's
    encoding or shape.
    """

class PDParseError(DiagramException):
    r"""An exception raised when a PD code string does not match the grammar.

    Attributes
    ----------
    position: :class:`builtins.int`
        The zero based offset in the input text where parsing failed.
    token: :class:`builtins.str`
        The offending piece of text. Empty string if the input ended early.
    """
    def __init__(self, position: int, token: str, message: str = None) -> None:
        self.position = position
        self.token = token

        if message is None:
            message = "unexpected token %r" % token if token else "unexpected end of input"

        super().__init__(f"{message} at position {position}")

class DiagramValidationError(DiagramException):
    r"""An exception raised when a diagram violates a structural invariant.

    This includes arc labels that do not appear exactly twice, strands that
    never close up and orientation data that contradicts itself.
    """

class UnsupportedDiagram(DiagramException):
    r"""An exception raised when an operation defined only for knots (one component)
    or for connected diagrams is given some other diagram.

    Attributes
    ----------
    components: :class:`builtins.int`
        The number of components of the rejected diagram.
    """
    def __init__(self, components: int, message: str = None) -> None:
        self.components = components
        super().__init__(message or f"operation requires a knot diagram, got {components} components")

    def __reduce__(self) -> typing.Tuple[typing.Any, ...]:
        return self.__class__, (self.components, str(self))

class EngineCapExceeded(QslopeException):
    r"""Base exception class for bracket engines refusing a diagram because
    it is beyond the configured limits.

    Attributes
    ----------
    cap: :class:`builtins.int`
        The configured cap that was hit.
    required: :class:`builtins.int`
        The value the diagram needed.
    """
    cap_name: typing.ClassVar[str] = "cap"

    def __init__(self, cap: int, required: int, message: str) -> None:
        self.cap = cap
        self.required = required
        super().__init__(message)

    def __reduce__(self) -> typing.Tuple[typing.Any, ...]:
        return self.__class__, (self.cap, self.required, str(self))

class StateSumCapExceeded(EngineCapExceeded):
    r"""Raised by the state-sum engine when the diagram has more crossings
    than the configured statesum cap.
    """
    cap_name = "statesum-cap"

    def __init__(self, cap: int, required: int, message: str = None) -> None:
        super().__init__(cap, required, message or (
            f"{required} crossings exceed statesum-cap {cap}, use the sweep engine or raise --statesum-cap"
        ))

class SweepWidthExceeded(EngineCapExceeded):
    r"""Raised by the sweep engine when the best crossing order it found
    needs more open strands than the configured width cap.
    """
    cap_name = "width-cap"

    def __init__(self, cap: int, required: int, message: str = None) -> None:
        super().__init__(cap, required, message or (
            f"sweep order needs width {required} which exceeds width-cap {cap}"
        ))

class UndefinedDegree(QslopeException):
    r"""Raised when degrees of the zero polynomial are requested."""

class FitError(QslopeException):
    r"""Raised when a degree sequence does not carry enough points to fit a
    quasi-quadratic of the requested period, or lists a color twice.

    An inexact fit is *not* an error; it is reported on the returned
    :class:`QuasiQuadratic` instead.
    """

class CatalogLookupError(QslopeException, LookupError):
    r"""Raised when a label is not found in the knot catalog.

    Attributes
    ----------
    label: :class:`builtins.str`
        The label that was looked up.
    """
    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"no catalog entry named {label!r}")
