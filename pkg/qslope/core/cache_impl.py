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

from qslope.core.cache import BracketCache
from qslope.models.diagrams import Diagram
from qslope.models.jones import BracketResult

import typing

__all__ = (
    "DefaultBracketCache",
)


class DefaultBracketCache(BracketCache):
    r"""In-memory bracket cache implementation.

    This is the default cache handler used by :class:`EngineConfig`. When
    the cache is full it is emptied before the next entry is stored.

    .. tip::
        If you want to implement custom cache handlers, See the :class:`BracketCache`
        documentation.
    """

    def __init__(self, limit: typing.Optional[int] = 64) -> None:
        super().__init__(limit)
        self.clear()

    def clear(self) -> None:
        self._brackets: typing.Dict[Diagram, BracketResult] = {}

    def get(self, diagram: Diagram) -> typing.Optional[BracketResult]:
        if not isinstance(diagram, Diagram):
            raise TypeError("Parameter diagram must be an instance of Diagram.")

        return self._brackets.get(diagram)

    def add(self, diagram: Diagram, result: BracketResult) -> None:
        if not isinstance(diagram, Diagram):
            raise TypeError("Parameter diagram must be an instance of Diagram.")
        if not isinstance(result, BracketResult):
            raise TypeError("Parameter result must be an instance of BracketResult.")
        if not self.enabled:
            return

        brackets = self._brackets
        if len(brackets) >= self.limit:
            brackets.clear()

        brackets[diagram] = result

    def __len__(self) -> int:
        return len(self._brackets)
