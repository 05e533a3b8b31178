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

from abc import ABC, abstractmethod
import typing

if typing.TYPE_CHECKING:
    from qslope.models.diagrams import Diagram
    from qslope.models.jones import BracketResult

__all__ = (
    "BracketCache",
)


class BracketCache(ABC):
    """Base class for creating custom bracket cache handlers.

    A bracket cache memoizes Kauffman brackets of diagrams, most usefully
    the cables evaluated again and again by :func:`colored_jones`. This class
    is exposed to allow users to implement custom handlers, e.g. one backed
    by a file, and configure them through :class:`EngineConfig`.

    Example::

        class MyCache(qslope.BracketCache):
            # Implement abstract methods.
            ...

        config = qslope.EngineConfig(cache=MyCache())

    Parameters
    ----------
    limit: :class:`builtins.int`
        The number of brackets to keep at a time. Defaults to ``64``. ``None``
        or ``0`` disables the cache.

    Attributes
    ----------
    limit: :class:`builtins.int`
        The number of brackets to keep at a time.
    """

    def __init__(self, limit: typing.Optional[int] = 64) -> None:
        if limit is None:
            limit = 0
        if not isinstance(limit, int) or limit < 0:
            raise TypeError("limit parameter must be a non-negative integer.")

        self.limit = limit

    @property
    def enabled(self) -> bool:
        """Indicates whether the cache stores anything.

        Returns
        -------
        :class:`builtins.bool`
        """
        return self.limit > 0

    @abstractmethod
    def clear(self) -> None:
        """Clears the entire cache."""

    @abstractmethod
    def get(self, diagram: Diagram) -> typing.Optional[BracketResult]:
        """Gets the cached bracket of a diagram.

        Parameters
        ----------
        diagram: :class:`Diagram`
            The diagram to look up. Diagrams with equal crossing lists and
            free loops share an entry.

        Returns
        -------
        Optional[:class:`BracketResult`]
            The cached result, ``None`` if there is none.
        """

    @abstractmethod
    def add(self, diagram: Diagram, result: BracketResult) -> None:
        """Stores the bracket of a diagram.

        Parameters
        ----------
        diagram: :class:`Diagram`
            The evaluated diagram.
        result: :class:`BracketResult`
            Its bracket.
        """

    @abstractmethod
    def __len__(self) -> int:
        ...
