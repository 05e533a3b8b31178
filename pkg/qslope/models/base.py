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

__all__ = (
    "BaseModel",
)


class BaseModel(ABC):
    r"""Common base class for all other models of the library.

    Models are immutable values. Most of them are not meant to be initialized
    by the user; obtain them from the relevant functions such as :func:`parse_pd`,
    :func:`adequacy` or :func:`fit_quasi_quadratic`.
    """
    __slots__ = ()

    @abstractmethod
    def to_dict(self) -> typing.Dict[str, typing.Any]:
        r"""Returns the JSON compatible representation of this model.

        Returns
        -------
        :class:`builtins.dict`
        """
        raise NotImplementedError

    def __setattr__(self, name: str, value: typing.Any) -> None:
        if name.startswith("_") or not hasattr(self, name):
            object.__setattr__(self, name, value)
            return

        raise AttributeError(f"{self.__class__.__name__} is immutable, cannot set {name!r}")
