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
from qslope.core.cache_impl import DefaultBracketCache
from qslope.enums import Engine

import typing

__all__ = (
    "EngineConfig",
)


class EngineConfig:
    r"""Configuration of the Kauffman bracket engines.

    All parameters are optional and keyword only. The command line builds one
    from ``--engine``, ``--statesum-cap``, ``--width-cap`` and ``--jobs``.

    Parameters
    ----------
    engine: :class:`builtins.str`
        The :class:`Engine` to use. Defaults to :attr:`Engine.AUTO`, which picks
        the state-sum engine for diagrams with at most ``statesum_cap`` crossings
        and the sweep engine otherwise.
    statesum_cap: :class:`builtins.int`
        The largest crossing count the state-sum engine accepts. Defaults to ``24``.
    width_cap: :class:`builtins.int`
        The largest number of open strands the sweep engine accepts. Defaults to ``16``.
    jobs: :class:`builtins.int`
        The number of worker processes for parallel state-sum blocks, cable
        brackets and per-knot pipelines. Defaults to ``1``, no workers.
    cache: :class:`BracketCache`
        The bracket cache. If not provided, Defaults to :class:`DefaultBracketCache`.
    """

    __slots__ = ("engine", "statesum_cap", "width_cap", "jobs", "cache")

    def __init__(
        self,
        *,
        engine: str = Engine.AUTO,
        statesum_cap: int = 24,
        width_cap: int = 16,
        jobs: int = 1,
        cache: BracketCache = None,
    ) -> None:
        if engine not in Engine.ALL:
            raise ValueError(f"Parameter engine must be one of {', '.join(Engine.ALL)}, not {engine!r}.")
        for name, value in (("statesum_cap", statesum_cap), ("width_cap", width_cap)):
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"Parameter {name} must be a non-negative integer.")
        if not isinstance(jobs, int) or jobs < 1:
            raise ValueError("Parameter jobs must be an integer greater then or equal to 1.")
        if cache is not None and not isinstance(cache, BracketCache):
            raise TypeError("Parameter cache must be an instance of BracketCache. Not %r" % cache.__class__)

        self.engine = engine
        self.statesum_cap = statesum_cap
        self.width_cap = width_cap
        self.jobs = jobs
        self.cache = cache if cache is not None else DefaultBracketCache()

    def replace(self, **kwargs: typing.Any) -> EngineConfig:
        r"""Returns a copy with the given parameters changed. The cache is shared
        unless a new one is passed.
        """
        params = {name: getattr(self, name) for name in self.__slots__}
        params.update(kwargs)
        return EngineConfig(**params)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "engine": self.engine,
            "statesum_cap": self.statesum_cap,
            "width_cap": self.width_cap,
            "jobs": self.jobs,
        }

    def __repr__(self) -> str:
        return (f"<EngineConfig engine={self.engine} statesum_cap={self.statesum_cap} "
                f"width_cap={self.width_cap} jobs={self.jobs}>")
