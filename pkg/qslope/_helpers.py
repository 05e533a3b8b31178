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

r"""*Non-public* internal utilities."""

from __future__ import annotations

from fractions import Fraction
import typing


def number_to_json(value: typing.Any) -> typing.Any:
    r"""Converts exact numbers for JSON: integral fractions become ints, the
    others ``"p/q"`` strings. Containers are converted recursively.
    """
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, (list, tuple)):
        return [number_to_json(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [number_to_json(v) for v in sorted(value)]
    if isinstance(value, dict):
        return {k: number_to_json(v) for k, v in value.items()}
    return value

def format_number(value: typing.Any) -> str:
    r"""Formats a value for text tables."""
    value = number_to_json(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "{" + ", ".join(format_number(v) for v in value) + "}"
    if value is None:
        return "-"
    return str(value)

def residue(n: int, period: int) -> int:
    r"""The residue class of ``n`` used by quasi-polynomials of the given period."""
    return n % period

def crossing_number_from_label(label: str) -> typing.Optional[int]:
    r"""Extracts ``c`` from a knot table label such as ``"6_2"``."""
    head, sep, _ = label.partition("_")
    if not sep or not head.isdigit():
        return None
    return int(head)
