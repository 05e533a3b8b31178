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
from qslope.enums import VerdictStatus
from qslope._helpers import number_to_json, residue

from fractions import Fraction
import typing

__all__ = (
    "QuasiQuadratic",
    "SlopeData",
    "Verdict",
    "BoundEntry",
    "BoundReport",
    "CharacterizationReport",
)

Triple = typing.Tuple[Fraction, Fraction, Fraction]


class QuasiQuadratic(BaseModel):
    r"""Exact quadratic quasi-polynomials fitted to ``4 d_plus`` and ``4 d_minus``.

    For ``n`` in residue class ``r = n mod period``, ``4 d_plus(n) = a_r n^2 + b_r n + c_r``
    and ``4 d_minus(n) = a*_r n^2 + b*_r n + c*_r``.

    Attributes
    ----------
    period: :class:`builtins.int`
        The period ``p >= 1``.
    fit_start: :class:`builtins.int`
        The smallest ``n`` used.
    plus: Tuple[Tuple[:class:`fractions.Fraction`, ...], ...]
        ``(a_r, b_r, c_r)`` for ``r = 0 .. p - 1``.
    minus: Tuple[Tuple[:class:`fractions.Fraction`, ...], ...]
        ``(a*_r, b*_r, c*_r)`` for ``r = 0 .. p - 1``.
    residuals: Tuple[Tuple[:class:`builtins.int`, :class:`builtins.str`, :class:`fractions.Fraction`], ...]
        ``(n, side, observed - fitted)`` for every point the fit does not
        reproduce. ``side`` is ``"plus"`` or ``"minus"``.
    """
    if typing.TYPE_CHECKING:
        period: int
        fit_start: int
        plus: typing.Tuple[Triple, ...]
        minus: typing.Tuple[Triple, ...]
        residuals: typing.Tuple[typing.Tuple[int, str, Fraction], ...]

    __slots__ = ("period", "fit_start", "plus", "minus", "residuals")

    def __init__(
        self,
        *,
        period: int,
        fit_start: int,
        plus: typing.Sequence[Triple],
        minus: typing.Sequence[Triple],
        residuals: typing.Iterable[typing.Tuple[int, str, Fraction]] = (),
    ) -> None:
        self.period = period
        self.fit_start = fit_start
        self.plus = tuple(tuple(Fraction(x) for x in t) for t in plus)  # type: ignore
        self.minus = tuple(tuple(Fraction(x) for x in t) for t in minus)  # type: ignore
        self.residuals = tuple(residuals)

    @property
    def exact(self) -> bool:
        r"""Whether every supplied point is reproduced exactly."""
        return not self.residuals

    def evaluate(self, n: int, side: str = "plus") -> Fraction:
        r"""Evaluates the fitted ``4 d_plus`` (``side="plus"``) or ``4 d_minus`` at ``n``."""
        a, b, c = (self.plus if side == "plus" else self.minus)[residue(n, self.period)]
        return a * n * n + b * n + c

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "period": self.period,
            "fit_start": self.fit_start,
            "plus": number_to_json(self.plus),
            "minus": number_to_json(self.minus),
            "exact": self.exact,
            "residuals": [[n, side, number_to_json(r)] for n, side, r in self.residuals],
        }

    def __repr__(self) -> str:
        return f"<QuasiQuadratic period={self.period} plus={self.plus} minus={self.minus} exact={self.exact}>"


class SlopeData(BaseModel):
    r"""Jones slopes and linear degree data of a knot.

    Attributes
    ----------
    js: FrozenSet[:class:`fractions.Fraction`]
        The Jones slopes ``{a_r}`` from ``4 d_plus``.
    js_star: FrozenSet[:class:`fractions.Fraction`]
        The Jones slopes ``{a*_r}`` from ``4 d_minus``.
    jx: FrozenSet[:class:`fractions.Fraction`]
        ``{b_r / 2}``, the values of ``2 n^-1`` times the linear part of ``d_plus``.
    jx_star: FrozenSet[:class:`fractions.Fraction`]
        ``{b*_r / 2}``, likewise for ``d_minus``.
    """
    if typing.TYPE_CHECKING:
        js: typing.FrozenSet[Fraction]
        js_star: typing.FrozenSet[Fraction]
        jx: typing.FrozenSet[Fraction]
        jx_star: typing.FrozenSet[Fraction]

    __slots__ = ("js", "js_star", "jx", "jx_star")

    def __init__(
        self,
        *,
        js: typing.Iterable[Fraction],
        js_star: typing.Iterable[Fraction],
        jx: typing.Iterable[Fraction],
        jx_star: typing.Iterable[Fraction],
    ) -> None:
        self.js = frozenset(Fraction(x) for x in js)
        self.js_star = frozenset(Fraction(x) for x in js_star)
        self.jx = frozenset(Fraction(x) for x in jx)
        self.jx_star = frozenset(Fraction(x) for x in jx_star)

    @property
    def linear(self) -> typing.FrozenSet[Fraction]:
        r"""``{b_r} = 2 jx``, the linear coefficients of ``4 d_plus``. The
        characterization equations take their ``x`` witnesses from here.
        """
        return frozenset(2 * x for x in self.jx)

    @property
    def linear_star(self) -> typing.FrozenSet[Fraction]:
        r"""``{b*_r} = 2 jx*``, the linear coefficients of ``4 d_minus``."""
        return frozenset(2 * x for x in self.jx_star)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "js": number_to_json(self.js),
            "js_star": number_to_json(self.js_star),
            "jx": number_to_json(self.jx),
            "jx_star": number_to_json(self.jx_star),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SlopeData):
            return NotImplemented
        return (self.js, self.js_star, self.jx, self.jx_star) == (other.js, other.js_star, other.jx, other.jx_star)

    def __repr__(self) -> str:
        return f"<SlopeData js={sorted(self.js)} js_star={sorted(self.js_star)} jx={sorted(self.jx)} jx_star={sorted(self.jx_star)}>"


class Verdict(BaseModel):
    r"""The outcome of one characterization predicate.

    Attributes
    ----------
    name: :class:`builtins.str`
        The predicate name, e.g. ``"adequate"``.
    status: :class:`builtins.str`
        A :class:`VerdictStatus` value.
    equation: :class:`builtins.str`
        The equation that was tested, in plain text.
    witnesses: Dict[:class:`builtins.str`, Any]
        The numbers substituted into the equation.
    """
    if typing.TYPE_CHECKING:
        name: str
        status: str
        equation: str
        witnesses: typing.Dict[str, typing.Any]

    __slots__ = ("name", "status", "equation", "witnesses")

    def __init__(self, name: str, status: str, equation: str, witnesses: typing.Mapping[str, typing.Any] = None) -> None:
        self.name = name
        self.status = status
        self.equation = equation
        self.witnesses = dict(witnesses or {})

    @classmethod
    def from_bool(cls, name: str, holds: bool, equation: str, witnesses: typing.Mapping[str, typing.Any] = None) -> Verdict:
        return cls(name, VerdictStatus.TRUE if holds else VerdictStatus.FALSE, equation, witnesses)

    @property
    def holds(self) -> bool:
        return self.status == VerdictStatus.TRUE

    @property
    def applicable(self) -> bool:
        return self.status != VerdictStatus.NOT_APPLICABLE

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "name": self.name,
            "status": self.status,
            "equation": self.equation,
            "witnesses": number_to_json(self.witnesses),
        }

    def __bool__(self) -> bool:
        return self.holds

    def __repr__(self) -> str:
        return f"<Verdict {self.name}={self.status} {self.witnesses}>"


class BoundEntry(BaseModel):
    r"""The degree bounds of a diagram compared with the observed degrees at one color.

    Attributes
    ----------
    n: :class:`builtins.int`
        The color.
    four_d_minus: :class:`builtins.int`
        Observed ``4 d_minus``.
    four_d_plus: :class:`builtins.int`
        Observed ``4 d_plus``.
    lower: :class:`builtins.int`
        ``-2 c_minus n^2 + 2 (c - v_A) n + 2 v_A - 2 c_plus``.
    upper: :class:`builtins.int`
        ``2 c_plus n^2 + 2 (v_B - c) n + 2 c_minus - 2 v_B``.
    refined_lower: Optional[:class:`builtins.int`]
        When the diagram is not A-adequate, ``4 d_minus - (-2 c_minus n^2 + 2 (c - v_A + 1) n)``,
        the observed periodic term of the refined bound. ``None`` otherwise.
    refined_upper: Optional[:class:`builtins.int`]
        When the diagram is not B-adequate, ``4 d_plus - (2 c_plus n^2 + 2 (v_B - c - 1) n)``.
        ``None`` otherwise.
    """
    if typing.TYPE_CHECKING:
        n: int
        four_d_minus: int
        four_d_plus: int
        lower: int
        upper: int
        refined_lower: typing.Optional[int]
        refined_upper: typing.Optional[int]

    __slots__ = ("n", "four_d_minus", "four_d_plus", "lower", "upper", "refined_lower", "refined_upper")

    def __init__(
        self,
        *,
        n: int,
        four_d_minus: int,
        four_d_plus: int,
        lower: int,
        upper: int,
        refined_lower: typing.Optional[int] = None,
        refined_upper: typing.Optional[int] = None,
    ) -> None:
        self.n = n
        self.four_d_minus = four_d_minus
        self.four_d_plus = four_d_plus
        self.lower = lower
        self.upper = upper
        self.refined_lower = refined_lower
        self.refined_upper = refined_upper

    @property
    def lower_holds(self) -> bool:
        return self.four_d_minus >= self.lower

    @property
    def upper_holds(self) -> bool:
        return self.four_d_plus <= self.upper

    @property
    def lower_equal(self) -> bool:
        return self.four_d_minus == self.lower

    @property
    def upper_equal(self) -> bool:
        return self.four_d_plus == self.upper

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "n": self.n,
            "four_d_minus": self.four_d_minus,
            "four_d_plus": self.four_d_plus,
            "lower": self.lower,
            "upper": self.upper,
            "lower_equal": self.lower_equal,
            "upper_equal": self.upper_equal,
            "refined_lower": self.refined_lower,
            "refined_upper": self.refined_upper,
        }


class BoundReport(BaseModel):
    r"""Per-color comparison of observed Jones degrees with the degree bounds of a diagram.

    For an A-adequate diagram the lower bound is attained at every ``n`` and
    for a B-adequate one the upper bound is. On a side that is not adequate
    the bound is strict for ``n >= 2`` (at ``n = 1`` both sides of every bound are ``0``)
    and the refined bound improves the linear coefficient by ``2``. Its periodic
    term is unknown; it is fixed to the observed value at the first color of
    each residue class and later colors are checked against it.

    Attributes
    ----------
    label: :class:`builtins.str`
        The diagram label.
    period: :class:`builtins.int`
        The period used to group colors for the refined bounds.
    a_adequate: :class:`builtins.bool`
        Whether the diagram is A-adequate.
    b_adequate: :class:`builtins.bool`
        Whether the diagram is B-adequate.
    entries: Tuple[:class:`BoundEntry`, ...]
        One entry per color.
    """
    if typing.TYPE_CHECKING:
        label: str
        period: int
        a_adequate: bool
        b_adequate: bool
        entries: typing.Tuple[BoundEntry, ...]

    __slots__ = ("label", "period", "a_adequate", "b_adequate", "entries")

    def __init__(self, *, label: str, period: int, a_adequate: bool, b_adequate: bool, entries: typing.Iterable[BoundEntry]) -> None:
        self.label = label
        self.period = period
        self.a_adequate = a_adequate
        self.b_adequate = b_adequate
        self.entries = tuple(sorted(entries, key=lambda e: e.n))

    @property
    def bounds_hold(self) -> bool:
        return all(e.lower_holds and e.upper_holds for e in self.entries)

    def equality(self, side: str) -> bool:
        r"""Whether the bound of ``side`` (``"A"`` for the lower, ``"B"`` for
        the upper) is attained at every color.
        """
        if side == "A":
            return all(e.lower_equal for e in self.entries)
        return all(e.upper_equal for e in self.entries)

    def strict(self, side: str) -> bool:
        r"""Whether the bound of ``side`` is strict at every color ``n >= 2``."""
        rest = [e for e in self.entries if e.n >= 2]
        if side == "A":
            return all(e.four_d_minus > e.lower for e in rest)
        return all(e.four_d_plus < e.upper for e in rest)

    def refined_holds(self, side: str) -> typing.Optional[bool]:
        r"""Whether the refined bound of ``side`` holds. ``None`` if the side is adequate."""
        key = "refined_lower" if side == "A" else "refined_upper"
        baseline: typing.Dict[int, int] = {}
        result: typing.Optional[bool] = None

        for entry in self.entries:
            value = getattr(entry, key)
            if value is None:
                return None
            result = True if result is None else result
            r = residue(entry.n, self.period)
            if r not in baseline:
                baseline[r] = value
                continue
            if (side == "A" and value < baseline[r]) or (side != "A" and value > baseline[r]):
                return False
        return result

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "label": self.label,
            "period": self.period,
            "a_adequate": self.a_adequate,
            "b_adequate": self.b_adequate,
            "bounds_hold": self.bounds_hold,
            "equality_A": self.equality("A"),
            "equality_B": self.equality("B"),
            "strict_A": self.strict("A"),
            "strict_B": self.strict("B"),
            "refined_A": self.refined_holds("A"),
            "refined_B": self.refined_holds("B"),
            "entries": [e.to_dict() for e in self.entries],
        }


class CharacterizationReport(BaseModel):
    r"""Every characterization verdict for one knot.

    ``c`` and ``g_T`` are the crossing number and Turaev genus of the supplied
    minimal diagram; they stand in for the invariants of the knot, which are
    never searched for.

    Attributes
    ----------
    label: :class:`builtins.str`
        The knot label.
    c: :class:`builtins.int`
        The crossing number witnessed by the minimal diagram.
    g_T: :class:`builtins.int`
        The Turaev genus of the minimal diagram.
    verdicts: Dict[:class:`builtins.str`, :class:`Verdict`]
        The verdicts by predicate name, in evaluation order.
    """
    if typing.TYPE_CHECKING:
        label: str
        c: int
        g_T: int
        verdicts: typing.Dict[str, Verdict]

    __slots__ = ("label", "c", "g_T", "verdicts")

    def __init__(self, *, label: str, c: int, g_T: int, verdicts: typing.Iterable[Verdict]) -> None:
        self.label = label
        self.c = c
        self.g_T = g_T
        self.verdicts = {v.name: v for v in verdicts}

    def __getitem__(self, name: str) -> Verdict:
        return self.verdicts[name]

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "label": self.label,
            "c": self.c,
            "g_T": self.g_T,
            "verdicts": {name: v.to_dict() for name, v in self.verdicts.items()},
        }

    def __repr__(self) -> str:
        body = ", ".join(f"{name}={v.status}" for name, v in self.verdicts.items())
        return f"<CharacterizationReport label={self.label!r} c={self.c} g_T={self.g_T} {body}>"
