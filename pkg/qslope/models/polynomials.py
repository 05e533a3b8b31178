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
from qslope.exceptions import UndefinedDegree

from fractions import Fraction
import typing

if typing.TYPE_CHECKING:
    import sympy

__all__ = (
    "LaurentPoly",
    "add",
    "mul",
    "scale",
    "t_degrees",
    "DELTA",
)

Operand = typing.Union["LaurentPoly", int]


class LaurentPoly(BaseModel):
    r"""A sparse Laurent polynomial with integer coefficients in the
    Kauffman bracket variable ``A``.

    The colored Jones polynomial lives in ``t^(1/4)``. This class uses
    ``A = t^(-1/4)`` so that every exponent is an integer; see :meth:`.t_degrees`
    for the conversion of degrees.

    Instances are immutable and hashable. They support ``+``, ``-``, ``*`` and
    non-negative integer ``**`` with other polynomials and with integers.
    Comparison with an integer compares with the constant polynomial.

    Parameters
    ----------
    terms: Mapping[:class:`builtins.int`, :class:`builtins.int`]
        The mapping of ``A`` exponent to coefficient. Zero coefficients are dropped.
    """
    if typing.TYPE_CHECKING:
        _terms: typing.Dict[int, int]
        _hash: typing.Optional[int]

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: typing.Mapping[int, int] = None) -> None:
        clean: typing.Dict[int, int] = {}

        if terms:
            for exp, coeff in terms.items():
                if not isinstance(exp, int) or not isinstance(coeff, int):
                    raise TypeError("LaurentPoly exponents and coefficients must be integers.")
                if coeff:
                    clean[exp] = coeff

        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: typing.Dict[int, int]) -> LaurentPoly:
        # terms is trusted to be free of zero coefficients.
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> LaurentPoly:
        r"""The zero polynomial."""
        return cls._from_clean({})

    @classmethod
    def one(cls) -> LaurentPoly:
        r"""The constant polynomial ``1``."""
        return cls._from_clean({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        r"""Creates ``coefficient * A^exponent``."""
        return cls({exponent: coefficient})

    @classmethod
    def from_pairs(cls, pairs: typing.Iterable[typing.Sequence[int]]) -> LaurentPoly:
        r"""Creates a polynomial from ``[exponent, coefficient]`` pairs, the
        format produced by :meth:`.to_pairs`.
        """
        terms: typing.Dict[int, int] = {}
        for exp, coeff in pairs:
            terms[int(exp)] = terms.get(int(exp), 0) + int(coeff)
        return cls(terms)

    @property
    def terms(self) -> typing.Dict[int, int]:
        r"""A copy of the exponent to coefficient mapping.

        Returns
        -------
        :class:`builtins.dict`
        """
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        r"""The smallest ``A`` exponent.

        Raises
        ------
        UndefinedDegree
            The polynomial is zero.
        """
        if not self._terms:
            raise UndefinedDegree("the zero polynomial has no degree")
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        r"""The largest ``A`` exponent.

        Raises
        ------
        UndefinedDegree
            The polynomial is zero.
        """
        if not self._terms:
            raise UndefinedDegree("the zero polynomial has no degree")
        return max(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def items(self) -> typing.List[typing.Tuple[int, int]]:
        r"""Returns ``(exponent, coefficient)`` pairs sorted by exponent."""
        return sorted(self._terms.items())

    def t_degrees(self) -> typing.Tuple[int, int]:
        r"""Returns ``(4 * d_minus, 4 * d_plus)``, four times the minimal and maximal
        degree in ``t``.

        Since ``A = t^(-1/4)`` this is ``(-max_degree, -min_degree)``.

        Raises
        ------
        UndefinedDegree
            The polynomial is zero.
        """
        return (-self.max_degree, -self.min_degree)

    def shift(self, k: int) -> LaurentPoly:
        r"""Multiplies by ``A^k``."""
        return LaurentPoly._from_clean({e + k: c for e, c in self._terms.items()})

    def invert(self) -> LaurentPoly:
        r"""Substitutes ``A`` by ``A^-1``. In ``t`` this is ``t`` to ``t^-1``."""
        return LaurentPoly._from_clean({-e: c for e, c in self._terms.items()})

    def scale(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            raise TypeError("scale factor must be an integer.")
        if not k:
            return LaurentPoly.zero()
        return LaurentPoly._from_clean({e: c * k for e, c in self._terms.items()})

    def to_pairs(self) -> typing.List[typing.List[int]]:
        r"""Returns sorted ``[exponent, coefficient]`` pairs, the JSON representation."""
        return [[e, c] for e, c in self.items()]

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {"variable": "A", "terms": self.to_pairs()}

    def as_sympy(self, symbol: str = "t") -> sympy.Expr:
        r"""Converts to a :mod:`sympy` expression in ``t`` with quarter exponents."""
        import sympy

        t = sympy.Symbol(symbol, positive=True)
        return sympy.Add(*(
            sympy.Integer(c) * t ** sympy.Rational(-e, 4)
            for e, c in self.items()
        ))

    def to_t_string(self) -> str:
        r"""Renders the polynomial in powers of ``t``, highest ``t`` power first.

        Exponents are written as reduced fractions, e.g. ``-t^(1/2) + 1 - t^(-3/4)``.
        """
        if not self._terms:
            return "0"

        parts: typing.List[str] = []
        # Highest t power is the lowest A power.
        for e, c in self.items():
            power = Fraction(-e, 4)
            if power == 0:
                body = str(abs(c))
            else:
                if power == 1:
                    mono = "t"
                elif power.denominator == 1:
                    mono = f"t^{power.numerator}"
                else:
                    mono = f"t^({power.numerator}/{power.denominator})"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"

            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)

        return " ".join(parts)

    def _coerce(self, other: typing.Any) -> typing.Optional[LaurentPoly]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other: Operand) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return LaurentPoly._from_clean(terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Operand) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Operand) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Operand) -> LaurentPoly:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented

        left, right = self._terms, other._terms
        if len(left) < len(right):
            left, right = right, left
        if len(right) == 1:
            ((k, f),) = right.items()
            return LaurentPoly._from_clean({e + k: c * f for e, c in left.items()})

        terms: typing.Dict[int, int] = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("LaurentPoly only supports non-negative integer powers.")

        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            terms = self._terms
            if not terms or list(terms) == [0]:
                # Constants hash like the integers they compare equal to.
                self._hash = hash(terms.get(0, 0))
            else:
                self._hash = hash(frozenset(terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPoly(0)"
        body = " + ".join(f"{c}*A^{e}" for e, c in self.items())
        return f"LaurentPoly({body})"


DELTA = LaurentPoly({2: -1, -2: -1})
r"""The loop value ``-A^2 - A^-2`` of the Kauffman bracket."""


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    r"""Returns ``p + q``."""
    return p + q

def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    r"""Returns ``p * q``."""
    return p * q

def scale(p: LaurentPoly, k: int) -> LaurentPoly:
    r"""Returns ``k * p`` for an integer ``k``."""
    return p.scale(k)

def t_degrees(p: LaurentPoly) -> typing.Tuple[int, int]:
    r"""Returns ``(4 * d_minus, 4 * d_plus)`` of ``p``. See :meth:`LaurentPoly.t_degrees`."""
    return p.t_degrees()
