"""Exact scalars: arbitrary-precision rationals and extended reals.

``Rational`` is the standard-library :class:`fractions.Fraction` (exact
arithmetic, lowest terms, positive denominator, total order).  ``ExtReal``
adjoins -inf and +inf with the total order  -inf < finite < +inf.  Extended
values are pure order elements here: no arithmetic is ever performed across
infinities, and none of the operations in this package needs it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPositiveDenominator, ParseError

Rational = Fraction

_NEG, _FIN, _POS = -1, 0, 1


@dataclass(frozen=True, order=True)
class ExtReal:
    """An element of the extended real line.

    ``kind`` is -1, 0 or +1 for -inf, finite, +inf; ``value`` is meaningful
    only when finite (it is pinned to 0 otherwise so that the generated
    field-tuple ordering is the extended-real order).
    """

    kind: int
    value: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in (_NEG, _FIN, _POS):
            raise ValueError(f"bad ExtReal kind {self.kind!r}")
        if self.kind != _FIN and self.value != 0:
            raise ValueError("infinite ExtReal must carry value 0")
        if self.kind == _FIN and not isinstance(self.value, Fraction):
            raise TypeError(f"finite ExtReal needs a Fraction, got {type(self.value).__name__}")

    @property
    def is_finite(self) -> bool:
        return self.kind == _FIN

    @property
    def finite(self) -> Fraction:
        """The finite value; raises if infinite."""
        if self.kind != _FIN:
            raise ValueError(f"{self} is not finite")
        return self.value

    def __str__(self) -> str:
        if self.kind == _NEG:
            return "-inf"
        if self.kind == _POS:
            return "+inf"
        return str(self.value)

    def __repr__(self) -> str:
        return f"ExtReal({self})"


NEG_INF = ExtReal(_NEG)
POS_INF = ExtReal(_POS)


def fin(value: Fraction | int) -> ExtReal:
    """Wrap a finite rational as an ExtReal."""
    return ExtReal(_FIN, Fraction(value))


def as_ext(value: ExtReal | Fraction | int) -> ExtReal:
    """Coerce a rational or ExtReal into the extended real line."""
    if isinstance(value, ExtReal):
        return value
    return fin(value)


def as_rational(value: Fraction | int | str) -> Fraction:
    """Parse an exact rational from an int, Fraction, or literal string.

    Accepted strings: integer ("7"), decimal ("3.25", converted exactly in
    base 10), or quotient ("13/4").  Quotients must have a positive integer
    denominator.  Floats are rejected: binary floats are not exact inputs.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(
            f"refusing inexact float {value!r}; pass a decimal or p/q string instead"
        )
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num_text, _, den_text = text.partition("/")
            try:
                num = int(num_text.strip())
                den = int(den_text.strip())
            except ValueError as exc:
                raise ParseError(f"bad rational literal {value!r}") from exc
            if den <= 0:
                raise NonPositiveDenominator(
                    f"denominator must be positive in {value!r}"
                )
            return Fraction(num, den)
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {value!r}") from exc
    raise ParseError(f"not a rational literal: {value!r}")
