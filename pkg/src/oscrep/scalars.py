"""Exact scalars: rationals and polynomials in the formal parameter c.

Every coefficient in this package is a :class:`Scalar`, an element of Q[c]
stored as a dense tuple of ``Fraction`` coefficients indexed by the power of
c.  The tuple carries no trailing zeros, so two scalars are equal iff their
tuples are equal; the zero scalar is the empty tuple.  All arithmetic is
exact -- no floating-point value exists anywhere in the system.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "Scalar",
    "ParameterizedCoefficientError",
    "parse_rational",
    "format_rational",
    "parse_scalar",
]

ScalarLike = Union["Scalar", Fraction, int]


class ParameterizedCoefficientError(ValueError):
    """A constant rational was required but the scalar still involves c."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:\s*/\s*\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal of the form ``p`` or ``p/q``."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text.replace(" ", ""))


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``p`` or ``p/q``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _trimmed(coeffs) -> tuple[Fraction, ...]:
    out = [Fraction(v) for v in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Scalar:
    """An element of Q[c]; ``coeffs[k]`` is the coefficient of ``c**k``."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            object.__setattr__(self, "coeffs", _trimmed(self.coeffs))

    @staticmethod
    def of(value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return Scalar(_trimmed((Fraction(value),)))

    @staticmethod
    def parameter() -> "Scalar":
        """The formal parameter c itself."""
        return Scalar((Fraction(0), Fraction(1)))

    @staticmethod
    def zero() -> "Scalar":
        return Scalar(())

    @staticmethod
    def one() -> "Scalar":
        return Scalar((Fraction(1),))

    @property
    def degree(self) -> int:
        """Degree in c; the zero scalar has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ParameterizedCoefficientError(
                f"parameterized coefficients: {self} depends on c"
            )
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def evaluate(self, value: Fraction | int) -> "Scalar":
        """Substitute a rational for c, returning a constant scalar."""
        value = Fraction(value)
        total = Fraction(0)
        for coeff in reversed(self.coeffs):
            total = total * value + coeff
        return Scalar.of(total)

    def __add__(self, other: ScalarLike) -> "Scalar":
        other = Scalar.of(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return Scalar(_trimmed(out))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(tuple(-v for v in self.coeffs))

    def __sub__(self, other: ScalarLike) -> "Scalar":
        return self + (-Scalar.of(other))

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return Scalar.of(other) + (-self)

    def __mul__(self, other: ScalarLike) -> "Scalar":
        other = Scalar.of(other)
        if not self.coeffs or not other.coeffs:
            return Scalar(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Scalar(_trimmed(out))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            v = self.coeffs[k]
            if v == 0:
                continue
            if k == 0:
                body = format_rational(abs(v))
            else:
                power = "c" if k == 1 else f"c^{k}"
                body = power if abs(v) == 1 else f"{format_rational(abs(v))}*{power}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({self})"


_TERM_RE = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?(?P<c>c)?(?:\^(?P<pow>\d+))?$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal: a rational, or a polynomial in c.

    Accepts the forms produced by ``str(Scalar)``, e.g. ``"5/6"``, ``"-c"``,
    ``"c^2 - 1"``, ``"2*c^2 + 1/2*c - 3"``, with or without surrounding
    parentheses.
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        raise ValueError("empty scalar literal")
    atoms: list[tuple[int, str]] = []
    pending_sign = 1
    token = ""
    for ch in s.replace(" ", ""):
        if ch in "+-" and token:
            atoms.append((pending_sign, token))
            pending_sign = 1 if ch == "+" else -1
            token = ""
        elif ch in "+-":
            pending_sign *= 1 if ch == "+" else -1
        else:
            token += ch
    if token:
        atoms.append((pending_sign, token))
    if not atoms:
        raise ValueError(f"malformed scalar literal: {text!r}")
    result = Scalar.zero()
    for sgn, atom in atoms:
        m = _TERM_RE.match(atom)
        if not m or (m.group("pow") and not m.group("c")):
            raise ValueError(f"malformed scalar atom: {atom!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("c"):
            power = int(m.group("pow")) if m.group("pow") else 1
            coeffs = [Fraction(0)] * power + [sgn * coef]
            result = result + Scalar(tuple(coeffs))
        else:
            result = result + Scalar.of(sgn * coef)
    return result
