"""Exact coefficient fields: the rationals and prime fields F_p.

Inside polynomials coefficients are stored as raw values (a rational number
object for QQ, an ``int`` in ``[0, p)`` for F_p) and manipulated through the
owning :class:`FieldSpec`.  :class:`Coefficient` wraps a raw value together
with its field for use at API boundaries.

The rational type is ``gmpy2.mpq`` when available.  Setting the environment
variable ``SATELIM_PURE_PYTHON=1`` before import forces the pure-Python
``fractions.Fraction`` path.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldArithmeticError, ParseError, UsageError

PURE_PYTHON = os.environ.get("SATELIM_PURE_PYTHON", "").strip() not in ("", "0")

if PURE_PYTHON:
    Rational = Fraction
    BACKEND = "python"
else:
    try:
        from gmpy2 import mpq as Rational
        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - depends on the environment
        Rational = Fraction
        BACKEND = "python"

MAX_PRIME = 2**31

_COEFF_RE = re.compile(r"\s*([-−]?)\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field, identified by its characteristic.

    ``characteristic == 0`` means QQ; otherwise it is the prime p of F_p.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0:
            if not _is_prime(p):
                raise UsageError(f"characteristic {p} is not a prime")
            if p >= MAX_PRIME:
                raise UsageError(f"prime {p} exceeds the supported bound 2^31")

    @classmethod
    def rationals(cls):
        return cls(0)

    @classmethod
    def prime(cls, p):
        return cls(int(p))

    @property
    def kind(self):
        return "Rationals" if self.characteristic == 0 else "PrimeField"

    @property
    def zero(self):
        return Rational(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Rational(1) if self.characteristic == 0 else 1

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"Fp {self.characteristic}"

    # raw value arithmetic -------------------------------------------------

    def from_int(self, n):
        p = self.characteristic
        return Rational(n) if p == 0 else n % p

    def from_fraction(self, num, den):
        p = self.characteristic
        if p == 0:
            if den == 0:
                raise FieldArithmeticError("zero denominator")
            return Rational(num, den)
        if den % p == 0:
            raise FieldArithmeticError(f"denominator {den} vanishes modulo {p}")
        return num * pow(den, -1, p) % p

    def convert(self, value):
        """Coerce an int, Fraction, rational or Coefficient into this field."""
        if isinstance(value, Coefficient):
            if value.field != self:
                raise UsageError(f"coefficient from {value.field} used in {self}")
            return value.value
        if isinstance(value, int):
            return self.from_int(value)
        try:
            num, den = int(value.numerator), int(value.denominator)
        except AttributeError:
            raise UsageError(f"cannot convert {value!r} into {self}") from None
        return self.from_fraction(num, den)

    def add(self, a, b):
        p = self.characteristic
        return a + b if p == 0 else (a + b) % p

    def sub(self, a, b):
        p = self.characteristic
        return a - b if p == 0 else (a - b) % p

    def mul(self, a, b):
        p = self.characteristic
        return a * b if p == 0 else a * b % p

    def neg(self, a):
        p = self.characteristic
        return -a if p == 0 else -a % p

    def inv(self, a):
        if not a:
            raise FieldArithmeticError("division by zero")
        p = self.characteristic
        return 1 / a if p == 0 else pow(a, -1, p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # text -----------------------------------------------------------------

    def to_str(self, a):
        if self.characteristic == 0:
            num, den = int(a.numerator), int(a.denominator)
            return str(num) if den == 1 else f"{num}/{den}"
        return str(a)

    def parse(self, text):
        """Parse ``int`` or ``int/posint`` into a raw field value."""
        m = _COEFF_RE.match(text)
        if m is None:
            raise ParseError(f"malformed coefficient {text!r}")
        sign, num, den = m.groups()
        num = int(num)
        if sign:
            num = -num
        if den is None:
            return self.from_int(num)
        return self.from_fraction(num, int(den))


QQ = FieldSpec(0)


@dataclass(frozen=True)
class Coefficient:
    """A field element tagged with its field; immutable and hashable."""

    field: FieldSpec
    value: object

    @classmethod
    def of(cls, field, value):
        return cls(field, field.convert(value))

    def _check(self, other):
        if not isinstance(other, Coefficient):
            return Coefficient.of(self.field, other)
        if other.field != self.field:
            raise UsageError(f"mixed fields: {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Coefficient(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        other = self._check(other)
        return Coefficient(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        return Coefficient(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        other = self._check(other)
        return Coefficient(self.field, self.field.div(self.value, other.value))

    def __neg__(self):
        return Coefficient(self.field, self.field.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def inverse(self):
        return Coefficient(self.field, self.field.inv(self.value))

    def __str__(self):
        return self.field.to_str(self.value)


def field_arith(a, b, op):
    """Apply ``op`` (one of ``add``, ``sub``, ``mul``, ``div``) to two coefficients."""
    ops = {"add": Coefficient.__add__, "sub": Coefficient.__sub__,
           "mul": Coefficient.__mul__, "div": Coefficient.__truediv__}
    if op not in ops:
        raise UsageError(f"unknown field operation {op!r}")
    if not isinstance(a, Coefficient) or not isinstance(b, Coefficient):
        raise UsageError("field_arith expects Coefficient operands")
    return ops[op](a, b)


def parse_coefficient(text, field=QQ):
    return Coefficient(field, field.parse(text))
