"""Exact scalars over a prime field F_p or the rationals.

Scalars are plain sympy domain elements of ``GF(p)`` (non-symmetric
representatives, so residues print in [0, p)) or ``QQ`` (reduced fractions
with positive denominator). The ``Field`` descriptor is carried by every
structure that holds scalars.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy import isprime
from sympy.polys.domains import GF, QQ

from ..errors import StructureError

Scalar = Any


@dataclass(frozen=True)
class Field:
    """Base field k: ``characteristic`` is a prime p, or 0 for the rationals."""

    characteristic: int = 5

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise StructureError(f"Field characteristic must be prime or 0, got {self.characteristic}")

    @classmethod
    def parse(cls, value: Any) -> "Field":
        """Read a field descriptor: a prime, ``"F5"``, ``"Q"`` or 0."""
        if isinstance(value, Field):
            return value
        if isinstance(value, str):
            text = value.strip()
            if text.upper() in ("Q", "QQ", "RATIONALS"):
                return cls(0)
            if text[:1] in ("F", "f"):
                text = text[1:]
            try:
                return cls(int(text))
            except ValueError:
                raise StructureError(f"Unknown field descriptor: {value!r}") from None
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value)
        raise StructureError(f"Unknown field descriptor: {value!r}")

    @property
    def domain(self):
        return _domain(self.characteristic)

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    @property
    def descriptor(self) -> int | str:
        """Value written to the ``field`` key of documents."""
        return "Q" if self.characteristic == 0 else self.characteristic

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def __call__(self, value: Any) -> Scalar:
        """Convert an int, Fraction, ``"a/b"`` string or domain element."""
        if isinstance(value, bool):
            raise StructureError(f"Not a scalar: {value!r}")
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except ValueError:
                raise StructureError(f"Not a scalar: {value!r}") from None
        if isinstance(value, Fraction):
            return self.div(self.domain(value.numerator), self.domain(value.denominator))
        try:
            return self.domain.convert(value)
        except Exception as e:
            raise StructureError(f"Not a scalar over {self.name}: {value!r}") from e

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        if not b:
            raise ZeroDivisionError(f"Division by zero in {self.name}")
        return a / b

    def inverse(self, a: Scalar) -> Scalar:
        return self.div(self.one, a)

    def is_unit(self, n: int) -> bool:
        """Whether the integer n is invertible in k (e.g. n = |G|)."""
        if self.characteristic == 0:
            return n != 0
        return n % self.characteristic != 0

    def to_text(self, a: Scalar) -> int | str:
        """Serialize a scalar: an int when integral, else ``"num/den"``."""
        if self.characteristic != 0:
            return int(a)
        numerator, denominator = int(a.numerator), int(a.denominator)
        if denominator == 1:
            return numerator
        return f"{numerator}/{denominator}"

    def __str__(self) -> str:
        return self.name


@lru_cache(maxsize=None)
def _domain(characteristic: int):
    # one domain object per field, so elements of equal fields interoperate
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)
