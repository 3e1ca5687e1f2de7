"""Exact scalar fields: the rationals and prime fields F_p."""
from __future__ import annotations

from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class FpElem:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.v
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return int(other)

    def __add__(self, other):
        return FpElem(self.v + self._lift(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpElem(self.v - self._lift(other), self.p)

    def __rsub__(self, other):
        return FpElem(self._lift(other) - self.v, self.p)

    def __mul__(self, other):
        return FpElem(self.v * self._lift(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.v, self.p)

    def __truediv__(self, other):
        d = self._lift(other) % self.p
        if d == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElem(self.v * pow(d, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return FpElem(self._lift(other), self.p) / self

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == self._lift(other) % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v

    __str__ = __repr__


class Field:
    """Either Q (exact rationals) or F_p."""

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError("F_p needs a prime modulus, got %d" % p)
        self.p = p

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text == "Q":
            return cls()
        if text.startswith("Fp:"):
            return cls(int(text[3:]))
        raise ValueError("unknown field %r (expected Q or Fp:<p>)" % text)

    @property
    def name(self) -> str:
        return "Q" if self.p is None else "Fp:%d" % self.p

    def __call__(self, x) -> Fraction | FpElem:
        if self.p is None:
            if isinstance(x, FpElem):
                raise ValueError("cannot coerce F_p element into Q")
            return Fraction(x)
        if isinstance(x, FpElem):
            return FpElem(x.v, self.p)
        x = Fraction(x)
        return FpElem(x.numerator, self.p) / FpElem(x.denominator, self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return "Field(%s)" % self.name


QQ = Field()


def fmt_scalar(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)
    return str(c)
