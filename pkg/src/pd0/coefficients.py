"""Exact coefficient arithmetic: Z2 bits, Q/Z phases, and doubled pairs.

U(1) is written additively: the phase ``p/q`` stands for ``exp(2*pi*i*p/q)``,
so products of unitaries become sums and complex conjugation is negation.
A doubled value is a pair ``(plus, minus)``; the generator of Z2 acts on it by
exchanging the two components.

>>> Phase(1, 8) + Phase(7, 8)
Phase(0, 1)
>>> swap_pow(Doubled(Phase(1, 8), Phase(3, 8)), 1)
Doubled(plus=Phase(3, 8), minus=Phase(1, 8))
>>> lift_eighth(-2)
Phase(3, 4)
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import ParseError

# canonical integer representatives of Z2 = {0, 1}
CANONICAL_LIFT = (0, 1)


class Phase:
    """An element of Q/Z, stored reduced with ``0 <= numerator < denominator``."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator=0, denominator=1):
        if denominator <= 0:
            raise ValueError("denominator must be positive")
        numerator %= denominator
        g = gcd(numerator, denominator)
        object.__setattr__(self, "numerator", numerator // g)
        object.__setattr__(self, "denominator", denominator // g)

    def __setattr__(self, name, value):
        raise AttributeError("Phase is immutable")

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, s, strict=True, location=""):
        """Parse ``"p/q"`` (or ``"0"``). With ``strict`` the fraction must be reduced and in [0, 1)."""
        if not isinstance(s, str):
            raise ParseError("phase must be a 'p/q' string", location)
        parts = s.split("/")
        try:
            if len(parts) == 1:
                p, q = int(parts[0]), 1
            elif len(parts) == 2:
                p, q = int(parts[0]), int(parts[1])
            else:
                raise ValueError
        except ValueError:
            raise ParseError(f"cannot parse phase {s!r}", location) from None
        if q <= 0:
            raise ParseError(f"non-positive denominator in {s!r}", location)
        if strict and (gcd(p, q) != 1 or not 0 <= p < q) and not (p == 0 and q == 1):
            raise ParseError(f"phase {s!r} is not a reduced fraction in [0, 1)", location)
        return cls(p, q)

    def as_fraction(self):
        return Fraction(self.numerator, self.denominator)

    def __add__(self, other):
        if not isinstance(other, Phase):
            return NotImplemented
        q = self.denominator * other.denominator // gcd(self.denominator, other.denominator)
        return Phase(self.numerator * (q // self.denominator) + other.numerator * (q // other.denominator), q)

    def __neg__(self):
        return Phase(-self.numerator, self.denominator)

    def __sub__(self, other):
        if not isinstance(other, Phase):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Phase(k * self.numerator, self.denominator)

    def __eq__(self, other):
        return (isinstance(other, Phase) and self.numerator == other.numerator
                and self.denominator == other.denominator)

    def __lt__(self, other):
        return self.as_fraction() < other.as_fraction()

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __bool__(self):
        return self.numerator != 0

    def __repr__(self):
        return f"Phase({self.numerator}, {self.denominator})"

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


ZERO = Phase(0, 1)
HALF = Phase(1, 2)


def add(p, q):
    return p + q


def neg(p):
    return -p


def int_scale(k, p):
    return k * p


def phase_arith(op, p, q=None):
    if op == "add":
        return p + q
    if op == "neg":
        return -p
    if op == "int_scale":
        # either argument order is accepted: (k, p) or (p, k)
        if isinstance(p, int):
            return p * q
        return q * p
    raise ValueError(f"unknown phase operation {op!r}")


class Doubled(NamedTuple):
    """A pair ``(plus, minus)`` of bits or phases; component ``+1`` is ``plus``."""

    plus: object
    minus: object

    def component(self, eps):
        if eps == 1:
            return self.plus
        if eps == -1:
            return self.minus
        raise ValueError("epsilon must be +1 or -1")

    @property
    def is_diagonal(self):
        return self.plus == self.minus


def swap_pow(x, e):
    """Apply the exchange ``e`` times (``e`` is a bit)."""
    return Doubled(x.minus, x.plus) if e % 2 else x


def _is_phase(x):
    return isinstance(x.plus, Phase)


def pair_mul(x, y):
    """Componentwise group law: XOR for bits, addition for phases."""
    if _is_phase(x) != _is_phase(y):
        raise TypeError("cannot combine bit and phase pairs")
    if _is_phase(x):
        return Doubled(x.plus + y.plus, x.minus + y.minus)
    return Doubled(x.plus ^ y.plus, x.minus ^ y.minus)


def pair_inv(x):
    if _is_phase(x):
        return Doubled(-x.plus, -x.minus)
    return x


def sign_of_bits(x):
    """``(-1)^x`` for a pair of bits, as a pair of phases."""
    return Doubled(Phase(x.plus, 2), Phase(x.minus, 2))


def bit_dot(x, y):
    """Componentwise product of bit pairs."""
    return Doubled(x.plus & y.plus, x.minus & y.minus)


def lift_bit(b, lift=CANONICAL_LIFT):
    return lift[b & 1]


def lift_quarter(k):
    """``exp(i*pi*k/2)`` as the phase ``k/4``."""
    return Phase(k, 4)


def lift_eighth(k):
    """``exp(i*pi*k/4)`` as the phase ``k/8``."""
    return Phase(k, 8)
