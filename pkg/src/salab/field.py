"""Exact coefficient fields: the rationals and prime fields of odd order.

Characteristic 2 is rejected everywhere because the quadratic-form layer
symmetrizes Gram matrices, which divides by 2. Rational coefficients are
`fractions.Fraction` (always in lowest terms); prime-field coefficients are
plain ints reduced to [0, p).
"""

from fractions import Fraction

from .errors import DomainError


def _is_prime(n: int) -> bool:
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


class FieldSpec:
    """kind 'rationals' (characteristic 0) or 'prime-field' (odd prime p)."""

    __slots__ = ("kind", "characteristic")

    def __init__(self, kind: str, characteristic: int):
        if kind == "rationals":
            if characteristic != 0:
                raise DomainError("rationals have characteristic 0")
        elif kind == "prime-field":
            if characteristic == 2:
                raise DomainError(
                    "characteristic 2 is not supported (Gram symmetrization divides by 2)"
                )
            if not _is_prime(characteristic):
                raise DomainError(f"{characteristic} is not prime")
        else:
            raise DomainError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.characteristic = characteristic

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash((self.kind, self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"F{self.characteristic}"


class Field:
    """Arithmetic on raw coefficient values for one FieldSpec."""

    __slots__ = ("spec", "p", "zero", "one")

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.characteristic
        if self.p == 0:
            self.zero = Fraction(0)
            self.one = Fraction(1)
        else:
            self.zero = 0
            self.one = 1

    # -- construction -------------------------------------------------
    def from_int(self, n: int):
        return Fraction(n) if self.p == 0 else n % self.p

    def from_fraction(self, num: int, den: int):
        if den == 0:
            raise DomainError("zero denominator")
        if self.p == 0:
            return Fraction(num, den)
        d = den % self.p
        if d == 0:
            raise DomainError(f"denominator {den} is 0 mod {self.p}")
        return (num % self.p) * pow(d, -1, self.p) % self.p

    # -- arithmetic ----------------------------------------------------
    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverting 0")
        return pow(a, -1, self.p) if self.p else Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return not a

    def elements(self):
        """All field elements; prime fields only."""
        if self.p == 0:
            raise DomainError("cannot enumerate the rationals")
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return repr(self.spec)


QQ = Field(FieldSpec("rationals", 0))


def GF(p: int) -> Field:
    return Field(FieldSpec("prime-field", p))
