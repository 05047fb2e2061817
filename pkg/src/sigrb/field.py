"""Arithmetic in Z/p for word-sized primes p.

Scalars are plain ``int`` residues in ``[0, p)``; the modulus lives in a
:class:`PrimeField` shared by every polynomial of a computation.
"""

from __future__ import annotations

from dataclasses import dataclass


class FieldError(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field with ``p`` elements."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")

    def __call__(self, value: int) -> int:
        return value % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("division by zero in prime field")
        # three-argument pow runs the extended Euclidean algorithm
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def signed(self, a: int) -> int:
        """Symmetric representative, used when printing coefficients."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a


def fadd(field: PrimeField, a: int, b: int) -> int:
    return field.add(a, b)


def fmul(field: PrimeField, a: int, b: int) -> int:
    return field.mul(a, b)


def finv(field: PrimeField, a: int) -> int:
    return field.inv(a)
