"""Dense polynomial arithmetic over GF(2).

A polynomial b_n x^n + ... + b_1 x + b_0 is stored as the integer
b_n 2^n + ... + b_1 2 + b_0. Python's arbitrary-precision integers then
provide the packed word vector, and XOR/shift act on whole words at a time.
"""
from dataclasses import dataclass
from typing import Iterable

from utils.errors import BothZero, DivisionByZero


def degree(a: int) -> int:
    """Degree of a packed polynomial; -1 for zero."""
    return a.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less product."""
    if a.bit_count() < b.bit_count():
        a, b = b, a
    product = 0
    while b:
        low = b & -b
        product ^= a << (low.bit_length() - 1)
        b ^= low
    return product


def square(a: int) -> int:
    # squaring over GF(2) spreads the coefficients to even exponents
    if a == 0:
        return 0
    return int("0".join(format(a, "b")), 2)


def pmod(a: int, b: int) -> int:
    if b == 0:
        raise DivisionByZero("polynomial division by zero")
    db = b.bit_length()
    while True:
        shift = a.bit_length() - db
        if shift < 0:
            return a
        a ^= b << shift


def pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise DivisionByZero("polynomial division by zero")
    db = b.bit_length()
    quotient = 0
    while True:
        shift = a.bit_length() - db
        if shift < 0:
            return quotient, a
        quotient |= 1 << shift
        a ^= b << shift


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def is_irreducible(f: int) -> bool:
    """Ben-Or test, finished with the check x^(2^m) ≡ x (mod f)."""
    m = degree(f)
    if m < 1:
        return False
    x = pmod(2, f)
    h = x
    for k in range(1, m + 1):
        h = pmod(square(h), f)
        if k <= m // 2 and pgcd(f, h ^ x) != 1:
            return False
    return h == x


def smallest_irreducible(m: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree m >= 1."""
    start = 1 << m
    for candidate in range(start, start << 1):
        if m > 1 and not candidate & 1:
            continue
        if is_irreducible(candidate):
            return candidate
    raise ArithmeticError(f"no irreducible polynomial of degree {m}")


@dataclass(frozen=True, slots=True)
class BitPolynomial:
    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("coefficient vector cannot be negative")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "BitPolynomial":
        value = 0
        for e in exponents:
            value ^= 1 << e
        return cls(value)

    @classmethod
    def x_pow_plus_one(cls, n: int) -> "BitPolynomial":
        return cls((1 << n) | 1)

    @classmethod
    def from_hex(cls, text: str) -> "BitPolynomial":
        return cls(int.from_bytes(bytes.fromhex(text), "little"))

    @property
    def degree(self) -> int:
        return degree(self.value)

    def weight(self) -> int:
        return self.value.bit_count()

    def reciprocal(self) -> "BitPolynomial":
        """x^deg f(1/x)."""
        if self.value == 0:
            return self
        return BitPolynomial(int(format(self.value, "b")[::-1], 2))

    def to_hex(self) -> str:
        """Little-endian bytes, so the lowest coefficient comes first."""
        length = max(1, (self.value.bit_length() + 7) // 8)
        return self.value.to_bytes(length, "little").hex()

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other: "BitPolynomial") -> "BitPolynomial":
        return BitPolynomial(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "BitPolynomial") -> "BitPolynomial":
        return BitPolynomial(clmul(self.value, other.value))

    def __divmod__(self, other: "BitPolynomial") -> tuple["BitPolynomial", "BitPolynomial"]:
        quotient, remainder = pdivmod(self.value, other.value)
        return BitPolynomial(quotient), BitPolynomial(remainder)

    def __floordiv__(self, other: "BitPolynomial") -> "BitPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "BitPolynomial") -> "BitPolynomial":
        return BitPolynomial(pmod(self.value, other.value))

    def __str__(self) -> str:
        if self.value == 0:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            if (self.value >> k) & 1:
                terms.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
        return " + ".join(terms)


def gcd(a: BitPolynomial, b: BitPolynomial) -> BitPolynomial:
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    return BitPolynomial(pgcd(a.value, b.value))
