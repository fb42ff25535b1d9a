"""Binary extension fields GF(2^m) in polynomial basis."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from gf2.poly import BitPolynomial, clmul, is_irreducible, pmod, smallest_irreducible, square
from ntheory.residue_arith import prime_factors
from utils.errors import (
    DegreeOutOfRange,
    DivisionByZero,
    MixedFields,
    NoSubfield,
    OrderUnavailable,
    ReducibleModulus,
)

logger = logging.getLogger("ExtensionField")

MAX_DEGREE = 128


@dataclass(frozen=True, slots=True)
class FieldSpec:
    m: int
    modulus: BitPolynomial

    def __post_init__(self):
        if self.modulus.degree != self.m:
            raise ReducibleModulus(f"modulus {self.modulus} does not have degree {self.m}")
        if not is_irreducible(self.modulus.value):
            raise ReducibleModulus(f"modulus {self.modulus} is reducible")

    @property
    def group_order(self) -> int:
        return (1 << self.m) - 1

    def element(self, value: int) -> "FieldElement":
        return FieldElement(pmod(value, self.modulus.value), self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def mul_values(self, a: int, b: int) -> int:
        return pmod(clmul(a, b), self.modulus.value)


@dataclass(frozen=True, slots=True)
class FieldElement:
    value: int
    spec: FieldSpec

    def _same_field(self, other: "FieldElement") -> None:
        if other.spec is not self.spec and other.spec != self.spec:
            raise MixedFields(f"GF(2^{self.spec.m}) element combined with GF(2^{other.spec.m}) element")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.value ^ other.value, self.spec)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.spec.mul_values(self.value, other.value), self.spec)

    def __pow__(self, exponent: int) -> "FieldElement":
        spec = self.spec
        if self.value == 0:
            if exponent < 0:
                raise DivisionByZero("zero has no inverse")
            return spec.one if exponent == 0 else self
        exponent %= spec.group_order
        result, base = 1, self.value
        while exponent:
            if exponent & 1:
                result = spec.mul_values(result, base)
            exponent >>= 1
            if exponent:
                base = pmod(square(base), spec.modulus.value)
        return FieldElement(result, spec)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero("zero has no inverse")
        return self ** -1

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __bool__(self) -> bool:
        return self.value != 0

    def is_one(self) -> bool:
        return self.value == 1

    def square(self) -> "FieldElement":
        return FieldElement(pmod(square(self.value), self.spec.modulus.value), self.spec)

    def frobenius(self, k: int = 1) -> "FieldElement":
        """x -> x^(2^k)."""
        result = self
        for _ in range(k % self.spec.m):
            result = result.square()
        return result

    def in_subfield(self, k: int) -> bool:
        """True iff the element lies in GF(2^k)."""
        return self.frobenius(k) == self

    def __repr__(self) -> str:
        return f"FieldElement(0x{self.value:x}, m={self.spec.m})"

    def to_hex(self) -> str:
        width = max(1, (self.spec.m + 3) // 4)
        return f"{self.value:0{width}x}"


@lru_cache(maxsize=None)
def build_field(m: int) -> FieldSpec:
    if not 1 <= m <= MAX_DEGREE:
        raise DegreeOutOfRange(f"extension degree must lie in [1, {MAX_DEGREE}], got {m}")
    modulus = BitPolynomial(smallest_irreducible(m))
    logger.debug(f"GF(2^{m}) with modulus {modulus}")
    return FieldSpec(m=m, modulus=modulus)


def primitive_nth_root(spec: FieldSpec, n: int) -> FieldElement:
    """Element of multiplicative order exactly n, scanning candidates in integer order."""
    if n < 1 or spec.group_order % n:
        raise OrderUnavailable(f"{n} does not divide 2^{spec.m} - 1")
    if n == 1:
        return spec.one

    cofactor = spec.group_order // n
    primes = list(prime_factors(n))
    for candidate in range(2, 1 << spec.m):
        x = spec.element(candidate) ** cofactor
        if x.is_one():
            continue
        if all(not (x ** (n // r)).is_one() for r in primes):
            return x
    raise OrderUnavailable(f"no element of order {n} in GF(2^{spec.m})")


def subfield_mu(spec: FieldSpec) -> FieldElement:
    """The root of z² + z + 1 with the smaller integer representation."""
    if spec.m % 2:
        raise NoSubfield(f"GF(4) is not a subfield of GF(2^{spec.m})")
    mu = primitive_nth_root(spec, 3)
    return min(mu, mu * mu, key=lambda e: e.value)


def subfield_eta(spec: FieldSpec, mu: Optional[FieldElement] = None) -> FieldElement:
    """The smallest root of z² + z = μ, an element of GF(16)."""
    if spec.m % 4:
        raise NoSubfield(f"GF(16) is not a subfield of GF(2^{spec.m})")
    if mu is None:
        mu = subfield_mu(spec)
    zeta = primitive_nth_root(spec, 15)
    roots = []
    power = spec.one
    for _ in range(15):
        if power * power + power == mu:
            roots.append(power)
        power = power * zeta
    if not roots:
        raise NoSubfield(f"z² + z = {mu!r} has no root")
    return min(roots, key=lambda e: e.value)
