from enum import Enum
from math import gcd
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator


class CyclotomyContext(BaseModel):
    """Parameters of one order-d generalized cyclotomy of Z_pq.

    ``f`` is the CRT lift with f ≡ g (mod p) and f ≡ 1 (mod q). ``ind_q_p`` is
    the index of p to base g modulo q, and ``ind_p_q`` is the index of q modulo p.
    """

    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    g: int
    f: int
    d: int
    e: int
    ind_q_p: int
    ind_p_q: int

    @model_validator(mode="after")
    def _check_invariants(self):
        p, q = self.p, self.q
        if self.d != gcd(p - 1, q - 1) or self.d * self.e != (p - 1) * (q - 1):
            raise ValueError(f"inconsistent d={self.d}, e={self.e} for ({p}, {q})")
        if self.f % p != self.g % p or self.f % q != 1:
            raise ValueError(f"f={self.f} is not the CRT lift of (g mod p, 1)")
        return self

    @property
    def n(self) -> int:
        return self.p * self.q


class ClassKind(str, Enum):
    ZERO = "Zero"
    D = "D"
    P = "P"
    Q = "Q"


class ClassLabel(BaseModel):
    """Which piece of the partition Z_pq = {0} ∪ D ∪ P ∪ Q a residue falls in.

    D carries both indices (i on the p side, j on the q side), P carries j and
    Q carries i.
    """

    model_config = ConfigDict(frozen=True)

    kind: ClassKind
    i: Optional[int] = None
    j: Optional[int] = None

    @model_validator(mode="after")
    def _indices_match_kind(self):
        wanted = {
            ClassKind.ZERO: (False, False),
            ClassKind.D: (True, True),
            ClassKind.P: (False, True),
            ClassKind.Q: (True, False),
        }[self.kind]
        if (self.i is not None, self.j is not None) != wanted:
            raise ValueError(f"label {self.kind.value} has indices i={self.i}, j={self.j}")
        return self

    @property
    def sequence_index(self) -> Optional[int]:
        """Index deciding membership in D_j ∪ P_j ∪ Q_j; None for zero."""
        if self.kind is ClassKind.Q:
            return self.i
        return self.j

    def __str__(self) -> str:
        if self.kind is ClassKind.ZERO:
            return "Zero"
        if self.kind is ClassKind.D:
            return f"D({self.i},{self.j})"
        if self.kind is ClassKind.P:
            return f"P({self.j})"
        return f"Q({self.i})"


class QuadraticForms(BaseModel):
    """p = x² + 4y² = a² + 2b² with x ≡ a ≡ 1 (mod 4) and y, b ≥ 0."""

    model_config = ConfigDict(frozen=True)

    p: int
    x: int
    y: int
    a: int
    b: int

    @model_validator(mode="after")
    def _check_representations(self):
        if self.x * self.x + 4 * self.y * self.y != self.p:
            raise ValueError(f"x² + 4y² != {self.p}")
        if self.a * self.a + 2 * self.b * self.b != self.p:
            raise ValueError(f"a² + 2b² != {self.p}")
        if self.x % 4 != 1 or self.a % 4 != 1:
            raise ValueError("x and a must be ≡ 1 (mod 4)")
        return self
