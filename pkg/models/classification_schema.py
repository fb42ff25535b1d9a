from enum import IntEnum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ResidueClass(IntEnum):
    """Largest k in {2, 4, 8} for which c is a k-th power residue mod p.

    ZERO marks c ≡ 0 and NON_RESIDUE a quadratic non-residue. Comparing with
    ``>=`` answers "is c a k-th power residue" directly.
    """

    ZERO = 0
    NON_RESIDUE = 1
    QUADRATIC = 2
    QUARTIC = 4
    OCTIC = 8

    def is_power_residue(self, k: int) -> bool:
        return self >= k


class DeficitDecomposition(BaseModel):
    """Coefficients of pq - 1 - L = ε(p-1) + κ(q-1) + η(p-1)(q-1)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    epsilon: Fraction
    kappa: Fraction
    eta: Fraction

    def deficit(self, p: int, q: int) -> Fraction:
        return self.epsilon * (p - 1) + self.kappa * (q - 1) + self.eta * (p - 1) * (q - 1)


class PairClassification(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    res_2p: ResidueClass
    res_2q: ResidueClass
    res_pq: ResidueClass
    case_id: int = Field(..., ge=1, le=12)
    case_formula: str
    deficit: DeficitDecomposition

    @model_validator(mode="after")
    def _nonzero_classes(self):
        for value in (self.res_2p, self.res_2q, self.res_pq):
            if value == ResidueClass.ZERO:
                raise ValueError("residue classes of a valid pair are never ZERO")
        return self

    @property
    def triple(self) -> tuple[int, int, int]:
        return int(self.res_2p), int(self.res_2q), int(self.res_pq)
