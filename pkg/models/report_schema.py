from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class OutputFormat(str, Enum):
    CSV = "csv"
    MARKDOWN = "markdown"
    JSON = "json"


class MethodName(str, Enum):
    GCD = "gcd"
    BM = "bm"
    SMATRIX = "smatrix"
    CLOSED = "closed"


class TableRow(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    p: int
    q: int
    l_pq: int = Field(..., alias="L_pq")
    l_qp: int = Field(..., alias="L_qp")


class PairReport(BaseModel):
    """Outcome of checking one pair in both argument orders."""

    p: int
    q: int
    g: int
    forward: dict[str, Optional[int]] = Field(default_factory=dict)
    backward: dict[str, Optional[int]] = Field(default_factory=dict)
    skipped: list[str] = Field(default_factory=list)
    passed: bool = False
    detail: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"
