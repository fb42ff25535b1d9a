"""Binary sequences built from the generalized cyclotomic classes of Z_pq."""
import logging
from dataclasses import dataclass
from typing import Iterable

from models.cyclotomy_schema import CyclotomyContext
from ntheory.cyclotomy import class_of

logger = logging.getLogger("Sequence")


@dataclass(frozen=True, slots=True)
class BitSequence:
    """One period of a binary sequence; bit k of ``bits`` is s_k."""

    bits: int
    period: int

    def __post_init__(self):
        if self.period < 1:
            raise ValueError(f"period must be positive, got {self.period}")
        if self.bits < 0 or self.bits.bit_length() > self.period:
            raise ValueError(f"bit vector does not fit in period {self.period}")

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BitSequence":
        values = list(values)
        text = "".join("1" if v else "0" for v in reversed(values))
        return cls(int(text, 2) if text else 0, len(values))

    @classmethod
    def zeros(cls, period: int) -> "BitSequence":
        return cls(0, period)

    def __len__(self) -> int:
        return self.period

    def __getitem__(self, k: int) -> int:
        return (self.bits >> (k % self.period)) & 1

    def ones(self) -> int:
        return self.bits.bit_count()

    def extended(self, length: int) -> int:
        """Packed s_0 ... s_{length-1} of the periodic extension."""
        copies = -(-length // self.period)
        stream = 0
        for r in range(copies):
            stream |= self.bits << (r * self.period)
        return stream & ((1 << length) - 1)

    def to_ascii(self) -> str:
        return format(self.bits, "b").zfill(self.period)[::-1]

    def to_bytes(self) -> bytes:
        return self.bits.to_bytes((self.period + 7) // 8, "little")


def generate(ctx: CyclotomyContext) -> BitSequence:
    """s_k = 1 iff k lies in D_j ∪ P_j ∪ Q_j for some j in [d/2, d-1].

    Built by enumerating the classes themselves:
    D_j = {g^(j+dt) f^v}, P_j = p*D_j^(q), Q_j = q*D_j^(p).
    """
    p, q, g, d, e = ctx.p, ctx.q, ctx.g, ctx.d, ctx.e
    n = p * q
    marks = bytearray(b"0") * n
    one = ord("1")

    f_powers = [pow(ctx.f, v, n) for v in range(d)]
    step_n, step_p, step_q = pow(g, d, n), pow(g, d, p), pow(g, d, q)
    for j in range(d // 2, d):
        base = pow(g, j, n)
        for _ in range(e // d):
            for fv in f_powers:
                marks[base * fv % n] = one
            base = base * step_n % n

        w = pow(g, j, p)
        for _ in range((p - 1) // d):
            marks[q * w] = one
            w = w * step_p % p

        w = pow(g, j, q)
        for _ in range((q - 1) // d):
            marks[p * w] = one
            w = w * step_q % q

    seq = BitSequence(int(marks[::-1], 2), n)
    logger.debug(f"generated DH-GCS p={p} q={q} g={g}: {seq.ones()} ones")
    return seq


def generate_from_labels(ctx: CyclotomyContext) -> BitSequence:
    """Same sequence, decided element by element from class_of."""
    half = ctx.d // 2
    marks = bytearray(b"0") * ctx.n
    for k in range(1, ctx.n):
        if class_of(ctx, k).sequence_index >= half:
            marks[k] = ord("1")
    return BitSequence(int(marks[::-1], 2), ctx.n)


def balance(seq: BitSequence) -> tuple[int, int]:
    ones = seq.ones()
    return ones, seq.period - ones
