"""Linear complexity of periodic binary sequences.

Two independent routes: L = N - deg gcd(x^N + 1, S(x)) and the
Berlekamp-Massey synthesis over two periods.
"""
import logging
from typing import Optional

from gf2.poly import BitPolynomial, degree, pdivmod, pgcd
from lincomp.sequence import BitSequence
from utils.errors import FormulaMismatch

logger = logging.getLogger("LinearComplexity")


def from_sequence(seq: BitSequence) -> BitPolynomial:
    """S(x) = s_0 + s_1 x + ... + s_{N-1} x^(N-1)."""
    return BitPolynomial(seq.bits)


def _gcd_with_period(seq: BitSequence) -> int:
    return pgcd((1 << seq.period) | 1, seq.bits)


def linear_complexity_gcd(seq: BitSequence) -> int:
    return seq.period - degree(_gcd_with_period(seq))


def minimal_polynomial(seq: BitSequence) -> BitPolynomial:
    """(x^N + 1) / gcd(x^N + 1, S(x))."""
    quotient, remainder = pdivmod((1 << seq.period) | 1, _gcd_with_period(seq))
    if remainder:
        raise FormulaMismatch("gcd does not divide x^N + 1")
    return BitPolynomial(quotient)


def berlekamp_massey(seq: BitSequence, length: Optional[int] = None) -> tuple[int, BitPolynomial]:
    """Shortest LFSR generating the first ``length`` terms (default two periods).

    Returns (L, C) with C(x) = 1 + c_1 x + ... + c_L x^L and
    s_i + c_1 s_{i-1} + ... + c_L s_{i-L} = 0 for L <= i < length.
    """
    if length is None:
        length = 2 * seq.period
    stream = format(seq.extended(length), "b").zfill(length)[::-1]

    # a period-N stream has L <= N, so C never needs more than N+1 taps
    mask = (1 << (seq.period + 1)) - 1
    connection, previous = 1, 1
    lfsr_length, gap = 0, 1
    window = 0  # bit i holds s_{n-i}
    for n, ch in enumerate(stream):
        window = ((window << 1) | (ch == "1")) & mask
        if not (connection & window).bit_count() & 1:
            gap += 1
        elif 2 * lfsr_length <= n:
            connection, previous = connection ^ (previous << gap), connection
            lfsr_length = n + 1 - lfsr_length
            gap = 1
        else:
            connection ^= previous << gap
            gap += 1

    logger.debug(f"Berlekamp-Massey over {length} terms: L={lfsr_length}")
    return lfsr_length, BitPolynomial(connection)


def satisfies_recurrence(connection: BitPolynomial, seq: BitSequence) -> bool:
    """Whether C(x) annihilates the periodic sequence."""
    taps = connection.degree
    if taps < 0:
        return False
    stream = format(seq.extended(taps + seq.period), "b").zfill(taps + seq.period)[::-1]
    mask = (1 << (taps + 1)) - 1
    window = 0
    for i, ch in enumerate(stream):
        window = ((window << 1) | (ch == "1")) & mask
        if i >= taps and (connection.value & window).bit_count() & 1:
            return False
    return True


def feedback_polynomial(seq: BitSequence) -> BitPolynomial:
    """Characteristic polynomial of the shortest LFSR, the reciprocal of its connection polynomial.

    The Berlekamp-Massey connection polynomial must be the reciprocal of the
    reversed gcd-based minimal polynomial.
    """
    _, connection = berlekamp_massey(seq)
    feedback = connection.reciprocal()
    if feedback != minimal_polynomial(seq).reciprocal():
        raise FormulaMismatch("Berlekamp-Massey connection polynomial disagrees with the minimal polynomial")
    return feedback
