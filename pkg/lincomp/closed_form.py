"""Closed-form linear complexity of order-8 DH-GCS.

Two transcriptions of the same result are kept side by side: the compact
one (pq - 1 minus ε(p-1), κ(q-1) and η(p-1)(q-1)) and the explicit list of
twelve residue-class cases. lc_closed_form evaluates both and refuses to
answer if they disagree.
"""
import logging
from fractions import Fraction
from math import gcd
from typing import Callable

from models.classification_schema import DeficitDecomposition, PairClassification, ResidueClass
from ntheory.residue_arith import is_probable_prime, power_residue_class
from utils.errors import DistinctnessViolated, FormulaMismatch, NotPrime, WrongOrder

logger = logging.getLogger("ClosedForm")

HALF, QUARTER, NOTHING = Fraction(1, 2), Fraction(1, 4), Fraction(0)

CASE_FORMULAS = {
    1: "pq-1",
    2: "pq-1",
    3: "pq-1",
    4: "pq-1-(p-1)/2",
    5: "pq-1-(q-1)/2",
    6: "pq-1-(q-1)/2",
    7: "pq-1-(p-1)(q-1)/2",
    8: "pq-1-(p-1)(q-1)/2-(p-1)/2",
    9: "pq-1-(p-1)(q-1)/2-(p-1)/2",
    10: "pq-1-(p-1)(q-1)/2-(p-1)/2-(q-1)/2",
    11: "pq-1-(p-1)(q-1)/4",
    12: "pq-1-(p-1)(q-1)/4-(p-1)/2",
}

_CASE_LC: dict[int, Callable[[int, int], int]] = {
    1: lambda p, q: p * q - 1,
    2: lambda p, q: p * q - 1,
    3: lambda p, q: p * q - 1,
    4: lambda p, q: p * q - 1 - (p - 1) // 2,
    5: lambda p, q: p * q - 1 - (q - 1) // 2,
    6: lambda p, q: p * q - 1 - (q - 1) // 2,
    7: lambda p, q: p * q - 1 - (p - 1) * (q - 1) // 2,
    8: lambda p, q: p * q - 1 - (p - 1) * (q - 1) // 2 - (p - 1) // 2,
    9: lambda p, q: p * q - 1 - (p - 1) * (q - 1) // 2 - (p - 1) // 2,
    10: lambda p, q: p * q - 1 - (p - 1) * (q - 1) // 2 - (p - 1) // 2 - (q - 1) // 2,
    11: lambda p, q: p * q - 1 - (p - 1) * (q - 1) // 4,
    12: lambda p, q: p * q - 1 - (p - 1) * (q - 1) // 4 - (p - 1) // 2,
}


def _check_pair(p: int, q: int) -> None:
    for value in (p, q):
        if value == 2 or not is_probable_prime(value):
            raise NotPrime(f"{value} is not an odd prime")
    if p == q:
        raise DistinctnessViolated(f"p and q must differ, both are {p}")
    if gcd(p - 1, q - 1) != 8:
        raise WrongOrder(f"closed form needs gcd(p-1, q-1) = 8, got {gcd(p - 1, q - 1)} for ({p}, {q})")


def _residue_triple(p: int, q: int) -> tuple[ResidueClass, ResidueClass, ResidueClass]:
    return power_residue_class(2, p), power_residue_class(2, q), power_residue_class(p % q, q)


def _case_id(res_2p: ResidueClass, res_2q: ResidueClass, res_pq: ResidueClass) -> int:
    p8, p4 = res_2p.is_power_residue(8), res_2p.is_power_residue(4)
    q8, q4 = res_2q.is_power_residue(8), res_2q.is_power_residue(4)
    r4, r2 = res_pq.is_power_residue(4), res_pq.is_power_residue(2)
    p_quartic_only = p4 and not p8

    branches = {
        1: not p4 and not q8,
        2: p_quartic_only and q4 and not q8,
        3: p_quartic_only and not q4 and r4,
        4: p8 and not q4 and r2 and not r4,
        5: not p4 and q8,
        6: p_quartic_only and q8,
        7: p_quartic_only and not q4 and r2 and not r4,
        8: p8 and q4 and not q8,
        9: p8 and not q4 and r4,
        10: p8 and q8,
        11: p_quartic_only and not q4 and not r2,
        12: p8 and not q4 and not r2,
    }
    hits = [case for case, hit in branches.items() if hit]
    if len(hits) != 1:
        raise FormulaMismatch(f"residue triple {(int(res_2p), int(res_2q), int(res_pq))} matches cases {hits}")
    return hits[0]


def _deficit(res_2p: ResidueClass, res_2q: ResidueClass, res_pq: ResidueClass) -> DeficitDecomposition:
    p8, p4 = res_2p.is_power_residue(8), res_2p.is_power_residue(4)
    q8, q4 = res_2q.is_power_residue(8), res_2q.is_power_residue(4)
    r4, r2 = res_pq.is_power_residue(4), res_pq.is_power_residue(2)

    if (p8 and q4) or (p8 and not q4 and r4) or (p4 and not p8 and not q4 and r2 and not r4):
        eta = HALF
    elif p4 and not q4 and not r2:
        eta = QUARTER
    else:
        eta = NOTHING
    return DeficitDecomposition(
        epsilon=HALF if p8 else NOTHING,
        kappa=HALF if q8 else NOTHING,
        eta=eta,
    )


def deficit_coefficients(p: int, q: int) -> DeficitDecomposition:
    _check_pair(p, q)
    return _deficit(*_residue_triple(p, q))


def classify(p: int, q: int) -> PairClassification:
    _check_pair(p, q)
    res_2p, res_2q, res_pq = _residue_triple(p, q)
    case_id = _case_id(res_2p, res_2q, res_pq)
    return PairClassification(
        p=p,
        q=q,
        res_2p=res_2p,
        res_2q=res_2q,
        res_pq=res_pq,
        case_id=case_id,
        case_formula=CASE_FORMULAS[case_id],
        deficit=_deficit(res_2p, res_2q, res_pq),
    )


def lc_theorem_main(p: int, q: int) -> int:
    value = p * q - 1 - deficit_coefficients(p, q).deficit(p, q)
    if value.denominator != 1:
        raise FormulaMismatch(f"non-integral linear complexity {value} for ({p}, {q})")
    return int(value)


def lc_twelve_cases(p: int, q: int) -> int:
    _check_pair(p, q)
    return _CASE_LC[_case_id(*_residue_triple(p, q))](p, q)


def lc_closed_form(p: int, q: int, check: bool = True) -> int:
    value = lc_twelve_cases(p, q)
    if check:
        compact = lc_theorem_main(p, q)
        if compact != value:
            raise FormulaMismatch(f"case table gives {value}, compact form gives {compact} for ({p}, {q})")
    return value


def yan_bound_check(p: int, q: int) -> bool:
    """L >= (pq - 1)/2."""
    return 2 * lc_closed_form(p, q) >= p * q - 1


def expected_zero_fraction(classification: PairClassification) -> Fraction:
    """Share of zeros among the 64 entries s_{i,j}, 0 <= i, j < 8."""
    res_2p, res_2q, res_pq = classification.res_2p, classification.res_2q, classification.res_pq
    if not res_2p.is_power_residue(4):
        return NOTHING
    octic = res_2p.is_power_residue(8)
    if res_2q.is_power_residue(4) or res_pq.is_power_residue(4):
        return HALF if octic else NOTHING
    if res_pq.is_power_residue(2):
        return NOTHING if octic else HALF
    return QUARTER
