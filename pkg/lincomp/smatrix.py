"""Linear complexity through the values S(α^k) in an extension of GF(2).

For a primitive pq-th root α, β = α^q and γ = α^p, the sequence polynomial
evaluated at α^k depends only on the class of k. The (d+1)×(d+1) matrix of
those values (8×8 block for D, column 8 for Q, row 8 for P, corner for 0)
gives L by counting zeros.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from gf2.field import FieldElement, FieldSpec, subfield_eta, subfield_mu
from gf2.poly import BitPolynomial, pdivmod
from models.classification_schema import ResidueClass
from models.cyclotomy_schema import CyclotomyContext
from ntheory.cyclotomy import classical_cyclotomic_number, is_octic_by_residue, is_octic_by_y, residue_indices
from ntheory.residue_arith import power_residue_class
from utils.errors import FormulaMismatch, MixedFields, WrongOrder

logger = logging.getLogger("SMatrix")


def _require_root(element: FieldElement, n: int, factors: Sequence[int], name: str) -> None:
    if not (element ** n).is_one() or any((element ** (n // r)).is_one() for r in factors):
        raise WrongOrder(f"{name} does not have multiplicative order {n}")


class GaussPeriods:
    """Sums of β^x over the order-k cyclotomic classes of Z_prime^*."""

    def __init__(self, root: FieldElement, prime: int, g: int):
        _require_root(root, prime, (prime,), "root")
        self.spec = root.spec
        self.prime = prime
        self.g = g % prime
        self.powers = [1] * prime
        for x in range(1, prime):
            self.powers[x] = self.spec.mul_values(self.powers[x - 1], root.value)

    def period(self, order: int, i: int) -> FieldElement:
        """Σ_t β^(g^(i + order·t))."""
        p = self.prime
        if order < 1 or (p - 1) % order:
            raise WrongOrder(f"order {order} does not divide {p - 1}")
        x = pow(self.g, i % (p - 1), p)
        step = pow(self.g, order, p)
        total = 0
        for _ in range((p - 1) // order):
            total ^= self.powers[x]
            x = x * step % p
        return FieldElement(total, self.spec)


def _periods(ctx: CyclotomyContext, spec: FieldSpec, root: FieldElement, prime: int) -> GaussPeriods:
    if root.spec != spec:
        raise MixedFields("root does not belong to the requested field")
    return GaussPeriods(root, prime, ctx.g)


def eval_Sd(ctx: CyclotomyContext, spec: FieldSpec, beta: FieldElement, i: int, order: Optional[int] = None) -> FieldElement:
    return _periods(ctx, spec, beta, ctx.p).period(ctx.d if order is None else order, i)


def eval_Td(ctx: CyclotomyContext, spec: FieldSpec, gamma: FieldElement, j: int, order: Optional[int] = None) -> FieldElement:
    return _periods(ctx, spec, gamma, ctx.q).period(ctx.d if order is None else order, j)


@dataclass(frozen=True)
class CaseVector:
    values: tuple[FieldElement, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> FieldElement:
        return self.values[i]

    def __iter__(self) -> Iterator[FieldElement]:
        return iter(self.values)

    def __add__(self, other: "CaseVector") -> "CaseVector":
        return CaseVector(tuple(a + b for a, b in zip(self.values, other.values)))

    def rotate(self, u: int) -> "CaseVector":
        """σ_u: the i-th entry becomes a_{i+u}."""
        u %= len(self.values)
        return CaseVector(self.values[u:] + self.values[:u])

    def conjugate(self, k: int) -> "CaseVector":
        return CaseVector(tuple(v.frobenius(k) for v in self.values))

    def in_orbit(self, other: "CaseVector") -> bool:
        """Equal to other up to a rotation and a GF(16) Frobenius power."""
        for k in range(4):
            conjugated = other.conjugate(k)
            for u in range(len(self.values)):
                if conjugated.rotate(u) == self:
                    return True
        return False


def _half_sum(values: Sequence[FieldElement], start: int) -> int:
    total = 0
    for t in range(4, 8):
        total ^= values[(start + t) % 8].value
    return total


def _order8_periods(ctx: CyclotomyContext, spec: FieldSpec, root: FieldElement, prime: int) -> list[FieldElement]:
    if ctx.d != 8:
        raise WrongOrder(f"order-8 vectors need gcd(p-1, q-1) = 8, got {ctx.d}")
    periods = _periods(ctx, spec, root, prime)
    return [periods.period(8, k) for k in range(8)]


def vector_A8(ctx: CyclotomyContext, spec: FieldSpec, beta: FieldElement) -> CaseVector:
    """(Σ_{t=4..7} S_8(β^(g^(i+t))))_{i=0..7}."""
    periods = _order8_periods(ctx, spec, beta, ctx.p)
    return CaseVector(tuple(FieldElement(_half_sum(periods, i), spec) for i in range(8)))


def vector_B8(ctx: CyclotomyContext, spec: FieldSpec, gamma: FieldElement) -> CaseVector:
    periods = _order8_periods(ctx, spec, gamma, ctx.q)
    return CaseVector(tuple(FieldElement(_half_sum(periods, j), spec) for j in range(8)))


def vector_S4(ctx: CyclotomyContext, spec: FieldSpec, beta: FieldElement) -> CaseVector:
    periods = _periods(ctx, spec, beta, ctx.p)
    return CaseVector(tuple(periods.period(4, i) for i in range(4)))


@dataclass(frozen=True)
class SMatrix:
    """Rows 0..7 follow the p-side index, columns 0..7 the q-side index."""

    entries: tuple[tuple[FieldElement, ...], ...]
    ctx: CyclotomyContext
    spec: FieldSpec
    alpha: FieldElement

    def entry(self, i: int, j: int) -> FieldElement:
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return self.ctx.d

    def zero_counts(self) -> tuple[int, int, int, bool]:
        """(zeros in the d×d block, zeros in column d, zeros in row d, corner is zero)."""
        d = self.size
        block = sum(1 for i in range(d) for j in range(d) if not self.entries[i][j])
        column = sum(1 for i in range(d) if not self.entries[i][d])
        row = sum(1 for j in range(d) if not self.entries[d][j])
        return block, column, row, not self.entries[d][d]

    def value_at(self, k: int) -> FieldElement:
        """S(α^k)."""
        i, j = residue_indices(self.ctx, k)
        d = self.size
        return self.entries[d if i is None else i][d if j is None else j]

    def zero_set(self) -> list[int]:
        return [k for k in range(self.ctx.n) if not self.value_at(k)]

    def row(self) -> CaseVector:
        return CaseVector(self.entries[self.size][: self.size])

    def bb_vector(self) -> CaseVector:
        """(s_{8,j} + s_{8,j - ind_q p})_j."""
        row = self.row()
        return row + row.rotate(-self.ctx.ind_q_p)

    def render(self) -> list[str]:
        return [" ".join(v.to_hex() for v in r) for r in self.entries]


def build_smatrix(ctx: CyclotomyContext, spec: FieldSpec, alpha: FieldElement) -> SMatrix:
    p, q = ctx.p, ctx.q
    if ctx.d != 8:
        raise WrongOrder(f"the S-matrix route needs gcd(p-1, q-1) = 8, got {ctx.d}")
    if alpha.spec != spec:
        raise MixedFields("alpha does not belong to the requested field")
    _require_root(alpha, p * q, (p, q), "alpha")

    S = _order8_periods(ctx, spec, alpha ** q, p)
    T = _order8_periods(ctx, spec, alpha ** p, q)
    shift = ctx.ind_q_p

    entries = []
    for i in range(8):
        a = _half_sum(S, i)
        row = [FieldElement(_half_sum(T, j - shift) ^ _half_sum(T, j) ^ a, spec) for j in range(8)]
        row.append(FieldElement(a, spec))
        entries.append(tuple(row))

    constant = ((p - 1) // 2) & 1
    last = [FieldElement(_half_sum(T, j) ^ constant, spec) for j in range(8)]
    last.append(FieldElement(((p - 1) // 2 + (q - 1) // 2) & 1, spec))
    entries.append(tuple(last))

    logger.debug(f"S-matrix for p={p} q={q} g={ctx.g} in GF(2^{spec.m})")
    return SMatrix(entries=tuple(entries), ctx=ctx, spec=spec, alpha=alpha)


def lc_from_smatrix(sm: SMatrix) -> int:
    ctx = sm.ctx
    p, q, d = ctx.p, ctx.q, ctx.d
    block, column, row, _ = sm.zero_counts()
    return (
        p * q
        - (ctx.e // d) * block
        - ((p - 1) // d) * column
        - ((q - 1) // d) * row
        - (1 if (p - q) % 4 == 0 else 0)
    )


def minimal_polynomial_from_smatrix(sm: SMatrix) -> BitPolynomial:
    """(x^pq + 1) / Π (x + α^k) over the k with S(α^k) = 0."""
    spec = sm.spec
    coefficients = [1]
    for k in sm.zero_set():
        root = (sm.alpha ** k).value
        shifted = [0] + coefficients
        for i, c in enumerate(coefficients):
            shifted[i] ^= spec.mul_values(root, c)
        coefficients = shifted

    if any(c > 1 for c in coefficients):
        raise FormulaMismatch("zero polynomial has coefficients outside GF(2)")
    zeros = int("".join(str(c) for c in reversed(coefficients)), 2)
    quotient, remainder = pdivmod((1 << sm.ctx.n) | 1, zeros)
    if remainder:
        raise FormulaMismatch("zero polynomial does not divide x^pq + 1")
    return BitPolynomial(quotient)


def verify_lemma_Sd(ctx: CyclotomyContext, spec: FieldSpec, beta: FieldElement, d: int) -> bool:
    """Check S_d(β^(g^i)) + S_d(β^(g^(i+d/2))) = S_{d/2}(β^(g^i)) and the product rule."""
    p, g = ctx.p, ctx.g
    if d < 2 or d % 2 or (p - 1) % d:
        raise WrongOrder(f"order {d} must be even and divide {p - 1}")
    periods = _periods(ctx, spec, beta, p)
    half = d // 2
    constant = ((p - 1) // d) & 1

    for i in range(half):
        first, second = periods.period(d, i), periods.period(d, i + half)
        if first + second != periods.period(half, i):
            logger.info(f"sum rule fails at p={p}, d={d}, i={i}")
            return False
        expected = constant
        for j in range(half):
            if classical_cyclotomic_number(p, g, d, half, j - i) & 1:
                expected ^= periods.period(half, j).value
        if (first * second).value != expected:
            logger.info(f"product rule fails at p={p}, d={d}, i={i}")
            return False
    return True


def verify_corollary_Ad(ctx: CyclotomyContext, spec: FieldSpec, beta: FieldElement) -> bool:
    """c_{i+1} + c_i = S_4(β^(g^i)) for i < 7, c_0 = Σ_{t=4..7} S_8(β^(g^t))."""
    a8 = vector_A8(ctx, spec, beta)
    periods = _periods(ctx, spec, beta, ctx.p)
    first = FieldElement(0, spec)
    for t in range(4, 8):
        first = first + periods.period(8, t)
    if a8[0] != first:
        return False
    return all(a8[i + 1] + a8[i] == periods.period(4, i) for i in range(7))


def octic_criterion(p: int) -> tuple[bool, bool]:
    """(Res(2, p) = 8, the quadratic-form test on y)."""
    return is_octic_by_residue(p), is_octic_by_y(p)


def field_octic_criterion(ctx: CyclotomyContext, spec: FieldSpec, beta: FieldElement) -> bool:
    """All s_{i,8} lie in GF(2)."""
    return all(v.value in (0, 1) for v in vector_A8(ctx, spec, beta))


# Symbolic case vectors: an int with bit k set stands for η^k, so μ = η² + η.
ETA, ETA_1, ETA2, ETA2_1 = 0b0010, 0b0011, 0b0100, 0b0101
MU, MU_1 = 0b0110, 0b0111

_S4_CASES = {
    (1, True): [(1, 0, 0, 0)],
    (9, True): [(0, 1, 1, 1)],
    (1, False): [(MU, 1, MU_1, 1)],
    (9, False): [(MU, 0, MU_1, 0)],
}

_A8_CASES = {
    (1, ResidueClass.OCTIC): [(0, 0, 0, 0, 1, 1, 1, 1)],
    (9, ResidueClass.OCTIC): [(0, 1, 0, 1, 1, 0, 1, 0)],
    (1, ResidueClass.QUARTIC): [(MU, MU, MU, MU, MU_1, MU_1, MU_1, MU_1)],
    (9, ResidueClass.QUARTIC): [(MU, MU_1, MU, MU_1, MU_1, MU, MU_1, MU)],
    (1, ResidueClass.QUADRATIC): [
        (ETA, ETA2, ETA2_1, ETA, ETA_1, ETA2_1, ETA2, ETA_1),
        (ETA2, ETA, ETA_1, ETA2, ETA2_1, ETA_1, ETA, ETA2_1),
    ],
    (9, ResidueClass.QUADRATIC): [
        (ETA, ETA, ETA2, ETA2, ETA_1, ETA_1, ETA2_1, ETA2_1),
        (ETA2, ETA2, ETA, ETA, ETA2_1, ETA2_1, ETA_1, ETA_1),
    ],
}


def _realize(symbols: Sequence[int], spec: FieldSpec) -> CaseVector:
    if all(s < 2 for s in symbols):
        return CaseVector(tuple(FieldElement(s, spec) for s in symbols))
    mu = subfield_mu(spec)
    if set(symbols) <= {0, 1, MU, MU_1}:
        lookup = {0: spec.zero, 1: spec.one, MU: mu, MU_1: mu + spec.one}
        return CaseVector(tuple(lookup[s] for s in symbols))

    eta = subfield_eta(spec, mu)
    basis = [spec.one, eta, eta * eta, eta * eta * eta]
    values = []
    for s in symbols:
        total = spec.zero
        for k in range(4):
            if (s >> k) & 1:
                total = total + basis[k]
        values.append(total)
    return CaseVector(tuple(values))


def predicted_S4(p: int, spec: FieldSpec) -> list[CaseVector]:
    quartic = power_residue_class(2, p).is_power_residue(4)
    return [_realize(v, spec) for v in _S4_CASES[(p % 16, quartic)]]


def predicted_A8(p: int, spec: FieldSpec) -> list[CaseVector]:
    """Expected A8 (or B8, with q in place of p) up to rotation and conjugation."""
    res = power_residue_class(2, p)
    return [_realize(v, spec) for v in _A8_CASES[(p % 16, res)]]


predicted_B8 = predicted_A8


def predicted_BB(q: int, ind_q_p: int, spec: FieldSpec) -> CaseVector:
    """Expected B8 + σ_{-ind_q p} B8."""
    quartic = power_residue_class(2, q).is_power_residue(4)
    r = ind_q_p % 8
    if r == 0:
        symbols = (0,) * 8
    elif r == 4:
        symbols = (1,) * 8
    elif r in (2, 6):
        symbols = (1, 1, 0, 0) * 2 if quartic else (MU, MU, MU_1, MU_1) * 2
    elif (r in (1, 7)) == (q % 16 == 1):
        symbols = (1, 0, 0, 0) * 2 if quartic else (MU, 1, MU_1, 1) * 2
    else:
        symbols = (1, 1, 1, 0) * 2 if quartic else (MU, 0, MU_1, 0) * 2
    return _realize(symbols, spec)


def matches_prediction(actual: CaseVector, candidates: Sequence[CaseVector]) -> bool:
    return any(actual.in_orbit(c) for c in candidates)
