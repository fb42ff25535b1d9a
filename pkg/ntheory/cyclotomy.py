"""Generalized cyclotomy of Z_pq and classical cyclotomic numbers of Z_p."""
import logging
from functools import lru_cache
from math import gcd, isqrt
from typing import Optional

from models.classification_schema import ResidueClass
from models.cyclotomy_schema import ClassKind, ClassLabel, CyclotomyContext, QuadraticForms
from ntheory.residue_arith import (
    common_primitive_root,
    crt_lift,
    discrete_log,
    is_primitive_root,
    is_probable_prime,
    power_residue_class,
)
from utils.errors import (
    BadModulus,
    DistinctnessViolated,
    FormulaMismatch,
    NotCommonPrimitiveRoot,
    NotPrime,
)

logger = logging.getLogger("Cyclotomy")


@lru_cache(maxsize=256)
def index_table(g: int, prime: int) -> tuple[int, ...]:
    """idx[g^k mod prime] = k for 0 <= k < prime-1; idx[0] = -1.

    g must generate Z_prime^*.
    """
    table = [-1] * prime
    value = 1
    g %= prime
    for k in range(prime - 1):
        table[value] = k
        value = value * g % prime
    return tuple(table)


def build_context(p: int, q: int, g_override: Optional[int] = None) -> CyclotomyContext:
    for value in (p, q):
        if value == 2 or not is_probable_prime(value):
            raise NotPrime(f"{value} is not an odd prime")
    if p == q:
        raise DistinctnessViolated(f"p and q must differ, both are {p}")

    if g_override is None:
        g = common_primitive_root(p, q)
    else:
        g = g_override
        if not (is_primitive_root(g, p) and is_primitive_root(g, q)):
            raise NotCommonPrimitiveRoot(f"{g} is not a primitive root of both {p} and {q}")

    d = gcd(p - 1, q - 1)
    ctx = CyclotomyContext(
        p=p,
        q=q,
        g=g,
        f=crt_lift(g % p, 1, p, q),
        d=d,
        e=(p - 1) * (q - 1) // d,
        ind_q_p=discrete_log(g, p, q),
        ind_p_q=discrete_log(g, q, p),
    )
    logger.debug(f"context p={p} q={q} g={g} f={ctx.f} d={d} e={ctx.e}")
    return ctx


def class_of(ctx: CyclotomyContext, k: int) -> ClassLabel:
    p, q, d = ctx.p, ctx.q, ctx.d
    k %= ctx.n
    if k == 0:
        return ClassLabel(kind=ClassKind.ZERO)
    if k % q == 0:
        # k = q*w lies in Q_i = q * D_i^(p) with i the index of w
        return ClassLabel(kind=ClassKind.Q, i=index_table(ctx.g, p)[k // q] % d)
    if k % p == 0:
        return ClassLabel(kind=ClassKind.P, j=index_table(ctx.g, q)[k // p] % d)
    return ClassLabel(
        kind=ClassKind.D,
        i=index_table(ctx.g, p)[k % p] % d,
        j=index_table(ctx.g, q)[k % q] % d,
    )


def residue_indices(ctx: CyclotomyContext, k: int) -> tuple[Optional[int], Optional[int]]:
    """(ind_p(k mod p) mod d, ind_q(k mod q) mod d), None where k vanishes."""
    kp, kq = k % ctx.p, k % ctx.q
    i = index_table(ctx.g, ctx.p)[kp] % ctx.d if kp else None
    j = index_table(ctx.g, ctx.q)[kq] % ctx.d if kq else None
    return i, j


def classical_cyclotomic_number(p: int, g: int, d: int, i: int, j: int) -> int:
    """(i, j)_d = |(D_i + 1) ∩ D_j| for the order-d classes of Z_p^* under g."""
    if d < 1 or (p - 1) % d:
        raise BadModulus(f"order {d} does not divide {p - 1}")
    table = index_table(g, p)
    step = pow(g, d, p)
    x = pow(g, i % (p - 1), p)
    j %= d
    count = 0
    for _ in range((p - 1) // d):
        y = x + 1
        if y != p and table[y] % d == j:
            count += 1
        x = x * step % p
    return count


def _square_root(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def quadratic_form_representations(p: int) -> QuadraticForms:
    if p % 8 != 1 or not is_probable_prime(p):
        raise BadModulus(f"{p} is not a prime ≡ 1 (mod 8)")

    x = y = None
    for odd in range(1, isqrt(p) + 1, 2):
        rest = p - odd * odd
        if rest % 4 == 0 and (root := _square_root(rest // 4)) is not None:
            x, y = odd, root
            break

    a = b = None
    for odd in range(1, isqrt(p) + 1, 2):
        rest = p - odd * odd
        if rest % 2 == 0 and (root := _square_root(rest // 2)) is not None:
            a, b = odd, root
            break

    if x is None or a is None:
        raise BadModulus(f"no representation found for {p}")
    if x % 4 == 3:
        x = -x
    if a % 4 == 3:
        a = -a
    return QuadraticForms(p=p, x=x, y=y, a=a, b=b)


def gauss_numbers_order4(p: int) -> tuple[int, int, int, int]:
    """((2,0)_4, (2,1)_4, (2,2)_4, (2,3)_4) from p = x² + 4y²."""
    x = quadratic_form_representations(p).x
    even, odd = p - 3 + 2 * x, p + 1 - 2 * x
    if even % 16 or odd % 16:
        raise FormulaMismatch(f"order-4 numbers are not integral for p={p}")
    return even // 16, odd // 16, even // 16, odd // 16


def gauss_order8_candidates(p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Both readings of ((4,0)_8, ..., (4,3)_8), for +y and for -y."""
    forms = quadratic_form_representations(p)
    quartic = power_residue_class(2, p).is_power_residue(4)
    sixteen_one = p % 16 == 1

    def row(x: int, y: int, a: int) -> tuple[int, ...]:
        if quartic and sixteen_one:
            values = (p - 7 - 2 * x + 8 * a, p + 1 + 2 * x - 4 * a, p + 1 - 2 * x, p + 1 + 2 * x - 4 * a)
        elif quartic:
            values = (p - 15 - 2 * x, p - 7 + 2 * x + 4 * a, p - 7 - 2 * x - 8 * a, p - 7 + 2 * x + 4 * a)
        elif sixteen_one:
            values = (
                p - 7 - 10 * x,
                p + 1 + 2 * x - 4 * a + 16 * y,
                p + 1 + 6 * x + 8 * a,
                p + 1 + 2 * x - 4 * a - 16 * y,
            )
        else:
            values = (
                p - 15 - 10 * x - 8 * a,
                p - 7 + 2 * x + 4 * a + 16 * y,
                p - 7 + 6 * x,
                p - 7 + 2 * x + 4 * a - 16 * y,
            )
        if any(v % 64 for v in values):
            raise FormulaMismatch(f"order-8 numbers are not integral for p={p}: {values}")
        return tuple(v // 64 for v in values)

    return row(forms.x, forms.y, forms.a), row(forms.x, -forms.y, forms.a)


@lru_cache(maxsize=1024)
def gauss_numbers_order8(p: int, g: int) -> tuple[int, ...]:
    """((4,0)_8, (4,1)_8, (4,2)_8, (4,3)_8) from the closed forms in x, y, a.

    The sign of y depends on g. It is fixed by the candidate whose (4,1)_8
    matches a direct count.
    """
    plus, minus = gauss_order8_candidates(p)
    if plus == minus:
        return plus
    counted = classical_cyclotomic_number(p, g, 8, 4, 1)
    for candidate in (plus, minus):
        if candidate[1] == counted:
            return candidate
    raise FormulaMismatch(f"neither sign of y matches (4,1)_8 = {counted} for p={p}, g={g}")


def is_octic_by_y(p: int) -> bool:
    """2 is an octic residue iff (p ≡ 1 mod 16, 8 | y) or (p ≡ 9 mod 16, y ≡ 4 mod 8)."""
    y = quadratic_form_representations(p).y
    return (p % 16 == 1 and y % 8 == 0) or (p % 16 == 9 and y % 8 == 4)


def is_octic_by_residue(p: int) -> bool:
    return power_residue_class(2, p) == ResidueClass.OCTIC
