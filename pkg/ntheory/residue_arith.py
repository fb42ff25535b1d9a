"""Modular arithmetic over Z_p and Z_pq.

Everything here is a pure function of its integer arguments.
"""
from math import gcd, isqrt

from models.classification_schema import ResidueClass
from utils.errors import (
    BadModulus,
    DistinctnessViolated,
    NonCoprime,
    NotInGroup,
    NotPrime,
)

# Miller-Rabin with the first twelve primes as bases is exact below 3.3e24.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for w in _WITNESSES:
        if n % w == 0:
            return n == w

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    factors: dict[int, int] = {}
    r = 2
    while r * r <= n:
        while n % r == 0:
            factors[r] = factors.get(r, 0) + 1
            n //= r
        r += 1 if r == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for r in range(2, isqrt(n) + 1):
        if sieve[r]:
            sieve[r * r :: r] = bytearray(len(range(r * r, n + 1, r)))
    return [k for k in range(n + 1) if sieve[k]]


def _euler_phi(n: int) -> int:
    phi = n
    for r in prime_factors(n):
        phi -= phi // r
    return phi


def mult_order(a: int, n: int) -> int:
    """Least k >= 1 with a^k ≡ 1 (mod n)."""
    if n < 1:
        raise BadModulus(f"modulus must be positive, got {n}")
    if gcd(a, n) != 1:
        raise NonCoprime(f"gcd({a}, {n}) != 1")
    if n == 1:
        return 1

    order = _euler_phi(n)
    for r in prime_factors(order):
        while order % r == 0 and pow(a, order // r, n) == 1:
            order //= r
    return order


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_probable_prime(p):
        raise NotPrime(f"{p} is not an odd prime")


def is_primitive_root(g: int, p: int) -> bool:
    g %= p
    if g == 0:
        return False
    return all(pow(g, (p - 1) // r, p) != 1 for r in prime_factors(p - 1))


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo the odd prime p."""
    _require_odd_prime(p)
    g = 2
    while not is_primitive_root(g, p):
        g += 1
    return g


def scan_common_primitive_root(p: int, q: int, start: int) -> int:
    """Smallest g >= start that generates both Z_p^* and Z_q^*."""
    _require_odd_prime(p)
    _require_odd_prime(q)
    if p == q:
        raise DistinctnessViolated(f"p and q must differ, both are {p}")
    # every residue class mod pq occurs in a window of length pq
    for g in range(start, start + p * q):
        if is_primitive_root(g, p) and is_primitive_root(g, q):
            return g
    raise NotInGroup(f"no common primitive root of {p} and {q} found from {start}")


def common_primitive_root(p: int, q: int) -> int:
    """Smallest g >= 2 that is a primitive root modulo both p and q."""
    return scan_common_primitive_root(p, q, 2)


def crt_lift(a: int, b: int, p: int, q: int) -> int:
    """The unique x in [0, pq) with x ≡ a (mod p) and x ≡ b (mod q)."""
    if gcd(p, q) != 1:
        raise NonCoprime(f"moduli {p} and {q} are not coprime")
    t = (b - a) * pow(p, -1, q) % q
    return (a + p * t) % (p * q)


def discrete_log(g: int, a: int, p: int) -> int:
    """x in [0, p-2] with g^x ≡ a (mod p), by baby-step giant-step."""
    g %= p
    a %= p
    if a == 0:
        raise NotInGroup(f"0 has no index modulo {p}")
    if g == 0:
        raise NotInGroup(f"0 does not generate Z_{p}^*")

    m = isqrt(p - 1) + 1
    baby: dict[int, int] = {}
    value = 1
    for j in range(m):
        baby.setdefault(value, j)
        value = value * g % p

    factor = pow(g, -m, p)
    gamma = a
    for i in range(m):
        j = baby.get(gamma)
        if j is not None:
            return (i * m + j) % (p - 1)
        gamma = gamma * factor % p
    raise NotInGroup(f"{a} is not a power of {g} modulo {p}")


def power_residue_class(c: int, p: int) -> ResidueClass:
    """Res(c, p) via Euler's criterion at exponents (p-1)/8, (p-1)/4, (p-1)/2."""
    if p % 8 != 1:
        raise BadModulus(f"power residue classes need p ≡ 1 (mod 8), got {p}")
    c %= p
    if c == 0:
        return ResidueClass.ZERO
    if pow(c, (p - 1) // 8, p) == 1:
        return ResidueClass.OCTIC
    if pow(c, (p - 1) // 4, p) == 1:
        return ResidueClass.QUARTIC
    if pow(c, (p - 1) // 2, p) == 1:
        return ResidueClass.QUADRATIC
    return ResidueClass.NON_RESIDUE
