"""Prime-field helpers."""

from __future__ import annotations

from math import gcd

MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged or raise ``ValueError``."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} exceeds the supported bound 2^31")
    return p


def inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes q with lo < q <= hi."""
    return [q for q in range(max(lo + 1, 2), hi + 1) if is_prime(q)]


def multiplicative_order(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ValueError("0 has no multiplicative order")
    k, y = 1, x
    while y != 1:
        y = y * x % p
        k += 1
    return k


def primitive_roots_of_unity(m: int, p: int) -> list[int]:
    """All primitive m-th roots of unity in F_p, ascending."""
    if m < 1:
        raise ValueError("root order must be positive")
    if (p - 1) % m:
        return []
    return [x for x in range(1, p) if multiplicative_order(x, p) == m]


def smallest_primitive_root_of_unity(m: int, p: int) -> int:
    roots = primitive_roots_of_unity(m, p)
    if not roots:
        raise ValueError(f"F_{p} has no primitive {m}-th root of unity ({m} does not divide {p - 1})")
    return roots[0]


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out
