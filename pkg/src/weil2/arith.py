"""Exact integer and p-adic primitives.

Everything here is pure integer arithmetic: all square-root comparisons
elsewhere in the package are rewritten as squared inequalities so that no
decision ever goes through floating point.  Inputs are tiny (bounded by a
few multiples of the field size), so factorization is plain trial division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INFINITY = math.inf


class NotAPrimePower(ValueError):
    """Raised when an integer is not of the form p^m with p prime, m >= 1."""


class ZeroInput(ValueError):
    """Raised when an operation that needs a nonzero integer receives 0."""


@dataclass(frozen=True)
class PrimePower:
    """A field size q = p^m together with its prime decomposition."""

    p: int
    m: int
    q: int

    def __post_init__(self):
        if self.q != self.p**self.m or self.m < 1:
            raise NotAPrimePower(f"{self.q} != {self.p}^{self.m}")

    def q_is_square(self) -> bool:
        return self.m % 2 == 0

    def sqrt_q(self) -> int:
        """p^(m/2); only defined when q is a square."""
        if not self.q_is_square():
            raise ValueError(f"q={self.q} is not a square")
        return self.p ** (self.m // 2)


def parse_prime_power(q: int) -> PrimePower:
    """Factor q as p^m with p prime, or raise NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower(f"q={q} must be at least 2")
    n = q
    p = None
    for d in range(2, math.isqrt(q) + 1):
        if n % d == 0:
            p = d
            break
    if p is None:
        return PrimePower(q, 1, q)
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise NotAPrimePower(f"q={q} has at least two prime divisors")
    return PrimePower(p, m, q)


def valuation(n: int, p: int) -> int | float:
    """Largest e with p^e | n; INFINITY for n = 0."""
    if n == 0:
        return INFINITY
    n = abs(n)
    v = 0
    while n % p == 0:
        v += 1
        n //= p
    return v


def is_perfect_square(n: int) -> tuple[bool, int | None]:
    """(True, z) with z >= 0 and z*z == n, or (False, None)."""
    if n < 0:
        return False, None
    z = math.isqrt(n)
    if z * z == n:
        return True, z
    return False, None


def zp_is_square(p: int, n: int) -> bool:
    """Whether n is a square in the p-adic integers.

    Writing n = p^v * u with p not dividing u, this holds iff v is even and
    u is a quadratic residue mod p (mod 8 for p = 2).
    """
    if n == 0:
        raise ZeroInput("0 has no unit part")
    v = valuation(n, p)
    if v % 2 == 1:
        return False
    u = n // p**v
    if p == 2:
        return u % 8 == 1
    return pow(u % p, (p - 1) // 2, p) == 1


def is_squarefree(n: int) -> bool:
    """Whether no prime square divides |n|."""
    if n == 0:
        raise ZeroInput("0 is divisible by every square")
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1
    return True


def prime_divisors(n: int) -> set[int]:
    """Prime divisors of |n| (sign discarded); empty for |n| = 1."""
    if n == 0:
        raise ZeroInput("every prime divides 0")
    n = abs(n)
    out = set()
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out
