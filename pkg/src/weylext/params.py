"""Field parameters and small number-theory helpers."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def valuation(x: int, p: int) -> float:
    """p-adic valuation of an integer; ``inf`` for zero."""
    if x == 0:
        return float("inf")
    v = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        v += 1
    return v


def falling(x: int, n: int) -> int:
    """x (x - 1) ... (x - n + 1); n must be non-negative."""
    if n < 0:
        raise ValueError(f"falling factorial of negative length {n}")
    out = 1
    for k in range(n):
        out *= x - k
    return out


def rising(x: int, n: int) -> int:
    """x (x + 1) ... (x + n - 1); n must be non-negative."""
    if n < 0:
        raise ValueError(f"rising factorial of negative length {n}")
    out = 1
    for k in range(n):
        out *= x + k
    return out


@dataclass(frozen=True)
class FieldParams:
    """Characteristic ``p`` (0 or a prime) and quantum characteristic ``l``.

    ``l`` is the multiplicative order of q; ``l == p`` is the classical case
    q = 1.  In positive characteristic with ``l != p`` the order of q is
    prime to p.
    """

    p: int
    l: int

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise ValueError(f"p must be 0 or a prime, got {self.p}")
        if self.l < 2:
            raise ValueError(f"l must be at least 2, got {self.l}")
        if self.p and self.l != self.p and gcd(self.l, self.p) != 1:
            raise ValueError(f"l={self.l} is not a possible order of q in characteristic {self.p}")

    @property
    def classical(self) -> bool:
        return self.p > 0 and self.l == self.p

    def moduli(self, limit: int) -> list[int]:
        """The moduli ``l * p**k`` (just ``l`` when p = 0) up to ``limit``."""
        out = [self.l]
        if self.p:
            while out[-1] * self.p <= limit:
                out.append(out[-1] * self.p)
        return out
