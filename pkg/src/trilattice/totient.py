"""Trial-division factorization and the generalized totient family.

``generalized_totient(k, m)`` is ``k * prod(1 - eps(p, m) / p)`` over the
distinct primes ``p`` of ``k``, where ``eps(p, m)`` is 1 when ``p | m``
and 2 otherwise. ``m = 0`` gives Euler's phi, ``m = 1`` the Schemmel
totient, which counts residues ``a`` mod ``k`` with both ``a`` and
``a - 1`` coprime to ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        return prod(p**c for p, c in self.factors)

    def to_dict(self) -> dict:
        return {"n": self.n, "factors": [[p, c] for p, c in self.factors]}


def factorize(n: int) -> Factorization:
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    factors = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            c = 0
            while rest % p == 0:
                rest //= p
                c += 1
            factors.append((p, c))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def epsilon(p: int, m: int) -> int:
    return 1 if m % p == 0 else 2


def generalized_totient(k: int, m: int) -> int:
    if k < 1:
        raise DomainError(f"totient needs k >= 1, got {k}")
    if m < 0:
        raise DomainError(f"totient needs m >= 0, got {m}")
    result = 1
    for p, c in factorize(k).factors:
        result *= (p - epsilon(p, m)) * p ** (c - 1)
    return result


def schemmel(k: int) -> int:
    return generalized_totient(k, 1)


def schemmel_bruteforce(n: int) -> int:
    if n < 1:
        raise DomainError(f"schemmel_bruteforce needs n >= 1, got {n}")
    return sum(1 for a in range(n) if gcd(a, n) == 1 and gcd(a - 1, n) == 1)
