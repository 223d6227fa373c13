"""
Primality, Fermat primes and the ruler-and-compass polygon classes.

A regular n-gon is constructible exactly when n is a Gauss-Wantzel number:
a power of two times distinct Fermat primes.  The Euclidean numbers are the
subset whose odd part is one of 1, 3, 5, 15.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Tuple

from kepler_consonance.interval import MAX_INT, DomainError

__all__ = [
    "Factorization",
    "PolygonClass",
    "is_prime",
    "is_fermat_prime",
    "factorize",
    "is_gauss_wantzel",
    "is_euclidean_number",
    "totient",
    "classify_polygon",
    "is_power_of_two",
]

# Miller-Rabin with these bases is exact for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3317044064679887385961981


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def is_prime(x: int) -> bool:
    """Deterministic primality test, exact over the whole 64-bit range."""
    if x < 2:
        return False
    for p in _MR_BASES:
        if x % p == 0:
            return x == p
    if x >= _MR_LIMIT:
        raise OverflowError(f"{x} exceeds the range of the deterministic primality test")
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        y = pow(a, d, x)
        if y == 1 or y == x - 1:
            continue
        for _ in range(s - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def is_fermat_prime(x: int) -> bool:
    """True iff ``x == 2**(2**t) + 1`` for some ``t >= 0`` and ``x`` is prime."""
    if x < 3 or not is_power_of_two(x - 1):
        return False
    exponent = (x - 1).bit_length() - 1
    return is_power_of_two(exponent) and is_prime(x)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``(prime, exponent)`` pairs, primes ascending."""

    factors: Tuple[Tuple[int, int], ...]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    @property
    def value(self) -> int:
        v = 1
        for p, e in self.factors:
            v *= p**e
        return v


def factorize(x: int) -> Factorization:
    """Trial division up to sqrt(x)."""
    if x < 2:
        raise DomainError(f"cannot factorize {x}; need x >= 2")
    if x > MAX_INT:
        raise OverflowError(f"{x} exceeds the supported integer range (2**64 - 1)")
    factors = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            e = 0
            while x % d == 0:
                x //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if x > 1:
        factors.append((x, 1))
    return Factorization(tuple(factors))


def is_gauss_wantzel(x: int) -> bool:
    """
    True iff ``x >= 2`` is a power of two times distinct Fermat primes.

    Works on the shape of ``x`` directly: strip the twos, then divide out each
    candidate ``2**(2**t) + 1`` at most once.  Does not use :func:`factorize`,
    so that the totient criterion stays an independent check.
    """
    if x < 2:
        return False
    odd = x >> ((x & -x).bit_length() - 1)
    t = 0
    while odd > 1:
        f = (1 << (1 << t)) + 1
        if f > odd:
            return False
        if odd % f == 0:
            if not is_fermat_prime(f):
                return False
            odd //= f
            if odd % f == 0:
                return False
        t += 1
    return True


def is_euclidean_number(x: int) -> bool:
    if x < 2:
        return False
    odd = x >> ((x & -x).bit_length() - 1)
    return odd in (1, 3, 5, 15)


def totient(x: int) -> int:
    """Euler's phi, from the prime factorization."""
    if x < 1:
        raise DomainError(f"totient is defined for x >= 1, got {x}")
    if x == 1:
        return 1
    result = x
    for p, _ in factorize(x):
        result = result // p * (p - 1)
    return result


class PolygonClass(enum.Enum):
    EUCLIDEAN = "euclidean"
    GAUSS_WANTZEL_ONLY = "gauss-wantzel"
    NON_CONSTRUCTIBLE = "non-constructible"


def classify_polygon(x: int) -> PolygonClass:
    if x < 2:
        raise DomainError(f"a polygon needs at least 2 vertices in this model, got {x}")
    if is_euclidean_number(x):
        return PolygonClass.EUCLIDEAN
    if is_gauss_wantzel(x):
        return PolygonClass.GAUSS_WANTZEL_ONLY
    return PolygonClass.NON_CONSTRUCTIBLE
