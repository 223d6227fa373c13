"""
Octave-equivalence classes of positive rationals and the Kepler map.

Every class [p/q] has a unique representative m/n with 1/2 <= m/n < 1 and
gcd(m, n) = 1.  Intervals are stored only in that form.  Multiplication of
classes makes them an abelian group whose identity is the octave [1/2].

The Kepler map sends [m/n] to [(n - m)/m].  It strictly lowers the
denominator of every non-octave class, so iterating it always reaches the
octave; the number of steps is the height.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import List, Tuple

__all__ = [
    "MAX_INT",
    "DomainError",
    "Interval",
    "OCTAVE",
    "KeplerStepWitness",
    "KeplerSequences",
    "canonicalize",
    "multiply",
    "inverse",
    "kepler_map",
    "kepler_step_closed_form",
    "height",
    "kepler_sequences",
    "cents",
]

# All values are kept inside the unsigned 64-bit range.
MAX_INT = 2**64 - 1


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


def _check_range(*values: int) -> None:
    for v in values:
        if v > MAX_INT:
            raise OverflowError(f"{v} exceeds the supported integer range (2**64 - 1)")


def _two_adic(x: int) -> Tuple[int, int]:
    """Split ``x > 0`` as ``(k, odd)`` with ``x == 2**k * odd``."""
    k = (x & -x).bit_length() - 1
    return k, x >> k


@total_ordering
@dataclass(frozen=True)
class Interval:
    """
    A musical interval, i.e. the canonical representative ``m/n`` of its class.

    Build instances with :func:`canonicalize`; direct construction validates
    the canonical-form invariants and refuses anything else.  Equality is
    structural, ordering is by the real value ``m/n``.
    """

    m: int
    n: int

    def __post_init__(self) -> None:
        m, n = self.m, self.n
        if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < 1:
            raise DomainError(f"not a canonical interval: {m!r}/{n!r}")
        if not (2 * m >= n and m < n) or math.gcd(m, n) != 1:
            raise DomainError(f"not a canonical interval: {m}/{n} (use canonicalize)")
        _check_range(m, n)

    def __lt__(self, other: Interval) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.m * other.n < other.m * self.n

    def __mul__(self, other: Interval) -> Interval:
        if not isinstance(other, Interval):
            return NotImplemented
        return multiply(self, other)

    def __str__(self) -> str:
        return f"{self.m}/{self.n}"

    @property
    def is_octave(self) -> bool:
        return self.m == 1 and self.n == 2


OCTAVE = Interval(1, 2)


def canonicalize(p: int, q: int) -> Interval:
    """
    Return the canonical interval of the class ``[p/q]``.

    Raises :class:`DomainError` for non-positive input and ``OverflowError``
    when the input or the canonical pair does not fit in 64 bits.
    """
    if p < 1 or q < 1:
        raise DomainError(f"interval components must be positive, got {p}/{q}")
    _check_range(p, q)
    g = math.gcd(p, q)
    p, q = p // g, q // g
    # After reduction at most one side is even; only odd parts matter.
    _, p = _two_adic(p)
    _, q = _two_adic(q)
    if p == q:  # both 1: the class of 1 is the octave
        return OCTAVE
    if p < q:
        shift = q.bit_length() - p.bit_length()
        if p << shift > q:
            shift -= 1
        # p * 2**shift < q (odd q, so never equal) and 2 * p * 2**shift > q
        p <<= shift
    else:
        shift = p.bit_length() - q.bit_length()
        if q << shift < p:
            shift += 1
        q <<= shift
    _check_range(p, q)
    return Interval(p, q)


def multiply(a: Interval, b: Interval) -> Interval:
    """Group product ``[a.m*b.m / a.n*b.n]``."""
    num, den = a.m * b.m, a.n * b.n
    _check_range(num, den)
    return canonicalize(num, den)


def inverse(a: Interval) -> Interval:
    return canonicalize(a.n, a.m)


def kepler_map(sigma: Interval) -> Interval:
    """``[m/n] -> [(n - m)/m]``; the octave is its only fixed point."""
    d = sigma.n - sigma.m
    # 0 < d/m <= 1 on canonical input
    assert 0 < d <= sigma.m
    return canonicalize(d, sigma.m)


@dataclass(frozen=True)
class KeplerStepWitness:
    """Intermediate quantities of one Kepler step computed without canonicalize.

    ``m = 2**k * mu`` with ``mu`` odd, ``ell`` is the unique exponent with
    ``1/2 <= 2**ell * (n - m) / m < 1``, ``rho = max(0, k - ell)`` and
    ``tau = max(0, ell - k)``.  The image of the step is then
    ``next_m / next_n = 2**tau * (n - m) / (2**rho * mu)``.
    """

    k: int
    mu: int
    ell: int
    rho: int
    tau: int
    next_n: int
    next_m: int

    def as_interval(self) -> Interval:
        return Interval(self.next_m, self.next_n)


def kepler_step_closed_form(sigma: Interval) -> KeplerStepWitness:
    if sigma.is_octave:
        raise DomainError("the closed-form Kepler step is undefined at the octave")
    m, n = sigma.m, sigma.n
    d = n - m
    k, mu = _two_adic(m)
    ell = 0
    while 2 * (d << ell) < m:
        ell += 1
    rho = max(0, k - ell)
    tau = max(0, ell - k)
    return KeplerStepWitness(
        k=k, mu=mu, ell=ell, rho=rho, tau=tau,
        next_n=(1 << rho) * mu, next_m=(1 << tau) * d,
    )


def height(sigma: Interval) -> int:
    """Number of Kepler-map iterations needed to reach the octave."""
    h = 0
    while not sigma.is_octave:
        sigma = kepler_map(sigma)
        h += 1
    return h


@dataclass(frozen=True)
class KeplerSequences:
    """The orbit of an interval under the Kepler map and its denominators."""

    first: Tuple[Interval, ...]
    second: Tuple[int, ...]

    @property
    def height(self) -> int:
        return len(self.first) - 1


def kepler_sequences(sigma: Interval) -> KeplerSequences:
    orbit: List[Interval] = [sigma]
    while not orbit[-1].is_octave:
        orbit.append(kepler_map(orbit[-1]))
    return KeplerSequences(first=tuple(orbit), second=tuple(s.n for s in orbit))


def cents(sigma: Interval) -> float:
    """Size of the interval in cents, ``1200 * log2(n/m)``; for display only."""
    return 1200.0 * (math.log2(sigma.n) - math.log2(sigma.m))
