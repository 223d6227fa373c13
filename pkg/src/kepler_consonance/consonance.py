"""
Consonance classification and the seven-consonants verifier.

An interval is a Euclidean (resp. Gaussian) consonant when every
denominator along its Kepler orbit is a Euclidean (resp. Gauss-Wantzel)
number.  Since every Euclidean number is Gauss-Wantzel, Euclidean consonants
are Gaussian consonants as well.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import List, Tuple

from kepler_consonance.constructibility import (
    is_euclidean_number,
    is_fermat_prime,
    is_gauss_wantzel,
)
from kepler_consonance.interval import (
    DomainError,
    Interval,
    KeplerSequences,
    canonicalize,
    kepler_sequences,
)

__all__ = [
    "ConsonanceClass",
    "TheoremReport",
    "SEVEN_CONSONANTS",
    "is_euclidean_consonant",
    "is_gaussian_consonant",
    "classify_interval",
    "enumerate_intervals",
    "gaussian_consonants_up_to",
    "theorem_candidates",
    "verify_seven_theorem",
    "fermat_consonance",
]


class ConsonanceClass(enum.Enum):
    EUCLIDEAN = "euclidean"
    GAUSSIAN_ONLY = "gaussian"
    DISSONANT = "dissonant"


# octave, fifth, fourth, major third, minor third, major sixth, minor sixth
SEVEN_CONSONANTS = frozenset(
    Interval(m, n) for m, n in [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 5), (5, 8)]
)


def is_euclidean_consonant(sigma: Interval) -> bool:
    return all(is_euclidean_number(n) for n in kepler_sequences(sigma).second)


def is_gaussian_consonant(sigma: Interval) -> bool:
    return all(is_gauss_wantzel(n) for n in kepler_sequences(sigma).second)


def classify_interval(sigma: Interval) -> ConsonanceClass:
    second = kepler_sequences(sigma).second
    if all(is_euclidean_number(n) for n in second):
        return ConsonanceClass.EUCLIDEAN
    if all(is_gauss_wantzel(n) for n in second):
        return ConsonanceClass.GAUSSIAN_ONLY
    return ConsonanceClass.DISSONANT


def enumerate_intervals(max_n: int) -> List[Interval]:
    """All canonical intervals with denominator at most ``max_n``, sorted by ``(n, m)``."""
    if max_n < 2:
        raise DomainError(f"max_n must be at least 2, got {max_n}")
    out = []
    for n in range(2, max_n + 1):
        for m in range((n + 1) // 2, n):
            if math.gcd(m, n) == 1:
                out.append(Interval(m, n))
    return out


def gaussian_consonants_up_to(max_n: int) -> List[Tuple[Interval, ConsonanceClass]]:
    """Every non-dissonant interval with denominator at most ``max_n``, with its class."""
    result = []
    for sigma in enumerate_intervals(max_n):
        cls = classify_interval(sigma)
        if cls is not ConsonanceClass.DISSONANT:
            result.append((sigma, cls))
    return result


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of :func:`verify_seven_theorem`.

    ``candidates`` is the complete finite set of intervals that can possibly
    be Euclidean consonants; every other interval fails a necessary
    condition before its orbit is even computed.
    """

    candidates: Tuple[Interval, ...]
    verdict_per_candidate: Tuple[Tuple[Interval, ConsonanceClass], ...]
    euclidean_consonants: Tuple[Interval, ...]
    ok: bool


def _odd_euclidean_numbers() -> List[int]:
    # An odd Euclidean number is 3**a * 5**b with a, b <= 1, hence at most 15.
    return [x for x in range(3, 16, 2) if is_euclidean_number(x)]


def theorem_candidates() -> List[Interval]:
    """
    The intervals surviving the necessary conditions for Euclidean consonance.

    A Euclidean consonant sigma = [m/n] has n Euclidean, and m is a power of
    two times the denominator of K(sigma), so m is Euclidean too (or m = 1 at
    the octave).  Coprimality leaves two cases:

    * n odd, so n is one of the odd Euclidean numbers and n/2 < m < n;
    * n even, so m is odd (1 or an odd Euclidean number) and m < n <= 2m,
      which bounds n by twice the largest odd Euclidean number.
    """
    odd = _odd_euclidean_numbers()
    found = set()
    for n in odd:
        for m in range(n // 2 + 1, n):
            if math.gcd(m, n) == 1 and is_euclidean_number(m):
                found.add(Interval(m, n))
    for m in [1] + odd:
        for n in range(m + 1, 2 * m + 1):
            if n % 2 == 0 and is_euclidean_number(n) and math.gcd(m, n) == 1:
                found.add(Interval(m, n))
    return sorted(found)


def verify_seven_theorem() -> TheoremReport:
    candidates = theorem_candidates()
    verdicts = tuple((c, classify_interval(c)) for c in candidates)
    consonants = tuple(c for c, v in verdicts if v is ConsonanceClass.EUCLIDEAN)
    return TheoremReport(
        candidates=tuple(candidates),
        verdict_per_candidate=verdicts,
        euclidean_consonants=consonants,
        ok=set(consonants) == SEVEN_CONSONANTS and len(consonants) == 7,
    )


def fermat_consonance(F: int) -> KeplerSequences:
    """Kepler sequences of ``[(F - 1)/F]`` for a Fermat prime ``F``; always ``(F, 2)``."""
    if not is_fermat_prime(F):
        raise DomainError(f"{F} is not a Fermat prime")
    return kepler_sequences(canonicalize(F - 1, F))
