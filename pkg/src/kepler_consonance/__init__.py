"""Exact octave-reduced intervals, the Kepler map and constructibility-based consonance."""
from kepler_consonance.consonance import (
    SEVEN_CONSONANTS,
    ConsonanceClass,
    TheoremReport,
    classify_interval,
    enumerate_intervals,
    fermat_consonance,
    gaussian_consonants_up_to,
    is_euclidean_consonant,
    is_gaussian_consonant,
    verify_seven_theorem,
)
from kepler_consonance.constructibility import (
    Factorization,
    PolygonClass,
    classify_polygon,
    factorize,
    is_euclidean_number,
    is_fermat_prime,
    is_gauss_wantzel,
    is_prime,
    totient,
)
from kepler_consonance.interval import (
    MAX_INT,
    OCTAVE,
    DomainError,
    Interval,
    KeplerSequences,
    KeplerStepWitness,
    canonicalize,
    cents,
    height,
    inverse,
    kepler_map,
    kepler_sequences,
    kepler_step_closed_form,
    multiply,
)

__version__ = "0.1.0"
