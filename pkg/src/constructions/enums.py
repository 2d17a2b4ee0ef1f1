"""Construction and engine names."""

from enum import Enum


class ConstructionName(str, Enum):
    """Witness constructions, by their CLI name."""

    EULER = "euler"
    THM33 = "thm33"
    C1 = "c1"
    CM = "cm"
    MERSENNE = "mersenne"
    PRIME_POWER = "primepower"
    LEMMA2 = "lemma2"


class RepresentationEngine(str, Enum):
    """How a distinct-power representation is found."""

    CONSTRUCTIVE = "constructive"
    SEARCH = "search"
