"""Skein-theoretic link evaluation: Temperley-Lieb cabling and Hecke traces."""
from .tl import (
    JonesWenzlTable,
    TLElement,
    braid_to_skein,
    colored_invariant_su2,
    kauffman_A,
    loop_value,
    markov_close,
)
from .hecke import HeckeElement, hecke_vector_invariant, ocneanu_trace

__all__ = [
    "HeckeElement",
    "JonesWenzlTable",
    "TLElement",
    "braid_to_skein",
    "colored_invariant_su2",
    "hecke_vector_invariant",
    "kauffman_A",
    "loop_value",
    "markov_close",
    "ocneanu_trace",
]
