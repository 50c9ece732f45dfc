"""The U(1) theory at level 2k: labels 0 <= alpha < 2k with Z_2k fusion."""
from __future__ import annotations

import functools
import itertools
from fractions import Fraction

import numpy as np

from .modular import ModularData, from_fusion_and_twists, phase
from .surgery import linking_matrix, signature_counts


def u1_twist(alpha: int, k: int) -> complex:
    return phase(Fraction(alpha * alpha, 4 * k))


@functools.lru_cache(maxsize=None)
def build_u1(k: int) -> ModularData:
    if k < 1:
        raise ValueError(f"U(1) level parameter must be >= 1, got {k}")
    n = 2 * k
    fusion = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            fusion[a, b, (a + b) % n] = 1
    twists = [u1_twist(a, k) for a in range(n)]
    return from_fusion_and_twists(f"U(1)_{n}", range(n), fusion, twists, 1)


def u1_link_invariant(linkmat, colors, k: int) -> complex:
    L = np.asarray(linkmat, dtype=np.int64)
    a = np.asarray(colors, dtype=np.int64)
    if L.shape != (len(a), len(a)):
        raise ValueError(f"linking matrix {L.shape} does not match {len(a)} colors")
    return phase(Fraction(int(a @ L @ a), 4 * k))


def gauss_sum(n1: int, modulus: int) -> complex:
    """sum_{alpha=0}^{modulus-1} exp(2 pi i n1 alpha^2 / modulus)."""
    return complex(sum(phase(Fraction(n1 * a * a, modulus)) for a in range(modulus)))


def tau_u1_mod_z2(pres, k: int) -> complex:
    """Invariant of the even-label U(1)_2k sum, normalized as 2^{n/2} D^{-n}.

    Each summand is the U(1) link value exp(+2 pi i/4k a.L.a) itself.  With
    this sign the result is the factor whose conjugate pairs with the SO(3)
    invariant in the parafermion factorization.
    """
    L = linking_matrix(pres)
    n = L.shape[0]
    if n == 0:
        return 1.0 + 0j
    bp, bm = signature_counts(L)
    anomaly = phase(Fraction(1, 8))
    D = np.sqrt(2 * k)
    total = 0j
    for cols in itertools.product(range(0, 2 * k, 2), repeat=n):
        total += u1_link_invariant(L, cols, k)
    return complex(2 ** (n / 2) * anomaly ** (bm - bp) * D ** (-n) * total)
