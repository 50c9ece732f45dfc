"""Modular data of SU(N) at level k.

Weights use the shifted convention: a label is a tuple (l_1, ..., l_{N-1})
of integers with every l_i >= 1 and sum(l) < h = N + k.  The vacuum is
(1, ..., 1).  Label lists are sorted lexicographically, which puts the
vacuum first.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import MalformedWeight
from .modular import ModularData, conjugation_from_S, phase, verlinde_fusion


@dataclass(frozen=True, order=True)
class AffineWeight:
    components: tuple
    level: int

    def __post_init__(self):
        comps = tuple(int(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) < 1:
            raise MalformedWeight("need at least one component (N >= 2)")
        if self.level < 1:
            raise MalformedWeight(f"level must be >= 1, got {self.level}")
        if min(comps) < 1 or sum(comps) >= self.h:
            raise MalformedWeight(f"{comps} is not in P_++ at N={self.rank}, h={self.h}")

    @property
    def rank(self) -> int:
        return len(self.components) + 1

    @property
    def h(self) -> int:
        return self.rank + self.level

    @property
    def nality(self) -> int:
        return n_ality(self.components)

    def __str__(self):
        return "(" + ",".join(map(str, self.components)) + ")"


def _check_nk(N, k):
    if N < 2:
        raise ValueError(f"rank N must be >= 2, got {N}")
    if k < 1:
        raise ValueError(f"level k must be >= 1, got {k}")


def n_ality(components) -> int:
    N = len(components) + 1
    return sum((c - 1) * i for i, c in enumerate(components, start=1)) % N


def enumerate_weights(N: int, k: int) -> list[AffineWeight]:
    _check_nk(N, k)
    h = N + k
    out = []
    for comps in itertools.product(range(1, h), repeat=N - 1):
        if sum(comps) < h:
            out.append(AffineWeight(comps, k))
    return out


def _vector(components) -> list[Fraction]:
    """Traceless R^N coordinates of sum_i l_i Lambda_i."""
    N = len(components) + 1
    partial = [sum(components[a:], 0) for a in range(N - 1)] + [0]
    shift = Fraction(sum(partial), N)
    return [p - shift for p in partial]


def conformal_weight(lam: AffineWeight) -> Fraction:
    """Delta = <l, l + 2 rho> / (2h) for the unshifted weight l, exact."""
    v = _vector(lam.components)
    rho = _vector((1,) * len(lam.components))
    c2 = sum(x * x for x in v) - sum(x * x for x in rho)
    return Fraction(c2, 2 * lam.h)


def central_charge(N: int, k: int) -> Fraction:
    _check_nk(N, k)
    return Fraction(k * (N * N - 1), k + N)


# sign of the exponent in the Weyl-group sum; -1 makes Y/|D_-| equal S
_KP_SIGN = -1


def kac_peterson_S(N: int, k: int) -> np.ndarray:
    weights = enumerate_weights(N, k)
    h = N + k
    V = np.array([[float(x) for x in _vector(w.components)] for w in weights])
    n = len(weights)
    raw = np.empty((n, n), dtype=complex)
    for a in range(n):
        for b in range(a, n):
            M = np.exp(_KP_SIGN * 2j * np.pi * np.outer(V[a], V[b]) / h)
            raw[a, b] = raw[b, a] = np.linalg.det(M)
    norm = np.linalg.norm(raw[0])
    return raw * (np.conj(raw[0, 0]) / abs(raw[0, 0])) / norm


def vector_label(N: int, k: int) -> AffineWeight:
    return AffineWeight((2,) + (1,) * (N - 2), k)


def vector_fusion(lam: AffineWeight) -> list[AffineWeight]:
    """Labels mu with N_{v lam}^mu = 1: add one box in each admissible row."""
    c = list(lam.components)
    N = lam.rank
    out = []
    for i in range(N):
        m = c[:]
        if i < N - 1:
            m[i] += 1
        if i > 0:
            m[i - 1] -= 1
        if min(m) >= 1 and sum(m) < lam.h:
            out.append(AffineWeight(tuple(m), lam.level))
    return out


def simple_current(lam: AffineWeight, power: int = 1) -> AffineWeight:
    c = lam.components
    for _ in range(power % lam.rank):
        c = (lam.h - sum(c),) + c[:-1]
    return AffineWeight(c, lam.level)


def level_rank_beta(lam: AffineWeight) -> AffineWeight:
    """Map a level-n SU(m) weight to a level-m SU(n) weight."""
    m, n = lam.rank, lam.level
    ks = list(lam.components) + [m + n - sum(lam.components)]  # k_1..k_{m-1}, k_m = k_0
    r = [sum(ks[j:]) for j in range(m)]
    rbar = sorted(set(range(1, m + n + 1)) - set(r), reverse=True)
    if len(rbar) != n:
        raise MalformedWeight(f"r = {r} is not a strictly decreasing sequence")
    s = [m + n + rbar[n - 1] - rbar[n - j] for j in range(1, n + 1)]
    if s[0] != m + n or any(a <= b for a, b in zip(s, s[1:])) or s[-1] < 1:
        raise MalformedWeight(f"derived s = {s} is not strictly decreasing in [1, {m + n}]")
    if n == 1:
        raise MalformedWeight("level-rank image would be SU(1)")
    return AffineWeight(tuple(s[j] - s[j + 1] for j in range(n - 1)), m)


@functools.lru_cache(maxsize=None)
def build_affine(N: int, k: int) -> ModularData:
    weights = enumerate_weights(N, k)
    S = kac_peterson_S(N, k)
    c = central_charge(N, k)
    twists = np.array([phase(conformal_weight(w)) for w in weights])
    dims = (S[0] / S[0, 0]).real
    return ModularData(
        name=f"SU({N})_{k}",
        labels=tuple(weights),
        S=S,
        twists=twists,
        dims=dims,
        fusion=verlinde_fusion(S),
        conj=conjugation_from_S(S),
        rank=float(1 / S[0, 0].real),
        anomaly=phase(c / 8),
        central_charge=float(c),
    )


def su2_label(j, k: int) -> AffineWeight:
    """The SU(2)_k label of spin j (j may be a Fraction or half-integer float)."""
    two_j = int(round(2 * float(j)))
    return AffineWeight((two_j + 1,), k)


def su2_spin(lam: AffineWeight) -> Fraction:
    return Fraction(lam.components[0] - 1, 2)
