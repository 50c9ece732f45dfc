"""Hecke algebra H_n(q) and its Ocneanu trace, for vector-colored SU(N) links.

Elements are dicts over permutations in one-line notation; generator g_i
(0-based) swaps positions i and i+1 and satisfies g^2 = (q-1) g + q.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from ..surgery import FramedLink

MAX_HECKE_STRANDS = 9


def _swap(w: tuple, i: int) -> tuple:
    t = list(w)
    t[i], t[i + 1] = t[i + 1], t[i]
    return tuple(t)


def right_mul_gen(terms: dict, i: int, q: complex) -> dict:
    out = {}
    for w, c in terms.items():
        ws = _swap(w, i)
        if w[i] < w[i + 1]:
            out[ws] = out.get(ws, 0) + c
        else:
            out[w] = out.get(w, 0) + (q - 1) * c
            out[ws] = out.get(ws, 0) + q * c
    return out


def right_mul_gen_inv(terms: dict, i: int, q: complex) -> dict:
    """g^-1 = q^-1 g - (1 - q^-1)."""
    g = right_mul_gen(terms, i, q)
    out = {w: c / q for w, c in g.items()}
    for w, c in terms.items():
        out[w] = out.get(w, 0) - (1 - 1 / q) * c
    return out


@dataclass
class HeckeElement:
    n: int
    q: complex
    terms: dict = field(default_factory=dict)

    @classmethod
    def identity(cls, n, q):
        return cls(n, q, {tuple(range(n)): 1.0 + 0j})

    def times_gen(self, i: int, inverse: bool = False) -> "HeckeElement":
        f = right_mul_gen_inv if inverse else right_mul_gen
        return HeckeElement(self.n, self.q, f(self.terms, i, self.q))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return HeckeElement(self.n, self.q, out)

    def scale(self, c):
        return HeckeElement(self.n, self.q, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        out = HeckeElement(self.n, self.q, {})
        for w, c in other.terms.items():
            x = HeckeElement(self.n, self.q, dict(self.terms))
            for i in reduced_word(w):
                x = x.times_gen(i)
            out = out + x.scale(c)
        return out


def reduced_word(w: tuple) -> list[int]:
    """Generator indices whose product (left to right) is T_w, via bubble sort."""
    w = list(w)
    word = []
    # sort w to the identity by right multiplications, then reverse
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i)
                changed = True
    return word[::-1]


class OcneanuTrace:
    """tr(1) = 1, tr(x g_{n-1}) = z tr(x) for x in H_{n-1}, tr(xy) = tr(yx)."""

    def __init__(self, q: complex, z: complex):
        self.q, self.z = q, z
        self._memo = {}

    def basis(self, w: tuple) -> complex:
        while len(w) > 1 and w[-1] == len(w) - 1:
            w = w[:-1]
        if len(w) <= 1:
            return 1.0 + 0j
        if w in self._memo:
            return self._memo[w]
        n = len(w)
        p = w.index(n - 1)
        wp = w
        for i in range(p, n - 1):
            wp = _swap(wp, i)
        terms = {wp[:-1]: 1.0 + 0j}
        for i in range(n - 3, p - 1, -1):
            terms = right_mul_gen(terms, i, self.q)
        val = self.z * self(terms)
        self._memo[w] = val
        return val

    def __call__(self, terms: dict) -> complex:
        return complex(sum(c * self.basis(w) for w, c in terms.items()))


def markov_z(q: complex, N: int) -> complex:
    return (q - 1) / (1 - q ** (-N))


def quantum_dim_vector(q: complex, N: int) -> complex:
    return (q ** (N / 2) - q ** (-N / 2)) / (q ** 0.5 - q ** -0.5)


def ocneanu_trace(x: HeckeElement, N: int) -> complex:
    return OcneanuTrace(x.q, markov_z(x.q, N))(x.terms)


def hecke_vector_invariant(link: FramedLink, N: int, k: int) -> complex:
    """Framed invariant of the link with every component colored by the vector rep."""
    from ..errors import CapacityExceeded

    n = link.braid.strands
    if n > MAX_HECKE_STRANDS:
        raise CapacityExceeded(f"Hecke engine cap is {MAX_HECKE_STRANDS} strands, braid has {n}")
    q = cmath.exp(2j * cmath.pi / (N + k))
    s = q ** ((N + 1) / (2 * N))
    terms = {tuple(range(n)): 1.0 + 0j}
    for x in link.braid.letters:
        i = abs(x) - 1
        if x > 0:
            terms = {w: c / s for w, c in right_mul_gen(terms, i, q).items()}
        else:
            terms = {w: c * s for w, c in right_mul_gen_inv(terms, i, q).items()}
    tr = OcneanuTrace(q, markov_z(q, N))
    d = quantum_dim_vector(q, N)
    val = d ** n * tr(terms)
    wv = q ** ((N * N - 1) / (2 * N))
    for f, wr in zip(link.framings, link.writhes()):
        val *= wv ** (f - wr)
    return complex(val)
