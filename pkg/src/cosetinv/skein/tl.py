"""Temperley-Lieb diagrams, Jones-Wenzl projectors and SU(2) cabling.

A TL diagram on M strands is a tuple of 2M partner indices: points
0..M-1 are the top, M..2M-1 the bottom, and ``d[p]`` is the point joined
to p.  Elements are dicts mapping diagrams to complex coefficients.
Products are read top to bottom, so ``x * g`` stacks g below x.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..errors import CapacityExceeded, InadmissibleColor
from ..surgery import BraidWord, FramedLink

MAX_CABLED_STRANDS = 24
_PRUNE = 1e-15


def identity_diagram(M: int) -> tuple:
    return tuple(range(M, 2 * M)) + tuple(range(M))


def e_diagram(M: int, j: int) -> tuple:
    t = list(identity_diagram(M))
    t[j], t[j + 1] = j + 1, j
    t[M + j], t[M + j + 1] = M + j + 1, M + j
    return tuple(t)


def _right_e(d: tuple, j: int, M: int):
    """(d * e_j, number of closed loops formed)."""
    bj = M + j
    a = d[bj]
    if a == bj + 1:
        return d, 1
    b = d[bj + 1]
    t = list(d)
    t[a], t[b] = b, a
    t[bj], t[bj + 1] = bj + 1, bj
    return tuple(t), 0


def compose(d1: tuple, d2: tuple, M: int):
    """(d1 stacked over d2, number of closed loops).  General diagram product."""
    # points 0..2M-1 belong to d1, 2M..4M-1 to d2; d1's bottom M+i is glued to d2's top 2M+i
    def partner(p):
        return d1[p] if p < 2 * M else 2 * M + d2[p - 2 * M]

    def glue(p):
        if M <= p < 2 * M:
            return p + M
        if 2 * M <= p < 3 * M:
            return p - M
        return None

    def ext(p):
        return p if p < M else p - 2 * M

    seen = [False] * (4 * M)
    out = [0] * (2 * M)
    for s in list(range(M)) + list(range(3 * M, 4 * M)):
        if seen[s]:
            continue
        p = s
        while True:
            seen[p] = True
            q = partner(p)
            seen[q] = True
            g = glue(q)
            if g is None:
                break
            p = g
        out[ext(s)], out[ext(q)] = ext(q), ext(s)
    loops = 0
    for s in range(M, 3 * M):
        if seen[s]:
            continue
        loops += 1
        p = s
        while not seen[p]:
            seen[p] = True
            q = partner(p)
            seen[q] = True
            p = glue(q)
    return tuple(out), loops


def close_diagram(d: tuple, M: int) -> int:
    """Number of loops in the trace closure (top i joined to bottom i)."""
    seen = [False] * (2 * M)
    loops = 0
    for s in range(2 * M):
        if seen[s]:
            continue
        loops += 1
        p = s
        while not seen[p]:
            seen[p] = True
            q = d[p]
            seen[q] = True
            p = q + M if q < M else q - M
    return loops


@dataclass
class TLElement:
    M: int
    delta: complex
    terms: dict = field(default_factory=dict)

    @classmethod
    def identity(cls, M, delta):
        return cls(M, delta, {identity_diagram(M): 1.0 + 0j})

    @classmethod
    def generator(cls, M, delta, j):
        return cls(M, delta, {e_diagram(M, j): 1.0 + 0j})

    def __add__(self, other):
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return TLElement(self.M, self.delta, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TLElement(self.M, self.delta, {d: c * v for d, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TLElement):
            return self.scale(other)
        out = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = compose(d1, d2, self.M)
                out[d] = out.get(d, 0) + c1 * c2 * self.delta ** loops
        return TLElement(self.M, self.delta, out)

    __rmul__ = scale

    def close(self) -> complex:
        return markov_close(self)

    def matrix(self) -> np.ndarray:
        """Left-regular representation on the diagram basis of TL_M."""
        basis = tl_basis(self.M)
        pos = {d: i for i, d in enumerate(basis)}
        out = np.zeros((len(basis), len(basis)), dtype=complex)
        for j, b in enumerate(basis):
            prod = (self * TLElement(self.M, self.delta, {b: 1.0})).terms
            for d, c in prod.items():
                out[pos[d], j] += c
        return out

    def max_abs(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)


def tl_basis(M: int) -> list[tuple]:
    """All planar pairings of the 2M boundary points, as diagrams."""
    # boundary order around the disk: top 0..M-1 then bottom 2M-1..M
    ring = list(range(M)) + list(range(2 * M - 1, M - 1, -1))

    def pairings(pts):
        if not pts:
            yield {}
            return
        a = pts[0]
        for i in range(1, len(pts), 2):
            for left in pairings(pts[1:i]):
                for right in pairings(pts[i + 1:]):
                    m = {a: pts[i], pts[i]: a}
                    m.update(left)
                    m.update(right)
                    yield m

    return sorted(tuple(m[p] for p in range(2 * M)) for m in pairings(ring))


def markov_close(x: TLElement) -> complex:
    return complex(sum(c * x.delta ** close_diagram(d, x.M) for d, c in x.terms.items()))


def kauffman_A(k: int) -> complex:
    """A = exp(i pi / (2(k+2))); the loop value is -A^2 - A^-2."""
    return cmath.exp(1j * cmath.pi / (2 * (k + 2)))


def loop_value(A: complex) -> complex:
    return -A * A - 1 / (A * A)


def _mul_letter(terms: dict, x: int, A: complex, delta: complex, M: int) -> dict:
    j = abs(x) - 1
    a, b = (A, 1 / A) if x > 0 else (1 / A, A)
    out = {}
    for d, c in terms.items():
        out[d] = out.get(d, 0) + a * c
        nd, loops = _right_e(d, j, M)
        out[nd] = out.get(nd, 0) + (b * c * delta if loops else b * c)
    return out


def braid_to_skein(b: BraidWord, A: complex) -> TLElement:
    """Kauffman substitution sigma -> A + A^-1 e, sigma^-1 -> A^-1 + A e."""
    delta = loop_value(A)
    terms = {identity_diagram(b.strands): 1.0 + 0j}
    for x in b.letters:
        terms = _mul_letter(terms, x, A, delta, b.strands)
    return TLElement(b.strands, delta, terms)


def chebyshev(delta: complex, n: int) -> list:
    """Delta_0 .. Delta_n with Delta_{j+1} = delta Delta_j - Delta_{j-1}."""
    out = [1.0 + 0j, delta]
    while len(out) <= n:
        out.append(delta * out[-1] - out[-2])
    return out[: n + 1]


def _jw_coeffs(delta, n):
    cheb = chebyshev(delta, max(n, 1))
    coeffs = [0j, 0j]
    for m in range(2, n + 1):
        if abs(cheb[m - 1]) < 1e-12:
            raise InadmissibleColor(f"Jones-Wenzl p_{n} does not exist: quantum integer [{m}] vanishes")
        coeffs.append(cheb[m - 2] / cheb[m - 1])
    return coeffs


class JonesWenzlTable:
    """p_m for m <= cap as explicit TL_m elements (for checks and small cases)."""

    def __init__(self, delta: complex, cap: int):
        self.delta = delta
        self.cap = cap
        coeffs = _jw_coeffs(delta, cap)
        self.p = {0: TLElement(0, delta, {(): 1.0 + 0j}), 1: TLElement.identity(1, delta)}
        for m in range(2, cap + 1):
            prev = self._embed(self.p[m - 1], m)
            e = TLElement.generator(m, delta, m - 2)
            self.p[m] = prev - (prev * e * prev).scale(coeffs[m])

    @staticmethod
    def _embed(x: TLElement, M: int) -> TLElement:
        """x (on the first x.M strands) tensored with identity strands."""
        out = {}
        for d, c in x.terms.items():
            t = []
            for p in range(2 * M):
                if p < x.M:
                    q = d[p]
                elif p < M:
                    q = None
                elif p < M + x.M:
                    q = d[p - M + x.M]
                else:
                    q = None
                if q is None:
                    q = p + M if p < M else p - M
                else:
                    q = q if q < x.M else q - x.M + M
                t.append(q)
            out[tuple(t)] = c
        return TLElement(M, x.delta, out)

    def __getitem__(self, m):
        return self.p[m]


def _apply_jw_right(terms: dict, offset: int, n: int, coeffs, delta, M) -> dict:
    """terms * p_n placed on strands offset..offset+n-1 (bottom side)."""
    if n <= 1:
        return terms
    y = _apply_jw_right(terms, offset, n - 1, coeffs, delta, M)
    ye = {}
    for d, c in y.items():
        nd, loops = _right_e(d, offset + n - 2, M)
        ye[nd] = ye.get(nd, 0) + (c * delta if loops else c)
    z = _apply_jw_right(ye, offset, n - 1, coeffs, delta, M)
    out = dict(y)
    cn = coeffs[n]
    for d, c in z.items():
        out[d] = out.get(d, 0) - cn * c
    return out


def _bundle_crossing(start: int, a: int, b: int, sign: int) -> list[int]:
    """Elementary letters moving a width-a bundle across the width-b bundle to its right."""
    word = []
    for r in range(a - 1, -1, -1):
        for t in range(b):
            word.append(sign * (start + r + t + 1))
    return word


def _has_cap_in_bundles(d: tuple, bounds: list, base: int) -> bool:
    for lo, hi in bounds:
        for p in range(lo, hi):
            q = d[base + p] - base
            if lo <= q < hi and q != p:
                return True
    return False


def _bundle_bounds(widths):
    out, s = [], 0
    for w in widths:
        if w > 1:
            out.append((s, s + w))
        s += w
    return out


def cabled_bracket(link: FramedLink, two_j: list, A: complex) -> complex:
    """Kauffman bracket of the closure with each component cabled by p_{2j}.

    No sign or framing correction is applied here.
    """
    comp = link.strand_component()
    widths = [two_j[c] for c in comp]
    M = sum(widths)
    if M > MAX_CABLED_STRANDS:
        raise CapacityExceeded(
            f"cabling needs {M} strands; the TL engine cap is {MAX_CABLED_STRANDS} "
            "(use a chain presentation instead)")
    delta = loop_value(A)
    if M == 0:
        return 1.0 + 0j
    coeffs = _jw_coeffs(delta, max(widths))
    top_bounds = _bundle_bounds(widths)
    terms = {identity_diagram(M): 1.0 + 0j}
    layout = list(widths)
    for x in link.braid.letters:
        i = abs(x) - 1
        start = sum(layout[:i])
        word = _bundle_crossing(start, layout[i], layout[i + 1], 1 if x > 0 else -1)
        for y in word:
            terms = _mul_letter(terms, y, A, delta, M)
            terms = {d: c for d, c in terms.items()
                     if abs(c) > _PRUNE and not _has_cap_in_bundles(d, top_bounds, 0)}
        layout[i], layout[i + 1] = layout[i + 1], layout[i]
        # a projector can be slid to this level and absorbed at the end
        bot = _bundle_bounds(layout)
        terms = {d: c for d, c in terms.items() if not _has_cap_in_bundles(d, bot, M)}
    off = 0
    for w in layout:
        terms = _apply_jw_right(terms, off, w, coeffs, delta, M)
        off += w
    return complex(sum(c * delta ** close_diagram(d, M) for d, c in terms.items()))


def su2_twist(two_j: int, k: int) -> complex:
    return cmath.exp(2j * cmath.pi * (two_j * (two_j + 2)) / (4 * (k + 2)))


def _two_j(spin) -> int:
    v = Fraction(spin) * 2 if not isinstance(spin, float) else round(2 * spin)
    if int(v) != v or v < 0:
        raise InadmissibleColor(f"{spin} is not a spin")
    return int(v)


def colored_invariant_su2(link: FramedLink, colors, k: int) -> complex:
    """Framed SU(2)_k invariant with component c colored by spin colors[c]."""
    if len(colors) != link.n:
        raise ValueError(f"need {link.n} colors, got {len(colors)}")
    two_j = [_two_j(c) for c in colors]
    for t in two_j:
        if t > k:
            raise InadmissibleColor(f"spin {Fraction(t, 2)} is not admissible at level {k}")
    A = kauffman_A(k)
    val = cabled_bracket(link, two_j, A)
    strands = link.strands_per_component()
    sign = (-1) ** (sum(t * s for t, s in zip(two_j, strands)) % 2)
    writhe = link.writhes()
    for c in range(link.n):
        val *= su2_twist(two_j[c], k) ** (link.framings[c] - writhe[c])
    return sign * val
