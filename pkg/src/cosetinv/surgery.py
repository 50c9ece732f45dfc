"""Framed links, surgery presentations and linking matrices.

Orientation convention: braids are drawn top to bottom with every strand
oriented downward, and the generator ``+i`` is the positive crossing in
which strand i passes over strand i+1.  Closing a braid joins the bottom of
each strand to the top of the same position.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .errors import ParseError


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} out of range for {self.strands} strands")

    def permutation(self) -> list[int]:
        """perm[p] = top strand that ends at bottom position p."""
        pos = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        return pos

    def cycles(self) -> list[tuple]:
        """Closure cycles of top positions, each starting at its smallest element."""
        perm = self.permutation()
        # follow where the strand starting at top t ends, then continue from that top
        dest = [0] * self.strands
        for p, t in enumerate(perm):
            dest[t] = p
        seen, out = set(), []
        for s in range(self.strands):
            if s in seen:
                continue
            cyc, x = [], s
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = dest[x]
            out.append(tuple(cyc))
        return out

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in self.letters))


@dataclass(frozen=True)
class FramedLink:
    braid: BraidWord
    components: tuple = None  # component id of each closure cycle
    framings: tuple = ()

    def __post_init__(self):
        ncyc = len(self.braid.cycles())
        comps = tuple(range(ncyc)) if self.components is None else tuple(int(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "framings", tuple(int(f) for f in self.framings))
        if len(comps) != ncyc or sorted(comps) != list(range(ncyc)):
            raise ValueError(f"components must label the {ncyc} closure cycles by 0..{ncyc - 1}")
        if len(self.framings) != ncyc:
            raise ValueError(f"need {ncyc} framings, got {len(self.framings)}")

    @property
    def n(self) -> int:
        return len(self.components)

    def strand_component(self) -> list[int]:
        """Component id of the strand starting at each top position."""
        out = [0] * self.braid.strands
        for cid, cyc in zip(self.components, self.braid.cycles()):
            for s in cyc:
                out[s] = cid
        return out

    def crossings(self):
        """Yield (position, sign, comp_over_left, comp_right) for each letter."""
        comp = self.strand_component()
        cur = list(comp)
        for x in self.braid.letters:
            i = abs(x) - 1
            yield i, (1 if x > 0 else -1), cur[i], cur[i + 1]
            cur[i], cur[i + 1] = cur[i + 1], cur[i]

    def writhes(self) -> list[int]:
        w = [0] * self.n
        for _, s, a, b in self.crossings():
            if a == b:
                w[a] += s
        return w

    def strands_per_component(self) -> list[int]:
        out = [0] * self.n
        for c in self.strand_component():
            out[c] += 1
        return out

    def mirror(self) -> "FramedLink":
        return FramedLink(self.braid.mirror(), self.components, tuple(-f for f in self.framings))


def split_blocks(link: FramedLink) -> list[FramedLink]:
    """Cut the braid at generators that never occur.

    Strands on either side of an unused generator form a split sublink, so
    the link is the disjoint union of the returned blocks.  Component ids
    are renumbered in order of first appearance within each block.
    """
    used = {abs(x) for x in link.braid.letters}
    cuts = [0] + [g for g in range(1, link.braid.strands) if g not in used] + [link.braid.strands]
    if len(cuts) == 2:
        return [link]
    comp = link.strand_component()
    out = []
    for lo, hi in zip(cuts, cuts[1:]):
        letters = tuple((abs(x) - lo) * (1 if x > 0 else -1)
                        for x in link.braid.letters if lo < abs(x) < hi)
        braid = BraidWord(hi - lo, letters)
        ids = []
        for cyc in braid.cycles():
            c = comp[cyc[0] + lo]
            if c not in ids:
                ids.append(c)
        out.append(FramedLink(braid, tuple(range(len(ids))), tuple(link.framings[c] for c in ids)))
    return out


@dataclass(frozen=True)
class Chain:
    framings: tuple

    def __post_init__(self):
        object.__setattr__(self, "framings", tuple(int(a) for a in self.framings))

    @property
    def n(self) -> int:
        return len(self.framings)

    def to_link(self) -> FramedLink:
        """The braid sigma_1^2 ... sigma_{n-1}^2 presentation of the chain."""
        n = max(self.n, 1)
        letters = [g for i in range(1, self.n) for g in (i, i)]
        if self.n == 0:
            raise ValueError("the empty chain has no braid presentation")
        return FramedLink(BraidWord(n, letters), None, self.framings)


@dataclass(frozen=True)
class ChainUnion:
    """Split union of chains; the linking matrix is block diagonal."""
    parts: tuple

    def __post_init__(self):
        parts = tuple(p if isinstance(p, Chain) else Chain(tuple(p)) for p in self.parts)
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(p.n for p in self.parts)


@dataclass(frozen=True)
class Lens:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p < 1:
            raise ValueError(f"lens space needs p >= 1, got {p}")
        q %= p
        if p > 1 and (q == 0 or math.gcd(p, q) != 1):
            raise ValueError(f"lens space L({p},{self.q}) needs gcd(p,q) = 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def to_chain(self) -> Chain:
        return lens_to_chain(self.p, self.q)


Presentation = Union[FramedLink, Chain, ChainUnion, Lens]


def as_chain_union(pres) -> ChainUnion | None:
    """Chain-family presentations as a ChainUnion; None for braid links."""
    if isinstance(pres, Lens):
        pres = pres.to_chain()
    if isinstance(pres, Chain):
        return ChainUnion((pres,) if pres.n else ())
    if isinstance(pres, ChainUnion):
        return ChainUnion(tuple(p for p in pres.parts if p.n))
    return None


def lens_to_chain(p: int, q: int) -> Chain:
    """p/q = a1 - 1/(a2 - 1/(... - 1/an)) with every a_i >= 2.

    L(1, q) is the 3-sphere and maps to the empty chain.
    """
    if p == 1:
        return Chain(())
    lens = Lens(p, q)
    p, q = lens.p, lens.q
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return Chain(tuple(out))


def chain_fraction(a: Sequence[int]) -> Fraction:
    val = Fraction(a[-1])
    for x in reversed(a[:-1]):
        val = x - 1 / val
    return val


def linking_matrix(pres) -> np.ndarray:
    cu = as_chain_union(pres)
    if cu is not None:
        n = cu.n
        L = np.zeros((n, n), dtype=np.int64)
        off = 0
        for part in cu.parts:
            for i, a in enumerate(part.framings):
                L[off + i, off + i] = a
                if i + 1 < part.n:
                    L[off + i, off + i + 1] = L[off + i + 1, off + i] = 1
            off += part.n
        return L
    link = pres
    twice = np.zeros((link.n, link.n), dtype=np.int64)
    for _, s, a, b in link.crossings():
        if a != b:
            twice[a, b] += s
            twice[b, a] += s
    if np.any(twice % 2):
        raise ValueError("odd crossing count between two components")
    L = twice // 2
    for c, f in enumerate(link.framings):
        L[c, c] = f
    return L


def signature_counts(M) -> tuple[int, int]:
    """(b+, b-) of a symmetric integer matrix by exact congruence reduction."""
    A = [[Fraction(int(x)) for x in row] for row in np.asarray(M)]
    n = len(A)
    if any(A[i][j] != A[j][i] for i in range(n) for j in range(n)):
        raise ValueError("matrix is not symmetric")
    pos = neg = 0
    idx = list(range(n))
    while idx:
        piv = next((i for i in idx if A[i][i] != 0), None)
        if piv is not None:
            a = A[piv][piv]
            if a > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in idx if i != piv]
            for i in rest:
                f = A[i][piv] / a
                if f:
                    for j in rest:
                        A[i][j] -= f * A[piv][j]
            idx = rest
            continue
        pair = next(((i, j) for i in idx for j in idx if i < j and A[i][j] != 0), None)
        if pair is None:
            break  # remaining block is zero
        i0, j0 = pair
        # the block [[0, b], [b, 0]] has inertia (1, 1)
        pos += 1
        neg += 1
        b = A[i0][j0]
        rest = [i for i in idx if i not in pair]
        for i in rest:
            ci, cj = A[i][i0], A[i][j0]
            for j in rest:
                A[i][j] -= (ci * A[j0][j] + cj * A[i0][j]) / b
        idx = rest
    return pos, neg


def _parse_ints(text, what, offset):
    try:
        return [int(t) for t in text.split()]
    except ValueError:
        raise ParseError(f"expected integers after '{what}'", offset) from None


def parse_link_text(text: str) -> FramedLink:
    fields = {}
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            key, _, rest = body.partition(" ")
            if key not in ("strands", "word", "components", "framings"):
                raise ParseError(f"unknown link-file keyword {key!r}", offset)
            if key in fields:
                raise ParseError(f"duplicate keyword {key!r}", offset)
            fields[key] = (_parse_ints(rest, key, offset), offset)
        offset += len(line)
    if "strands" not in fields or len(fields["strands"][0]) != 1:
        raise ParseError("link file needs 'strands <n>'", 0)
    n = fields["strands"][0][0]
    word = fields.get("word", ([], 0))[0]
    try:
        braid = BraidWord(n, word)
        ncyc = len(braid.cycles())
        comps = fields.get("components", (None, 0))[0]
        framings = fields.get("framings", ([0] * ncyc, 0))[0]
        return FramedLink(braid, comps, framings)
    except ValueError as exc:
        raise ParseError(str(exc), fields.get("word", (None, 0))[1]) from None


def format_link_text(link: FramedLink) -> str:
    lines = [
        f"strands {link.braid.strands}",
        "word " + " ".join(map(str, link.braid.letters)),
        "components " + " ".join(map(str, link.components)),
        "framings " + " ".join(map(str, link.framings)),
    ]
    return "\n".join(lines) + "\n"


def chain_colored_invariant(data, framings: Sequence[int], colors: Sequence) -> complex:
    """Colored invariant of the framed chain; colors are labels of ``data``."""
    if len(framings) != len(colors):
        raise ValueError("need one color per chain component")
    idx = [data.index(c) for c in colors]
    w, d = data.twists, data.dims
    n = len(idx)
    if n == 0:
        return 1.0 + 0j
    val = complex(np.prod([w[i] ** a for i, a in zip(idx, framings)]))
    if n == 1:
        return val * d[idx[0]]
    H = data.hopf()
    for x, y in zip(idx, idx[1:]):
        val *= H[x, y]
    for x in idx[1:-1]:
        val /= d[x]
    return val


def chain_coloring_sum(framings, weights, deltas, twists, H) -> complex:
    """sum over colorings of prod weights(c_j) * L_chain(c_1..c_n).

    ``deltas`` are the unknot values entering the chain formula; ``H`` is the
    Hopf matrix on the same label set.  Evaluated as a transfer-matrix
    product, so the cost is linear in the chain length.
    """
    n = len(framings)
    if n == 0:
        return 1.0 + 0j
    weights = np.asarray(weights, dtype=complex)
    twists = np.asarray(twists, dtype=complex)
    deltas = np.asarray(deltas, dtype=complex)
    if n == 1:
        return complex(np.sum(weights * deltas * twists ** framings[0]))
    v = weights * twists ** framings[0]
    for i, a in enumerate(framings[1:], start=1):
        v = (v @ H) * weights * twists ** a
        if i < n - 1:
            v = v / deltas
    return complex(np.sum(v))
