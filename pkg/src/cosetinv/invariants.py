"""3-manifold invariants from surgery presentations.

tau = anomaly^(b- - b+) * D^(-n) * sum over colorings of prod_j w(x_j) L(x_1..x_n)

Every theory is turned into a ``ColorModel``: a list of color records with
summation weights and constituent labels.  Link values of a record
coloring factor over constituent theories (SU(2) through the TL engine,
U(1) in closed form, chains through the Hopf matrix).
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import cosets
from .affine import build_affine, su2_spin
from .errors import CapacityExceeded, GcdViolation, InvalidExtension, UnsupportedCombination
from .modular import gauss_anomaly
from .skein.tl import colored_invariant_su2
from .surgery import (
    FramedLink, as_chain_union, chain_coloring_sum, linking_matrix, signature_counts, split_blocks,
)
from .u1 import build_u1, u1_link_invariant

MAX_COMPONENTS = 6
MAX_LABELS = 40


@dataclass(frozen=True)
class Affine:
    N: int
    k: int


@dataclass(frozen=True)
class U1:
    k: int


@dataclass(frozen=True)
class Parafermion:
    k: int


@dataclass(frozen=True)
class Diagonal:
    N: int
    m1: int
    m2: int


@dataclass(frozen=True)
class Extension:
    N: int
    k: int
    m: int


@dataclass(frozen=True)
class PsuRestricted:
    """SU(m) at level n summed over the root-lattice labels only."""
    m: int
    n: int


TheorySpec = Union[Affine, U1, Parafermion, Diagonal, Extension, PsuRestricted]


@dataclass(frozen=True)
class ColorModel:
    name: str
    keys: tuple          # constituent theory keys
    conj: tuple          # conjugate flag per constituent
    labels: tuple        # per record: tuple of constituent labels
    weights: np.ndarray  # summation weight times split factor, per record
    rank: float
    anomaly: complex

    @property
    def size(self) -> int:
        return len(self.labels)

    def _index(self):
        return [
            np.array([cosets.theory_data(key).index(rec[c]) for rec in self.labels])
            for c, key in enumerate(self.keys)
        ]

    def chain_data(self):
        """(deltas, twists, H) over the records, factored over constituents."""
        deltas = np.ones(self.size, dtype=complex)
        twists = np.ones(self.size, dtype=complex)
        H = np.ones((self.size, self.size), dtype=complex)
        for key, cj, idx in zip(self.keys, self.conj, self._index()):
            md = cosets.theory_data(key)
            w, h = md.twists[idx], md.hopf()[np.ix_(idx, idx)]
            if cj:
                w, h = w.conj(), h.conj()
            deltas *= md.dims[idx]
            twists *= w
            H *= h
        return deltas, twists, H


@dataclass(frozen=True)
class TauResult:
    value: complex
    b_plus: int
    b_minus: int
    terms: int
    seconds: float


def _affine_model(N, k, keep=None, rank=None, anomaly=None, name=None):
    md = build_affine(N, k)
    idx = [i for i, lab in enumerate(md.labels) if keep is None or keep(lab)]
    dims = md.dims[idx]
    return ColorModel(
        name=name or md.name, keys=(("su", N, k),), conj=(False,),
        labels=tuple((md.labels[i],) for i in idx), weights=dims.astype(complex),
        rank=md.rank if rank is None else rank,
        anomaly=md.anomaly if anomaly is None else anomaly,
    )


def _table_model(table: cosets.CosetSectorTable) -> ColorModel:
    first = table.sectors[0]
    return ColorModel(
        name=f"{table.family}{table.params}",
        keys=tuple(c[0] for c in first.constituents),
        conj=tuple(c[2] for c in first.constituents),
        labels=tuple(tuple(c[1] for c in s.constituents) for s in table.sectors),
        weights=np.array([s.dim / s.t for s in table.sectors], dtype=complex),
        rank=table.rank, anomaly=table.anomaly,
    )


def color_model(theory) -> ColorModel:
    """The sector-level model used by ``tau``."""
    if isinstance(theory, Affine):
        return _affine_model(theory.N, theory.k)
    if isinstance(theory, U1):
        md = build_u1(theory.k)
        return ColorModel(md.name, (("u1", theory.k),), (False,), tuple((a,) for a in md.labels),
                          md.dims.astype(complex), md.rank, md.anomaly)
    if isinstance(theory, Parafermion):
        return _table_model(cosets.parafermion_sectors(theory.k))
    if isinstance(theory, Diagonal):
        return _table_model(cosets.diagonal_sectors(theory.N, theory.m1, theory.m2))
    if isinstance(theory, Extension):
        return _table_model(cosets.extension_orbits(theory.N, theory.k, theory.m))
    if isinstance(theory, PsuRestricted):
        return psu_model(theory.m, theory.n)
    raise TypeError(f"unknown theory {theory!r}")


def psu_model(m: int, n: int) -> ColorModel:
    if math.gcd(m, n) != 1:
        raise GcdViolation(f"root-lattice restriction needs gcd(m, n) = 1, got ({m}, {n})")
    md = build_affine(m, n)
    keep = [i for i, lab in enumerate(md.labels) if lab.nality == 0]
    D0, gauss = gauss_anomaly(md.twists[keep], md.dims[keep])
    return _affine_model(m, n, keep=lambda lab: lab.nality == 0, rank=D0, anomaly=gauss,
                         name=f"SU({m})_{n}/Z_{m}")


def parafermion_restricted_model(k: int) -> ColorModel:
    G, H = build_affine(2, k), build_u1(k)
    labels, weights = [], []
    for two_i, lam in enumerate(G.labels):
        for a in range(2 * k):
            if (two_i + a) % 2 == 0:
                labels.append((lam, a))
                weights.append(G.dims[two_i] * H.dims[a])
    table = cosets.parafermion_sectors(k)
    return ColorModel(f"parafermion{k}/restricted", (("su", 2, k), ("u1", k)), (False, True),
                      tuple(labels), np.array(weights, dtype=complex),
                      G.rank * H.rank, table.anomaly)


def diagonal_restricted_model(N: int, m1: int, m2: int) -> ColorModel:
    A, B, C = build_affine(N, m1), build_affine(N, m2), build_affine(N, m1 + m2)
    labels, weights = [], []
    for i, x in enumerate(A.labels):
        for j, y in enumerate(B.labels):
            for l, z in enumerate(C.labels):
                if (x.nality + y.nality - z.nality) % N == 0:
                    labels.append((x, y, z))
                    weights.append(A.dims[i] * B.dims[j] * C.dims[l])
    table = cosets.diagonal_sectors(N, m1, m2)
    keys = (("su", N, m1), ("su", N, m2), ("su", N, m1 + m2))
    return ColorModel(f"diagonal{(N, m1, m2)}/restricted", keys, (False, False, True),
                      tuple(labels), np.array(weights, dtype=complex),
                      A.rank * B.rank * C.rank, table.anomaly)


def extension_restricted_model(N: int, k: int, m: int) -> ColorModel:
    if not cosets.extension_condition(N, k, m):
        raise InvalidExtension(f"(N,k,m) = ({N},{k},{m}) violates the extension condition")
    return _affine_model(N, k, keep=lambda lab: lab.nality % m == 0, name=f"SU({N})_{k}/ext{m}")


def so3_model(k: int) -> ColorModel:
    """Integer spins of SU(2)_k with rank D_G/sqrt(2) and the full SU(2)_k anomaly."""
    G = build_affine(2, k)
    return _affine_model(2, k, keep=lambda lab: lab.nality == 0, rank=G.rank / math.sqrt(2),
                         name=f"SO(3)_{k}")


# --- link values -----------------------------------------------------------

def _constituent_link_value(key, link: FramedLink, labels, L):
    if key[0] == "u1":
        return u1_link_invariant(L, labels, key[1])
    _, N, k = key
    if N == 2:
        return colored_invariant_su2(link, [su2_spin(lab) for lab in labels], k)
    raise UnsupportedCombination(
        f"SU({N}) colors beyond the vector representation need a chain presentation")


def _link_sum(model: ColorModel, link: FramedLink, split: bool = True) -> tuple[complex, int]:
    """Coloring sum over a braid link; split sublinks are summed separately."""
    n = link.n
    if n > MAX_COMPONENTS:
        raise CapacityExceeded(f"link has {n} components; the coloring-sum cap is {MAX_COMPONENTS}")
    blocks = split_blocks(link) if split else [link]
    if len(blocks) > 1:
        total, count = 1.0 + 0j, 1
        for b in blocks:
            v, c = _link_sum(model, b, split=False)
            total *= v
            count *= c
        return total, count
    for key in model.keys:
        if key[0] == "su" and key[1] != 2:
            raise UnsupportedCombination(
                f"{model.name}: SU({key[1]}) colors on a braid link are not supported; use a chain")
        size = cosets.theory_data(key).size
        if size > MAX_LABELS:
            raise CapacityExceeded(f"{size} labels exceed the cap of {MAX_LABELS}")
    L = linking_matrix(link)
    caches = [dict() for _ in model.keys]
    total = 0j
    count = 0
    for coloring in itertools.product(range(model.size), repeat=n):
        val = complex(np.prod(model.weights[list(coloring)]))
        for c, key in enumerate(model.keys):
            labs = tuple(model.labels[x][c] for x in coloring)
            if labs not in caches[c]:
                caches[c][labs] = _constituent_link_value(key, link, labs, L)
            v = caches[c][labs]
            val *= v.conjugate() if model.conj[c] else v
        total += val
        count += 1
    return total, count


def evaluate(model: ColorModel, pres) -> TauResult:
    t0 = time.perf_counter()
    L = linking_matrix(pres)
    n = L.shape[0]
    bp, bm = signature_counts(L) if n else (0, 0)
    cu = as_chain_union(pres)
    if cu is not None:
        total = 1.0 + 0j
        if cu.parts:
            deltas, twists, H = model.chain_data()
            for part in cu.parts:
                total *= chain_coloring_sum(part.framings, model.weights, deltas, twists, H)
        terms = model.size ** n
    else:
        total, terms = _link_sum(model, pres)
    value = model.anomaly ** (bm - bp) * model.rank ** (-n) * total
    return TauResult(complex(value), bp, bm, terms, time.perf_counter() - t0)


def tau(theory, pres) -> complex:
    return evaluate(color_model(theory), pres).value


def tau_parafermion(k: int, pres) -> complex:
    return evaluate(parafermion_restricted_model(k), pres).value


def tau_diagonal(N: int, m1: int, m2: int, pres) -> complex:
    if N != 2 and as_chain_union(pres) is None:
        raise UnsupportedCombination(f"diagonal coset with N={N} needs a chain presentation")
    return evaluate(diagonal_restricted_model(N, m1, m2), pres).value


def tau_extension(N: int, k: int, m: int, pres) -> complex:
    return evaluate(extension_restricted_model(N, k, m), pres).value


def tau_psu_restricted(m: int, n: int, pres) -> complex:
    return evaluate(psu_model(m, n), pres).value


def tau_so3(k: int, pres) -> complex:
    """2^{n/2} k_G^{3(b- - b+)} D_G^{-n} sum over integer spins of d L."""
    return evaluate(so3_model(k), pres).value
