"""Simple objects of the parafermion, diagonal and simple-current extension families.

Every sector record knows its constituent labels, so link invariants of a
sector coloring can be assembled from the constituent theories.  A
constituent is a triple ``(theory, label, conjugated)``: the link value of
the sector is the product over constituents of the constituent link value,
complex conjugated when ``conjugated`` is true, divided by the split
multiplicity ``t`` of the record.
"""
from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass

import numpy as np

from .affine import AffineWeight, build_affine, central_charge, simple_current
from .errors import InvalidExtension
from .modular import ModularData
from .u1 import build_u1


@dataclass(frozen=True)
class Sector:
    label: tuple
    constituents: tuple  # ((theory_key, label, conjugated), ...) of the orbit representative
    dim: float
    twist: complex
    orbit: tuple
    f: int  # orbit length
    t: int  # split multiplicity (number of records sharing this orbit)


@dataclass(frozen=True, eq=False)
class CosetSectorTable:
    family: str
    params: tuple
    sectors: tuple
    rank: float
    anomaly: complex
    central_charge: float
    mu: float

    @property
    def size(self) -> int:
        return len(self.sectors)

    @property
    def dims(self) -> np.ndarray:
        return np.array([s.dim for s in self.sectors])

    @property
    def twists(self) -> np.ndarray:
        return np.array([s.twist for s in self.sectors])

    def gauss_sum(self) -> complex:
        return complex(np.sum(self.twists * self.dims ** 2))


def theory_data(key) -> ModularData:
    """ModularData of a constituent key ('su', N, k) or ('u1', k)."""
    if key[0] == "su":
        return build_affine(key[1], key[2])
    if key[0] == "u1":
        return build_u1(key[1])
    raise KeyError(key)


def coset_rank_anomaly(D_G, D_H, dGH2, c_G, c_H):
    c = c_G - c_H
    return D_G * dGH2 / D_H, cmath.exp(1j * math.pi * c / 4), c


def mu_index(dGH2, mu_G, mu_H):
    return dGH2 ** 2 * mu_G / mu_H


@functools.lru_cache(maxsize=None)
def parafermion_sectors(k: int) -> CosetSectorTable:
    if k < 1:
        raise ValueError("parafermion level must be >= 1")
    G, H = build_affine(2, k), build_u1(k)
    gk, hk = ("su", 2, k), ("u1", k)
    seen, sectors = set(), []
    for two_i in range(k + 1):
        for a in range(2 * k):
            if (two_i + a) % 2 or (two_i, a) in seen:
                continue
            partner = (k - two_i, (a + k) % (2 * k))
            orbit = tuple(sorted({(two_i, a), partner}))
            seen.update(orbit)
            lam = G.labels[two_i]
            sectors.append(Sector(
                label=orbit[0],
                constituents=((gk, lam, False), (hk, a, True)),
                dim=float(G.dims[two_i]),
                twist=G.twists[two_i] / H.twists[a],
                orbit=orbit, f=2, t=1,
            ))
    c_G, c_H = float(central_charge(2, k)), 1.0
    D, anom, c = coset_rank_anomaly(G.rank, H.rank, k, c_G, c_H)
    mu = mu_index(k, G.rank ** 2, H.rank ** 2)
    return CosetSectorTable("parafermion", (k,), tuple(sectors), D, anom, c, mu)


@functools.lru_cache(maxsize=None)
def diagonal_sectors(N: int, m1: int, m2: int) -> CosetSectorTable:
    A, B, C = build_affine(N, m1), build_affine(N, m2), build_affine(N, m1 + m2)
    keys = (("su", N, m1), ("su", N, m2), ("su", N, m1 + m2))
    triples = [
        (x, y, z)
        for x in A.labels for y in B.labels for z in C.labels
        if (x.nality + y.nality - z.nality) % N == 0
    ]
    seen, sectors = set(), []
    for tr in triples:
        if tr in seen:
            continue
        orbit, cur = [], tr
        while cur not in orbit:
            orbit.append(cur)
            cur = tuple(simple_current(w) for w in cur)
        seen.update(orbit)
        f = len(orbit)
        t = N // f
        x, y, z = tr
        ix, iy, iz = A.index(x), B.index(y), C.index(z)
        d = A.dims[ix] * B.dims[iy] * C.dims[iz]
        w = A.twists[ix] * B.twists[iy] / C.twists[iz]
        cons = ((keys[0], x, False), (keys[1], y, False), (keys[2], z, True))
        for piece in range(t):
            sectors.append(Sector(
                label=(x, y, z, piece), constituents=cons,
                dim=float(d / t), twist=complex(w), orbit=tuple(orbit), f=f, t=t,
            ))
    mu_G = (A.rank * B.rank) ** 2
    mu_H = C.rank ** 2
    dGH2 = mu_H / N
    c_G = float(central_charge(N, m1) + central_charge(N, m2))
    c_H = float(central_charge(N, m1 + m2))
    D, anom, c = coset_rank_anomaly(A.rank * B.rank, C.rank, dGH2, c_G, c_H)
    return CosetSectorTable("diagonal", (N, m1, m2), tuple(sectors), D, anom, c,
                            mu_index(dGH2, mu_G, mu_H))


def extension_condition(N: int, k: int, m: int) -> bool:
    if m < 1 or N % m:
        return False
    q = N // m
    return (k * q) % (2 * m if N % 2 == 0 else m) == 0


def extension_labels(N: int, k: int, m: int) -> list[AffineWeight]:
    """P_m: labels of n-ality divisible by m."""
    return [w for w in build_affine(N, k).labels if w.nality % m == 0]


@functools.lru_cache(maxsize=None)
def extension_orbits(N: int, k: int, m: int) -> CosetSectorTable:
    """Objects of the extension of SU(N)_k by the simple current sigma^(N/m).

    Each sigma^q orbit of length f in P_m contributes m/f records of
    dimension f d(lam)/m (multiplicity-free splitting).
    """
    if not extension_condition(N, k, m):
        raise InvalidExtension(f"(N,k,m) = ({N},{k},{m}) violates the extension condition")
    G = build_affine(N, k)
    q = N // m
    key = ("su", N, k)
    seen, sectors = set(), []
    for lam in extension_labels(N, k, m):
        if lam in seen:
            continue
        orbit, cur = [], lam
        while cur not in orbit:
            orbit.append(cur)
            cur = simple_current(cur, q)
        seen.update(orbit)
        f = len(orbit)
        t = m // f
        i = G.index(lam)
        for piece in range(t):
            sectors.append(Sector(
                label=(lam, piece), constituents=((key, lam, False),),
                dim=float(f * G.dims[i] / m), twist=complex(G.twists[i]),
                orbit=tuple(orbit), f=f, t=t,
            ))
    return CosetSectorTable("extension", (N, k, m), tuple(sectors), G.rank / m,
                            G.anomaly, G.central_charge, G.rank ** 2 / m ** 2)


def parafermion_fusion(k: int):
    """Fusion coefficients among parafermion sector classes.

    (i,a) x (j,b) = sum_l N_ij^l (l, a+b), reduced modulo the identification.
    Returns (classes, N) with N[x, y, z] integer.
    """
    table = parafermion_sectors(k)
    G = build_affine(2, k)
    cls_of = {}
    for n, s in enumerate(table.sectors):
        for pair in s.orbit:
            cls_of[pair] = n
    size = table.size
    fus = np.zeros((size, size, size), dtype=np.int64)
    for x, sx in enumerate(table.sectors):
        i, a = sx.label
        for y, sy in enumerate(table.sectors):
            j, b = sy.label
            for l in range(k + 1):
                mult = G.fusion[i, j, l]
                if mult:
                    fus[x, y, cls_of[(l, (a + b) % (2 * k))]] += mult
    return table, fus


def maverick_data_check() -> dict:
    """Checks on the U(1)_6 in SU(2)_3 parafermion table.

    The table should have 6 objects, central charge 0.8, an object y with
    twist exp(2 pi i/15), and objects x, z with x^2 = 1 + x, y ybar = 1 + x,
    z^3 = 1 and y = x z.
    """
    table, fus = parafermion_fusion(3)
    n = table.size
    report = {"objects": n, "central_charge": table.central_charge}
    target = cmath.exp(2j * math.pi / 15)
    ys = [i for i, s in enumerate(table.sectors) if abs(s.twist - target) < 1e-9]
    report["y"] = table.sectors[ys[0]].label if ys else None

    def prod(a, b):
        return fus[a, b]

    def unit(i):
        v = np.zeros(n, dtype=np.int64)
        v[i] = 1
        return v

    def conj(i):
        return next(j for j in range(n) if fus[i, j, 0] == 1)

    found = None
    for y in ys:
        yb = conj(y)
        for x in range(1, n):
            if not np.array_equal(prod(x, x), unit(0) + unit(x)):
                continue
            if not np.array_equal(prod(y, yb), unit(0) + unit(x)):
                continue
            for z in range(1, n):
                z2 = int(np.argmax(prod(z, z)))
                if prod(z, z).sum() != 1 or not np.array_equal(prod(z2, z), unit(0)):
                    continue
                if np.array_equal(prod(x, z), unit(y)):
                    found = (x, y, z)
                    break
            if found:
                break
        if found:
            break
    report["relations"] = found is not None
    if found:
        report["x"], report["y"], report["z"] = (table.sectors[i].label for i in found)
    report["passed"] = bool(
        n == 6 and abs(table.central_charge - 0.8) < 1e-12 and ys and found is not None
    )
    return report


def table_to_modular(table: CosetSectorTable) -> tuple[np.ndarray, np.ndarray]:
    """(dims, twists) of the table, the only data the chain formulas need."""
    return table.dims, table.twists
