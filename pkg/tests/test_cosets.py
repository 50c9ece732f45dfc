import cmath
import math

import numpy as np
import pytest

from cosetinv.affine import AffineWeight, build_affine, central_charge
from cosetinv.cosets import (
    coset_rank_anomaly, diagonal_sectors, extension_condition, extension_labels,
    extension_orbits, maverick_data_check, mu_index, parafermion_fusion, parafermion_sectors,
)
from cosetinv.errors import InvalidExtension
from cosetinv.modular import check, from_fusion_and_twists, gauss_anomaly

E16 = cmath.exp(2j * math.pi / 16)


def _all_tables():
    out = [parafermion_sectors(k) for k in range(1, 7)]
    out += [diagonal_sectors(*p) for p in ((2, 1, 1), (2, 1, 2), (2, 2, 2), (2, 1, 3), (3, 1, 1), (3, 1, 2))]
    out += [extension_orbits(*p) for p in ((2, 4, 2), (2, 8, 2), (3, 3, 3), (2, 2, 1), (4, 2, 2))]
    return out


@pytest.mark.parametrize("k,count", [(1, 1), (2, 3), (3, 6), (4, 10), (5, 15)])
def test_parafermion_counts(k, count):
    assert parafermion_sectors(k).size == count


def test_parafermion_k2_twist():
    t = parafermion_sectors(2)
    assert any(s.label == (1, 1) and abs(s.twist - E16) < 1e-12 for s in t.sectors)
    assert sorted(round(s.dim, 9) for s in t.sectors) == [1, 1, round(math.sqrt(2), 9)]


@pytest.mark.parametrize("k", range(1, 7))
def test_parafermion_identification_consistent(k):
    G = build_affine(2, k)
    from cosetinv.u1 import build_u1
    H = build_u1(k)
    for two_i in range(k + 1):
        for a in range(2 * k):
            if (two_i + a) % 2:
                continue
            b, beta = k - two_i, (a + k) % (2 * k)
            assert abs(G.dims[two_i] - G.dims[b]) < 1e-12
            assert abs(G.twists[two_i] / H.twists[a] - G.twists[b] / H.twists[beta]) < 1e-9


@pytest.mark.parametrize("k", range(2, 7))
def test_parafermion_central_charge_and_mu(k):
    t = parafermion_sectors(k)
    assert abs(t.central_charge - (2 * k - 2) / (k + 2)) < 1e-12
    mu_G = build_affine(2, k).rank ** 2
    assert abs(t.mu - k * mu_G / 2) < 1e-9
    assert abs(np.sum(t.dims ** 2) - t.mu) / t.mu < 1e-6


@pytest.mark.parametrize("k", range(2, 7))
def test_parafermion_is_modular(k):
    # with no fixed points the sector classes form a modular category of their own
    t, fus = parafermion_fusion(k)
    md = from_fusion_and_twists(f"pf{k}", [s.label for s in t.sectors], fus, t.twists, t.central_charge)
    assert check(md) == []
    assert np.allclose(md.dims, t.dims, atol=1e-9)
    assert abs(md.rank - t.rank) < 1e-9
    assert abs(md.anomaly - t.anomaly) < 1e-9


def test_ising_diagonal():
    t = diagonal_sectors(2, 1, 1)
    assert t.size == 3
    assert abs(t.central_charge - 0.5) < 1e-12
    pairs = {(round(s.dim, 9), round(s.twist.real, 9), round(s.twist.imag, 9)) for s in t.sectors}
    expect = {(1.0, 1.0, 0.0), (round(math.sqrt(2), 9), round(E16.real, 9), round(E16.imag, 9)), (1.0, -1.0, 0.0)}
    assert {(a, b + 0.0, c + 0.0) for a, b, c in pairs} == expect
    mu_G = build_affine(2, 1).rank ** 4
    mu_H = build_affine(2, 2).rank ** 2
    assert abs(t.mu - mu_H * mu_G / 4) < 1e-9
    assert abs(np.sum(t.dims ** 2) - 4) < 1e-9


def test_diagonal_13_sectors_with_split_fixed_point():
    t = diagonal_sectors(2, 2, 2)
    assert t.size == 13
    split = [s for s in t.sectors if s.t > 1]
    assert len(split) == 2
    half, one = AffineWeight((2,), 2), AffineWeight((3,), 4)
    assert all(s.label[:3] == (half, half, one) for s in split)
    raw = build_affine(2, 2).dims[1] ** 2 * build_affine(2, 4).dims[2]
    assert all(abs(s.dim - raw / 2) < 1e-12 for s in split)


@pytest.mark.parametrize("p", [(2, 1, 1), (2, 2, 2), (2, 1, 3), (3, 1, 1), (3, 2, 1)])
def test_diagonal_orbit_twist_constant_and_selection(p):
    N = p[0]
    A, B, C = (build_affine(N, m) for m in (p[1], p[2], p[1] + p[2]))
    t = diagonal_sectors(*p)
    for s in t.sectors:
        for x, y, z in s.orbit:
            assert (x.nality + y.nality - z.nality) % N == 0
            w = A.twists[A.index(x)] * B.twists[B.index(y)] / C.twists[C.index(z)]
            assert abs(w - s.twist) < 1e-9
        assert s.f * s.t == N


@pytest.mark.parametrize("table", _all_tables(), ids=lambda t: f"{t.family}{t.params}")
def test_table_invariants(table):
    assert abs(np.sum(table.dims ** 2) - table.mu) / table.mu < 1e-6
    assert np.allclose(np.abs(table.twists), 1, atol=1e-12)
    vac = table.sectors[0]
    assert abs(vac.dim - 1) < 1e-12 and abs(vac.twist - 1) < 1e-12
    assert np.all(table.dims > 0)
    if table.family != "extension":
        D, anomaly = gauss_anomaly(table.twists, table.dims)
        assert abs(D - table.rank) < 1e-9
        assert abs(anomaly - table.anomaly) < 1e-9


@pytest.mark.parametrize("table", _all_tables(), ids=lambda t: f"{t.family}{t.params}")
def test_conjugation_closes(table):
    orbits = {o for s in table.sectors for o in s.orbit}
    for s in table.sectors:
        cons = []
        for key, lab, _ in s.constituents:
            if key[0] == "u1":
                cons.append((-lab) % (2 * key[1]))
            else:
                cons.append(AffineWeight(lab.components[::-1], lab.level))
        # the conjugate labels lie on some orbit of the table
        if table.family == "parafermion":
            two_i = cons[0].components[0] - 1
            assert (two_i, cons[1]) in orbits
        elif table.family == "diagonal":
            assert tuple(cons) in orbits
        else:
            assert cons[0] in orbits


def test_extension_242():
    t = extension_orbits(2, 4, 2)
    assert t.size == 3
    assert [w.components[0] - 1 for w in extension_labels(2, 4, 2)] == [0, 2, 4]
    assert np.allclose(t.dims, 1)
    fixed = [s for s in t.sectors if s.f == 1]
    assert len(fixed) == 2 and all(s.label[0] == AffineWeight((3,), 4) for s in fixed)
    G = build_affine(2, 4)
    assert abs(t.mu - G.rank ** 2 / 4) < 1e-9
    assert abs(np.sum(t.dims ** 2) - t.mu) < 1e-9
    assert abs(t.rank - G.rank / 2) < 1e-12
    assert abs(t.anomaly - G.anomaly) < 1e-12


@pytest.mark.parametrize("k1", [1, 2, 3])
def test_extension_su2_count(k1):
    # D-series at level 4 k1 has k1 + 2 objects
    assert extension_orbits(2, 4 * k1, 2).size == k1 + 2


def test_extension_condition():
    assert extension_condition(2, 4, 2)
    assert not extension_condition(2, 2, 2)
    assert extension_condition(3, 3, 3)
    assert not extension_condition(3, 2, 3)
    assert not extension_condition(4, 2, 3)
    with pytest.raises(InvalidExtension):
        extension_orbits(2, 3, 2)


def test_coset_rank_anomaly_examples():
    D, anom, c = coset_rank_anomaly(2.0, 2.0, 2.0, 2.0, 1.5)
    assert c == 0.5 and abs(anom - cmath.exp(1j * math.pi / 8)) < 1e-12 and D == 2.0
    D, anom, c = coset_rank_anomaly(3.0, 1.0, 1.0, 1.0, 0.0)
    assert D == 3.0 and abs(anom - cmath.exp(1j * math.pi / 4)) < 1e-12
    for k in range(1, 6):
        assert float(central_charge(2, k)) - 1 == pytest.approx((2 * k - 2) / (k + 2))


def test_mu_index_examples():
    assert mu_index(1.0, 5.0, 1.0) == 5.0
    k, mu_G = 3, 7.0
    assert mu_index(k, mu_G, 2 * k) == pytest.approx(k * mu_G / 2)
    N, mu_H = 2, 8.0
    assert mu_index(mu_H / N, mu_G, mu_H) == pytest.approx(mu_H * mu_G / N ** 2)


def test_maverick():
    rep = maverick_data_check()
    assert rep["passed"]
    assert rep["objects"] == 6
    assert abs(rep["central_charge"] - 0.8) < 1e-12
    assert rep["relations"]
    t = parafermion_sectors(3)
    y = next(s for s in t.sectors if s.label == rep["y"])
    assert abs(y.twist - cmath.exp(2j * math.pi / 15)) < 1e-12
