"""Self-check suites used by ``cosetinv verify``.

Each check returns ``(name, passed, detail)``.
"""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from . import cosets
from .affine import build_affine, level_rank_beta, vector_fusion, vector_label
from .invariants import (
    Diagonal, Extension, Parafermion, tau, tau_diagonal, tau_extension,
    tau_parafermion, tau_psu_restricted, tau_so3,
)
from .modular import associativity_error, genus_zero_error, relation_errors
from .skein.hecke import hecke_vector_invariant
from .skein.tl import colored_invariant_su2
from .surgery import BraidWord, Chain, FramedLink, Lens
from .u1 import build_u1, tau_u1_mod_z2

TOL = 1e-9

TREFOIL = FramedLink(BraidWord(2, (1, 1, 1)), None, (0,))
FIGURE_EIGHT = FramedLink(BraidWord(3, (1, -2, 1, -2)), None, (0,))
HOPF = FramedLink(BraidWord(2, (1, 1)), None, (0, 0))


def _check(name, err, tol=TOL):
    return name, bool(err < tol), f"max_err={err:.3e}"


def modular_suite():
    out = []
    worst = worst_g = 0.0
    for N in (2, 3, 4):
        for k in range(1, 7):
            md = build_affine(N, k)
            worst = max(worst, max(relation_errors(md).values()))
            worst_g = max(worst_g, genus_zero_error(md))
    for k in range(1, 9):
        worst = max(worst, max(relation_errors(build_u1(k)).values()))
    out.append(_check("modular_relations", worst))
    out.append(_check("genus0_equals_genus1", worst_g))
    bad = 0
    for N in (2, 3, 4):
        for k in range(1, 7):
            md = build_affine(N, k)
            v = md.index(vector_label(N, k))
            bad += associativity_error(md.fusion)
            for i, lab in enumerate(md.labels):
                expect = {md.index(x) for x in vector_fusion(lab)}
                got = set(np.nonzero(md.fusion[v, i])[0].tolist())
                bad += int(expect != got or md.fusion[v, i].max() > 1)
    out.append(("fusion_vector_rule_and_associativity", bad == 0, f"mismatches={bad}"))
    return out


def _random_braid(rng, n, length):
    return BraidWord(n, [rng.choice([-1, 1]) * rng.randint(1, n - 1) for _ in range(length)])


def skein_suite(max_k=6):
    out = []
    worst = 0.0
    for k in range(1, max_k + 1):
        H = build_affine(2, k).hopf()
        for a in range(k + 1):
            for b in range(k + 1):
                v = colored_invariant_su2(HOPF, [Fraction(a, 2), Fraction(b, 2)], k)
                worst = max(worst, abs(v - H[a, b]))
    out.append(_check("hopf_oracle", worst))
    worst = 0.0
    for k in range(1, 7):
        for L in (TREFOIL, FIGURE_EIGHT):
            worst = max(worst, abs(hecke_vector_invariant(L, 2, k)
                                   - colored_invariant_su2(L, [Fraction(1, 2)], k)))
    out.append(_check("hecke_equals_tl", worst))
    rng = random.Random(7)
    worst = 0.0
    half = Fraction(1, 2)
    for _ in range(10):
        n = rng.randint(3, 4)
        b = _random_braid(rng, n, rng.randint(1, 6))
        link = FramedLink(b, None, [0] * len(b.cycles()))
        i = rng.randint(1, n - 2)
        pos = rng.randint(0, len(b.letters))
        variants = [
            b.letters[:pos] + (i, -i) + b.letters[pos:],
            b.letters[:pos] + (i, i + 1, i, -i - 1, -i, -i - 1) + b.letters[pos:],
            b.letters[1:] + b.letters[:1],
        ]
        for k in (2, 3):
            v = colored_invariant_su2(link, [half] * link.n, k)
            for word in variants:
                other = FramedLink(BraidWord(n, word), None, [0] * link.n)
                worst = max(worst, abs(v - colored_invariant_su2(other, [half] * link.n, k)))
    out.append(_check("reidemeister_and_markov", worst))
    return out


def coset_suite():
    out = []
    t13 = cosets.diagonal_sectors(2, 2, 2).size
    t3 = cosets.extension_orbits(2, 4, 2).size
    out.append(("sector_counts", t13 == 13 and t3 == 3, f"diagonal(2,2,2)={t13} extension(2,4,2)={t3}"))
    worst = 0.0
    tables = [cosets.parafermion_sectors(k) for k in (2, 3, 4, 5)]
    tables += [cosets.diagonal_sectors(*p) for p in ((2, 1, 1), (2, 2, 2), (3, 1, 1))]
    tables += [cosets.extension_orbits(*p) for p in ((2, 4, 2), (2, 8, 2), (3, 3, 3))]
    for t in tables:
        worst = max(worst, abs(float(np.sum(t.dims ** 2)) - t.mu) / t.mu)
    out.append(_check("mu_index", worst, 1e-6))
    rep = cosets.maverick_data_check()
    out.append(("maverick", rep["passed"], f"objects={rep['objects']} c={rep['central_charge']:.3g}"))
    worst = 0.0
    for M in _criterion6_manifolds():
        worst = max(worst, abs(tau(Extension(2, 4, 2), M) - tau_extension(2, 4, 2, M)))
        worst = max(worst, abs(tau(Diagonal(2, 1, 1), M) - tau_diagonal(2, 1, 1, M)))
    out.append(_check("two_path_agreement", worst))
    return out


def _criterion6_manifolds():
    return [Lens(p, 1) for p in range(1, 9)] + [
        Chain((2, 3)), Chain((3, 2, 2)),
        FramedLink(BraidWord(2, (1, 1, 1)), None, (1,)),
        FramedLink(BraidWord(3, (1, 1, 2, 2)), None, (1, -2, 3)),
    ]


def crossfamily_suite():
    out = []
    worst = 0.0
    for m, n in ((2, 3), (3, 2), (2, 5)):
        A, B = build_affine(m, n), build_affine(n, m)
        for i, lab in enumerate(A.labels):
            j = B.index(level_rank_beta(lab))
            worst = max(worst, abs(A.S[i, 0] - np.sqrt(n / m) * B.S[j, 0]))
    out.append(_check("level_rank_S", worst))
    worst = max(abs(tau_psu_restricted(3, 2, Lens(p, 1)) - np.conj(tau_psu_restricted(2, 3, Lens(p, 1))))
                for p in range(1, 7))
    out.append(_check("level_rank_tau", worst))
    worst = max(abs(tau(Diagonal(2, 1, 1), M) - tau(Parafermion(2), M)) for M in _criterion6_manifolds())
    out.append(_check("ising_equals_parafermion2", worst))
    worst = 0.0
    link = FramedLink(BraidWord(2, (1, 1)), None, (2, -1))
    for k in (3, 5):
        for M in [Lens(p, 1) for p in range(1, 8)] + [link]:
            lhs = tau_parafermion(k, M)
            worst = max(worst, abs(lhs - tau_so3(k, M) * np.conj(tau_u1_mod_z2(M, k))))
    out.append(_check("parafermion_factorization", worst))
    return out


SUITES = {
    "modular": modular_suite,
    "skein": skein_suite,
    "coset": coset_suite,
    "crossfamily": crossfamily_suite,
}


def run(name: str):
    if name == "all":
        return [r for s in SUITES.values() for r in s()]
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
