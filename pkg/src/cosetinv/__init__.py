"""Quantum invariants of 3-manifolds from SU(N)_k, U(1) and coset modular data."""
from .affine import (
    AffineWeight, build_affine, central_charge, conformal_weight, enumerate_weights,
    kac_peterson_S, level_rank_beta, simple_current,
)
from .cosets import (
    CosetSectorTable, coset_rank_anomaly, diagonal_sectors, extension_orbits,
    maverick_data_check, mu_index, parafermion_sectors,
)
from .invariants import (
    Affine, Diagonal, Extension, Parafermion, PsuRestricted, U1, color_model, evaluate, tau,
    tau_diagonal, tau_extension, tau_parafermion, tau_psu_restricted, tau_so3,
)
from .modular import ModularData, verlinde_fusion
from .surgery import (
    BraidWord, Chain, ChainUnion, FramedLink, Lens, chain_colored_invariant, lens_to_chain,
    linking_matrix, signature_counts,
)
from .u1 import build_u1, gauss_sum, tau_u1_mod_z2, u1_link_invariant

__all__ = [
    "Affine",
    "AffineWeight",
    "BraidWord",
    "Chain",
    "ChainUnion",
    "CosetSectorTable",
    "Diagonal",
    "Extension",
    "FramedLink",
    "Lens",
    "ModularData",
    "Parafermion",
    "PsuRestricted",
    "U1",
    "build_affine",
    "build_u1",
    "central_charge",
    "chain_colored_invariant",
    "color_model",
    "conformal_weight",
    "coset_rank_anomaly",
    "diagonal_sectors",
    "enumerate_weights",
    "evaluate",
    "extension_orbits",
    "gauss_sum",
    "kac_peterson_S",
    "lens_to_chain",
    "level_rank_beta",
    "linking_matrix",
    "maverick_data_check",
    "mu_index",
    "parafermion_sectors",
    "signature_counts",
    "simple_current",
    "tau",
    "tau_diagonal",
    "tau_extension",
    "tau_parafermion",
    "tau_psu_restricted",
    "tau_so3",
    "tau_u1_mod_z2",
    "u1_link_invariant",
    "verlinde_fusion",
]

__version__ = "0.1.0"
