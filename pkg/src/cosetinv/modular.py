"""Generic modular data container and the checks that go with it.

All matrices are indexed by position in ``ModularData.labels``; position 0
is always the vacuum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Sequence

import numpy as np

from .errors import DegenerateTheory, NonIntegralFusion, UnknownColor

EPS = 1e-9
INT_TOL = 1e-6


def phase(x) -> complex:
    """exp(2 pi i x) with the argument reduced mod 1 first.

    Exact ``Fraction`` inputs are reduced exactly, so that e.g. ``phase(3/2)``
    is -1 to machine precision.
    """
    if isinstance(x, (Fraction, int)):
        x = Fraction(x) % 1
        x = float(x)
    else:
        x = float(x) % 1.0
    return complex(np.exp(2j * np.pi * x))


@dataclass(frozen=True, eq=False)
class ModularData:
    name: str
    labels: tuple
    S: np.ndarray
    twists: np.ndarray
    dims: np.ndarray
    fusion: np.ndarray
    conj: tuple
    rank: float
    anomaly: complex
    central_charge: float
    _index: dict = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})
        for arr in (self.S, self.twists, self.dims, self.fusion):
            arr.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def Tdiag(self) -> np.ndarray:
        return self.twists * np.exp(-2j * np.pi * self.central_charge / 24)

    @property
    def T(self) -> np.ndarray:
        return np.diag(self.Tdiag)

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownColor(f"{label!r} is not a label of {self.name}") from None

    def hopf(self) -> np.ndarray:
        """0-framed Hopf link values H(i,j) = sum_k N_ij^k (w_k / w_i w_j) d_k."""
        return hopf_matrix(self.fusion, self.twists, self.dims)


def y_matrix(fusion, twists, dims) -> np.ndarray:
    w = np.asarray(twists)
    return np.einsum("ijk,k->ij", fusion, dims / w) * np.outer(w, w)


def hopf_matrix(fusion, twists, dims) -> np.ndarray:
    w = np.asarray(twists)
    return np.einsum("ijk,k->ij", fusion, dims * w) / np.outer(w, w)


def verlinde_fusion(S: np.ndarray, tol: float = INT_TOL) -> np.ndarray:
    """Fusion tensor N[i, j, k] = N_ij^k from a unitary S matrix."""
    S = np.asarray(S, dtype=complex)
    if np.any(np.abs(S[0]) < 1e-14):
        raise DegenerateTheory("S has a vanishing vacuum row entry")
    raw = np.einsum("im,jm,km->ijk", S, S, S.conj() / S[0])
    out = np.rint(raw.real)
    bad = (np.abs(raw - out) > tol) | (out < 0)
    if np.any(bad):
        i, j, k = np.argwhere(bad)[0]
        raise NonIntegralFusion(f"N[{i},{j},{k}] = {raw[i, j, k]:.9g} is not a nonnegative integer")
    return out.astype(np.int64)


def conjugation_from_S(S: np.ndarray) -> tuple:
    C = S @ S
    perm = []
    for row in C:
        j = int(np.argmax(np.abs(row)))
        if abs(row[j] - 1) > INT_TOL:
            raise DegenerateTheory("S^2 is not a permutation matrix")
        perm.append(j)
    return tuple(perm)


def gauss_anomaly(twists, dims):
    """Return (D, p+/D) for the given twists and dimensions."""
    D = float(np.sqrt(np.sum(np.asarray(dims) ** 2)))
    return D, complex(np.sum(np.asarray(twists) * np.asarray(dims) ** 2) / D)


def from_fusion_and_twists(name, labels, fusion, twists, central_charge) -> ModularData:
    """Derive S from fusion and twists via the Y matrix, then assemble.

    Dimensions are the Perron-Frobenius eigenvalues of the fusion matrices.
    """
    n = len(labels)
    fusion = np.asarray(fusion, dtype=np.int64)
    twists = np.asarray(twists, dtype=complex)
    # Perron-Frobenius vector of a generic positive combination of fusion matrices
    M = np.einsum("ijk,i->jk", fusion, np.linspace(1.0, 2.0, n))
    vals, vecs = np.linalg.eig(M.T)
    v = np.abs(vecs[:, int(np.argmax(vals.real))].real)
    dims = v / v[0]
    Y = y_matrix(fusion, twists, dims)
    Dm = np.sum(dims ** 2 / twists)
    S = Y / abs(Dm)
    if np.max(np.abs(S @ S.conj().T - np.eye(n))) > EPS:
        raise DegenerateTheory(f"{name}: derived S is not unitary")
    D, anom = gauss_anomaly(twists, dims)
    return ModularData(
        name=name,
        labels=tuple(labels),
        S=S,
        twists=twists,
        dims=dims,
        fusion=fusion,
        conj=conjugation_from_S(S),
        rank=D,
        anomaly=anom,
        central_charge=float(central_charge),
    )


def relation_errors(md: ModularData) -> dict:
    """Max absolute deviation for each modular-data relation."""
    S, T, n = md.S, md.T, md.size
    I = np.eye(n)
    C = np.zeros((n, n))
    for i, j in enumerate(md.conj):
        C[i, j] = 1.0
    w, d = md.twists, md.dims
    err = {
        "unitary_S": np.max(np.abs(S @ S.conj().T - I)),
        "unitary_T": np.max(np.abs(T @ T.conj().T - I)),
        "TSTST=S": np.max(np.abs(T @ S @ T @ S @ T - S)),
        "S^2=C": np.max(np.abs(S @ S - C)),
        "TC=CT": np.max(np.abs(T @ C - C @ T)),
        "symmetric_S": np.max(np.abs(S - S.T)),
        "dims": np.max(np.abs(d - (S[0] / S[0, 0]).real)) + max(0.0, -float(np.min(d))),
        "rank": abs(md.rank ** 2 - np.sum(d ** 2)),
        "anomaly": abs(np.sum(w * d ** 2) / md.rank - md.anomaly),
        "anomaly_inv": abs(np.sum(d ** 2 / w) / md.rank - 1 / md.anomaly),
        "twist_conj": np.max(np.abs(w - w[list(md.conj)])),
    }
    return {k: float(v) for k, v in err.items()}


def genus_zero_error(md: ModularData) -> float:
    """max |Y/|D_-| - S|."""
    Y = y_matrix(md.fusion, md.twists, md.dims)
    Dm = np.sum(md.dims ** 2 / md.twists)
    return float(np.max(np.abs(Y / abs(Dm) - md.S)))


def y_symmetry_error(md: ModularData) -> float:
    Y = y_matrix(md.fusion, md.twists, md.dims)
    c = list(md.conj)
    return float(max(
        np.max(np.abs(Y - Y.T)),
        np.max(np.abs(Y - Y[:, c].conj())),
        np.max(np.abs(Y - Y[np.ix_(c, c)])),
    ))


def associativity_error(fusion: np.ndarray) -> int:
    """max |(ij)k - i(jk)| over all fusion channels."""
    n = fusion.shape[0]
    F = fusion.astype(float)
    flat_right = F.reshape(n, n * n)
    flat_left = F.reshape(n * n, n)
    worst = 0.0
    for i in range(n):
        left = F[i] @ flat_right            # [j, (k, l)]
        right = flat_left @ F[i]            # [(j, k), l]
        worst = max(worst, float(np.max(np.abs(left - right.reshape(n, n * n)))))
    return int(round(worst))


def check(md: ModularData, tol: float = EPS) -> list[str]:
    """Names of the relations violated beyond ``tol`` (empty when all hold)."""
    bad = [k for k, v in relation_errors(md).items() if v > tol]
    if genus_zero_error(md) > tol:
        bad.append("genus0=genus1")
    if associativity_error(md.fusion):
        bad.append("associativity")
    return bad


def restrict_labels(md: ModularData, keep: Sequence[int]):
    """(dims, twists) restricted to the given label positions."""
    keep = list(keep)
    return md.dims[keep], md.twists[keep]
