"""Exact lattice geometry over row-vector bases.

The lattice attached to a basis matrix g is Z^n g (integer row combinations),
matching the v -> v g convention used throughout the zeta evaluators.
Enumeration is exact: LLL size reduction first, then a coefficient box
derived from the inverse basis guarantees nothing below the radius is
missed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BudgetExceededError,
    DegenerateBasisError,
    DomainError,
    UnsupportedRankError,
)

DEFAULT_ENUMERATION_BUDGET = 10**7

_LLL_DELTA = 0.99


@dataclass(frozen=True)
class LatticeBasis:
    """n x n invertible real matrix whose rows generate a lattice in R^n."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise DegenerateBasisError(f"basis must be square, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise DegenerateBasisError("basis entries must be finite")
        object.__setattr__(self, "matrix", m)
        if abs(np.linalg.det(m)) == 0.0:
            raise DegenerateBasisError("basis matrix is singular")

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class NormSpec:
    """Norm used for successive minima.

    kind 'euclidean' ignores weights; kind 'weighted-sup' computes
    max_i(weights[i] * |x_i|).  The unit-lattice convention puts weight 1 on
    real-place coordinates and 1/2 on complex-log coordinates.
    """

    kind: str = "euclidean"
    weights: tuple = ()

    def __post_init__(self):
        if self.kind not in ("euclidean", "weighted-sup"):
            raise DomainError(f"unknown norm kind {self.kind!r}")
        w = tuple(float(x) for x in self.weights)
        if self.kind == "weighted-sup":
            if not w or any(x <= 0.0 for x in w):
                raise DomainError("weighted-sup norm needs positive weights")
        object.__setattr__(self, "weights", w)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.kind == "euclidean":
            return np.linalg.norm(x, axis=-1)
        w = np.asarray(self.weights)
        return np.max(np.abs(x) * w, axis=-1)


def unit_log_norm(r1: int, r2: int) -> NormSpec:
    """Weighted sup norm on R^(r1+r2): weight 1 real slots, 1/2 complex."""
    return NormSpec("weighted-sup", (1.0,) * r1 + (0.5,) * r2)


@dataclass(frozen=True)
class MinimaReport:
    vectors: np.ndarray  # lattice vectors (rows), linearly independent
    lengths: np.ndarray  # their norms, non-decreasing

    def __post_init__(self):
        if np.any(np.diff(self.lengths) < -1e-12):
            raise DomainError("minima lengths must be non-decreasing")


def as_basis(basis) -> LatticeBasis:
    if isinstance(basis, LatticeBasis):
        return basis
    return LatticeBasis(np.asarray(basis, dtype=float))


def determinant(basis) -> float:
    """Signed determinant of the row matrix; |det| is the covolume."""
    b = as_basis(basis)
    d = float(np.linalg.det(b.matrix))
    if d == 0.0 or not math.isfinite(d):
        raise DegenerateBasisError("singular basis")
    return d


def dual_basis(basis) -> LatticeBasis:
    """Transpose-inverse basis; row Gram pairing with the input is identity."""
    b = as_basis(basis)
    return LatticeBasis(np.linalg.inv(b.matrix).T)


def lll_reduce(basis) -> tuple[np.ndarray, np.ndarray]:
    """LLL-reduce the rows; returns (reduced matrix, unimodular U) with
    reduced = U @ basis."""
    B = as_basis(basis).matrix.copy()
    n = B.shape[0]
    U = np.eye(n, dtype=np.int64)
    if n == 1:
        return B, U

    def gram_schmidt(B):
        Bs = np.zeros_like(B)
        mu = np.zeros((n, n))
        norms2 = np.zeros(n)
        for i in range(n):
            v = B[i].copy()
            for j in range(i):
                mu[i, j] = np.dot(B[i], Bs[j]) / norms2[j]
                v -= mu[i, j] * Bs[j]
            Bs[i] = v
            norms2[i] = np.dot(v, v)
        return Bs, mu, norms2

    Bs, mu, norms2 = gram_schmidt(B)
    k = 1
    guard = 0
    while k < n:
        guard += 1
        if guard > 10000:
            break  # pathological conditioning; partial reduction still valid
        for j in range(k - 1, -1, -1):
            q = round(mu[k, j])
            if q != 0:
                B[k] -= q * B[j]
                U[k] -= q * U[j]
                Bs, mu, norms2 = gram_schmidt(B)
        if norms2[k] >= (_LLL_DELTA - mu[k, k - 1] ** 2) * norms2[k - 1]:
            k += 1
        else:
            B[[k - 1, k]] = B[[k, k - 1]]
            U[[k - 1, k]] = U[[k, k - 1]]
            Bs, mu, norms2 = gram_schmidt(B)
            k = max(k - 1, 1)
    return B, U


def _coefficient_box(B: np.ndarray, radius: float) -> np.ndarray:
    # |c_i| <= radius * ||column i of B^-1|| for any ||c B|| <= radius
    Binv = np.linalg.inv(B)
    bounds = radius * np.linalg.norm(Binv, axis=0)
    return np.floor(bounds + 1e-9).astype(np.int64)


def _enumerate_coeffs(B: np.ndarray, radius: float, budget: int):
    """All integer c != 0 with ||c B||_2 <= radius (exact), plus the norms."""
    n = B.shape[0]
    box = _coefficient_box(B, radius)
    total = 1
    for m in box:
        total *= 2 * int(m) + 1
        if total > 4 * budget:
            raise BudgetExceededError(
                f"enumeration box of {total}+ points exceeds budget {budget}"
            )
    axes = [np.arange(-int(m), int(m) + 1, dtype=np.int64) for m in box]
    grids = np.meshgrid(*axes, indexing="ij")
    C = np.stack(grids, axis=-1).reshape(-1, n)
    norms = np.linalg.norm(C.astype(float) @ B, axis=1)
    mask = (norms <= radius * (1.0 + 1e-12)) & np.any(C != 0, axis=1)
    C = C[mask]
    if C.shape[0] > budget:
        raise BudgetExceededError(
            f"{C.shape[0]} vectors inside radius exceeds budget {budget}"
        )
    return C, norms[mask]


def enumerate_vectors(basis, radius: float, budget: int = DEFAULT_ENUMERATION_BUDGET) -> np.ndarray:
    """All nonzero integer coefficient vectors v with ||v g||_2 <= radius.

    Both v and -v appear.  Output is ordered lexicographically by
    coefficient vector, so results are deterministic.
    """
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    b = as_basis(basis)
    Bred, U = lll_reduce(b)
    C, _ = _enumerate_coeffs(Bred, radius, budget)
    V = C @ U  # back to coefficients w.r.t. the original basis
    order = np.lexsort(V.T[::-1])
    return V[order]


def lattice_norms(basis, radius: float, budget: int = DEFAULT_ENUMERATION_BUDGET) -> np.ndarray:
    """Ascending ||v g||_2 over nonzero v within the radius (pairs included)."""
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    b = as_basis(basis)
    Bred, _ = lll_reduce(b)
    _, norms = _enumerate_coeffs(Bred, radius, budget)
    return np.sort(norms)


def lambda1(basis, budget: int = DEFAULT_ENUMERATION_BUDGET) -> float:
    """Covolume-normalised length of the shortest nonzero lattice vector."""
    b = as_basis(basis)
    Bred, _ = lll_reduce(b)
    row_norms = np.linalg.norm(Bred, axis=1)
    r = float(np.min(row_norms))
    _, norms = _enumerate_coeffs(Bred, r * (1.0 + 1e-12), budget)
    shortest = float(np.min(norms))
    det = abs(np.linalg.det(b.matrix))
    return shortest / det ** (1.0 / b.n)


def successive_minima(generators, norm: NormSpec | None = None,
                      budget: int = DEFAULT_ENUMERATION_BUDGET) -> MinimaReport:
    """Vectors realising the successive minima of a rank-k lattice.

    ``generators`` is a (k, m) row matrix of independent generators, k <= 4
    (exhaustive coefficient search).  Works for lattices embedded in a
    higher-dimensional space, e.g. unit-log lattices inside the trace-zero
    hyperplane.
    """
    G = np.asarray(generators, dtype=float)
    if G.ndim != 2:
        raise DomainError("generators must be a 2-d array")
    k, m = G.shape
    if k > 4:
        raise UnsupportedRankError(f"rank {k} exceeds the supported cap of 4")
    if np.linalg.matrix_rank(G) != k:
        raise DegenerateBasisError("generators are linearly dependent")
    if norm is None:
        norm = NormSpec("euclidean")

    # euclidean radius that covers the norm ball of radius t
    if norm.kind == "euclidean":
        cover = 1.0
    else:
        w = np.asarray(norm.weights)
        if w.shape[0] != m:
            raise DomainError("norm weights do not match the ambient dimension")
        cover = math.sqrt(float(np.sum(1.0 / w**2)))

    t = float(np.max(norm(G))) * 1.0000001
    Gpinv = np.linalg.pinv(G)
    for _ in range(40):
        radius = t * cover
        bounds = radius * np.linalg.norm(Gpinv, axis=0)
        box = np.floor(bounds + 1e-9).astype(np.int64)
        total = 1
        for mm in box:
            total *= 2 * int(mm) + 1
        if total > 4 * budget:
            raise BudgetExceededError("successive minima box exceeds budget")
        axes = [np.arange(-int(mm), int(mm) + 1, dtype=np.int64) for mm in box]
        C = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, k)
        C = C[np.any(C != 0, axis=1)]
        X = C.astype(float) @ G
        lengths = norm(X)
        order = np.argsort(lengths, kind="stable")
        chosen_vecs, chosen_lens, picked = [], [], []
        for idx in order:
            if lengths[idx] > t:
                break
            cand = picked + [C[idx]]
            if np.linalg.matrix_rank(np.asarray(cand)) == len(cand):
                picked.append(C[idx])
                chosen_vecs.append(X[idx])
                chosen_lens.append(float(lengths[idx]))
                if len(picked) == k:
                    return MinimaReport(np.asarray(chosen_vecs), np.asarray(chosen_lens))
        t *= 2.0
    raise RuntimeError("successive minima search failed to converge")


def dual_lambda1_inequality_check(basis, slack: float = 1e-9) -> bool:
    """lambda1(dual)^(n-1) <= (2^(n-1) / V_(n-1)) * lambda1(g).

    A theorem (Minkowski's first theorem applied to a sublattice of the
    dual), so this must always hold; exposed as a test hook.  ``slack``
    absorbs floating-point noise in the exact-equality cases.
    """
    b = as_basis(basis)
    n = b.n
    lam = lambda1(b)
    lam_dual = lambda1(dual_basis(b))
    vball = ball_volume(n - 1)
    lhs = lam_dual ** (n - 1)
    rhs = (2.0 ** (n - 1) / vball) * lam
    return lhs <= rhs * (1.0 + slack)


def ball_volume(d: int) -> float:
    """Volume of the d-dimensional Euclidean unit ball (V_0 = 1)."""
    if d < 0:
        raise DomainError("dimension must be non-negative")
    return math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1.0)
