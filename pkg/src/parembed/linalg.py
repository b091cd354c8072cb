"""Dense symmetric eigendecomposition and square SVD, self-contained.

The eigensolver is a cyclic Jacobi iteration over tournament rounds: each
round rotates on pairwise-disjoint (p, q) index pairs, so all rotations of
a round commute and are applied with vectorized row/column updates. Every
unordered pair is visited once per sweep.
"""

from __future__ import annotations

import numpy as np


def _tournament_rounds(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Round-robin schedule: n-1 rounds of disjoint index pairs covering all pairs."""
    count = n if n % 2 == 0 else n + 1
    players = list(range(count))
    rounds = []
    for _ in range(count - 1):
        half = count // 2
        p = np.array(players[:half])
        q = np.array(players[count - 1:half - 1:-1])
        keep = (p < n) & (q < n)  # drop the bye slot for odd n
        rounds.append((np.minimum(p, q)[keep], np.maximum(p, q)[keep]))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def symmetric_eigh(m, tol: float = 1e-13, max_sweeps: int = 60):
    """Eigendecomposition of a real symmetric matrix.

    Returns (w, v) with m ~= v @ diag(w) @ v.T and orthonormal columns in v.
    Eigenvalues are in the order the iteration leaves them; callers sort.
    """
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.isfinite(a).all():
        raise ValueError("matrix entries must be finite")
    n = a.shape[0]
    v = np.eye(n)
    if n < 2:
        return np.diag(a).copy(), v
    a = (a + a.T) / 2.0
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v

    rounds = _tournament_rounds(n)
    skip = tol * scale / (2 * n)
    for _ in range(max_sweeps):
        off = np.sqrt(max((a * a).sum() - (np.diag(a) ** 2).sum(), 0.0))
        if off <= tol * scale:
            break
        for p_all, q_all in rounds:
            apq = a[p_all, q_all]
            live = np.abs(apq) > skip
            if not live.any():
                continue
            p, q, apq = p_all[live], q_all[live], apq[live]
            with np.errstate(over="ignore"):
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
            t = np.where(np.isfinite(t), t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c

            rp, rq = a[p, :], a[q, :]
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p], a[:, q]
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p], v[:, q]
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c
    return np.diag(a).copy(), v


def singular_spectrum(m) -> np.ndarray:
    """Singular values of a symmetric matrix: |eigenvalues| sorted descending."""
    w, _ = symmetric_eigh(m)
    return np.sort(np.abs(w))[::-1]


def sorted_eigh(m):
    """Eigenpairs of a symmetric matrix sorted by descending |eigenvalue|."""
    w, v = symmetric_eigh(m)
    order = np.argsort(-np.abs(w), kind="stable")
    return w[order], v[:, order]


def _orthonormal_complete(u: np.ndarray, ncols: int) -> np.ndarray:
    """Extend the first ncols orthonormal columns of u to a full basis (MGS)."""
    d = u.shape[0]
    filled = ncols
    for j in range(d):
        if filled == d:
            break
        cand = np.zeros(d)
        cand[j] = 1.0
        for i in range(filled):
            cand -= (u[:, i] @ cand) * u[:, i]
        norm = np.linalg.norm(cand)
        if norm > 0.5:
            u[:, filled] = cand / norm
            filled += 1
    if filled < d:
        raise RuntimeError("failed to complete orthonormal basis")
    return u


def square_svd(s):
    """SVD of a square matrix: s = u @ diag(sigma) @ vt, sigma descending.

    Built on the symmetric eigendecomposition of s.T @ s; left vectors for
    numerically zero singular values are completed to an orthonormal basis,
    which keeps u orthogonal (the factorization is then non-unique, as usual).
    """
    s = np.asarray(s, dtype=np.float64)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise ValueError("matrix must be square")
    d = s.shape[0]
    w, v = symmetric_eigh(s.T @ s)
    order = np.argsort(-w, kind="stable")
    sigma = np.sqrt(np.clip(w[order], 0.0, None))
    v = v[:, order]
    u = np.zeros((d, d))
    cutoff = max(sigma[0] if d else 0.0, 1.0) * d * np.finfo(np.float64).eps
    rank = int((sigma > cutoff).sum())
    if rank:
        u[:, :rank] = (s @ v[:, :rank]) / sigma[:rank]
        # re-orthonormalize against accumulated roundoff in clustered spectra
        for i in range(rank):
            for j in range(i):
                u[:, i] -= (u[:, j] @ u[:, i]) * u[:, j]
            u[:, i] /= np.linalg.norm(u[:, i])
    u = _orthonormal_complete(u, rank)
    return u, sigma, v.T
