"""Two-point resistance as a sum over nonzero Laplacian eigenmodes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedNetworkError, MultipleZeroModesError, NodeIndexError
from .network import Laplacian

# An eigenvalue below this fraction of the largest one is a zero mode.
ZERO_MODE_RTOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigensystem of a network Laplacian, eigenvalues ascending.

    Column i of ``eigenvectors`` belongs to ``eigenvalues[i]``.  Zero modes
    (one per connected component) are flagged by index and excluded from
    resistance sums.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    zero_modes: tuple[int, ...]

    @property
    def n(self) -> int:
        return int(self.eigenvalues.shape[0])

    @property
    def zero_mode_index(self) -> int:
        return self.zero_modes[0]

    @property
    def is_connected(self) -> bool:
        return len(self.zero_modes) == 1


def _component_count(matrix: np.ndarray) -> int:
    """Connected components of the graph underlying a Laplacian."""
    n = matrix.shape[0]
    seen = [False] * n
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for other in np.nonzero(matrix[node])[0]:
                if other != node and not seen[other]:
                    seen[other] = True
                    queue.append(int(other))
    return count


def decompose(lap: Laplacian) -> Spectrum:
    """Dense symmetric eigendecomposition with zero-mode accounting.

    Deterministic for identical input.  Raises MultipleZeroModesError when
    the number of near-zero eigenvalues differs from the number of graph
    components, which signals numerical failure.
    """
    w, v = np.linalg.eigh(lap.matrix)
    top = float(w[-1])
    threshold = ZERO_MODE_RTOL * top if top > 0 else ZERO_MODE_RTOL
    zero_modes = tuple(int(k) for k in np.nonzero(w < threshold)[0])
    components = _component_count(lap.matrix)
    if len(zero_modes) != components:
        raise MultipleZeroModesError(
            f"{len(zero_modes)} near-zero eigenvalues but {components} "
            f"connected component(s)"
        )
    w.setflags(write=False)
    v.setflags(write=False)
    return Spectrum(eigenvalues=w, eigenvectors=v, zero_modes=zero_modes)


def _require_connected(spec: Spectrum) -> None:
    if not spec.is_connected:
        raise DisconnectedNetworkError(
            "resistance is undefined across components "
            f"({len(spec.zero_modes)} zero modes)"
        )


def two_point_resistance(spec: Spectrum, alpha: int, beta: int) -> float:
    """Resistance between two nodes from the nonzero eigenmodes.

    Sums |psi_i(alpha) - psi_i(beta)|^2 / lambda_i over modes with
    lambda_i > 0; returns 0 for alpha == beta.
    """
    _require_connected(spec)
    n = spec.n
    if not (0 <= alpha < n and 0 <= beta < n):
        raise NodeIndexError(f"nodes ({alpha}, {beta}) outside 0..{n - 1}")
    if alpha == beta:
        return 0.0
    keep = np.ones(n, dtype=bool)
    keep[list(spec.zero_modes)] = False
    diff = spec.eigenvectors[alpha, keep] - spec.eigenvectors[beta, keep]
    return float(np.sum(diff * diff / spec.eigenvalues[keep]))


def resistance_matrix(spec: Spectrum) -> np.ndarray:
    """All-pairs resistance table: symmetric, zero diagonal."""
    _require_connected(spec)
    keep = np.ones(spec.n, dtype=bool)
    keep[list(spec.zero_modes)] = False
    scaled = spec.eigenvectors[:, keep] / np.sqrt(spec.eigenvalues[keep])
    gram = scaled @ scaled.T
    diag = np.diag(gram)
    table = diag[:, None] + diag[None, :] - gram - gram.T
    table = np.maximum(table, 0.0)
    np.fill_diagonal(table, 0.0)
    table.setflags(write=False)
    return table
