"""Finite resistor networks: validation, Laplacian assembly, random-walk view.

A network is a weighted undirected multigraph on densely indexed nodes
0..n_nodes-1.  Edge weights are resistances in ohms; parallel edges are
legal and their conductances add when the Laplacian is assembled.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    DisconnectedNetworkError,
    NodeIndexError,
    NonPositiveResistanceError,
    SameNodeError,
    SelfLoopError,
)

Resistance = Union[int, float, Fraction]
Edge = tuple[int, int, Resistance]


@dataclass(frozen=True)
class Network:
    """Immutable resistor network; build through :func:`build_network`."""

    n_nodes: int
    edges: tuple[Edge, ...]

    def neighbors(self) -> list[set[int]]:
        """Adjacency sets (parallel edges collapse; self-loops are illegal)."""
        adj: list[set[int]] = [set() for _ in range(self.n_nodes)]
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj


@dataclass(frozen=True)
class Laplacian:
    """Dense symmetric Kirchhoff matrix with exactly-zero row sums."""

    n: int
    matrix: np.ndarray


@dataclass(frozen=True)
class RandomWalkView:
    """Hop probabilities p[i, j] = c_ij / c_i and coordination numbers."""

    hop_probabilities: np.ndarray
    degrees: tuple[int, ...]


def _check_resistance(value: Resistance) -> None:
    if isinstance(value, float) and not math.isfinite(value):
        raise NonPositiveResistanceError(f"resistance must be finite, got {value!r}")
    if value <= 0:
        raise NonPositiveResistanceError(f"resistance must be > 0, got {value!r}")


def build_network(n_nodes: int, edges: Iterable[Sequence]) -> Network:
    """Validate and freeze a resistor network.

    Raises NodeIndexError, SelfLoopError, or NonPositiveResistanceError on
    bad input.  Parallel edges are preserved verbatim.
    """
    if n_nodes < 1:
        raise NodeIndexError(f"need at least one node, got {n_nodes}")
    out: list[Edge] = []
    for edge in edges:
        i, j, r = edge
        if not (0 <= i < n_nodes and 0 <= j < n_nodes):
            raise NodeIndexError(f"edge ({i}, {j}) outside 0..{n_nodes - 1}")
        if i == j:
            raise SelfLoopError(f"self-loop at node {i}")
        _check_resistance(r)
        out.append((int(i), int(j), r))
    return Network(n_nodes=int(n_nodes), edges=tuple(out))


def merged_conductances(net: Network) -> dict[tuple[int, int], float]:
    """Total conductance per unordered node pair, parallel edges added.

    Each pair's conductances are combined with exact float summation, so the
    result does not depend on edge-list order.
    """
    groups: dict[tuple[int, int], list[float]] = {}
    for i, j, r in net.edges:
        key = (i, j) if i < j else (j, i)
        groups.setdefault(key, []).append(1.0 / float(r))
    return {key: math.fsum(vals) for key, vals in groups.items()}


def assemble_laplacian(net: Network) -> Laplacian:
    """Assemble the dense symmetric Laplacian (conductance matrix).

    diag(i) holds the total conductance at node i and offdiag(i, j) holds
    -c_ij, so every row sums to zero exactly up to one float rounding of
    the diagonal.
    """
    n = net.n_nodes
    mat = np.zeros((n, n))
    rows: list[list[float]] = [[] for _ in range(n)]
    for (i, j), c in sorted(merged_conductances(net).items()):
        mat[i, j] = -c
        mat[j, i] = -c
        rows[i].append(c)
        rows[j].append(c)
    for i in range(n):
        mat[i, i] = math.fsum(rows[i])
    mat.setflags(write=False)
    return Laplacian(n=n, matrix=mat)


def connectivity_check(net: Network) -> tuple[int, tuple[int, ...]]:
    """Label connected components; returns (count, label per node)."""
    labels = [-1] * net.n_nodes
    adj = net.neighbors()
    count = 0
    for start in range(net.n_nodes):
        if labels[start] != -1:
            continue
        queue = deque([start])
        labels[start] = count
        while queue:
            node = queue.popleft()
            for other in adj[node]:
                if labels[other] == -1:
                    labels[other] = count
                    queue.append(other)
        count += 1
    return count, tuple(labels)


def random_walk_view(net: Network) -> RandomWalkView:
    """Hop probabilities of the walker that picks edges by conductance."""
    n = net.n_nodes
    cond = np.zeros((n, n))
    for (i, j), c in merged_conductances(net).items():
        cond[i, j] = c
        cond[j, i] = c
    totals = cond.sum(axis=1)
    hop = np.zeros((n, n))
    nz = totals > 0
    hop[nz] = cond[nz] / totals[nz, None]
    hop.setflags(write=False)
    degrees = tuple(len(s) for s in net.neighbors())
    return RandomWalkView(hop_probabilities=hop, degrees=degrees)


def node_conductance(net: Network, node: int) -> float:
    """Total conductance c_i attached to a node."""
    if not 0 <= node < net.n_nodes:
        raise NodeIndexError(f"node {node} outside 0..{net.n_nodes - 1}")
    return math.fsum(
        1.0 / float(r) for i, j, r in net.edges if node in (i, j)
    )


def first_passage_probability(
    net: Network, alpha: int, beta: int, resistance: float
) -> float:
    """Probability a walker from alpha reaches beta before returning.

    Equals 1 / (c_alpha * R_alpha_beta); for unit resistances the node
    conductance is the coordination number.
    """
    if alpha == beta:
        raise SameNodeError("first-passage probability needs two distinct nodes")
    n_comp, labels = connectivity_check(net)
    if labels[alpha] != labels[beta]:
        raise DisconnectedNetworkError(
            f"nodes {alpha} and {beta} lie in different components"
        )
    if resistance <= 0:
        raise NonPositiveResistanceError(
            f"two-point resistance must be > 0, got {resistance!r}"
        )
    return 1.0 / (node_conductance(net, alpha) * float(resistance))
