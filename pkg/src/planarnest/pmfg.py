"""Planar maximally filtered graph from a symmetric weight matrix."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .graph import GraphError, PlanarGraph

SYMMETRY_TOL = 1e-9


class WeightMatrixError(GraphError):
    pass


@dataclass(frozen=True)
class WeightMatrix:
    weights: np.ndarray
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @classmethod
    def from_array(cls, w, labels=None) -> "WeightMatrix":
        w = np.asarray(w, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise WeightMatrixError(f"matrix must be square, got shape {w.shape}")
        off = ~np.eye(w.shape[0], dtype=bool)
        if not np.all(np.isfinite(w[off])):
            raise WeightMatrixError("matrix has non-finite entries")
        gap = np.abs(w - w.T)
        if np.any(gap[off] > SYMMETRY_TOL):
            i, j = np.unravel_index(np.argmax(np.where(off, gap, 0)), w.shape)
            raise WeightMatrixError(
                f"matrix is not symmetric: w[{i},{j}]={w[i, j]} vs w[{j},{i}]={w[j, i]}"
            )
        if labels is None:
            labels = [str(i) for i in range(w.shape[0])]
        if len(labels) != w.shape[0]:
            raise WeightMatrixError("label count does not match matrix size")
        return cls((w + w.T) / 2, tuple(str(s) for s in labels))


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def parse_weight_csv(text: str) -> WeightMatrix:
    """Read a square numeric CSV with optional label header row and column."""
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise WeightMatrixError("empty CSV")
    rows = [[c.strip() for c in r] for r in rows]

    header = None
    if not all(_is_number(c) for c in rows[0] if c):
        header, rows = rows[0], rows[1:]
    row_labels = None
    if rows and not _is_number(rows[0][0]):
        row_labels = [r[0] for r in rows]
        rows = [r[1:] for r in rows]
        if header is not None and len(header) == len(rows[0]) + 1:
            header = header[1:]

    n = len(rows)
    for lineno, r in enumerate(rows, start=1):
        if len(r) != n:
            raise WeightMatrixError(f"row {lineno} has {len(r)} values, expected {n}")
        for c in r:
            if not _is_number(c):
                raise WeightMatrixError(f"row {lineno}: non-numeric value {c!r}")
    labels = header or row_labels
    if header and row_labels and list(header) != row_labels:
        raise WeightMatrixError("row labels and column labels disagree")
    return WeightMatrix.from_array([[float(c) for c in r] for r in rows], labels)


def build_pmfg(m: WeightMatrix) -> PlanarGraph:
    """Greedy PMFG: strongest pairs first, keep an edge iff the graph stays planar.

    Equal weights fall back to lexicographic ``(i, j)`` order.
    """
    n = m.n
    if n < 4:
        raise WeightMatrixError(f"PMFG needs at least 4 vertices, got {n}")
    w = m.weights
    pairs = sorted(
        ((i, j) for i in range(n) for j in range(i + 1, n)), key=lambda p: (-w[p], p)
    )
    target = 3 * n - 6
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for i, j in pairs:
        g.add_edge(i, j)
        if not nx.check_planarity(g)[0]:
            g.remove_edge(i, j)
        elif g.number_of_edges() == target:
            break
    return PlanarGraph.from_edges(g.edges(), n=n, labels=m.labels)
