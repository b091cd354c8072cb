"""Undirected graph in compressed adjacency form with dense internal ids.

Graphs are immutable after construction and safe to share across workers.
Edge-list files are UTF-8 text, one edge per line ("u v"), '#' comments,
with an optional "%%vertices N" first line declaring isolated vertices.
"""

from __future__ import annotations

import numpy as np

from .errors import GraphFormatError


class Graph:
    """Simple undirected graph: sorted CSR neighbor lists, no self-loops."""

    __slots__ = ("indptr", "indices", "external_ids")

    def __init__(self, indptr, indices, external_ids=None):
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.external_ids = external_ids

    @classmethod
    def from_edges(cls, num_vertices: int, edges, external_ids=None) -> "Graph":
        """Build from an iterable/array of (u, v) pairs.

        Self-loops are dropped, duplicates merged, neighbor lists sorted.
        """
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                         dtype=np.int64).reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= num_vertices):
            raise ValueError("edge endpoint outside [0, num_vertices)")
        arr = arr[arr[:, 0] != arr[:, 1]]  # drop self-loops
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        if lo.size:
            key = lo * num_vertices + hi
            uniq = np.unique(key)
            lo, hi = uniq // num_vertices, uniq % num_vertices
        heads = np.concatenate([lo, hi])
        tails = np.concatenate([hi, lo])
        order = np.lexsort((tails, heads))
        heads, tails = heads[order], tails[order]
        indptr = np.zeros(num_vertices + 1, dtype=np.int64)
        np.add.at(indptr, heads + 1, 1)
        np.cumsum(indptr, out=indptr)
        return cls(indptr, tails, external_ids)

    @property
    def num_vertices(self) -> int:
        return len(self.indptr) - 1

    @property
    def num_edges(self) -> int:
        return len(self.indices) // 2

    def degree(self, v: int) -> int:
        if not 0 <= v < self.num_vertices:
            raise ValueError(f"vertex id {v} out of range")
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        if not 0 <= v < self.num_vertices:
            raise ValueError(f"vertex id {v} out of range")
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = np.searchsorted(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, lexicographically sorted."""
        heads = np.repeat(np.arange(self.num_vertices), self.degrees())
        mask = heads < self.indices
        return np.column_stack([heads[mask], self.indices[mask]])

    def dense_adjacency(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix; intended for desk-scale graphs only."""
        n = self.num_vertices
        a = np.zeros((n, n))
        heads = np.repeat(np.arange(n), self.degrees())
        a[heads, self.indices] = 1.0
        return a

    def label(self, v: int) -> str:
        if self.external_ids is not None:
            return self.external_ids[v]
        return str(v)

    def __repr__(self):
        return f"Graph(num_vertices={self.num_vertices}, num_edges={self.num_edges})"


class Subgraph:
    """A parent graph restricted to a vertex subset, relabeled to local ids.

    Local id i corresponds to parent vertex local_to_parent[i]; the local
    graph holds exactly the parent edges with both endpoints in the subset.
    """

    __slots__ = ("parent", "vertices", "local_graph", "local_to_parent")

    def __init__(self, parent: Graph, vertices: np.ndarray, local_graph: Graph):
        self.parent = parent
        self.vertices = vertices
        self.local_graph = local_graph
        self.local_to_parent = vertices

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def parent_to_local(self, parent_ids) -> np.ndarray:
        pos = np.searchsorted(self.vertices, parent_ids)
        pos = np.atleast_1d(pos)
        ids = np.atleast_1d(np.asarray(parent_ids))
        if (pos >= len(self.vertices)).any() or (self.vertices[np.minimum(pos, len(self.vertices) - 1)] != ids).any():
            raise ValueError("parent vertex not in subgraph")
        return pos

    def __repr__(self):
        return f"Subgraph({self.num_vertices} vertices of {self.parent.num_vertices})"


def induced_subgraph(g: Graph, vertices) -> Subgraph:
    """Induced subgraph on a vertex subset (edges with both endpoints inside)."""
    verts = np.unique(np.asarray(list(vertices) if not isinstance(vertices, np.ndarray) else vertices,
                                 dtype=np.int64))
    if verts.size and (verts[0] < 0 or verts[-1] >= g.num_vertices):
        raise ValueError("vertex id out of range")
    mask = np.zeros(g.num_vertices, dtype=bool)
    mask[verts] = True
    local_of = np.full(g.num_vertices, -1, dtype=np.int64)
    local_of[verts] = np.arange(len(verts))

    heads = np.repeat(np.arange(g.num_vertices), g.degrees())
    keep = mask[heads] & mask[g.indices] & (heads < g.indices)
    local_edges = np.column_stack([local_of[heads[keep]], local_of[g.indices[keep]]])
    local = Graph.from_edges(len(verts), local_edges)
    return Subgraph(g, verts, local)


def full_subgraph(g: Graph) -> Subgraph:
    """The whole graph viewed as a Subgraph (identity relabeling)."""
    verts = np.arange(g.num_vertices, dtype=np.int64)
    return Subgraph(g, verts, g)


def load_edge_list(path) -> Graph:
    """Load an undirected graph from an edge-list file.

    Labels are arbitrary strings mapped to dense internal ids in first-seen
    order. With a "%%vertices N" header, labels must be integers in [0, N)
    and internal ids equal the labels.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise GraphFormatError(f"cannot read edge list {path}: {exc}") from exc

    declared = None
    start = 0
    if lines and lines[0].startswith("%%vertices"):
        parts = lines[0].split()
        if len(parts) != 2 or not parts[1].isdigit():
            raise GraphFormatError(f"{path}:1: malformed %%vertices header")
        declared = int(parts[1])
        start = 1

    label_ids: dict[str, int] = {}
    edges = []
    for lineno, raw in enumerate(lines[start:], start=start + 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"{path}:{lineno}: expected two vertex labels, got {len(parts)}")
        pair = []
        for label in parts:
            if declared is not None:
                try:
                    vid = int(label)
                except ValueError:
                    vid = -1
                if not 0 <= vid < declared:
                    raise GraphFormatError(
                        f"{path}:{lineno}: label {label!r} outside declared range [0, {declared})")
            else:
                vid = label_ids.setdefault(label, len(label_ids))
            pair.append(vid)
        edges.append(pair)

    if declared is not None:
        n = declared
        external = None
    else:
        n = len(label_ids)
        if n == 0:
            raise GraphFormatError(f"{path}: empty edge set")
        external = [None] * n
        for label, vid in label_ids.items():
            external[vid] = label
        external = tuple(external)
    return Graph.from_edges(n, np.asarray(edges, dtype=np.int64).reshape(-1, 2), external)


def save_edge_list(g: Graph, path) -> None:
    """Write a graph using internal ids; reloading gives an identical graph."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"%%vertices {g.num_vertices}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")
