"""Immutable simple undirected graphs in compressed adjacency form.

Vertices are dense integers ``0..n-1``. Every neighbor list is strictly
increasing, so slices of the flat ``targets`` array double as canonical
neighborhood fingerprints.
"""

from __future__ import annotations

import warnings
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

VertexSet = tuple  # sorted tuple of distinct vertex indices


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphFormatWarning(UserWarning):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    offsets: tuple[int, ...]
    targets: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.offsets) - 1

    @property
    def m(self) -> int:
        return len(self.targets) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.targets[self.offsets[v] : self.offsets[v + 1]]

    def degree(self, v: int) -> int:
        return self.offsets[v + 1] - self.offsets[v]

    def has_edge(self, u: int, v: int) -> bool:
        lo, hi = self.offsets[u], self.offsets[u + 1]
        i = bisect_left(self.targets, v, lo, hi)
        return i < hi and self.targets[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, lexicographically."""
        t, o = self.targets, self.offsets
        for u in range(self.n):
            for i in range(o[u], o[u + 1]):
                if t[i] > u:
                    yield u, t[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.offsets == other.offsets and self.targets == other.targets

    def __hash__(self) -> int:
        return hash((self.offsets, self.targets))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on ``n`` vertices.

    Duplicate edges (in either orientation) are collapsed. Self-loops and
    out-of-range endpoints raise :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphError("edges must be pairs of vertices")
    if arr.size:
        bad = (arr < 0) | (arr >= n)
        if bad.any():
            i = int(np.flatnonzero(bad.any(axis=1))[0])
            raise GraphError(f"edge {tuple(arr[i].tolist())} has endpoint out of range for n={n}")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            v = int(arr[loops][0, 0])
            raise GraphError(f"self-loop on vertex {v}")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    keys = np.unique(lo * n + hi)
    lo, hi = np.divmod(keys, max(n, 1))
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    return Graph(tuple(offsets.tolist()), tuple(dst.tolist()))


def vertex_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """Validate and canonicalize a vertex selection for ``g``."""
    s = tuple(sorted(set(vertices)))
    if s and (s[0] < 0 or s[-1] >= g.n):
        bad = s[0] if s[0] < 0 else s[-1]
        raise GraphError(f"vertex {bad} out of range for n={g.n}")
    return s


# --- parsing and serialization -------------------------------------------


def _text(data: bytes | str) -> str:
    return data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data


def _parse_dimacs(text: str) -> Graph:
    n = declared_m = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        fields = line.split()
        if fields[0] == "p":
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError(f"bad problem line {line!r}", lineno)
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"bad problem line {line!r}", lineno) from None
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(fields) != 3:
                raise ParseError(f"bad edge line {line!r}", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"bad edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop on vertex {u}", lineno)
            pairs.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing problem line 'p edge N M'")
    if declared_m != len(pairs):
        warnings.warn(
            f"header declares {declared_m} edges but {len(pairs)} edge lines found; using edge lines",
            GraphFormatWarning,
            stacklevel=3,
        )
    return build_graph(n, pairs)


def _parse_edgelist(text: str, n: int | None) -> Graph:
    header_n = None
    pairs = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "n":
            if seen_data or header_n is not None or len(fields) != 2:
                raise ParseError(f"misplaced or malformed header {line!r}", lineno)
            try:
                header_n = int(fields[1])
            except ValueError:
                raise ParseError(f"bad vertex count {fields[1]!r}", lineno) from None
            seen_data = True
            continue
        seen_data = True
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex in {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
        pairs.append((u, v))
    if header_n is not None and n is not None and header_n != n:
        raise ParseError(f"header declares n={header_n} but n={n} was requested")
    if header_n is None:
        header_n = n
    if header_n is None:
        header_n = 1 + max((max(p) for p in pairs), default=-1)
    for u, v in pairs:
        if u >= header_n or v >= header_n:
            raise ParseError(f"edge ({u}, {v}) out of range for n={header_n}")
    return build_graph(header_n, pairs)


def parse_graph(data: bytes | str, format: str = "edgelist", n: int | None = None) -> Graph:
    """Parse ``data`` as ``"dimacs"`` (1-based ``.col``) or ``"edgelist"`` (0-based).

    ``n`` supplies the vertex count for edge lists without an ``n <N>`` header;
    otherwise the count is one more than the largest label seen.
    """
    text = _text(data)
    if format == "dimacs":
        return _parse_dimacs(text)
    if format == "edgelist":
        return _parse_edgelist(text, n)
    raise ValueError(f"unknown graph format {format!r}")


def format_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# --- traversal -------------------------------------------------------------


@dataclass(frozen=True)
class ComponentLabeling:
    component_id: tuple[int, ...]
    component_count: int

    def members(self) -> list[VertexSet]:
        """Vertex sets of each component, indexed by component id."""
        out: list[list[int]] = [[] for _ in range(self.component_count)]
        for v, c in enumerate(self.component_id):
            out[c].append(v)
        return [tuple(vs) for vs in out]


def connected_components(g: Graph) -> ComponentLabeling:
    """Label components by BFS; ids follow the smallest vertex of each component."""
    n, o, t = g.n, g.offsets, g.targets
    comp = [-1] * n
    count = 0
    queue: deque[int] = deque()
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = count
        queue.append(s)
        while queue:
            u = queue.popleft()
            for i in range(o[u], o[u + 1]):
                w = t[i]
                if comp[w] < 0:
                    comp[w] = count
                    queue.append(w)
        count += 1
    return ComponentLabeling(tuple(comp), count)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s`` plus the order-preserving relabeling old -> new."""
    verts = vertex_set(g, s)
    index = {v: i for i, v in enumerate(verts)}
    pairs = [(i, index[w]) for i, v in enumerate(verts) for w in g.neighbors(v) if w > v and w in index]
    return build_graph(len(verts), pairs), index


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabeling must be a permutation of the vertices")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
