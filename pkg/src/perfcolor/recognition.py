"""Per-component classification into bipartite / complete multipartite / neither.

A graph is perfectly colorable exactly when each of its components is
bipartite or complete multipartite. Both tests below run in O(n + m) over
a component. When a component is neither, :func:`extract_certificate`
returns a small induced obstruction (a paw or an odd hole); that step is
allowed to be slower since it is only reached on negative instances.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

from .graph import ComponentLabeling, Graph, GraphError, VertexSet, connected_components, induced_subgraph


class ComponentError(GraphError):
    """Vertex set passed as a component is not a whole connected component."""


@dataclass(frozen=True)
class InducedPaw:
    """Triangle plus a pendant vertex adjacent to exactly one triangle vertex.

    ``triangle`` is sorted; ``attach`` is the triangle vertex touching
    ``pendant``.
    """

    triangle: tuple[int, int, int]
    pendant: int
    attach: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        """Vertices in a, b, c, d order: c is the attach vertex, d the pendant."""
        a, b = (x for x in self.triangle if x != self.attach)
        return (a, b, self.attach, self.pendant)

    def describe(self) -> str:
        return "induced-paw " + " ".join(map(str, self.vertices))


@dataclass(frozen=True)
class OddHole:
    """Chordless odd cycle of length at least 5, listed in cyclic order."""

    cycle: tuple[int, ...]

    def describe(self) -> str:
        return "odd-hole " + " ".join(map(str, self.cycle))


Certificate = Union[InducedPaw, OddHole]


@dataclass(frozen=True)
class Bipartite:
    side_a: VertexSet
    side_b: VertexSet

    name = "bipartite"


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[VertexSet, ...]

    name = "complete-multipartite"


@dataclass(frozen=True)
class Neither:
    certificate: Certificate

    name = "neither"


ComponentClass = Union[Bipartite, CompleteMultipartite, Neither]


@dataclass(frozen=True)
class RecognitionReport:
    labeling: ComponentLabeling
    classes: tuple[ComponentClass, ...]

    @property
    def perfectly_colorable(self) -> bool:
        return not any(isinstance(c, Neither) for c in self.classes)

    @property
    def certificates(self) -> list[Certificate]:
        return [c.certificate for c in self.classes if isinstance(c, Neither)]


# --- helpers ---------------------------------------------------------------


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex, walking toward its smaller neighbor."""
    i = cycle.index(min(cycle))
    c = cycle[i:] + cycle[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


def _bfs_component(g: Graph, comp: VertexSet) -> tuple[list[int], dict[int, int], dict[int, int]]:
    """BFS from ``comp[0]``; returns order, depth and parent maps.

    Raises :class:`ComponentError` unless the reached set is exactly ``comp``.
    """
    if not comp:
        raise ComponentError("empty vertex set is not a component")
    o, t = g.offsets, g.targets
    root = comp[0]
    depth = {root: 0}
    parent = {root: -1}
    order = [root]
    queue = deque(order)
    while queue:
        u = queue.popleft()
        du = depth[u] + 1
        for i in range(o[u], o[u + 1]):
            w = t[i]
            if w not in depth:
                depth[w] = du
                parent[w] = u
                order.append(w)
                queue.append(w)
    if len(order) != len(comp) or any(v not in depth for v in comp):
        raise ComponentError(f"vertex set of size {len(comp)} is not a connected component")
    return order, depth, parent


def _tree_cycle(parent: dict[int, int], u: int, w: int) -> list[int]:
    """Cycle closed by the non-tree edge ``uw`` between two equal-depth vertices."""
    left, right = [u], [w]
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return left + right[-2::-1]


# --- the two positive tests -----------------------------------------------


def check_bipartite(g: Graph, comp: VertexSet) -> Bipartite | tuple[int, ...]:
    """2-color ``comp`` by BFS layer parity.

    Returns the bipartition (``side_a`` holds the smallest vertex) or, on
    failure, an odd cycle closed by a same-layer edge and the tree paths to
    the two endpoints' lowest common ancestor.
    """
    order, depth, parent = _bfs_component(g, comp)
    o, t = g.offsets, g.targets
    for u in order:
        du = depth[u]
        for i in range(o[u], o[u + 1]):
            w = t[i]
            if w > u and depth[w] == du:
                return _canonical_cycle(_tree_cycle(parent, u, w))
    side_a = tuple(v for v in comp if depth[v] % 2 == 0)
    side_b = tuple(v for v in comp if depth[v] % 2 == 1)
    return Bipartite(side_a, side_b)


def _neighborhood_classes(vertices, nbrs) -> list[tuple[int, ...]] | tuple[int, int, int]:
    """Complete multipartite test on the graph whose adjacency is ``nbrs``.

    ``nbrs(v)`` must return the sorted neighbors of ``v`` inside ``vertices``.
    Vertices with equal neighborhoods are pairwise non-adjacent, so each
    class is independent; a class is a full part iff each member's degree
    equals ``|vertices| - |class|``. Classes are keyed by the neighbor tuples
    themselves, so hash collisions are settled by exact comparison.
    """
    classes: dict[tuple[int, ...], list[int]] = {}
    for v in vertices:
        classes.setdefault(nbrs(v), []).append(v)
    size = len(vertices)
    for key, members in classes.items():
        if len(key) != size - len(members):
            return _anti_triple(vertices, nbrs, members[0], members)
    return [tuple(p) for p in classes.values()]


def _anti_triple(vertices, nbrs, v: int, same: list[int]) -> tuple[int, int, int]:
    # deg(v) < |vertices| - |class(v)|, so some w outside the class misses v
    nv = set(nbrs(v))
    same_set = set(same)
    w = next(x for x in vertices if x not in nv and x not in same_set)
    nw = set(nbrs(w))
    only_v = [x for x in nv if x not in nw]
    if only_v:
        return (v, min(only_v), w)
    return (w, min(x for x in nw if x not in nv), v)


def check_complete_multipartite(g: Graph, comp: VertexSet) -> CompleteMultipartite | tuple[int, int, int]:
    """Recover the parts of ``comp`` as classes of identical neighborhoods.

    On failure returns ``(u, v, w)`` with ``uv`` an edge and ``w`` adjacent
    to neither.
    """
    _bfs_component(g, comp)
    res = _neighborhood_classes(comp, g.neighbors)
    if isinstance(res, tuple):
        return res
    parts = sorted(res, key=lambda p: (-len(p), p[0]))
    return CompleteMultipartite(tuple(parts))


# --- certificates ----------------------------------------------------------


def is_induced_paw(g: Graph, cert: InducedPaw) -> bool:
    a, b, c, d = cert.vertices
    if len({a, b, c, d}) != 4 or cert.attach not in cert.triangle:
        return False
    h, index = induced_subgraph(g, (a, b, c, d))
    want = {tuple(sorted((index[x], index[y]))) for x, y in ((a, b), (a, c), (b, c), (c, d))}
    return set(h.edges()) == want


def is_odd_hole(g: Graph, cert: OddHole) -> bool:
    cyc = cert.cycle
    k = len(cyc)
    if k < 5 or k % 2 == 0 or len(set(cyc)) != k:
        return False
    h, index = induced_subgraph(g, cyc)
    want = {tuple(sorted((index[cyc[i]], index[cyc[(i + 1) % k]]))) for i in range(k)}
    return set(h.edges()) == want


def validate_certificate(g: Graph, cert: Certificate) -> bool:
    if isinstance(cert, InducedPaw):
        return is_induced_paw(g, cert)
    if isinstance(cert, OddHole):
        return is_odd_hole(g, cert)
    return False


def shortest_odd_cycle(g: Graph, comp: VertexSet) -> tuple[int, ...] | None:
    """A shortest odd cycle in ``comp`` via BFS from every vertex, O(n*m).

    At the minimizing root the two tree paths meet only at the root, and the
    cycle is chordless since any chord would split off a shorter odd cycle.
    """
    o, t = g.offsets, g.targets
    best: list[int] | None = None
    for root in comp:
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        limit = len(best) if best else len(comp) + 1
        while queue:
            u = queue.popleft()
            du = depth[u]
            if 2 * du + 1 >= limit:
                break
            for i in range(o[u], o[u + 1]):
                w = t[i]
                dw = depth.get(w)
                if dw is None:
                    depth[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif dw == du and 2 * du + 1 < limit:
                    best = _tree_cycle(parent, u, w)
                    limit = len(best)
        if best is not None and len(best) == 3:
            break
    return _canonical_cycle(best) if best else None


def _find_paw(g: Graph, comp: VertexSet) -> InducedPaw | None:
    """First paw found by attach vertex, O(n*m) overall.

    A paw attaches at ``c`` iff ``G[N(c)]`` has an edge ``ab`` and a vertex
    ``d`` adjacent to neither, i.e. iff ``G[N(c)]`` is not complete
    multipartite.
    """
    for c in comp:
        around = g.neighbors(c)
        inside = set(around)
        local = {v: tuple(x for x in g.neighbors(v) if x in inside) for v in around}
        res = _neighborhood_classes(around, local.__getitem__)
        if isinstance(res, tuple):
            a, b, d = res
            return InducedPaw(tuple(sorted((a, b, c))), d, c)
    return None


def extract_certificate(g: Graph, comp: VertexSet) -> Certificate:
    """Obstruction for a component that is neither bipartite nor complete multipartite.

    A shortest odd cycle of length >= 5 is an odd hole. If the shortest odd
    cycle is a triangle, the component is connected, contains a triangle and
    is not complete multipartite, so it contains an induced paw.
    """
    first = check_bipartite(g, comp)
    if isinstance(first, Bipartite):
        raise ValueError("component is bipartite; no certificate exists")
    if isinstance(check_complete_multipartite(g, comp), CompleteMultipartite):
        raise ValueError("component is complete multipartite; no certificate exists")
    cycle = first if len(first) == 3 else shortest_odd_cycle(g, comp)
    if len(cycle) >= 5:
        cert: Certificate = OddHole(cycle)
    else:
        paw = _find_paw(g, comp)
        if paw is None:
            raise AssertionError("triangle-containing non-multipartite component without a paw")
        cert = paw
    if not validate_certificate(g, cert):
        raise AssertionError(f"extracted certificate {cert} failed inspection")
    return cert


# --- driver ----------------------------------------------------------------


def classify_component(g: Graph, comp: VertexSet) -> ComponentClass:
    bip = check_bipartite(g, comp)
    if isinstance(bip, Bipartite):
        return bip
    cmp = check_complete_multipartite(g, comp)
    if isinstance(cmp, CompleteMultipartite):
        return cmp
    return Neither(extract_certificate(g, comp))


def recognize(g: Graph) -> RecognitionReport:
    labeling = connected_components(g)
    classes = tuple(classify_component(g, comp) for comp in labeling.members())
    return RecognitionReport(labeling, classes)
