"""Brute-force reference implementations of the definitions.

Everything here works on Python-int bitmasks over the vertex set and shares
no code with the recognition or coloring paths. Size limits are hard
preconditions: an oracle that silently truncated would prove nothing.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .coloring import Coloring
from .graph import Graph, VertexSet
from .recognition import InducedPaw

MAX_CLIQUE_N = 64
CHROMATIC_N = 16
ENUMERATE_N = 20
EXHAUSTIVE_N = 9


class OracleScaleError(ValueError):
    """Input exceeds the size an exact oracle is willing to handle."""


def _require(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise OracleScaleError(f"{what} handles at most {limit} vertices, got {g.n}")


def adjacency_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 0
        for w in g.neighbors(v):
            m |= 1 << w
        masks.append(m)
    return masks


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _members(mask: int) -> VertexSet:
    return tuple(_bits(mask))


# --- clique number ---------------------------------------------------------


def _clique_number(adj: list[int], candidates: int) -> int:
    best = 0

    def expand(size: int, p: int) -> None:
        nonlocal best
        if not p:
            if size > best:
                best = size
            return
        if size + p.bit_count() <= best:
            return
        pivot = max(_bits(p), key=lambda u: (p & adj[u]).bit_count())
        for v in _bits(p & ~adj[pivot]):
            expand(size + 1, p & adj[v])
            p &= ~(1 << v)
            if size + p.bit_count() <= best:
                return

    expand(0, candidates)
    return best


def max_clique(g: Graph) -> int:
    """Clique number by branch and bound with pivoting; 0 for the empty graph."""
    _require(g, MAX_CLIQUE_N, "max_clique")
    return _clique_number(adjacency_masks(g), (1 << g.n) - 1)


# --- chromatic number ------------------------------------------------------


def _colorable(adj: list[int], order: list[int], k: int) -> bool:
    classes = [0] * k

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        bit = 1 << v
        # a fresh color is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if not classes[c] & adj[v]:
                classes[c] |= bit
                if place(i + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~bit
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number, trying k = omega, omega + 1, ... in turn."""
    _require(g, CHROMATIC_N, "chromatic_number")
    if g.n == 0:
        return 0
    adj = adjacency_masks(g)
    order = sorted(range(g.n), key=lambda v: -adj[v].bit_count())
    k = _clique_number(adj, (1 << g.n) - 1)
    while not _colorable(adj, order, k):
        k += 1
    return k


# --- connected induced subgraphs ------------------------------------------


def _connected_masks(adj: list[int], n: int) -> Iterator[int]:
    """Each connected vertex set exactly once.

    Sets are grown from their smallest vertex. At every node the frontier is
    exactly the neighbors of the current set that are neither in it nor
    excluded; each frontier vertex is either taken now or excluded for the
    rest of that subtree.
    """

    def grow(s: int, frontier: int, excluded: int) -> Iterator[int]:
        yield s
        for w in _bits(frontier):
            bit = 1 << w
            frontier &= ~bit
            s2 = s | bit
            yield from grow(s2, (frontier | adj[w]) & ~s2 & ~excluded, excluded)
            excluded |= bit

    for anchor in range(n):
        below = (1 << anchor) - 1
        yield from grow(1 << anchor, adj[anchor] & ~below, below | (1 << anchor))


def enumerate_connected_induced_subgraphs(g: Graph) -> Iterator[VertexSet]:
    _require(g, ENUMERATE_N, "enumerate_connected_induced_subgraphs")
    for mask in _connected_masks(adjacency_masks(g), g.n):
        yield _members(mask)


# --- perfect colorings -----------------------------------------------------


def _clique_table(adj: list[int], n: int) -> list[int]:
    """omega(S) for every S, by omega(S) = max(omega(S - v), 1 + omega(S & N(v)))."""
    table = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        table[s] = max(table[rest], 1 + table[rest & adj[v]])
    return table


class _LazyClique:
    """omega(S) on demand with memoization, for graphs too big for a full table."""

    def __init__(self, adj: list[int]):
        self.adj = adj
        self.memo = {0: 0}

    def __getitem__(self, s: int) -> int:
        memo = self.memo
        if s in memo:
            return memo[s]
        stack = [s]
        while stack:
            t = stack[-1]
            low = t & -t
            rest = t ^ low
            inner = rest & self.adj[low.bit_length() - 1]
            missing = [x for x in (rest, inner) if x not in memo]
            if missing:
                stack.extend(missing)
                continue
            memo[t] = max(memo[rest], 1 + memo[inner])
            stack.pop()
        return memo[s]


def is_perfect_coloring(g: Graph, c: Coloring) -> tuple[bool, VertexSet | None]:
    """Check every connected induced subgraph uses exactly omega colors.

    Returns ``(ok, first violating vertex set in enumeration order)``.
    Raises ``ValueError`` for an improper coloring.
    """
    _require(g, ENUMERATE_N, "is_perfect_coloring")
    if len(c.color) != g.n:
        raise ValueError(f"coloring has {len(c.color)} entries, graph has {g.n} vertices")
    adj = adjacency_masks(g)
    col = c.color
    for v in range(g.n):
        for w in _bits(adj[v]):
            if col[v] == col[w]:
                raise ValueError(f"coloring is not proper: edge ({v}, {w}) is monochromatic")
    omega = _clique_table(adj, g.n) if g.n <= 14 else _LazyClique(adj)
    for s in _connected_masks(adj, g.n):
        if len({col[v] for v in _bits(s)}) != omega[s]:
            return False, _members(s)
    return True, None


def violation_details(g: Graph, c: Coloring, s: VertexSet) -> tuple[int, int]:
    """(distinct colors, clique number) of the subgraph induced by ``s``."""
    adj = adjacency_masks(g)
    mask = sum(1 << v for v in s)
    return len({c.color[v] for v in s}), _clique_number(adj, mask)


def is_perfectly_colorable_bruteforce(g: Graph) -> bool:
    """Search all partitions into independent sets for a perfect one.

    Perfection depends only on which vertices share a color, so partitions
    cover every proper coloring up to renaming. Vertices are placed in index
    order and each connected set is checked as soon as its largest vertex is
    placed, which prunes only branches that have already failed.
    """
    _require(g, EXHAUSTIVE_N, "is_perfectly_colorable_bruteforce")
    n = g.n
    adj = adjacency_masks(g)
    omega = _clique_table(adj, n)
    closing: list[list[int]] = [[] for _ in range(n)]
    for s in _connected_masks(adj, n):
        closing[s.bit_length() - 1].append(s)
    blocks: list[int] = []

    def place(v: int) -> bool:
        if v == n:
            return True
        bit = 1 << v
        for j in range(len(blocks) + 1):
            fresh = j == len(blocks)
            if fresh:
                blocks.append(bit)
            elif blocks[j] & adj[v]:
                continue
            else:
                blocks[j] |= bit
            ok = all(sum(1 for b in blocks if b & s) == omega[s] for s in closing[v])
            if ok and place(v + 1):
                return True
            if fresh:
                blocks.pop()
            else:
                blocks[j] &= ~bit
        return False

    return place(0)


def independent_set_partitions(g: Graph) -> Iterator[list[VertexSet]]:
    """Every partition of the vertices into independent sets (small graphs only)."""
    _require(g, EXHAUSTIVE_N, "independent_set_partitions")
    adj = adjacency_masks(g)
    blocks: list[int] = []

    def place(v: int) -> Iterator[list[VertexSet]]:
        if v == g.n:
            yield [_members(b) for b in blocks]
            return
        bit = 1 << v
        for j in range(len(blocks)):
            if not blocks[j] & adj[v]:
                blocks[j] |= bit
                yield from place(v + 1)
                blocks[j] &= ~bit
        blocks.append(bit)
        yield from place(v + 1)
        blocks.pop()

    yield from place(0)


# --- perfectness and paws --------------------------------------------------


def _chromatic_table(adj: list[int], n: int) -> list[int]:
    """chi(S) for every S: remove an independent set holding S's lowest vertex."""
    full = 1 << n
    independent = [True] * full
    for s in range(1, full):
        low = s & -s
        rest = s ^ low
        independent[s] = independent[rest] and not (adj[low.bit_length() - 1] & rest)
    table = [0] * full
    for s in range(1, full):
        low = s & -s
        rest = s ^ low
        best = n
        sub = rest
        while True:
            i = sub | low
            if independent[i]:
                cand = 1 + table[s ^ i]
                if cand < best:
                    best = cand
            if not sub:
                break
            sub = (sub - 1) & rest
        table[s] = best
    return table


def is_perfect_bruteforce(g: Graph) -> bool:
    """chi(H) == omega(H) for every nonempty induced subgraph H."""
    _require(g, EXHAUSTIVE_N, "is_perfect_bruteforce")
    adj = adjacency_masks(g)
    omega = _clique_table(adj, g.n)
    chi = _chromatic_table(adj, g.n)
    return all(chi[s] == omega[s] for s in range(1, 1 << g.n))


def find_paw_bruteforce(g: Graph) -> InducedPaw | None:
    """First induced paw over triangles in lexicographic order, or None."""
    adj = adjacency_masks(g)
    for u, v in g.edges():
        for w in _bits(adj[u] & adj[v] & ~((1 << (v + 1)) - 1)):
            a, b, c = adj[u], adj[v], adj[w]
            exactly_one = (a ^ b ^ c) & ~(a & b & c)
            if exactly_one:
                x = (exactly_one & -exactly_one).bit_length() - 1
                attach = next(t for t, m in ((u, a), (v, b), (w, c)) if m >> x & 1)
                return InducedPaw((u, v, w), x, attach)
    return None


def has_induced_paw_naive(g: Graph) -> bool:
    """All 4-subsets checked for the paw degree pattern (1, 2, 2, 3)."""
    adj = adjacency_masks(g)
    for quad in combinations(range(g.n), 4):
        mask = sum(1 << v for v in quad)
        if sorted((adj[v] & mask).bit_count() for v in quad) == [1, 2, 2, 3]:
            return True
    return False
