"""Perfect colorings of recognized-positive graphs, plus proper-coloring checks."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .recognition import Bipartite, Neither, RecognitionReport


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    color: tuple[int, ...]

    @property
    def palette_size(self) -> int:
        return 1 + max(self.color) if self.color else 0

    def __len__(self) -> int:
        return len(self.color)

    @classmethod
    def from_list(cls, colors) -> "Coloring":
        colors = tuple(int(c) for c in colors)
        if any(c < 0 for c in colors):
            raise ColoringError("colors must be non-negative")
        return cls(colors)


def perfect_coloring(g: Graph, report: RecognitionReport) -> Coloring:
    """Color each component with exactly its clique number of colors.

    Bipartite sides get colors 0 and 1, part ``i`` of a complete
    multipartite component gets color ``i``, and isolated vertices get 0.
    Colors are shared across components; any connected induced subgraph
    lies inside one component, so sharing cannot break perfection.
    """
    if len(report.labeling.component_id) != g.n:
        raise ColoringError(f"report covers {len(report.labeling.component_id)} vertices, graph has {g.n}")
    color = [0] * g.n
    for cls in report.classes:
        if isinstance(cls, Neither):
            raise ColoringError(f"graph is not perfectly colorable: {cls.certificate.describe()}")
        if isinstance(cls, Bipartite):
            for v in cls.side_b:
                color[v] = 1
        else:
            for i, part in enumerate(cls.parts):
                for v in part:
                    color[v] = i
    return Coloring(tuple(color))


def verify_proper(g: Graph, c: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """Check that no edge is monochromatic; returns ``(ok, first bad edge)``."""
    if len(c.color) != g.n:
        raise ColoringError(f"coloring has {len(c.color)} entries, graph has {g.n} vertices")
    col = c.color
    for u, v in g.edges():
        if col[u] == col[v]:
            return False, (u, v)
    return True, None


def component_color_counts(g: Graph, report: RecognitionReport, c: Coloring) -> list[int]:
    seen: list[set[int]] = [set() for _ in range(report.labeling.component_count)]
    for v, comp in enumerate(report.labeling.component_id):
        seen[comp].add(c.color[v])
    return [len(s) for s in seen]


def format_coloring(c: Coloring) -> str:
    return "".join(f"{v} {col}\n" for v, col in enumerate(c.color))


def parse_coloring(data: bytes | str, n: int | None = None) -> Coloring:
    """Read ``<vertex> <color>`` lines; every vertex ``0..n-1`` must appear once."""
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    assigned: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            v, col = (int(x) for x in fields) if len(fields) == 2 else (None, None)
        except ValueError:
            v = None
        if v is None or v < 0 or col < 0:
            raise ColoringError(f"line {lineno}: expected '<vertex> <color>', got {line!r}")
        if v in assigned:
            raise ColoringError(f"line {lineno}: vertex {v} colored twice")
        assigned[v] = col
    size = n if n is not None else len(assigned)
    if sorted(assigned) != list(range(size)):
        raise ColoringError(f"coloring must assign every vertex 0..{size - 1} exactly once")
    return Coloring(tuple(assigned[v] for v in range(size)))
