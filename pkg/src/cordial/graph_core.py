"""Loopless multigraphs, the graph families under study, and edge-list file I/O.

Vertices are dense 0-based ids. Graphs are immutable once built, so instances
can be shared freely across parallel workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import IdOutOfRange, LoopRejected, ParseError, SizeTooSmall

FAMILIES = ("complete", "cycle", "path", "ladder", "mobius", "wheel")

# Smallest size parameter each family generator accepts.
MIN_SIZE = {
    "complete": 1,
    "cycle": 3,
    "path": 1,
    "ladder": 1,
    "mobius": 3,
    "wheel": 3,
}


@dataclass(frozen=True)
class MultiGraph:
    """A loopless multigraph: a vertex count plus a multiset of unordered edges.

    Edges are stored (min, max)-ordered and sorted, which makes equality and
    emission deterministic. Parallel edges are kept with multiplicity.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise SizeTooSmall("vertex count must be non-negative")
        canon = []
        for u, v in self.edges:
            if u == v:
                raise LoopRejected(f"loop at vertex {u}")
            if not (0 <= u < self.n) or not (0 <= v < self.n):
                raise IdOutOfRange(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)


def new_graph(n: int, edges) -> MultiGraph:
    """Build a multigraph from any iterable of endpoint pairs."""
    return MultiGraph(n, tuple((u, v) for u, v in edges))


def complete_graph(n: int) -> MultiGraph:
    """K_n: every unordered pair of the n vertices is an edge."""
    if n < 1:
        raise SizeTooSmall("complete graphs need n >= 1")
    return MultiGraph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> MultiGraph:
    """C_n for n >= 3, vertices in cyclic order."""
    if n < 3:
        raise SizeTooSmall("cycles need n >= 3")
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> MultiGraph:
    """P_n on n >= 1 vertices, so n - 1 edges."""
    if n < 1:
        raise SizeTooSmall("paths need n >= 1")
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def ladder_graph(k: int) -> MultiGraph:
    """The ladder P_2 x P_k: rails 0..k-1 and k..2k-1 joined by k rungs."""
    if k < 1:
        raise SizeTooSmall("ladders need k >= 1")
    edges = []
    for i in range(k - 1):
        edges.append((i, i + 1))
        edges.append((k + i, k + i + 1))
    edges.extend((i, k + i) for i in range(k))
    return MultiGraph(2 * k, tuple(edges))


def mobius_ladder(k: int) -> MultiGraph:
    """The Mobius ladder M_k: a 2k-cycle plus the k cross-edges (i, i+k).

    3-regular with 3k edges. k = 2 is rejected: its cross-edges would
    duplicate cycle chords and the family facts below assume k >= 3.
    """
    if k < 3:
        raise SizeTooSmall("mobius ladders need k >= 3")
    edges = [(i, (i + 1) % (2 * k)) for i in range(2 * k)]
    edges.extend((i, i + k) for i in range(k))
    return MultiGraph(2 * k, tuple(edges))


def wheel_graph(n: int) -> MultiGraph:
    """W_n: an n-cycle on 0..n-1 plus a center vertex n joined to the rim."""
    if n < 3:
        raise SizeTooSmall("wheels need n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.extend((i, n) for i in range(n))
    return MultiGraph(n + 1, tuple(edges))


_GENERATORS = {
    "complete": complete_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "ladder": ladder_graph,
    "mobius": mobius_ladder,
    "wheel": wheel_graph,
}


@dataclass(frozen=True)
class FamilySpec:
    """Names one member of a parameterized family, e.g. ("mobius", 6)."""

    family: str
    size: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.size < MIN_SIZE[self.family]:
            raise SizeTooSmall(
                f"{self.family} requires size >= {MIN_SIZE[self.family]}"
            )

    def build(self) -> MultiGraph:
        return _GENERATORS[self.family](self.size)


def parse_edge_list(text: str) -> MultiGraph:
    """Parse the edge-list format: a header line "n m", then m lines "u v".

    Lines starting with '#' are comments and may appear anywhere; tokens are
    separated by single spaces. Loops and out-of-range ids raise their own
    error types, everything else malformed raises ParseError with the line.
    """
    header = None
    n = m = 0
    edges: list[tuple[int, int]] = []
    line_no = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            continue
        tokens = line.split(" ")
        if header is None:
            if len(tokens) != 2:
                raise ParseError("expected header 'n m'", line_no)
            try:
                n, m = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError("header counts must be integers", line_no) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be non-negative", line_no)
            header = (n, m)
            continue
        if len(edges) == m:
            raise ParseError(f"expected exactly {m} edge lines", line_no)
        if len(tokens) != 2:
            raise ParseError("expected edge line 'u v'", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError("vertex ids must be integers", line_no) from None
        if u == v:
            raise LoopRejected(f"line {line_no}: loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise IdOutOfRange(f"line {line_no}: edge ({u}, {v}) outside 0..{n - 1}")
        edges.append((u, v))
    if header is None:
        raise ParseError("missing header 'n m'", line_no + 1)
    if len(edges) != m:
        raise ParseError(f"expected {m} edge lines, found {len(edges)}", line_no + 1)
    return new_graph(n, edges)


def emit_edge_list(g: MultiGraph) -> str:
    """Deterministic inverse of parse_edge_list: sorted "u v" lines."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
