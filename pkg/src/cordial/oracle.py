"""Exhaustive search for cordiality and the two deficiency measures.

Labelings are encoded as n-bit integers, bit i giving the label of vertex i.
Every search does a full scan and reduces by (cost, canonical encoding) where
the canonical encoding of a labeling is the smaller of itself and its
complement. The reduction makes results bit-identical regardless of worker
count and regardless of whether the complement symmetry is exploited.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterator

from .certify import Certificate, check_certificate
from .errors import SizeLimitExceeded
from .graph_core import MultiGraph
from .labeling import VertexLabeling, balance, first_pair_with_edge_label

DEFAULT_MAX_VERTICES = 24


class InfinityReason(Enum):
    STRICTLY_NONCORDIAL = "StrictlyNoncordial"
    NO_FEASIBLE_AUGMENTATION = "NoFeasibleAugmentation"


@dataclass(frozen=True)
class DeficiencyValue:
    """A deficiency: a non-negative integer or infinity with a stated reason."""

    value: int | None
    reason: InfinityReason | None = None

    @classmethod
    def finite(cls, value: int) -> "DeficiencyValue":
        if value < 0:
            raise ValueError("deficiencies are non-negative")
        return cls(value, None)

    @classmethod
    def infinite(cls, reason: InfinityReason) -> "DeficiencyValue":
        return cls(None, reason)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def render(self) -> str:
        return "infinity" if self.is_infinite else str(self.value)

    def describe(self) -> str:
        if self.is_infinite:
            return f"infinity ({self.reason.value})"
        return str(self.value)

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class OracleResult:
    """Outcome of one exhaustive scan.

    witness is an accepted certificate achieving the value, or None when the
    value is infinite. labelings_examined counts every encoding visited.
    """

    value: DeficiencyValue
    witness: Certificate | None
    labelings_examined: int


def _popcount_unrank(width: int, ones: int, rank: int) -> int:
    """rank-th width-bit integer with the given popcount, ascending order."""
    x = 0
    for pos in range(width - 1, -1, -1):
        if ones == 0:
            break
        below = comb(pos, ones)
        if rank >= below:
            x |= 1 << pos
            rank -= below
            ones -= 1
    return x


def _next_same_popcount(x: int) -> int:
    # Gosper's hack; caller guarantees x > 0 and a successor exists
    low = x & -x
    ripple = x + low
    return ripple | (((x ^ ripple) >> 2) // low)


def _friendly_blocks(
    n: int, halve: bool
) -> list[tuple[int, int, int, int]]:
    """Blocks (ones, width, shift, count) whose concatenation is the friendly stream.

    Within a block the width-bit patterns with the given popcount run in
    ascending integer order, then get shifted. Halving fixes vertex 0 at
    label 0, so encodings are even and widths drop by one.
    """
    if n == 0:
        return [(0, 0, 0, 1)]
    width, shift = (n - 1, 1) if halve else (n, 0)
    blocks = []
    for v1 in sorted({n // 2, (n + 1) // 2}):
        count = comb(width, v1) if v1 <= width else 0
        if count:
            blocks.append((v1, width, shift, count))
    return blocks


def _stream_count(n: int, friendly_only: bool, halve: bool) -> int:
    if friendly_only:
        return sum(c for _, _, _, c in _friendly_blocks(n, halve))
    if n == 0:
        return 1
    return 1 << (n - 1 if halve else n)


def _iter_encodings(
    n: int, friendly_only: bool, halve: bool, start: int, stop: int
) -> Iterator[int]:
    """Encodings at stream positions [start, stop), in stream order."""
    if start >= stop:
        return
    if not friendly_only:
        if n == 0:
            yield 0
            return
        shift = 1 if halve else 0
        for y in range(start, stop):
            yield y << shift
        return
    pos = 0
    for ones, width, shift, count in _friendly_blocks(n, halve):
        if pos >= stop:
            break
        if pos + count <= start:
            pos += count
            continue
        lo = max(start, pos) - pos
        hi = min(stop, pos + count) - pos
        x = _popcount_unrank(width, ones, lo)
        remaining = hi - lo
        while True:
            yield x << shift
            remaining -= 1
            if remaining == 0:
                break
            x = _next_same_popcount(x)
        pos += count


def _scan_range(task) -> tuple[int, tuple[int, int] | None]:
    """Scan one contiguous stream slice; return (examined, best or None).

    best is the minimum (cost, canonical encoding) over candidate labelings
    in the slice. Labelings with no feasible repair contribute no candidate
    but still count as examined.
    """
    mode, n, edges, start, stop, halve = task
    inc = [0] * n
    for j, (u, v) in enumerate(edges):
        inc[u] |= 1 << j
        inc[v] |= 1 << j
    m = len(edges)
    mask = (1 << n) - 1
    friendly_only = mode != "cvd"
    best: tuple[int, int] | None = None
    examined = 0
    for x in _iter_encodings(n, friendly_only, halve, start, stop):
        examined += 1
        acc = 0
        t = x
        while t:
            b = t & -t
            acc ^= inc[b.bit_length() - 1]
            t ^= b
        e1 = acc.bit_count()
        gap = abs(m - 2 * e1)
        if mode == "cordial":
            if gap > 1:
                continue
            cost = 0
        elif mode == "ced":
            if gap <= 1:
                cost = 0
            else:
                ones = x.bit_count()
                zeros = n - ones
                if 2 * e1 > m:
                    # minority edge label 0 needs a same-labeled vertex pair
                    if ones < 2 and zeros < 2:
                        continue
                else:
                    # minority edge label 1 needs a mixed vertex pair
                    if ones == 0 or zeros == 0:
                        continue
                cost = gap - 1
        else:
            if gap > 1:
                continue
            vdiff = abs(n - 2 * x.bit_count())
            cost = vdiff - 1 if vdiff > 1 else 0
        canon = min(x, mask ^ x)
        cand = (cost, canon)
        if best is None or cand < best:
            best = cand
    return examined, best


def _run_scan(
    mode: str,
    g: MultiGraph,
    *,
    halve: bool,
    workers: int,
    max_vertices: int,
) -> tuple[int, tuple[int, int] | None]:
    if g.n > max_vertices:
        raise SizeLimitExceeded(
            f"graph has {g.n} vertices; exhaustive search is capped at"
            f" {max_vertices} (raise max_vertices to override)"
        )
    friendly_only = mode != "cvd"
    total = _stream_count(g.n, friendly_only, halve)
    parts = workers if workers > 1 else 1
    bounds = [total * i // parts for i in range(parts + 1)]
    tasks = [
        (mode, g.n, g.edges, bounds[i], bounds[i + 1], halve)
        for i in range(parts)
    ]
    if parts == 1:
        results = [_scan_range(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_range, tasks))
    examined = sum(r[0] for r in results)
    bests = [r[1] for r in results if r[1] is not None]
    return examined, (min(bests) if bests else None)


def decide_cordial(
    g: MultiGraph,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    workers: int = 1,
    halve_by_complement: bool = True,
) -> tuple[bool, VertexLabeling | None]:
    """Exhaustively decide cordiality; on success return the canonical witness."""
    _, best = _run_scan(
        "cordial", g, halve=halve_by_complement, workers=workers,
        max_vertices=max_vertices,
    )
    if best is None:
        return False, None
    return True, VertexLabeling.from_encoding(best[1], g.n)


def ced_oracle(
    g: MultiGraph,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    workers: int = 1,
    halve_by_complement: bool = True,
) -> OracleResult:
    """Minimum edge additions over friendly labelings, with a checked witness.

    A friendly labeling is repairable only if vertices supporting edges of
    the minority label exist; labelings without them are skipped, and if
    every unbalanced labeling is skipped the value is infinite.
    """
    examined, best = _run_scan(
        "ced", g, halve=halve_by_complement, workers=workers,
        max_vertices=max_vertices,
    )
    if best is None:
        return OracleResult(
            DeficiencyValue.infinite(InfinityReason.NO_FEASIBLE_AUGMENTATION),
            None,
            examined,
        )
    cost, canon = best
    f = VertexLabeling.from_encoding(canon, g.n)
    added: tuple[tuple[int, int], ...] = ()
    if cost:
        rep = balance(g, f)
        minority = 0 if rep.e1 > rep.e0 else 1
        pair = first_pair_with_edge_label(f, minority)
        assert pair is not None
        added = (pair,) * cost
    witness = Certificate(
        kind="ced",
        labels=f.labels,
        claimed_value=cost,
        n=g.n,
        edges=g.edges,
        added_edges=added,
    )
    assert check_certificate(witness).accepted
    return OracleResult(DeficiencyValue.finite(cost), witness, examined)


def cvd_oracle(
    g: MultiGraph,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    workers: int = 1,
    halve_by_complement: bool = True,
) -> OracleResult:
    """Minimum isolated-vertex additions over edge-balanced labelings.

    The scan covers all labelings, not only friendly ones; when no labeling
    balances the edge labels the value is infinite.
    """
    examined, best = _run_scan(
        "cvd", g, halve=halve_by_complement, workers=workers,
        max_vertices=max_vertices,
    )
    if best is None:
        return OracleResult(
            DeficiencyValue.infinite(InfinityReason.STRICTLY_NONCORDIAL),
            None,
            examined,
        )
    cost, canon = best
    f = VertexLabeling.from_encoding(canon, g.n)
    added: tuple[int, ...] = ()
    if cost:
        rep = balance(g, f)
        added = ((0 if rep.v1 > rep.v0 else 1),) * cost
    witness = Certificate(
        kind="cvd",
        labels=f.labels,
        claimed_value=cost,
        n=g.n,
        edges=g.edges,
        added_vertex_labels=added,
    )
    assert check_certificate(witness).accepted
    return OracleResult(DeficiencyValue.finite(cost), witness, examined)


def enumerate_labelings(
    n: int,
    *,
    friendly_only: bool = False,
    halve_by_complement: bool = False,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Iterator[VertexLabeling]:
    """All labelings of n vertices in scan order, as VertexLabeling objects."""
    if n > max_vertices:
        raise SizeLimitExceeded(
            f"{n} vertices; enumeration is capped at {max_vertices}"
        )
    total = _stream_count(n, friendly_only, halve_by_complement)
    for enc in _iter_encodings(n, friendly_only, halve_by_complement, 0, total):
        yield VertexLabeling.from_encoding(enc, n)
