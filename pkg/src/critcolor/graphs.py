"""Immutable simple graphs over vertices 0..n-1, plus graph6 text encoding.

A Graph stores one adjacency bitmask per vertex.  Bit u of ``rows[v]`` is set
iff uv is an edge.  All operations in this package treat graphs as values:
nothing mutates, equal graphs hash equal, and every derived graph is a fresh
object.  The representation is dense on purpose; everything here runs at desk
scale (a few hundred vertices at most, usually ten).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_VERTEX_CAP = 512


class Graph6Error(ValueError):
    """Malformed graph6 text.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.  ``rows[v]`` is the neighbour bitmask of v.

    The constructor trusts its arguments; use :func:`from_edges`,
    :func:`from_rows` or :func:`parse_graph6` to build validated instances.
    """

    n: int
    rows: tuple[int, ...]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            higher = self.rows[v] >> (v + 1)
            u = v + 1
            while higher:
                if higher & 1:
                    yield (v, u)
                higher >>= 1
                u += 1

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def validate(g: Graph) -> None:
    """Raise ValueError unless the adjacency rows are symmetric and loop-free."""
    full = (1 << g.n) - 1
    if len(g.rows) != g.n:
        raise ValueError(f"expected {g.n} rows, got {len(g.rows)}")
    for v, row in enumerate(g.rows):
        if row & ~full:
            raise ValueError(f"row {v} has bits outside 0..{g.n - 1}")
        if row >> v & 1:
            raise ValueError(f"self-loop at vertex {v}")
    for v in range(g.n):
        for u in range(v + 1, g.n):
            if (g.rows[v] >> u & 1) != (g.rows[u] >> v & 1):
                raise ValueError(f"asymmetric adjacency between {u} and {v}")


def from_rows(n: int, rows: Iterable[int], cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    if not 0 <= n <= cap:
        raise ValueError(f"vertex count {n} outside 0..{cap}")
    g = Graph(n, tuple(rows))
    validate(g)
    return g


def from_edges(n: int, edges: Iterable[tuple[int, int]], cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    if not 0 <= n <= cap:
        raise ValueError(f"vertex count {n} outside 0..{cap}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


# ---------------------------------------------------------------------------
# graph6 encoding (the standard printable format: one graph per LF line)
# ---------------------------------------------------------------------------


def _parse_n(data: bytes, cap: int) -> tuple[int, int]:
    """Decode the leading vertex count; return (n, bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    c = data[0]
    if not 63 <= c <= 126:
        raise Graph6Error(f"character {c!r} outside graph6 range 63..126", 0)
    if c != 126:
        return c - 63, 1
    # long form: '~' then three 6-bit groups, big-endian
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error("vertex counts above 258047 not supported", 1)
    if len(data) < 4:
        raise Graph6Error("truncated long-form vertex count", len(data))
    n = 0
    for i in range(1, 4):
        c = data[i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {c!r} outside graph6 range 63..126", i)
        n = n << 6 | (c - 63)
    if n <= 62:
        raise Graph6Error("long-form vertex count below 63", 1)
    return n, 4


def parse_graph6(text: str | bytes, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Decode one graph6 string.  Errors carry the offending byte offset."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else text
    data = data.rstrip(b"\n")
    n, start = _parse_n(data, cap)
    if n > cap:
        raise Graph6Error(f"vertex count {n} exceeds cap {cap}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - start < nbytes:
        raise Graph6Error(
            f"need {nbytes} adjacency bytes for n={n}, found {len(data) - start}",
            len(data),
        )
    if len(data) - start > nbytes:
        raise Graph6Error("trailing garbage after adjacency bits", start + nbytes)
    rows = [0] * n
    bit = 0  # position in the upper-triangle stream: (0,1),(0,2),(1,2),(0,3),...
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for i in range(nbytes):
        c = data[start + i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {c!r} outside graph6 range 63..126", start + i)
        group = c - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bits", start + i)
                continue
            if group >> k & 1:
                u, v = pairs[bit]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode a graph as graph6 (short vertex-count form whenever n <= 62)."""
    if g.n <= 62:
        head = chr(63 + g.n)
    elif g.n <= 258047:
        head = "~" + "".join(chr(63 + (g.n >> s & 63)) for s in (12, 6, 0))
    else:
        raise ValueError(f"vertex count {g.n} too large for graph6")
    bits: list[int] = []
    for v in range(g.n):
        for u in range(v):
            bits.append(g.rows[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
                  | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
        for i in range(0, len(bits), 6)
    )
    return head + body


# ---------------------------------------------------------------------------
# vertex-set helpers.  Public functions take/return frozensets; the _mask
# variants are the bitmask fast path used throughout the package.
# ---------------------------------------------------------------------------


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _check_vertices(g: Graph, vertices: Iterable[int]) -> int:
    m = mask_of(vertices)
    if m & ~((1 << g.n) - 1) or m < 0:
        raise ValueError("vertex outside graph")
    return m


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Open neighbourhood N(v)."""
    return bits_of(g.rows[v])


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return bits_of(g.rows[v] | 1 << v)


def set_neighborhood_mask(g: Graph, smask: int) -> int:
    acc = 0
    m = smask
    v = 0
    while m:
        if m & 1:
            acc |= g.rows[v]
        m >>= 1
        v += 1
    return acc & ~smask


def set_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """N(S): vertices outside S with a neighbour in S."""
    return bits_of(set_neighborhood_mask(g, _check_vertices(g, s)))


def closed_set_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """N[S] = N(S) together with S itself."""
    m = _check_vertices(g, s)
    return bits_of(set_neighborhood_mask(g, m) | m)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = _check_vertices(g, s)
    rest = m
    v = 0
    while rest:
        if rest & 1 and g.rows[v] & m:
            return False
        rest >>= 1
        v += 1
    return True


def _pairwise_masks(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> tuple[int, int]:
    xm = _check_vertices(g, xs)
    ym = _check_vertices(g, ys)
    if xm & ym:
        raise ValueError("vertex sets overlap")
    return xm, ym


def is_complete_between(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> bool:
    """True iff every vertex of xs is adjacent to every vertex of ys."""
    xm, ym = _pairwise_masks(g, xs, ys)
    rest = xm
    v = 0
    while rest:
        if rest & 1 and (g.rows[v] & ym) != ym:
            return False
        rest >>= 1
        v += 1
    return True


def is_anticomplete_between(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> bool:
    """True iff there is no edge between xs and ys."""
    xm, ym = _pairwise_masks(g, xs, ys)
    rest = xm
    v = 0
    while rest:
        if rest & 1 and g.rows[v] & ym:
            return False
        rest >>= 1
        v += 1
    return True


def mixed_vertices(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices outside S adjacent to at least one but not all of S."""
    smask = _check_vertices(g, s)
    if not smask:
        raise ValueError("S must be nonempty")
    out = 0
    for v in range(g.n):
        if smask >> v & 1:
            continue
        hit = g.rows[v] & smask
        if hit and hit != smask:
            out |= 1 << v
    return bits_of(out)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices, relabelled 0..k-1 in ascending order."""
    keep = sorted(set(vertices))
    m = mask_of(keep)
    if m & ~((1 << g.n) - 1):
        raise ValueError("vertex outside graph")
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        hit = g.rows[v] & m
        u = 0
        while hit:
            if hit & 1:
                rows[pos[v]] |= 1 << pos[u]
            hit >>= 1
            u += 1
    return Graph(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row ^ (1 << v)) & full for v, row in enumerate(g.rows)))


def disjoint_union(a: Graph, b: Graph, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    n = a.n + b.n
    if n > cap:
        raise ValueError(f"combined vertex count {n} exceeds cap {cap}")
    rows = list(a.rows) + [row << a.n for row in b.rows]
    return Graph(n, tuple(rows))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components as vertex sets, ordered by least member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            u = 0
            while m:
                if m & 1:
                    nxt |= g.rows[u]
                m >>= 1
                u += 1
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(bits_of(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        u = 0
        while m:
            if m & 1:
                nxt |= g.rows[u]
            m >>= 1
            u += 1
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << g.n) - 1
