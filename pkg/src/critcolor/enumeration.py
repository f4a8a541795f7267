"""Isomorphism-free enumeration of small graphs and critical-graph harvesting.

Canonical forms come from the usual partition-refinement scheme: vertices
are partitioned by degree, the partition is refined to equitability, and a
backtracking search over the permutations still compatible with it picks the
relabelling whose adjacency bit-string is smallest.  Automorphisms discovered
along the way (two branches producing the same bit-string) prune sibling
branches, which keeps highly symmetric graphs like cycles and edgeless
graphs from exploding into factorial search.

Enumeration walks orders 1, 2, ... n: every n-vertex graph arises from some
(n-1)-vertex graph by adding one vertex, so each level is generated by
attaching a new vertex to each survivor in all 2^(n-1) ways and deduplicating
by canonical form.  Forbidden-pattern filters are hereditary, so filtered-out
parents can be dropped for good.
"""

from __future__ import annotations

import warnings
from typing import Iterable, Iterator, Optional

from . import chroma
from .critical import CriticalDb, criticality_report, find_comparable_nonadjacent
from .graphs import Graph, Graph6Error, is_connected, parse_graph6, to_graph6
from .patterns import PatternSpec, find_induced_subgraph, realize

MAX_CANONICAL_N = 16
MAX_ENUMERATION_N = 10


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement.  Cells split by neighbour counts into splitter
    cells; fragments are ordered by count, so the ordering of the refined
    partition depends only on the structure, never on vertex labels."""
    while True:
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new_cells: list[list[int]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    split = True
                    for count in sorted(groups):
                        new_cells.append(groups[count])
            if split:
                cells = new_cells
                break
        else:
            return cells


def _adjacency_bits(rows: tuple[int, ...], label: list[int]) -> int:
    """Upper-triangle bit-string (same pair order as graph6) as an integer."""
    bits = 0
    for v in range(1, len(label)):
        rv = rows[label[v]]
        for u in range(v):
            bits = bits << 1 | (rv >> label[u] & 1)
    return bits


def _canonical_labeling(g: Graph) -> list[int]:
    """The vertex order minimizing the adjacency bit-string among all orders
    compatible with the refined degree partition."""
    n = g.n
    rows = g.rows
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    cells = _refine(rows, [by_degree[d] for d in sorted(by_degree)])

    best_bits: Optional[int] = None
    best_label: Optional[list[int]] = None
    gens: list[list[int]] = []  # discovered automorphisms, as orig -> orig maps

    def same_orbit(a: int, b: int, fixed: list[int]) -> bool:
        usable = [p for p in gens if all(p[f] == f for f in fixed)]
        if not usable:
            return False
        seen = {a}
        frontier = [a]
        while frontier:
            nxt = []
            for v in frontier:
                for p in usable:
                    w = p[v]
                    if w not in seen:
                        if w == b:
                            return True
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return False

    def descend(cells: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_bits, best_label
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            label = [c[0] for c in cells]
            bits = _adjacency_bits(rows, label)
            if best_bits is None or bits < best_bits:
                best_bits = bits
                best_label = label
            elif bits == best_bits:
                perm = [0] * n
                for i in range(n):
                    perm[best_label[i]] = label[i]
                if any(perm[v] != v for v in range(n)) and perm not in gens:
                    gens.append(perm)
            return
        done: list[int] = []
        for v in cells[target]:
            if any(same_orbit(v, w, fixed) for w in done):
                continue
            done.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            descend(_refine(rows, child), fixed + [v])

    descend(cells, [])
    assert best_label is not None
    return best_label


def canonical_form(g: Graph) -> str:
    """graph6 text of the canonically relabelled graph.  Two graphs are
    isomorphic exactly when their canonical forms are string-equal."""
    if g.n > MAX_CANONICAL_N:
        raise ValueError(f"canonical form limited to n <= {MAX_CANONICAL_N}, got {g.n}")
    if g.n <= 1:
        return to_graph6(g)
    label = _canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(label):
        pos[v] = i
    rows = [0] * g.n
    for i, v in enumerate(label):
        m = g.rows[v]
        while m:
            low = m & -m
            rows[i] |= 1 << pos[low.bit_length() - 1]
            m ^= low
    return to_graph6(Graph(g.n, tuple(rows)))


def _extensions(parent: Graph) -> Iterator[Graph]:
    """All graphs made by adding one vertex to the parent (every possible
    neighbourhood), new vertex last."""
    n = parent.n + 1
    for nb in range(1 << parent.n):
        rows = [parent.rows[v] | ((nb >> v & 1) << parent.n) for v in range(parent.n)]
        rows.append(nb)
        yield Graph(n, tuple(rows))


def _passes(g: Graph, filter_graphs: list[Graph]) -> bool:
    return all(find_induced_subgraph(g, f) is None for f in filter_graphs)


def _levels(
    n_max: int, filters: Iterable[PatternSpec]
) -> Iterator[tuple[int, list[Graph]]]:
    """Survivor lists level by level: one canonical representative per
    isomorphism class of filter-free graphs on exactly n vertices."""
    filter_graphs = [realize(f) for f in filters]
    seed = Graph(1, (0,))
    level = [parse_graph6(canonical_form(seed))] if _passes(seed, filter_graphs) else []
    yield 1, level
    for n in range(2, n_max + 1):
        seen: dict[str, Graph] = {}
        for parent in level:
            for child in _extensions(parent):
                if not _passes(child, filter_graphs):
                    continue
                canon = canonical_form(child)
                if canon not in seen:
                    seen[canon] = parse_graph6(canon)
        level = [seen[c] for c in sorted(seen)]
        yield n, level


def enumerate_graphs(
    n: int, filters: Iterable[PatternSpec] = (), connected_only: bool = False
) -> Iterator[Graph]:
    """One representative per isomorphism class of n-vertex graphs avoiding
    every filter pattern, in canonical-form order."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration limited to 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    for m, level in _levels(n, tuple(filters)):
        if m == n:
            for g in level:
                if not connected_only or is_connected(g):
                    yield g


def enumerate_up_to(
    n_max: int, filters: Iterable[PatternSpec] = (), connected_only: bool = False
) -> Iterator[Graph]:
    """Like enumerate_graphs but over every order 1..n_max, ascending, without
    recomputing the lower levels once per order."""
    if not 1 <= n_max <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration limited to n_max <= {MAX_ENUMERATION_N}, got {n_max}")
    for _, level in _levels(n_max, tuple(filters)):
        for g in level:
            if not connected_only or is_connected(g):
                yield g


def enumerate_critical(
    k: int, n_max: int, family: Iterable[PatternSpec] = ()
) -> CriticalDb:
    """All k-vertex-critical graphs avoiding the family, up to n_max vertices.

    The enumeration tree is pruned hard: only (k-1)-colourable graphs are
    extended, because a graph whose chromatic number has already reached k
    cannot sit properly inside a larger critical graph (deleting any vertex
    outside it would not lower the chromatic number below k).  Each child
    that jumps to chromatic number k is screened with the cheap necessary
    conditions (connected, minimum degree at least k-1, no nonadjacent pair
    with nested neighbourhoods) before the full per-vertex check runs.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 1 <= n_max <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration limited to n_max <= {MAX_ENUMERATION_N}, got {n_max}")
    family = tuple(family)
    filter_graphs = [realize(f) for f in family]
    members: list[str] = []
    parents = [Graph(1, (0,))] if _passes(Graph(1, (0,)), filter_graphs) else []
    for n in range(1, n_max + 1):
        children = [Graph(1, (0,))] if n == 1 else (
            child for parent in parents for child in _extensions(parent)
        )
        next_parents: dict[str, Graph] = {}
        level_members: set[str] = set()
        for child in children:
            if n > 1 and not _passes(child, filter_graphs):
                continue
            if chroma.is_k_colorable(child, k - 1) is not None:
                if n < n_max:
                    canon = canonical_form(child)
                    if canon not in next_parents:
                        next_parents[canon] = parse_graph6(canon)
                continue
            # chi is exactly k here: the parent was (k-1)-colourable, so one
            # added vertex cannot push the chromatic number past k
            if not is_connected(child):
                continue
            if min(child.degree(v) for v in range(child.n)) < k - 1:
                continue
            if find_comparable_nonadjacent(child) is not None:
                continue
            canon = canonical_form(child)
            if canon in level_members:
                continue
            if criticality_report(child, k).verdict:
                level_members.add(canon)
        members.extend(sorted(level_members))
        parents = [next_parents[c] for c in sorted(next_parents)]
    return CriticalDb(k, family, tuple(members))


def verify_critdb(db: CriticalDb) -> bool:
    """Re-check a database from scratch: members must be canonical, pairwise
    distinct, family-free and k-vertex-critical."""
    if len(set(db.members)) != len(db.members):
        return False
    for text in db.members:
        g = parse_graph6(text)
        if canonical_form(g) != text:
            return False
        if not _passes(g, [realize(f) for f in db.family]):
            return False
        if not criticality_report(g, db.k).verdict:
            return False
    return True


def ingest_graph6_stream(lines: Iterable[str], strict: bool = True) -> Iterator[Graph]:
    """Parse a graph6 line stream.  Malformed lines raise (strict) or are
    reported as warnings and skipped, always naming the line number."""
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            if strict:
                raise ValueError(f"line {lineno}: {exc}") from exc
            warnings.warn(f"skipping malformed graph6 at line {lineno}: {exc}")
