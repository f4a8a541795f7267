"""Named small graphs and induced-subgraph search.

Patterns are the forbidden shapes that carve out hereditary graph classes:
paths, cliques, cycles, brooms and a handful of five-vertex graphs with
common names.  ``realize`` turns a spec into a concrete labelled graph,
``find_induced`` looks for an induced copy inside a host, and ``is_free``
checks a host against a whole family at once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .graphs import Graph, disjoint_union, from_edges

_SIMPLE_KINDS = {"chair", "bull", "cricket", "gem", "2p2"}


@dataclass(frozen=True)
class PatternSpec:
    """One forbidden pattern.

    kind is one of: ``path``, ``clique``, ``star``, ``cycle``, ``broom``,
    ``broomplus``, ``chair``, ``bull``, ``cricket``, ``gem``, ``2p2``,
    ``union``, ``plus_isolated``.  Integer parameters live in ``a``/``b``;
    composite kinds carry sub-specs in ``parts``.
    """

    kind: str
    a: int = 0
    b: int = 0
    parts: tuple["PatternSpec", ...] = field(default=())

    def __post_init__(self):
        k = self.kind
        if k in ("path", "clique"):
            if self.a < 1:
                raise ValueError(f"{k} needs at least one vertex, got {self.a}")
        elif k == "star":
            if self.a < 0:
                raise ValueError(f"star needs >= 0 leaves, got {self.a}")
        elif k == "cycle":
            if self.a < 3:
                raise ValueError(f"cycle needs length >= 3, got {self.a}")
        elif k == "broom":
            if self.a < 2 or self.b < 0:
                raise ValueError(f"broom needs handle >= 2 and >= 0 bristles, got ({self.a},{self.b})")
        elif k == "broomplus":
            if self.a < 0:
                raise ValueError(f"broomplus needs >= 0 bristles, got {self.a}")
        elif k in _SIMPLE_KINDS:
            pass
        elif k == "union":
            if len(self.parts) < 2:
                raise ValueError("union needs at least two parts")
        elif k == "plus_isolated":
            if len(self.parts) != 1 or self.a < 1:
                raise ValueError("plus_isolated needs one base spec and >= 1 isolated vertices")
        else:
            raise ValueError(f"unknown pattern kind {k!r}")


def path(n: int) -> PatternSpec:
    return PatternSpec("path", n)


def clique(n: int) -> PatternSpec:
    return PatternSpec("clique", n)


def star(m: int) -> PatternSpec:
    return PatternSpec("star", m)


def cycle(n: int) -> PatternSpec:
    return PatternSpec("cycle", n)


def broom(n: int, m: int) -> PatternSpec:
    return PatternSpec("broom", n, m)


def broomplus(m: int) -> PatternSpec:
    return PatternSpec("broomplus", m)


def union(*parts: PatternSpec) -> PatternSpec:
    return PatternSpec("union", parts=tuple(parts))


def plus_isolated(base: PatternSpec, count: int) -> PatternSpec:
    return PatternSpec("plus_isolated", count, parts=(base,))


CHAIR = PatternSpec("chair")
BULL = PatternSpec("bull")
CRICKET = PatternSpec("cricket")
GEM = PatternSpec("gem")
TWO_P2 = PatternSpec("2p2")


@lru_cache(maxsize=None)
def realize(spec: PatternSpec) -> Graph:
    """Build the labelled graph for a spec.  Same spec, same graph."""
    k = spec.kind
    if k == "path":
        return from_edges(spec.a, [(i, i + 1) for i in range(spec.a - 1)])
    if k == "clique":
        n = spec.a
        return from_edges(n, [(u, v) for v in range(n) for u in range(v)])
    if k == "star":
        return from_edges(spec.a + 1, [(0, i) for i in range(1, spec.a + 1)])
    if k == "cycle":
        n = spec.a
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if k == "broom":
        # handle 0..a-1 is a path; bristles a..a+b-1 hang off vertex a-1
        n, m = spec.a, spec.b
        edges = [(i, i + 1) for i in range(n - 1)]
        edges += [(n - 1, n + j) for j in range(m)]
        return from_edges(n + m, edges)
    if k == "broomplus":
        # a triangle 1,2,3 with a pendant at 1; bristles hang off vertex 2
        m = spec.a
        edges = [(0, 1), (1, 2), (1, 3), (2, 3)]
        edges += [(2, 4 + j) for j in range(m)]
        return from_edges(4 + m, edges)
    if k == "chair":
        return realize(broom(3, 2))
    if k == "bull":
        return realize(broomplus(1))
    if k == "cricket":
        # triangle 0,1,2 with two pendants at vertex 1
        return from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4)])
    if k == "gem":
        return from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
    if k == "2p2":
        return from_edges(4, [(0, 1), (2, 3)])
    if k == "union":
        g = realize(spec.parts[0])
        for part in spec.parts[1:]:
            g = disjoint_union(g, realize(part))
        return g
    if k == "plus_isolated":
        base = realize(spec.parts[0])
        return Graph(base.n + spec.a, base.rows + (0,) * spec.a)
    raise ValueError(f"unknown pattern kind {k!r}")


@dataclass(frozen=True)
class Embedding:
    """An induced embedding: pattern vertex i sits at host vertex mapping[i]."""

    mapping: tuple[int, ...]


class PatternViolation(ValueError):
    """A graph required to avoid a pattern contains it; carries the witness."""

    def __init__(self, spec: PatternSpec, embedding: Embedding):
        super().__init__(f"graph contains an induced {format_pattern(spec)} at {embedding.mapping}")
        self.spec = spec
        self.embedding = embedding


def embedding_is_induced(host: Graph, pattern: Graph, emb: Embedding) -> bool:
    """Check an embedding pairwise: injective and adjacency-preserving both ways."""
    m = emb.mapping
    if len(m) != pattern.n or len(set(m)) != pattern.n:
        return False
    if any(not 0 <= h < host.n for h in m):
        return False
    for v in range(pattern.n):
        for u in range(v):
            if pattern.has_edge(u, v) != host.has_edge(m[u], m[v]):
                return False
    return True


@lru_cache(maxsize=None)
def _compile_pattern(pattern: Graph) -> tuple[tuple[int, ...], tuple[tuple[tuple[int, bool], ...], ...], tuple[int, ...]]:
    """Fix the vertex-pairing order (highest degree first) and precompute,
    for each pattern vertex, its adjacency to the vertices placed earlier."""
    order = tuple(sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v)))
    earlier = tuple(
        tuple((j, pattern.has_edge(p, order[j])) for j in range(i))
        for i, p in enumerate(order)
    )
    degs = tuple(pattern.degree(v) for v in order)
    return order, earlier, degs


def find_induced_subgraph(host: Graph, pattern: Graph) -> Optional[Embedding]:
    """First induced copy of a concrete pattern graph inside the host.

    Pattern vertices are paired off highest degree first and host candidates
    tried in ascending index, so the embedding returned is the least one
    under that fixed order.  The result is re-checked before it is returned.
    """
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return Embedding(())
    order, earlier_adj, pat_deg = _compile_pattern(pattern)
    rows = host.rows
    host_full = (1 << host.n) - 1
    images = [0] * pattern.n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        cand = host_full & ~used
        for j, adjacent in earlier_adj[i]:
            if adjacent:
                cand &= rows[images[j]]
            else:
                cand &= ~rows[images[j]]
        need = pat_deg[i]
        while cand:
            low = cand & -cand
            h = low.bit_length() - 1
            cand ^= low
            if rows[h].bit_count() >= need:
                images[i] = h
                used |= low
                if i + 1 == pattern.n or place(i + 1):
                    return True
                used &= ~low
        return False

    if not place(0):
        return None
    mapping = [0] * pattern.n
    for i, p in enumerate(order):
        mapping[p] = images[i]
    emb = Embedding(tuple(mapping))
    if not embedding_is_induced(host, pattern, emb):
        raise AssertionError("search produced a bad embedding")  # pragma: no cover
    return emb


def find_induced(host: Graph, spec: PatternSpec) -> Optional[Embedding]:
    """First induced copy of the pattern named by a spec, or None."""
    return find_induced_subgraph(host, realize(spec))


def is_free(host: Graph, family: Iterable[PatternSpec]) -> tuple[bool, Optional[tuple[PatternSpec, Embedding]]]:
    """Check the host against every pattern; stop at the first hit."""
    for spec in family:
        emb = find_induced(host, spec)
        if emb is not None:
            return False, (spec, emb)
    return True, None


# ---------------------------------------------------------------------------
# text grammar: P5, K4, C5, 2P2, chair, bull, cricket, gem, broom(n,m),
# broomplus(m), star(m); a +<count>P1 suffix adds isolated vertices.
# ---------------------------------------------------------------------------

_ATOM_RE = re.compile(r"^(?:(p|k|c)(\d+)|(broom)\((\d+),(\d+)\)|(broomplus|star)\((\d+)\)|(chair|bull|cricket|gem))$")


def _parse_atom(text: str) -> PatternSpec:
    m = _ATOM_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse pattern {text!r}")
    if m.group(1):
        size = int(m.group(2))
        if m.group(1) == "p":
            return path(size)
        if m.group(1) == "k":
            return clique(size)
        return cycle(size)
    if m.group(3):
        return broom(int(m.group(4)), int(m.group(5)))
    if m.group(6) == "broomplus":
        return broomplus(int(m.group(7)))
    if m.group(6) == "star":
        return star(int(m.group(7)))
    return PatternSpec(m.group(8))


def parse_pattern(text: str) -> PatternSpec:
    """Parse the textual pattern grammar (case-insensitive).

    A pattern is a base atom followed by optional "+<c>P1" terms that add
    isolated vertices: "P4+P1", "chair", "broom(3,2)", "C5+2P1".  A count
    in front of the base atom repeats it as a disjoint union ("3K2"), with
    "2P2" kept as a named atom of its own.
    """
    terms = text.strip().lower().replace(" ", "").split("+")
    if not terms or not terms[0]:
        raise ValueError(f"cannot parse pattern {text!r}")
    parsed: list[tuple[int, str]] = []
    for term in terms:
        m = re.match(r"^(\d*)(.*)$", term)
        count = int(m.group(1)) if m.group(1) else 1
        atom = m.group(2)
        # "2P2" is an atom of its own; a leading count otherwise repeats
        if count == 2 and atom == "p2" and len(terms) == 1:
            return TWO_P2
        if count < 1 or not atom:
            raise ValueError(f"cannot parse pattern {text!r}")
        parsed.append((count, atom))
    base_count, base_atom = parsed[0]
    if base_count == 2 and base_atom == "p2":
        base: PatternSpec = TWO_P2
    else:
        base = _parse_atom(base_atom)
        for _ in range(base_count - 1):
            base = union(base, _parse_atom(base_atom))
    isolated = 0
    for count, atom in parsed[1:]:
        if atom != "p1":
            raise ValueError(f"only P1 terms may follow the base pattern, got {atom!r} in {text!r}")
        isolated += count
    if isolated:
        return plus_isolated(base, isolated)
    return base


def format_pattern(spec: PatternSpec) -> str:
    """Render a spec back into the text grammar."""
    k = spec.kind
    if k == "path":
        return f"P{spec.a}"
    if k == "clique":
        return f"K{spec.a}"
    if k == "cycle":
        return f"C{spec.a}"
    if k == "star":
        return f"star({spec.a})"
    if k == "broom":
        return f"broom({spec.a},{spec.b})"
    if k == "broomplus":
        return f"broomplus({spec.a})"
    if k == "2p2":
        return "2P2"
    if k in _SIMPLE_KINDS:
        return k
    if k == "plus_isolated":
        count = "" if spec.a == 1 else str(spec.a)
        return f"{format_pattern(spec.parts[0])}+{count}P1"
    if k == "union":
        return "+".join(format_pattern(p) for p in spec.parts)
    raise ValueError(f"unknown pattern kind {k!r}")
