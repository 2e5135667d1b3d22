"""Immutable small graphs on at most 64 vertices.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
intersections and complements are single integer operations.  Every
function here is pure and iterates vertices in index order, which keeps
witnesses and enumeration order reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ResourceLimitError, ValidationError

MAX_VERTICES = 64
ENUMERATION_LIMIT = 7


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Two graphs compare equal only when they are equal vertex for vertex;
    use :func:`is_isomorphic` for structural comparison.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise ValidationError(f"graph size {n} outside 0..{MAX_VERTICES}")
        if len(rows) != n:
            raise ValidationError("need exactly one adjacency row per vertex")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValidationError(f"vertex {v} adjacent to a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise ValidationError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise ValidationError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "_hash", hash((n, self.rows)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise ValidationError(f"graph size {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self):
        return self.n

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in _bits(self.rows[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), rows)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        return self.induced(order)


@dataclass(frozen=True)
class Witness:
    """Induced embedding: ``mapping[i]`` is the host vertex for pattern vertex ``i``."""

    mapping: tuple[int, ...]

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        m = self.mapping
        if len(m) != pattern.n or len(set(m)) != len(m):
            return False
        if any(not 0 <= v < host.n for v in m):
            return False
        for a, b in combinations(range(pattern.n), 2):
            if pattern.adjacent(a, b) != host.adjacent(m[a], m[b]):
                return False
        return True


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.rows)
        offset += h.n
    return Graph(offset, rows)


def _search_order(pattern: Graph, density: float) -> list[int]:
    # Place next the vertex whose links to placed vertices prune hardest in
    # a host of this edge density: an edge keeps about `density` of the
    # candidates, a non-edge about `1 - density`.
    density = min(max(density, 1e-3), 1 - 1e-3)
    w_edge, w_non = -math.log(density), -math.log(1 - density)
    order: list[int] = []
    placed = 0
    remaining = set(range(pattern.n))
    while remaining:
        def score(u: int):
            e = (pattern.rows[u] & placed).bit_count()
            non = len(order) - e
            d = pattern.degree(u)
            return (e * w_edge + non * w_non, d * w_edge + (pattern.n - 1 - d) * w_non, -u)

        v = max(remaining, key=score)
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def iter_induced(host: Graph, pattern: Graph) -> Iterator[Witness]:
    """Yield every induced embedding of ``pattern`` into ``host``.

    Embeddings come out in lexicographic order of the host vertices chosen
    along the internal search order, so the first one is deterministic.
    """
    p, h = pattern.n, host.n
    if p > h:
        return
    if p == 0:
        yield Witness(())
        return
    density = 2 * host.edge_count / (h * (h - 1)) if h > 1 else 0.5
    order = _search_order(pattern, density)
    pdeg = [pattern.degree(v) for v in order]
    pco = [p - 1 - d for d in pdeg]
    hdeg = host.degrees()
    full = (1 << h) - 1
    # Host vertices with enough neighbours and enough non-neighbours.
    allowed = []
    for k in range(p):
        mask = 0
        for v in range(h):
            if hdeg[v] >= pdeg[k] and h - 1 - hdeg[v] >= pco[k]:
                mask |= 1 << v
        allowed.append(mask)
    links = [[pattern.adjacent(order[k], order[j]) for j in range(k)] for k in range(p)]
    hrows = host.rows
    image = [0] * p

    def extend(k: int, used: int) -> Iterator[Witness]:
        cand = allowed[k] & ~used
        row = links[k]
        for j in range(k):
            if row[j]:
                cand &= hrows[image[j]]
            else:
                cand &= full & ~hrows[image[j]]
            if not cand:
                return
        for v in _bits(cand):
            image[k] = v
            if k + 1 == p:
                mapping = [0] * p
                for idx, pv in enumerate(order):
                    mapping[pv] = image[idx]
                yield Witness(tuple(mapping))
            else:
                yield from extend(k + 1, used | (1 << v))

    yield from extend(0, 0)


def contains_induced(host: Graph, pattern: Graph) -> Optional[Witness]:
    """First induced embedding of ``pattern`` in ``host``, or ``None``."""
    return next(iter_induced(host, pattern), None)


def is_free(host: Graph, patterns: Iterable[Graph]) -> bool:
    return all(contains_induced(host, p) is None for p in patterns)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return contains_induced(h, g) is not None


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    return Graph.from_edges(
        len(edges),
        [(a, b) for a, b in combinations(range(len(edges)), 2) if set(edges[a]) & set(edges[b])],
    )


def component_vertex_sets(g: Graph) -> list[list[int]]:
    seen = 0
    parts = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        parts.append(list(_bits(comp)))
    return parts


def components(g: Graph) -> list[Graph]:
    """Connected components as induced subgraphs, ordered by smallest vertex."""
    return [g.induced(vs) for vs in component_vertex_sets(g)]


def is_connected(g: Graph) -> bool:
    return len(component_vertex_sets(g)) <= 1


# -- canonical labelling ---------------------------------------------------


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new.append(groups[sig])
        if len(new) == len(cells):
            return new
        cells = new


def _certificate(g: Graph, order: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    bits = 0
    n = g.n
    for v in range(n):
        i = pos[v]
        for u in _bits(g.rows[v]):
            j = pos[u]
            if i < j:
                bits |= 1 << (i * n + j)
    return bits


def canonical_labelling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(certificate, order)`` with ``g.relabel(order)`` canonical.

    Individualisation-refinement over an equitable partition seeded by
    degree.  Vertices in a target cell that are twins of an already tried
    vertex are skipped: swapping twins is an automorphism that fixes the
    current partition, so their subtrees produce the same certificates.
    """
    if g.n == 0:
        return 0, []
    start = _refine(g, [list(range(g.n))])
    best: list = [None, None]

    def twins(u: int, v: int) -> bool:
        return (g.rows[u] & ~(1 << v)) == (g.rows[v] & ~(1 << u))

    def search(cells: list[list[int]]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        tried: list[int] = []
        for v in cells[target]:
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            search(_refine(g, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(start)
    return best[0], best[1]


def certificate(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: equal iff the graphs are isomorphic."""
    return g.n, canonical_labelling(g)[0]


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labelling(g)[1])


# -- enumeration -----------------------------------------------------------


@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple[Graph, ...]:
    if n <= 5:
        pairs = list(combinations(range(n), 2))
        found: dict[tuple[int, int], Graph] = {}
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [pairs[i] for i in _bits(mask)])
            key = certificate(g)
            if key not in found:
                found[key] = canonical_form(g)
    else:
        # Augment each class on n-1 vertices by a new vertex in every way.
        found = {}
        for base in _graphs_on(n - 1):
            for nbrs in range(1 << (n - 1)):
                rows = list(base.rows)
                for v in _bits(nbrs):
                    rows[v] |= 1 << (n - 1)
                g = Graph(n, rows + [nbrs])
                key = certificate(g)
                if key not in found:
                    found[key] = canonical_form(g)
    return tuple(found[k] for k in sorted(found, key=lambda k: (found[k].edge_count, k[1])))


def enumerate_graphs(n: int, limit: int = ENUMERATION_LIMIT) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Ordered by edge count, then by certificate.
    """
    if n < 0:
        raise ValidationError("vertex count must be non-negative")
    if n > limit:
        raise ResourceLimitError(f"enumeration of {n}-vertex graphs exceeds limit {limit}")
    yield from _graphs_on(n)
