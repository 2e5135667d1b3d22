"""Structural class membership: paths, T graphs, class T and open patterns."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ValidationError
from .families import realize
from .graph import Graph, Witness, components, contains_induced, is_connected, is_isomorphic, _bits


def path_length(g: Graph) -> Optional[int]:
    """Vertex count ``r`` if ``g`` is the path P_r, else ``None``."""
    if g.n == 0 or not is_connected(g) or g.edge_count != g.n - 1:
        return None
    return g.n if max(g.degrees(), default=0) <= 2 else None


def is_tree(g: Graph) -> bool:
    return g.n > 0 and is_connected(g) and g.edge_count == g.n - 1


def is_linear_forest(g: Graph) -> bool:
    return all(path_length(c) is not None for c in components(g))


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    found = []
    for u in range(g.n):
        for v in _bits(g.rows[u] >> (u + 1) << (u + 1)):
            for w in _bits(g.rows[u] & g.rows[v] >> (v + 1) << (v + 1)):
                found.append((u, v, w))
    return found


def recognize_T(g: Graph) -> Optional[tuple[int, int, int]]:
    """Sorted ``(h, i, j)`` with ``g`` isomorphic to T_{h,i,j}, else ``None``."""
    if g.n < 3 or g.edge_count != g.n or not is_connected(g):
        return None
    tri = _triangles(g)
    if len(tri) != 1:
        return None
    corners = tri[0]
    corner_mask = sum(1 << c for c in corners)
    legs = []
    for c in corners:
        # Walk away from the triangle; every step must be forced.
        length, prev, cur = 0, -1, c
        while True:
            nxt = [u for u in _bits(g.rows[cur] & ~corner_mask) if u != prev]
            if cur == c:
                if len(nxt) > 1:
                    return None
            elif len(nxt) > 1:
                return None
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    if sum(legs) + 3 != g.n:
        return None
    return tuple(sorted(legs))


def classify_component(g: Graph) -> tuple[str, tuple[int, ...]]:
    """``("P", (r,))``, ``("T", (h, i, j))`` or ``("other", ())``."""
    r = path_length(g)
    if r is not None:
        return "P", (r,)
    t = recognize_T(g)
    if t is not None:
        return "T", t
    return "other", ()


def in_class_T(g: Graph, min_h: int = 1) -> bool:
    """Every component is a path or a T_{h,i,j} with ``h >= min_h``.

    The default is the strict class (``1 <= h``).  ``min_h=0`` gives its
    closure under induced subgraphs, see :func:`in_hereditary_class_T`.
    """
    for comp in components(g):
        kind, params = classify_component(comp)
        if kind == "other" or (kind == "T" and params[0] < min_h):
            return False
    return True


def in_hereditary_class_T(g: Graph) -> bool:
    """Components are paths or T_{h,i,j} with ``0 <= h``.

    This is the set of induced subgraphs of graphs in the strict class:
    deleting a_1 from T_{1,i,j} leaves T_{0,i,j}, and deleting any vertex
    of a T graph leaves a path, a linear forest or a smaller T graph.
    """
    return in_class_T(g, min_h=0)


# -- tree trichotomy -------------------------------------------------------


@dataclass(frozen=True)
class TreeTrichotomyOutcome:
    tag: str  # ContainsK14, ContainsS112 or LongPath
    witness: Optional[Witness] = None
    path_length: Optional[int] = None


CONTAINS_K14 = "ContainsK14"
CONTAINS_S112 = "ContainsS112"
LONG_PATH = "LongPath"


def tree_trichotomy(g: Graph) -> TreeTrichotomyOutcome:
    """Which of K_{1,4}, S_{1,1,2} or a path on >= 6 vertices a tree offers.

    Defined for trees other than the claw, P_5 and induced subgraphs of P_4.
    """
    if not is_tree(g):
        raise ValidationError("tree_trichotomy: input is not a tree")
    if is_isomorphic(g, realize("K1,3")):
        raise ValidationError("tree_trichotomy: input is the claw K1,3")
    if is_isomorphic(g, realize("P5")):
        raise ValidationError("tree_trichotomy: input is P5")
    if contains_induced(realize("P4"), g) is not None:
        raise ValidationError("tree_trichotomy: input is an induced subgraph of P4")
    top = max(g.degrees())
    if top >= 4:
        return TreeTrichotomyOutcome(CONTAINS_K14, contains_induced(g, realize("K1,4")))
    if top == 3:
        return TreeTrichotomyOutcome(CONTAINS_S112, contains_induced(g, realize("S1,1,2")))
    return TreeTrichotomyOutcome(LONG_PATH, path_length=g.n)


# -- open patterns ---------------------------------------------------------


@dataclass(frozen=True)
class OpenPatternMatch:
    family_id: int
    parameters: dict = field(hash=False)


def _decompose(coH: Graph):
    s = 0
    paths: list[int] = []
    ts: list[tuple[int, int, int]] = []
    for comp in components(coH):
        kind, params = classify_component(comp)
        if kind == "other":
            return None
        if kind == "T":
            ts.append(params)
        elif params[0] == 1:
            s += 1
        else:
            paths.append(params[0])
    return s, sorted(paths), ts


def _family_matches(s: int, paths: list[int], ts: list) -> list[OpenPatternMatch]:
    out = []
    # 1: sP1 + P_t + T_{h,i,j}, h <= i <= j <= 1, 2 <= t <= 3
    if len(ts) == 1 and len(paths) == 1:
        (h, i, j), t = ts[0], paths[0]
        if j <= 1 and 2 <= t <= 3:
            out.append(OpenPatternMatch(1, {"s": s, "t": t, "h": h, "i": i, "j": j}))
    # 2: sP1 + T_{h,i,j}, h <= i <= 1 <= j <= 3, h+i+j+s >= 3
    if len(ts) == 1 and not paths:
        h, i, j = ts[0]
        if i <= 1 <= j <= 3 and h + i + j + s >= 3:
            out.append(OpenPatternMatch(2, {"s": s, "h": h, "i": i, "j": j}))
    # 3: sP1 + T_{0,0,0}, s >= 2
    if len(ts) == 1 and not paths and ts[0] == (0, 0, 0) and s >= 2:
        out.append(OpenPatternMatch(3, {"s": s}))
    if not ts:
        # 4: sP1 + P_t, 3 <= t <= 7, s+t >= 6
        if len(paths) == 1 and 3 <= paths[0] <= 7 and s + paths[0] >= 6:
            out.append(OpenPatternMatch(4, {"s": s, "t": paths[0]}))
        # 5: sP1 + P_t + P_u, 2 <= t <= 3, 3 <= u <= 4, s+t+u >= 6
        if len(paths) == 2:
            t, u = paths
            if 2 <= t <= 3 and 3 <= u <= 4 and s + t + u >= 6:
                out.append(OpenPatternMatch(5, {"s": s, "t": t, "u": u}))
        # 6: sP1 + 2P2, s >= 1
        if paths == [2, 2] and s >= 1:
            out.append(OpenPatternMatch(6, {"s": s}))
    return out


def match_open_pattern_all(coH: Graph) -> list[OpenPatternMatch]:
    """Every open-problem family that the complement graph ``coH`` fits."""
    parts = _decompose(coH)
    if parts is None:
        return []
    return _family_matches(*parts)


def match_open_pattern(coH: Graph) -> Optional[OpenPatternMatch]:
    """Lowest-numbered matching family for ``coH`` (the complement of H)."""
    matches = match_open_pattern_all(coH)
    return matches[0] if matches else None


MINIMAL_OPEN_COMPLEMENTS = (
    "C3+2P1", "C3+P2", "P1+2P2", "3P1+P3", "2P1+P4", "2P3", "P6", "T0,1,1+P1", "T0,1,2", "T1,1,1",
)


def minimal_open_coH() -> list[Graph]:
    """The ten minimal complements co-H whose H is still open."""
    return [realize(e) for e in MINIMAL_OPEN_COMPLEMENTS]
