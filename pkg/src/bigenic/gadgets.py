"""List-colouring gadgets built from positive NAE-3SAT instances.

Vertex layout is fixed as ``x_1..x_n, C_1..C_m, C'_1..C'_m, k_1..k_2n``.
Variable ``x_i`` gets the list ``{2i-1, 2i}``; a clause over variables
``g, h, i`` gives ``C_j`` the odd colours of their lists and ``C'_j`` the
even ones.  ``G1`` joins every x-type vertex to every C-type vertex,
``G2`` additionally makes the x-type vertices a clique, and the primed
versions add a clique ``k_1..k_2n`` where ``k_l`` sees ``u`` exactly
when ``l`` is missing from ``u``'s list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import ValidationError
from .formats import to_graph6
from .graph import Graph, complement, components
from .recognizers import path_length

ROLE_X = "x"
ROLE_C = "C"
ROLE_C_PRIME = "C'"
ROLE_K = "k"


@dataclass(frozen=True)
class NaeInstance:
    n: int
    clauses: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("an instance needs at least one variable")
        for idx, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise ValidationError(f"clause {idx} has {len(clause)} literals, expected 3")
            if len(set(clause)) != 3:
                raise ValidationError(
                    f"clause {idx} repeats a variable; each literal may appear at most once per clause"
                )
            for v in clause:
                if not 1 <= v <= self.n:
                    raise ValidationError(f"clause {idx} uses variable {v} outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def duplicate_clauses(self) -> list[int]:
        """1-based indices of clauses whose variable set already occurred."""
        seen = set()
        dups = []
        for idx, clause in enumerate(self.clauses, start=1):
            key = frozenset(clause)
            if key in seen:
                dups.append(idx)
            seen.add(key)
        return dups

    def to_text(self) -> str:
        lines = [f"p nae {self.n} {self.m}"]
        lines.extend(" ".join(map(str, c)) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"

    def describe(self) -> dict:
        return {"n": self.n, "m": self.m, "clauses": [list(c) for c in self.clauses]}


def parse_nae(text: str) -> NaeInstance:
    """Read ``p nae <n> <m>`` followed by ``m`` lines ``v1 v2 v3 0``.

    Lines starting with ``c`` are comments.  A clause may also span lines;
    it ends at its terminating ``0``.
    """
    header = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[:2] != ["p", "nae"]:
                raise ValidationError(f"line {lineno}: expected header 'p nae <n> <m>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ValidationError(f"line {lineno}: header counts must be integers") from None
            if header[0] < 1 or header[1] < 0:
                raise ValidationError(f"line {lineno}: need n >= 1 and m >= 0")
            continue
        try:
            tokens.extend(int(t) for t in line.split())
        except ValueError:
            raise ValidationError(f"line {lineno}: clause entries must be integers") from None
    if header is None:
        raise ValidationError("missing header 'p nae <n> <m>'")
    n, m = header
    clauses = []
    current: list[int] = []
    for t in tokens:
        if t == 0:
            if len(current) != 3:
                raise ValidationError(f"clause {len(clauses) + 1} has {len(current)} literals, expected 3")
            clauses.append(tuple(current))
            current = []
        elif t < 0:
            raise ValidationError(f"clause {len(clauses) + 1}: negative literal {t}; only positive literals allowed")
        else:
            current.append(t)
    if current:
        raise ValidationError(f"clause {len(clauses) + 1} is not terminated by 0")
    if len(clauses) != m:
        raise ValidationError(f"header announces {m} clauses, found {len(clauses)}")
    return NaeInstance(n, tuple(clauses))


FANO_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def fano_instance() -> NaeInstance:
    """Lines of the Fano plane: the classic NAE-unsatisfiable instance."""
    return NaeInstance(7, FANO_TRIPLES)


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    roles: tuple[tuple[str, int], ...]  # (role, 1-based index) per vertex
    lists: tuple[frozenset, ...]  # empty on k-type vertices
    colour_budget: int
    variant: str
    instance: NaeInstance = field(repr=False, compare=False)

    def vertices_of(self, *kinds: str) -> list[int]:
        return [v for v, (role, _) in enumerate(self.roles) if role in kinds]

    def original_vertices(self) -> list[int]:
        return self.vertices_of(ROLE_X, ROLE_C, ROLE_C_PRIME)

    def role_name(self, v: int) -> str:
        role, idx = self.roles[v]
        return f"C{idx}'" if role == ROLE_C_PRIME else f"{role}{idx}"

    def sidecar(self) -> dict:
        return {
            "variant": self.variant,
            "graph6": to_graph6(self.graph),
            "roles": [self.role_name(v) for v in range(self.graph.n)],
            "lists": [sorted(lst) for lst in self.lists],
            "colour_budget": self.colour_budget,
        }

    def sidecar_json(self) -> str:
        return json.dumps(self.sidecar(), sort_keys=True)


def _lists_and_roles(inst: NaeInstance):
    roles = [(ROLE_X, i) for i in range(1, inst.n + 1)]
    lists = [frozenset({2 * i - 1, 2 * i}) for i in range(1, inst.n + 1)]
    odd = [frozenset(2 * v - 1 for v in c) for c in inst.clauses]
    roles += [(ROLE_C, j) for j in range(1, inst.m + 1)]
    lists += odd
    roles += [(ROLE_C_PRIME, j) for j in range(1, inst.m + 1)]
    lists += [frozenset(c + 1 for c in lst) for lst in odd]
    return roles, lists


def build_g1(inst: NaeInstance) -> GadgetGraph:
    """Complete bipartite graph between x-type and C-type vertices."""
    roles, lists = _lists_and_roles(inst)
    n, total = inst.n, inst.n + 2 * inst.m
    edges = [(x, c) for x in range(n) for c in range(n, total)]
    return GadgetGraph(Graph.from_edges(total, edges), tuple(roles), tuple(lists), 2 * n, "g1", inst)


def build_g2(inst: NaeInstance) -> GadgetGraph:
    """``build_g1`` plus a clique on the x-type vertices (a complete split graph)."""
    g1 = build_g1(inst)
    edges = g1.graph.edges() + list(combinations(range(inst.n), 2))
    return GadgetGraph(Graph.from_edges(g1.graph.n, edges), g1.roles, g1.lists, g1.colour_budget, "g2", inst)


def extend_with_clique(g: GadgetGraph) -> GadgetGraph:
    """Append the clique k_1..k_2n; k_l ~ u iff l is not in L(u)."""
    if g.variant not in ("g1", "g2"):
        raise ValidationError(f"extend_with_clique expects a g1 or g2 gadget, got {g.variant}")
    budget = 2 * g.instance.n
    base = g.graph.n
    edges = g.graph.edges()
    edges += [(base + a, base + b) for a, b in combinations(range(budget), 2)]
    for u in range(base):
        edges += [(u, base + ell - 1) for ell in range(1, budget + 1) if ell not in g.lists[u]]
    roles = g.roles + tuple((ROLE_K, ell) for ell in range(1, budget + 1))
    lists = g.lists + (frozenset(),) * budget
    return GadgetGraph(Graph.from_edges(base + budget, edges), roles, lists, budget, g.variant + "p", g.instance)


def build_variant(inst: NaeInstance, variant: str) -> GadgetGraph:
    builders = {
        "g1": lambda: build_g1(inst),
        "g2": lambda: build_g2(inst),
        "g1p": lambda: extend_with_clique(build_g1(inst)),
        "g2p": lambda: extend_with_clique(build_g2(inst)),
    }
    if variant not in builders:
        raise ValidationError(f"unknown gadget variant {variant!r}; choose g1, g2, g1p or g2p")
    return builders[variant]()


# -- structure report ------------------------------------------------------


@dataclass(frozen=True)
class StructureCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class StructureReport:
    variant: str
    checks: list[StructureCheck]
    duplicate_clauses: list[int]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[StructureCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "passed": self.passed,
            "duplicate_clauses": self.duplicate_clauses,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def _is_clique(g: Graph, vs: list[int]) -> bool:
    return all(g.adjacent(u, v) for u, v in combinations(vs, 2))


def _is_independent(g: Graph, vs: list[int]) -> bool:
    return not any(g.adjacent(u, v) for u, v in combinations(vs, 2))


def _first_pair(g: Graph, vs: list[int], want_edge: bool) -> Optional[tuple[int, int]]:
    return next(((u, v) for u, v in combinations(vs, 2) if g.adjacent(u, v) != want_edge), None)


def gadget_structure_report(g: GadgetGraph) -> StructureReport:
    """Check the facts the freeness arguments rely on for G1' or G2'.

    Everything except the k-clique rule and the base graph shape is
    checked on the complement, where those arguments are phrased.
    """
    if g.variant not in ("g1p", "g2p"):
        raise ValidationError(f"structure report expects a g1p or g2p gadget, got {g.variant}")
    G = g.graph
    co = complement(G)
    xs = g.vertices_of(ROLE_X)
    cs = g.vertices_of(ROLE_C, ROLE_C_PRIME)
    ks = g.vertices_of(ROLE_K)
    originals = xs + cs
    checks: list[StructureCheck] = []

    def add(name: str, ok: bool, detail: str = ""):
        checks.append(StructureCheck(name, ok, "" if ok else detail))

    def pair_detail(pair):
        return "" if pair is None else f"{g.role_name(pair[0])}, {g.role_name(pair[1])}"

    # Base graph: x-C complete, C-type independent, x-type per variant.
    missing = next(((x, c) for x in xs for c in cs if not G.adjacent(x, c)), None)
    add("x-C complete in G", missing is None, pair_detail(missing))
    add("C-type independent in G", _is_independent(G, cs), pair_detail(_first_pair(G, cs, False)))
    if g.variant == "g1p":
        add("x-type independent in G (complete bipartite base)", _is_independent(G, xs),
            pair_detail(_first_pair(G, xs, False)))
    else:
        add("x-type clique in G (complete split base)", _is_clique(G, xs), pair_detail(_first_pair(G, xs, True)))

    add("k-type clique in G", _is_clique(G, ks), pair_detail(_first_pair(G, ks, True)))
    bad = None
    for u in originals:
        for k in ks:
            ell = g.roles[k][1]
            if G.adjacent(u, k) == (ell in g.lists[u]):
                bad = (u, k)
                break
        if bad:
            break
    add("k_l ~ u iff l not in L(u)", bad is None, pair_detail(bad))

    colours = sorted(c for x in xs for c in g.lists[x])
    add("x-lists partition 1..2n", colours == list(range(1, g.colour_budget + 1)))
    parity_ok = all(all(c % 2 == 1 for c in g.lists[v]) for v in g.vertices_of(ROLE_C)) and all(
        all(c % 2 == 0 for c in g.lists[v]) for v in g.vertices_of(ROLE_C_PRIME)
    )
    add("C lists odd, C' lists even", parity_ok)

    # Complement side.
    if g.variant == "g1p":
        add("complement: x-type clique", _is_clique(co, xs), pair_detail(_first_pair(co, xs, True)))
    else:
        add("complement: x-type independent", _is_independent(co, xs), pair_detail(_first_pair(co, xs, False)))
    add("complement: C-type clique", _is_clique(co, cs), pair_detail(_first_pair(co, cs, True)))
    add("complement: k-type independent", _is_independent(co, ks), pair_detail(_first_pair(co, ks, False)))
    cross = next(((x, c) for x in xs for c in cs if co.adjacent(x, c)), None)
    add("complement: no x-C edges", cross is None, pair_detail(cross))
    c_k_ok = all(
        len([k for k in ks if co.adjacent(c, k)]) == 3 for c in cs
    )
    add("complement: each C-type vertex has exactly three k-type neighbours", c_k_ok)
    if g.variant == "g2p":
        bad_deg = next((x for x in xs if co.degree(x) != 2), None)
        add("complement: every x-type vertex has degree 2", bad_deg is None,
            "" if bad_deg is None else g.role_name(bad_deg))
        sub = co.induced(xs + ks)
        p3 = all(path_length(c) == 3 for c in components(sub))
        add("complement: x and k vertices induce disjoint P3s", p3)
    return StructureReport(g.variant, checks, g.instance.duplicate_clauses())


def is_complete_bipartite(g: Graph, left: list[int], right: list[int]) -> bool:
    """``g`` is exactly the complete bipartite graph between ``left`` and ``right``."""
    return _is_independent(g, left) and _is_independent(g, right) and all(
        g.adjacent(u, v) for u in left for v in right
    ) and len(left) + len(right) == g.n

