"""Exact, deterministic solvers for desk-scale verification.

Colours are positive integers.  Colourings are returned as tuples indexed
by vertex; assignments as tuples of booleans indexed by variable - 1.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import ResourceLimitError, ValidationError
from .gadgets import NaeInstance
from .graph import Graph, _bits

NAE_VARIABLE_LIMIT = 24
CHROMATIC_VERTEX_LIMIT = 40
NODE_BUDGET = 5_000_000

Colouring = tuple
Assignment = tuple


# -- NAE-3SAT ---------------------------------------------------------------


def is_nae_satisfying(inst: NaeInstance, assignment: Sequence[bool]) -> bool:
    if len(assignment) != inst.n:
        return False
    return all(len({assignment[v - 1] for v in clause}) == 2 for clause in inst.clauses)


def solve_nae(inst: NaeInstance) -> Optional[Assignment]:
    """Satisfying assignment or ``None``; exhaustive with clause pruning.

    An assignment is satisfying iff its negation is, so x_1 is fixed to
    True without losing completeness.
    """
    if inst.n > NAE_VARIABLE_LIMIT:
        raise ResourceLimitError(f"solve_nae supports at most {NAE_VARIABLE_LIMIT} variables, got {inst.n}")
    n = inst.n
    # Clauses become decidable once their largest variable is set.
    by_last: list[list[int]] = [[] for _ in range(n + 1)]
    for clause in inst.clauses:
        mask = sum(1 << (v - 1) for v in clause)
        by_last[max(clause)].append(mask)
    values = [False] * n

    def ok(k: int, true_mask: int) -> bool:
        for mask in by_last[k]:
            hit = true_mask & mask
            if hit == 0 or hit == mask:
                return False
        return True

    def extend(k: int, true_mask: int) -> bool:
        if k > n:
            return True
        choices = (True,) if k == 1 else (True, False)
        for val in choices:
            nxt = true_mask | (1 << (k - 1)) if val else true_mask
            if ok(k, nxt):
                values[k - 1] = val
                if extend(k + 1, nxt):
                    return True
        return False

    return tuple(values) if extend(1, 0) else None


# -- colouring ---------------------------------------------------------------


def is_proper(g: Graph, colouring: Sequence[int]) -> bool:
    return len(colouring) == g.n and all(colouring[u] != colouring[v] for u, v in g.edges())


def respects_lists(colouring: Sequence[int], lists: Sequence) -> bool:
    return all(c in lst for c, lst in zip(colouring, lists))


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, found by bitset branch and bound (lowest indices first)."""
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(current) > len(best):
                best = list(current)
            return
        while cand:
            if len(current) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            current.append(v)
            expand(current, cand & g.rows[v])
            current.pop()
            cand ^= low

    expand([], (1 << g.n) - 1)
    return best


def _list_search(g: Graph, domains: list[int], budget: int) -> Optional[list[int]]:
    """Backtracking over colour bitmasks; most constrained vertex first.

    ``domains[v]`` is a bitmask with bit ``c`` set when colour ``c`` is
    allowed.  Returns a colour per vertex or ``None``.
    """
    n = g.n
    colour = [0] * n
    rows = g.rows
    nodes = 0

    def propagate(dom: list[int], queue: list[int]) -> bool:
        # Fix singletons and remove their colour from neighbours.
        while queue:
            v = queue.pop()
            if colour[v]:
                continue
            c = dom[v]
            colour[v] = c.bit_length() - 1
            for u in _bits(rows[v]):
                if colour[u]:
                    if colour[u] == colour[v]:
                        return False
                    continue
                if dom[u] & c:
                    dom[u] &= ~c
                    if not dom[u]:
                        return False
                    if dom[u] & (dom[u] - 1) == 0:
                        queue.append(u)
        return True

    def search(dom: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceLimitError(f"colouring search exceeded {budget} nodes")
        best_v, best_size = -1, 1 << 30
        for v in range(n):
            if not colour[v]:
                size = dom[v].bit_count()
                if size < best_size:
                    best_v, best_size = v, size
        if best_v < 0:
            return True
        v = best_v
        for c in _bits(dom[v]):
            saved = list(colour)
            trial = list(dom)
            trial[v] = 1 << c
            if propagate(trial, [v]) and search(trial):
                return True
            colour[:] = saved
        return False

    dom = list(domains)
    if any(d == 0 for d in dom):
        return None
    if not propagate(dom, [v for v in range(n) if dom[v] & (dom[v] - 1) == 0]):
        return None
    return list(colour) if search(dom) else None


def solve_list_colouring(
    g: Graph, lists: Sequence, budget: int = NODE_BUDGET
) -> Optional[Colouring]:
    """Colouring with ``colour[v] in lists[v]`` for all v, or ``None``."""
    if len(lists) != g.n:
        raise ValidationError(f"need one list per vertex: {len(lists)} lists for {g.n} vertices")
    domains = []
    for v, lst in enumerate(lists):
        if not lst:
            raise ValidationError(f"vertex {v} has an empty list")
        if any(not isinstance(c, int) or c < 1 for c in lst):
            raise ValidationError(f"vertex {v}: colours must be positive integers")
        domains.append(sum(1 << c for c in set(lst)))
    result = _list_search(g, domains, budget)
    return None if result is None else tuple(result)


def solve_k_colouring(g: Graph, k: int, budget: int = NODE_BUDGET) -> Optional[Colouring]:
    """Proper colouring with colours 1..k, or ``None``.

    A maximum clique is coloured 1..|clique| up front; every k-colouring
    can be renamed to agree with that, so no solutions are lost.
    """
    if k < 0:
        raise ValidationError(f"colour count must be non-negative, got {k}")
    if g.n == 0:
        return ()
    if k == 0:
        return None
    clique = max_clique(g)
    if len(clique) > k:
        return None
    full = ((1 << (k + 1)) - 1) & ~1
    domains = [full] * g.n
    for i, v in enumerate(clique, start=1):
        domains[v] = 1 << i
    result = _list_search(g, domains, budget)
    return None if result is None else tuple(result)


def _greedy_upper_bound(g: Graph) -> int:
    # DSATUR greedy colouring.
    colour = [0] * g.n
    for _ in range(g.n):
        best, key = -1, None
        for v in range(g.n):
            if colour[v]:
                continue
            sat = len({colour[u] for u in _bits(g.rows[v]) if colour[u]})
            cand = (sat, g.degree(v), -v)
            if key is None or cand > key:
                best, key = v, cand
        used = {colour[u] for u in _bits(g.rows[best])}
        c = 1
        while c in used:
            c += 1
        colour[best] = c
    return max(colour, default=0)


def chromatic_number(g: Graph, limit: int = CHROMATIC_VERTEX_LIMIT, budget: int = NODE_BUDGET) -> int:
    if g.n > limit:
        raise ResourceLimitError(f"chromatic_number supports at most {limit} vertices, got {g.n}")
    if g.n == 0:
        return 0
    low = len(max_clique(g))
    high = _greedy_upper_bound(g)
    for k in range(low, high):
        if solve_k_colouring(g, k, budget) is not None:
            return k
    return high

