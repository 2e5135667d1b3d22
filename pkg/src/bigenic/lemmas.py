"""Executable checks tying the gadgets, solvers and induced search together.

Each ``verify_lemma*`` returns a :class:`VerificationReport`.  A claim that
fails carries a counter-witness (colouring, assignment or embedding) that
can be re-checked independently.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any, Optional

from .errors import ValidationError
from .families import realize
from .gadgets import NaeInstance, build_g1, build_g2, extend_with_clique, gadget_structure_report
from .graph import complement, contains_induced
from .solvers import is_nae_satisfying, is_proper, respects_lists, solve_k_colouring, solve_list_colouring, solve_nae

HOLDS = "holds"
VIOLATED = "violated"

LEMMA3_PATTERNS = ("2P2", "co(3P2)", "co(T0,2,2)")
LEMMA4_PATTERNS = ("2P2", "co(2C3)", "co(C3+P4)", "co(2P4)", "co(T0,0,4)")


@dataclass
class Claim:
    name: str
    status: str
    witness: Any = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    lemma: str
    instance: NaeInstance
    claims: list[Claim] = field(default_factory=list)
    elapsed_ms: Optional[float] = None

    @property
    def holds(self) -> bool:
        return all(c.status == HOLDS for c in self.claims)

    def violations(self) -> list[Claim]:
        return [c for c in self.claims if c.status != HOLDS]

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "lemma": self.lemma,
            "instance": self.instance.describe(),
            "claims": [c.to_dict() for c in self.claims],
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
        }


def _claim(name: str, ok: bool, witness: Any = None) -> Claim:
    return Claim(name, HOLDS if ok else VIOLATED, None if ok else witness)


def _agreement(report: VerificationReport, label: str, results: dict[str, Any]) -> None:
    """Record that every solver in ``results`` agrees on existence."""
    present = {k: v is not None for k, v in results.items()}
    witness = {k: (list(v) if v is not None else None) for k, v in results.items()}
    report.claims.append(_claim(label, len(set(present.values())) == 1, witness))


def verify_lemma1(inst: NaeInstance) -> VerificationReport:
    """NAE-satisfiable <=> G1 list-colourable <=> G2 list-colourable."""
    start = time.perf_counter()
    report = VerificationReport("lemma1", inst)
    assignment = solve_nae(inst)
    g1, g2 = build_g1(inst), build_g2(inst)
    col1 = solve_list_colouring(g1.graph, g1.lists)
    col2 = solve_list_colouring(g2.graph, g2.lists)
    if assignment is not None:
        report.claims.append(_claim("assignment is NAE-satisfying", is_nae_satisfying(inst, assignment), list(assignment)))
    for label, gadget, col in (("G1", g1, col1), ("G2", g2, col2)):
        if col is not None:
            ok = is_proper(gadget.graph, col) and respects_lists(col, gadget.lists)
            report.claims.append(_claim(f"{label} colouring is proper and respects L", ok, list(col)))
    _agreement(report, "satisfiable <=> G1 list-colourable <=> G2 list-colourable",
               {"nae": assignment, "g1": col1, "g2": col2})
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def verify_lemma2(inst: NaeInstance) -> VerificationReport:
    """NAE-satisfiable <=> G1' is 2n-colourable <=> G2' is 2n-colourable."""
    start = time.perf_counter()
    report = VerificationReport("lemma2", inst)
    k = 2 * inst.n
    assignment = solve_nae(inst)
    g1p, g2p = extend_with_clique(build_g1(inst)), extend_with_clique(build_g2(inst))
    col1 = solve_k_colouring(g1p.graph, k)
    col2 = solve_k_colouring(g2p.graph, k)
    for label, gadget, col in (("G1'", g1p, col1), ("G2'", g2p, col2)):
        if col is not None:
            ok = is_proper(gadget.graph, col) and max(col) <= k
            report.claims.append(_claim(f"{label} colouring is a proper {k}-colouring", ok, list(col)))
    _agreement(report, f"satisfiable <=> G1' {k}-colourable <=> G2' {k}-colourable",
               {"nae": assignment, "g1p": col1, "g2p": col2})
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _freeness(lemma: str, inst: NaeInstance, variant: str, patterns: tuple[str, ...]) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(lemma, inst)
    base = build_g1(inst) if variant == "g1p" else build_g2(inst)
    gadget = extend_with_clique(base)
    G = gadget.graph
    coG = complement(G)
    label = "G1'" if variant == "g1p" else "G2'"
    for expr in patterns:
        p = realize(expr)
        direct = contains_induced(G, p)
        comp = contains_induced(coG, complement(p))
        report.claims.append(_claim(f"{label} is {expr}-free", direct is None,
                                    None if direct is None else list(direct.mapping)))
        report.claims.append(_claim(f"co-{label} is co({expr})-free", comp is None,
                                    None if comp is None else list(comp.mapping)))
        report.claims.append(_claim(f"direct and complement search agree on {expr}",
                                    (direct is None) == (comp is None)))
    structure = gadget_structure_report(gadget)
    report.claims.append(_claim("gadget structure", structure.passed,
                                [c.name for c in structure.failures()]))
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def verify_lemma3(inst: NaeInstance) -> VerificationReport:
    """G1' has none of 2P2, co(3P2), co(T0,2,2) as an induced subgraph."""
    return _freeness("lemma3", inst, "g1p", LEMMA3_PATTERNS)


def verify_lemma4(inst: NaeInstance) -> VerificationReport:
    """G2' has none of 2P2, co(2C3), co(C3+P4), co(2P4), co(T0,0,4)."""
    return _freeness("lemma4", inst, "g2p", LEMMA4_PATTERNS)


VERIFIERS = {
    "lemma1": verify_lemma1,
    "lemma2": verify_lemma2,
    "lemma3": verify_lemma3,
    "lemma4": verify_lemma4,
}


def verify_all(inst: NaeInstance) -> VerificationReport:
    """All four checks merged into one report; claim names carry the lemma."""
    merged = VerificationReport("all", inst, elapsed_ms=0.0)
    for name, fn in VERIFIERS.items():
        part = fn(inst)
        merged.claims += [Claim(f"{name}: {c.name}", c.status, c.witness) for c in part.claims]
        merged.elapsed_ms += part.elapsed_ms or 0.0
    return merged


def verify(lemma: str, inst: NaeInstance) -> list[VerificationReport]:
    """Run one lemma check, or the merged report for ``lemma == "all"``."""
    if lemma == "all":
        return [verify_all(inst)]
    if lemma not in VERIFIERS:
        raise ValidationError(f"unknown lemma {lemma!r}; choose lemma1..lemma4 or all")
    return [VERIFIERS[lemma](inst)]


def random_instances(count: int, max_vars: int, max_clauses: int, seed: int) -> list[NaeInstance]:
    """Seeded instances with 3 <= n <= max_vars and 1 <= m <= max_clauses.

    Clauses within an instance are distinct triples sampled without
    replacement; m is capped by the number of triples on n variables.
    """
    if count < 0:
        raise ValidationError("count must be non-negative")
    if max_vars < 3:
        raise ValidationError("max_vars must be at least 3 to form a clause")
    if max_clauses < 1:
        raise ValidationError("max_clauses must be positive")
    available = comb(max_vars, 3)
    if max_clauses > available:
        raise ValidationError(f"max_clauses {max_clauses} exceeds the {available} distinct triples on {max_vars} variables")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(3, max_vars)
        triples = list(combinations(range(1, n + 1), 3))
        m = rng.randint(1, min(max_clauses, len(triples)))
        out.append(NaeInstance(n, tuple(rng.sample(triples, m))))
    return out
