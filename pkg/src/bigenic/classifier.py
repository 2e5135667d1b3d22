"""Rule engine classifying Colouring on (H1, H2)-free graphs.

The knowledge base holds three kinds of entries:

* hardness axioms: Colouring is NP-complete on F-free graphs.  Such an
  axiom settles (H1, H2) whenever some member of F is an induced subgraph
  of H1 and some member of F is an induced subgraph of H2, since then
  every F-free graph is (H1, H2)-free;
* polynomial axioms: conditions on (H1, H2) under which the class is
  contained in a class known to be polynomial-time solvable;
* open entries: pairs whose complexity is explicitly unresolved.

Every rule is written for one orientation; :func:`classify` tries both.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .errors import InconsistencyError, ResourceLimitError, ValidationError
from .families import realize
from .formats import to_graph6
from .graph import Graph, complement, component_vertex_sets, contains_induced, enumerate_graphs, is_isomorphic
from .recognizers import in_hereditary_class_T, match_open_pattern, path_length

POLYNOMIAL = "PolynomialTime"
NP_COMPLETE = "NPComplete"
OPEN = "Open"
UNKNOWN = "Unknown"

CLASSIFY_VERTEX_LIMIT = 12

# Condition: (h1, h2) -> description of what matched, or None.
Condition = Callable[[Graph, Graph], Optional[str]]


@dataclass(frozen=True)
class Rule:
    id: str
    citation: str
    statement: str
    condition: Condition

    status = UNKNOWN

    def fire(self, h1: Graph, h2: Graph) -> Optional[str]:
        return self.condition(h1, h2)


@dataclass(frozen=True)
class HardnessAxiom(Rule):
    status = NP_COMPLETE


@dataclass(frozen=True)
class PolyAxiom(Rule):
    status = POLYNOMIAL


@dataclass(frozen=True)
class OpenEntry(Rule):
    status = OPEN


@dataclass(frozen=True)
class TraceEntry:
    rule: str
    citation: str
    matched: str


@dataclass(frozen=True)
class Verdict:
    status: str
    trace: tuple[TraceEntry, ...] = ()

    def to_dict(self, h1: Graph, h2: Graph) -> dict:
        return {
            "h1_g6": to_graph6(h1),
            "h2_g6": to_graph6(h2),
            "status": self.status,
            "trace": [{"rule": t.rule, "citation": t.citation, "matched": t.matched} for t in self.trace],
        }


# -- cached structural predicates -----------------------------------------


@lru_cache(maxsize=None)
def _graph(expr: str) -> Graph:
    return realize(expr)


@lru_cache(maxsize=200_000)
def contains(host: Graph, expr: str) -> bool:
    return contains_induced(host, _graph(expr)) is not None


@lru_cache(maxsize=200_000)
def _co(g: Graph) -> Graph:
    return complement(g)


@lru_cache(maxsize=200_000)
def induced_cycle_lengths(g: Graph) -> frozenset[int]:
    return frozenset(r for r in range(3, g.n + 1) if contains(g, f"C{r}"))


def _has_cycle(g: Graph) -> bool:
    return g.edge_count > g.n - len(component_vertex_sets(g))


@lru_cache(maxsize=200_000)
def _subgraph_of(small: Graph, expr: str) -> bool:
    return contains_induced(_graph(expr), small) is not None


def _subgraph_of_graph(small: Graph, host: Graph) -> bool:
    return contains_induced(host, small) is not None


def _iso(g: Graph, expr: str) -> bool:
    return is_isomorphic(g, _graph(expr))


# -- rule builders ---------------------------------------------------------


def _closure(members: Iterable[str]) -> Condition:
    """Fires when h1 and h2 each contain some member of the forbidden set."""
    members = tuple(members)

    def cond(h1: Graph, h2: Graph) -> Optional[str]:
        a = next((m for m in members if contains(h1, m)), None)
        if a is None:
            return None
        b = next((m for m in members if contains(h2, m)), None)
        if b is None:
            return None
        return f"H1 contains {a}, H2 contains {b}"

    return cond


def _closure_with_cycles(fixed: str, min_r: int) -> Condition:
    """Forbidden sets {fixed, C_r} for every r >= min_r."""

    def hits(h: Graph) -> tuple[bool, frozenset[int]]:
        return contains(h, fixed), frozenset(r for r in induced_cycle_lengths(h) if r >= min_r)

    def cond(h1: Graph, h2: Graph) -> Optional[str]:
        f1, c1 = hits(h1)
        f2, c2 = hits(h2)
        if f1 and f2:
            return f"both contain {fixed}"
        if f1 and c2:
            return f"H1 contains {fixed}, H2 contains C{min(c2)}"
        if c1 and f2:
            return f"H1 contains C{min(c1)}, H2 contains {fixed}"
        common = c1 & c2
        if common:
            return f"both contain C{min(common)}"
        return None

    return cond


def _schindl(h1: Graph, h2: Graph) -> Optional[str]:
    if not in_hereditary_class_T(_co(h1)) and not in_hereditary_class_T(_co(h2)):
        return "neither complement is in class T"
    return None


def _both_cycles(h1: Graph, h2: Graph) -> Optional[str]:
    if _has_cycle(h1) and _has_cycle(h2):
        return "both contain a cycle"
    return None


def _both_claws(h1: Graph, h2: Graph) -> Optional[str]:
    if contains(h1, "K1,3") and contains(h2, "K1,3"):
        return "both contain K1,3"
    return None


HARDNESS_COMPLEMENTS = ("C3+P4", "3P2", "2P4")


def _two_p2_complement_condition(h1: Graph, h2: Graph) -> Optional[str]:
    if not contains(h1, "2P2"):
        return None
    co = _co(h2)
    for expr in HARDNESS_COMPLEMENTS:
        if contains(co, expr):
            return f"H1 contains 2P2, co(H2) contains {expr}"
    n = h2.n
    host = realize(f"T1,1,3+P{2 * n - 1}") if n >= 1 else realize("T1,1,3")
    if not _subgraph_of_graph(co, host):
        return f"H1 contains 2P2, co(H2) is not an induced subgraph of T1,1,3+P{2 * n - 1}"
    return None


def _single_poly(h1: Graph, h2: Graph) -> Optional[str]:
    for expr in ("P4", "P1+P3"):
        if _subgraph_of(h1, expr):
            return f"H1 is an induced subgraph of {expr}"
    return None


P5_POLY_COMPLEMENTS = (
    ("2P1+P3", "[Ma]"),
    ("P1+P4", "[BLM04] (clique-width), [BBKRS05]"),
    ("P2+P3", "[ML17]"),
    ("P5", "[HL]"),
    ("T0,0,1+P1", "[KMP]"),
    ("T0,1,1", "[KMP]"),
    ("T0,0,2", "[KMP]"),
)


def _p5_poly(h1: Graph, h2: Graph) -> Optional[str]:
    if not _subgraph_of(h1, "P5"):
        return None
    co = _co(h2)
    for expr, source in P5_POLY_COMPLEMENTS:
        if _subgraph_of(co, expr):
            return f"H1 is an induced subgraph of P5, co(H2) is an induced subgraph of {expr} {source}"
    # Induced subgraphs of sP1+P2 are exactly the graphs with at most one edge.
    if co.edge_count <= 1:
        return "H1 is an induced subgraph of P5, co(H2) is an induced subgraph of sP1+P2 [ML17]"
    return None


def _claw_p5_poly(h1: Graph, h2: Graph) -> Optional[str]:
    if _subgraph_of(h1, "K1,3") and _subgraph_of(h2, "P5"):
        return "H1 is an induced subgraph of K1,3, H2 is an induced subgraph of P5"
    return None


def _exact_pairs(pairs: Iterable[tuple[str, str]]) -> Condition:
    pairs = tuple(pairs)

    def cond(h1: Graph, h2: Graph) -> Optional[str]:
        for a, b in pairs:
            if _iso(h1, a) and _iso(h2, b):
                return f"(H1, H2) = ({a}, {b})"
        return None

    return cond


def _open_family(h1: Graph, h2: Graph) -> Optional[str]:
    if not (_iso(h1, "2P2") or _iso(h1, "P5")):
        return None
    match = match_open_pattern(_co(h2))
    if match is None:
        return None
    params = ", ".join(f"{k}={v}" for k, v in match.parameters.items())
    return f"H1 = {'2P2' if _iso(h1, '2P2') else 'P5'}, co(H2) in open family {match.family_id} ({params})"


def _claw_long_path(h1: Graph, h2: Graph) -> Optional[str]:
    if _iso(h1, "K1,3"):
        t = path_length(h2)
        if t is not None and t >= 6:
            return f"(H1, H2) = (K1,3, P{t})"
    return None


KB: tuple[Rule, ...] = (
    PolyAxiom("P1", "[KKTW01]", "Colouring is polynomial on H-free graphs for H an induced subgraph of P4 or P1+P3",
              _single_poly),
    PolyAxiom("P2", "[Ma], [BLM04], [BBKRS05], [ML17], [HL], [KMP]",
              "polynomial on (P5,H)-free graphs when co(H) is an induced subgraph of 2P1+P3, P1+P4, P2+P3, P5, "
              "T0,0,1+P1, T0,1,1, T0,0,2 or sP1+P2", _p5_poly),
    PolyAxiom("P3", "[Ma13]", "polynomial on (K1,3,P5)-free graphs", _claw_p5_poly),
    HardnessAxiom("N1", "[Sc05]", "NP-complete for (H1,...,Hp)-free graphs when no co(Hi) is in class T",
                  _schindl),
    HardnessAxiom("N2", "[EHK98]", "3-Colouring NP-complete when both forbidden graphs contain a cycle",
                  _both_cycles),
    HardnessAxiom("N3", "[Ho81]", "3-Colouring NP-complete when both forbidden graphs contain an induced K1,3",
                  _both_claws),
    HardnessAxiom("N4", "[HJP14]", "4-Colouring NP-complete for (P22,C3)-free graphs", _closure(("P22", "C3"))),
    HardnessAxiom("N5", "[GHP]", "NP-complete for (P9,C4)-free graphs", _closure(("P9", "C4"))),
    HardnessAxiom("N6", "[KKTW01]", "NP-complete for (2P2,C_r)-free graphs, r >= 5", _closure_with_cycles("2P2", 5)),
    HardnessAxiom("N7", "[KKTW01]", "NP-complete for (4P1,2P1+P2)-free graphs", _closure(("4P1", "2P1+P2"))),
    HardnessAxiom("N8", "[Hu16], [GJPS]", "5-Colouring NP-complete for (P6,K6)-free graphs", _closure(("P6", "K6"))),
    HardnessAxiom("N9", "[MF96]", "3-Colouring NP-complete for (K1,5,C3)-free graphs", _closure(("K1,5", "C3"))),
    HardnessAxiom("N10", "[KKTW01]", "3-Colouring NP-complete for (K1,3,C_r)-free graphs, r >= 4",
                  _closure_with_cycles("K1,3", 4)),
    HardnessAxiom("N11", "[KKTW01]", "NP-complete for (K1,3,K4)-free graphs", _closure(("K1,3", "K4"))),
    HardnessAxiom("N12", "new hardness result, G1' gadget",
                  "NP-complete for (2P2,co(3P2),co(T0,2,2))-free graphs",
                  _closure(("2P2", "co(3P2)", "co(T0,2,2)"))),
    HardnessAxiom("N13", "new hardness result, G2' gadget",
                  "NP-complete for (2P2,co(2C3),co(C3+P4),co(2P4),co(T0,0,4))-free graphs",
                  _closure(("2P2", "co(2C3)", "co(C3+P4)", "co(2P4)", "co(T0,0,4)"))),
    HardnessAxiom("N14", "(2P2,H) hardness summary",
                  "NP-complete for (2P2,H)-free graphs when co(H) contains C3+P4, 3P2 or 2P4, or co(H) is not an "
                  "induced subgraph of T1,1,3+P(2n-1) for n = |V(H)|", _two_p2_complement_condition),
    OpenEntry("O1", "[LM15]", "open pairs on at most four vertices",
              _exact_pairs((("K1,3", "4P1"), ("K1,3", "2P1+P2"), ("C4", "4P1")))),
    OpenEntry("O2", "[ML17], [KMP]", "open pairs of connected graphs on at most five vertices",
              _exact_pairs((("K1,3", "co(C4+P1)"), ("P5", "co(C3+2P1)"), ("P5", "co(C3+P2)"),
                            ("P5", "co(P1+2P2)")))),
    OpenEntry("O3", "open problem for (2P2,H)- and (P5,H)-free graphs",
              "H1 is 2P2 or P5 and co(H2) lies in one of the six open families", _open_family),
    OpenEntry("O4", "[Ma13]", "(K1,3,P_t) open for every t >= 6", _claw_long_path),
)


def kb_rules() -> list[Rule]:
    return list(KB)


def _fire_all(h1: Graph, h2: Graph) -> dict[str, list[TraceEntry]]:
    fired: dict[str, list[TraceEntry]] = {POLYNOMIAL: [], NP_COMPLETE: [], OPEN: []}
    for rule in KB:
        matched = rule.fire(h1, h2)
        if matched is None:
            swapped = rule.fire(h2, h1)
            if swapped is not None:
                matched = swapped.replace("H1", "\0").replace("H2", "H1").replace("\0", "H2")
        if matched is not None:
            fired[rule.status].append(TraceEntry(rule.id, rule.citation, matched))
    return fired


def classify(h1: Graph, h2: Graph, limit: int = CLASSIFY_VERTEX_LIMIT) -> Verdict:
    """Verdict for Colouring on (h1, h2)-free graphs.

    Open entries are reported first, then polynomial rules, then hardness.
    Raises :class:`InconsistencyError` if a polynomial and a hardness rule
    both fire, or if an open entry coincides with either.
    """
    if max(h1.n, h2.n) > limit:
        raise ResourceLimitError(f"classify supports graphs with at most {limit} vertices")
    fired = _fire_all(h1, h2)
    poly, hard, opened = fired[POLYNOMIAL], fired[NP_COMPLETE], fired[OPEN]
    if poly and hard:
        raise InconsistencyError(
            f"polynomial rules {[t.rule for t in poly]} contradict hardness rules {[t.rule for t in hard]}",
            [poly, hard],
        )
    if opened and (poly or hard):
        other = poly or hard
        raise InconsistencyError(
            f"open entries {[t.rule for t in opened]} coincide with {[t.rule for t in other]}",
            [opened, other],
        )
    if opened:
        return Verdict(OPEN, tuple(opened))
    if poly:
        return Verdict(POLYNOMIAL, tuple(poly))
    if hard:
        return Verdict(NP_COMPLETE, tuple(hard))
    return Verdict(UNKNOWN)


# -- survey ----------------------------------------------------------------


@dataclass(frozen=True)
class SurveyRow:
    n: int
    graph6: str
    status: str
    rules: tuple[str, ...]
    categories: tuple[str, ...]


@dataclass
class Survey:
    forbidden: str
    max_n: int
    rows: list[SurveyRow]

    def counts(self) -> dict[str, int]:
        out = {s: 0 for s in (POLYNOMIAL, NP_COMPLETE, OPEN, UNKNOWN, "Inconsistent")}
        for r in self.rows:
            out[r.status] += 1
        return out

    def untiled(self) -> list[SurveyRow]:
        """Rows not in exactly one of the hard/poly/open categories."""
        return [r for r in self.rows if len(r.categories) != 1]

    def to_dict(self) -> dict:
        return {
            "forbidden": self.forbidden,
            "max_n": self.max_n,
            "counts": self.counts(),
            "rows": [
                {"n": r.n, "graph6": r.graph6, "status": r.status, "rules": list(r.rules),
                 "categories": list(r.categories)}
                for r in self.rows
            ],
        }


def tiling_categories(h: Graph) -> tuple[str, ...]:
    """Which of the hard / polynomial / open descriptions of co(H) apply."""
    cats = []
    two_p2 = _graph("2P2")
    if _two_p2_complement_condition(two_p2, h) is not None:
        cats.append("hard")
    if _p5_poly(_graph("P5"), h) is not None:
        cats.append("poly")
    if match_open_pattern(_co(h)) is not None:
        cats.append("open")
    return tuple(cats)


def survey(forbidden: Graph | str, max_n: int) -> Survey:
    """Classify (forbidden, H) for every H on 1..max_n vertices."""
    name = forbidden if isinstance(forbidden, str) else to_graph6(forbidden)
    f = realize(forbidden) if isinstance(forbidden, str) else forbidden
    rows = []
    for n in range(1, max_n + 1):
        for h in enumerate_graphs(n):
            try:
                verdict = classify(f, h)
                status, rules = verdict.status, tuple(t.rule for t in verdict.trace)
            except InconsistencyError as exc:
                status = "Inconsistent"
                rules = tuple(t.rule for trace in exc.traces for t in trace)
            rows.append(SurveyRow(n, to_graph6(h), status, rules, tiling_categories(h)))
    return Survey(name, max_n, rows)


SURVEY_CSV_HEADER = ("n", "graph6", "status", "rules", "categories")


def survey_to_csv(table: Survey) -> str:
    buf = io.StringIO()
    buf.write(f"# forbidden={table.forbidden} max_n={table.max_n}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SURVEY_CSV_HEADER)
    for r in table.rows:
        writer.writerow((r.n, r.graph6, r.status, " ".join(r.rules), " ".join(r.categories)))
    return buf.getvalue()


def parse_survey_csv(text: str) -> Survey:
    """Inverse of :func:`survey_to_csv`."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# "):
        raise ValidationError("survey CSV must start with a '# forbidden=... max_n=...' line")
    meta = dict(item.split("=", 1) for item in lines[0][2:].split())
    try:
        forbidden, max_n = meta["forbidden"], int(meta["max_n"])
    except (KeyError, ValueError) as exc:
        raise ValidationError(f"bad survey CSV header: {lines[0]!r}") from exc
    reader = csv.reader(lines[1:])
    if tuple(next(reader, ())) != SURVEY_CSV_HEADER:
        raise ValidationError("survey CSV column header missing")
    rows = []
    for rec in reader:
        if len(rec) != len(SURVEY_CSV_HEADER):
            raise ValidationError(f"survey CSV row has {len(rec)} fields: {rec!r}")
        n, g6, status, rules, cats = rec
        rows.append(SurveyRow(int(n), g6, status, tuple(rules.split()), tuple(cats.split())))
    return Survey(forbidden, max_n, rows)
