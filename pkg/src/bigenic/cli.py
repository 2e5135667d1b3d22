"""Command-line front end: ``bigenic <subcommand> ...``.

Data goes to stdout, diagnostics to stderr.  Every failure prints exactly
one ``error: ...`` line and exits with the status carried by the error
class (1 validation, 2 resource limit, 3 inconsistency).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Optional, Sequence

from . import classifier, recognizers
from .errors import BigenicError, InconsistencyError, ValidationError
from .families import FIXTURES, parse_family, realize
from .formats import from_graph6, to_dimacs, to_graph6
from .gadgets import NaeInstance, build_variant, parse_nae
from .graph import Graph, contains_induced, enumerate_graphs
from .lemmas import VerificationReport, random_instances, verify
from .solvers import chromatic_number, solve_k_colouring, solve_list_colouring

REPORT_VERSION = 1


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; route it through ValidationError."""

    def error(self, message: str):  # type: ignore[override]
        raise ValidationError(f"{self.prog}: {message}")


def read_graph(text: str) -> Graph:
    """Family expression, or graph6 (optionally prefixed ``g6:``)."""
    if text.startswith("g6:"):
        return from_graph6(text[3:])
    try:
        return realize(parse_family(text))
    except BigenicError as expr_error:
        try:
            return from_graph6(text)
        except ValidationError:
            raise expr_error from None


def split_patterns(text: str) -> list[str]:
    """Split a comma list of expressions, keeping commas inside ``K1,3`` or ``co(T0,2,2)``."""
    out: list[str] = []
    for piece in text.replace(";", ",").split(","):
        piece = piece.strip()
        if out and (piece.isdigit() or out[-1].count("(") > out[-1].count(")")):
            out[-1] += "," + piece
        elif piece:
            out.append(piece)
    return out


def emit_report(reports: Iterable[dict]) -> str:
    """Versioned JSON document; byte-identical for identical input."""
    return json.dumps({"version": REPORT_VERSION, "reports": list(reports)}, sort_keys=True)


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _write_file(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise ValidationError(f"cannot write {path}: {exc.strerror}") from None


def parse_lists(text: str, n: int) -> list[frozenset]:
    """One line per vertex with whitespace-separated colours; ``#`` starts a comment."""
    rows = [line.split("#", 1)[0].split() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if len(rows) != n:
        raise ValidationError(f"lists file has {len(rows)} rows for {n} vertices")
    try:
        return [frozenset(int(c) for c in row) for row in rows]
    except ValueError as exc:
        raise ValidationError(f"lists file: {exc}") from None


# -- subcommands -----------------------------------------------------------


def cmd_catalog(args, out) -> int:
    if args.expr is None:
        for expr in FIXTURES:
            print(f"{expr}\t{to_graph6(realize(expr))}", file=out)
    else:
        print(to_graph6(read_graph(args.expr)), file=out)
    return 0


def _witness(w) -> Optional[list[int]]:
    return None if w is None else list(w.mapping)


def cmd_recognize(args, out) -> int:
    g = read_graph(args.graph)
    doc: dict = {"graph6": to_graph6(g)}
    if args.mode == "class-T":
        doc["in_class_T"] = recognizers.in_class_T(g)
        doc["in_hereditary_class_T"] = recognizers.in_hereditary_class_T(g)
    elif args.mode == "T":
        hij = recognizers.recognize_T(g)
        doc["T"] = None if hij is None else list(hij)
    elif args.mode == "open-pattern":
        doc["matches"] = [{"family": m.family_id, "parameters": m.parameters}
                          for m in recognizers.match_open_pattern_all(g)]
    else:
        res = recognizers.tree_trichotomy(g)
        doc.update(tag=res.tag, witness=_witness(res.witness), path_length=res.path_length)
    print(json.dumps(doc, sort_keys=True), file=out)
    return 0


def cmd_classify(args, out) -> int:
    h1, h2 = read_graph(args.h1), read_graph(args.h2)
    verdict = classifier.classify(h1, h2)
    if args.json:
        print(json.dumps(verdict.to_dict(h1, h2), sort_keys=True), file=out)
    else:
        print(verdict.status, file=out)
        for t in verdict.trace:
            print(f"  {t.rule} {t.citation}: {t.matched}", file=out)
    return 0


def cmd_reduce(args, out) -> int:
    inst = parse_nae(_read_file(args.instance))
    gadget = build_variant(inst, args.variant)
    print(to_graph6(gadget.graph), file=out)
    if args.sidecar:
        _write_file(args.sidecar, gadget.sidecar_json() + "\n")
    else:
        print(gadget.sidecar_json(), file=out)
    if args.dimacs:
        _write_file(args.dimacs, to_dimacs(gadget.graph, f"variant {gadget.variant}"))
    return 0


def cmd_solve(args, out) -> int:
    g = read_graph(args.graph)
    doc: dict = {"graph6": to_graph6(g), "problem": args.problem}
    if args.problem == "chromatic":
        doc["chromatic_number"] = chromatic_number(g)
    elif args.problem == "kcol":
        if args.k is None:
            raise ValidationError("kcol needs --k")
        col = solve_k_colouring(g, args.k)
        doc.update(k=args.k, colouring=None if col is None else list(col))
    else:
        if args.lists is None:
            raise ValidationError("listcol needs --lists FILE")
        col = solve_list_colouring(g, parse_lists(_read_file(args.lists), g.n))
        doc["colouring"] = None if col is None else list(col)
    print(json.dumps(doc, sort_keys=True), file=out)
    return 0


def cmd_verify(args, out) -> int:
    if (args.instance is None) == (args.random is None):
        raise ValidationError("verify needs exactly one of --instance FILE or --random N")
    if args.instance is not None:
        instances: list[NaeInstance] = [parse_nae(_read_file(args.instance))]
    else:
        instances = random_instances(args.random, args.max_vars, args.max_clauses, args.seed)
    reports: list[VerificationReport] = []
    for inst in instances:
        reports.extend(verify(args.lemma, inst))
    print(emit_report(r.to_dict(timing=args.timing) for r in reports), file=out)
    bad = [r for r in reports if not r.holds]
    if bad:
        raise InconsistencyError(f"{len(bad)} report(s) with violated claims, first: {bad[0].lemma} "
                                 f"on {bad[0].instance.describe()}")
    return 0


def cmd_survey(args, out) -> int:
    table = classifier.survey(args.forbid, args.max_n)
    if args.format == "json":
        print(json.dumps(table.to_dict(), sort_keys=True), file=out)
    else:
        out.write(classifier.survey_to_csv(table))
    return 0


def cmd_freeness(args, out) -> int:
    host = read_graph(args.host)
    found = []
    for expr in split_patterns(args.patterns):
        w = contains_induced(host, read_graph(expr))
        if w is not None:
            found.append({"pattern": expr, "witness": list(w.mapping)})
    print(json.dumps(found, sort_keys=True) if found else "free", file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    for g in enumerate_graphs(args.n):
        print(to_graph6(g), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bigenic", description="Colouring on (H1,H2)-free graphs: gadgets, checks, classifier.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="graph6 of a family expression (all fixtures if omitted)")
    p.add_argument("expr", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("recognize", help="structural recognizers, JSON output")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--class-T", dest="mode", action="store_const", const="class-T")
    mode.add_argument("--T", dest="mode", action="store_const", const="T")
    mode.add_argument("--open-pattern", dest="mode", action="store_const", const="open-pattern",
                      help="match the given graph, read as co(H), against the open families")
    mode.add_argument("--tree-trichotomy", dest="mode", action="store_const", const="tree-trichotomy")
    p.add_argument("graph")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("classify", help="verdict for (H1,H2)-free graphs")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", help="build a gadget graph from an NAE instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--variant", required=True, choices=("g1", "g2", "g1p", "g2p"))
    p.add_argument("--sidecar", help="write the JSON sidecar here instead of stdout")
    p.add_argument("--dimacs", help="also export DIMACS .col to this path")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="exact colouring solvers")
    p.add_argument("problem", choices=("chromatic", "kcol", "listcol"))
    p.add_argument("graph")
    p.add_argument("--k", type=int)
    p.add_argument("--lists")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run lemma checks")
    p.add_argument("lemma", choices=("lemma1", "lemma2", "lemma3", "lemma4", "all"))
    p.add_argument("--instance")
    p.add_argument("--random", type=int)
    p.add_argument("--max-vars", type=int, default=6)
    p.add_argument("--max-clauses", type=int, default=8)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (output no longer byte-stable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="classify (F,H) for every H up to max-n vertices")
    p.add_argument("--forbid", required=True, choices=("2P2", "P5"))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("freeness", help="search a host for induced patterns")
    p.add_argument("--host", required=True)
    p.add_argument("--patterns", required=True, help="comma-separated expressions, e.g. 2P2,K1,3")
    p.set_defaults(func=cmd_freeness)

    p = sub.add_parser("enumerate", help="graph6 of every graph on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except BigenicError as exc:
        print(f"error: {' '.join(str(exc).split())}", file=err)
        return exc.exit_status
    except RecursionError:
        print("error: input too deep to process", file=err)
        return 2
    except Exception as exc:  # anything else is a bug: still one line, distinct status
        print(f"error: internal {type(exc).__name__}: {' '.join(str(exc).split())}", file=err)
        return 3


if __name__ == "__main__":
    sys.exit(main())
