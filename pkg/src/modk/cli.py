"""Command-line harness: generate, ingest, census, verify, construct.

Exit codes: 0 all assertions hold, 2 a counterexample or theorem
violation was found, 1 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import generate_exhaustive, ingest_graph6, load_corpus, save_corpus
from .cycles import census_mod
from .errors import ContractViolation, CorpusCorruptionError, Graph6Error, TheoremViolation, UnsupportedSizeError
from .graphs import Edge, parse_graph6, write_graph6
from .kempe import CyclicPerm, build_injection_f, extract_one_mod_k, extract_zero_mod_r, lemma_paths, neighbor_prescribed_coloring
from .verify import Report, verify_borrowed_theorems, verify_one_mod_k, verify_structure_lemmas, verify_theorem_main


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="modk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_gen = sub.add_parser("gen", help="exhaustively generate a critical corpus")
    p_gen.add_argument("--n", type=int, required=True, help="vertex count (4..11)")
    p_gen.add_argument("--chi", type=int, required=True, help="target chromatic number")
    p_gen.add_argument("--out", required=True, help="corpus output path (graph6 + sidecar)")

    p_ing = sub.add_parser("ingest", help="filter a graph6 file into a corpus")
    p_ing.add_argument("--in", dest="infile", required=True, help="graph6 input file")
    p_ing.add_argument("--chi", type=int, required=True, help="target chromatic number")
    p_ing.add_argument("--out", required=True, help="corpus output path")

    p_cen = sub.add_parser("census", help="count cycles by length residue class")
    p_cen.add_argument("--graph6", required=True, help="a graph6 line, or a file of them")
    p_cen.add_argument("--mod", type=int, required=True, help="modulus r")
    p_cen.add_argument("--residue", type=int, default=0, help="residue class of interest")
    p_cen.add_argument("--emit-cycles", action="store_true", help="print every cycle")

    p_ver = sub.add_parser("verify", help="run a verification sweep")
    p_ver.add_argument("--corpus", help="corpus path (unused by --suite borrowed)")
    p_ver.add_argument(
        "--suite", required=True, choices=["main", "onemod", "structure", "borrowed"]
    )
    p_ver.add_argument(
        "--k",
        type=int,
        default=3,
        help="k for the onemod suite; maximum vertex count for the borrowed suite",
    )
    p_ver.add_argument("--report", required=True, help="JSON-lines report path (CSV written alongside)")
    p_ver.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_ver.add_argument("--fail-fast", action="store_true", help="stop at the first violation")

    p_con = sub.add_parser("construct", help="run one constructive procedure")
    p_con.add_argument("--graph6", required=True, help="a single graph6 line")
    p_con.add_argument("--proc", required=True, choices=["thm3", "lemma5", "injection", "onemod"])
    p_con.add_argument(
        "--args",
        nargs="*",
        type=int,
        default=[],
        help=(
            "thm3: u v r k | lemma5: v k ring-colors... | "
            "injection: v k | onemod: v k"
        ),
    )
    return parser


def _cmd_gen(opts) -> int:
    corpus = generate_exhaustive(opts.n, opts.chi)
    save_corpus(corpus, opts.out)
    print(f"generated {len(corpus)} {opts.chi}-critical graphs on {opts.n} vertices -> {opts.out}")
    return 0


def _cmd_ingest(opts) -> int:
    report = ingest_graph6(opts.infile, opts.chi)
    save_corpus(report.corpus, opts.out)
    for rej in report.rejected:
        print(f"rejected line {rej.lineno}: {rej.reason}", file=sys.stderr)
    print(
        f"ingested {len(report.corpus)} graphs, rejected {len(report.rejected)} -> {opts.out}"
    )
    return 0


def _census_lines(raw: str) -> list[str]:
    path = Path(raw)
    if path.exists() and path.is_file():
        with open(path, "r", encoding="ascii") as fh:
            return [ln.strip() for ln in fh if ln.strip()]
    return [raw]


def _cmd_census(opts) -> int:
    for line in _census_lines(opts.graph6):
        g = parse_graph6(line)
        census = census_mod(g, opts.mod, opts.residue)
        inc = census.edge_incidence.values()
        edge_range = (min(inc), max(inc)) if inc else (0, 0)
        print(
            f"{write_graph6(g)} n={g.n} m={g.m} total={census.total} "
            f"counts={list(census.counts)} residue={opts.residue} "
            f"vertex_incidence={list(census.vertex_incidence)} "
            f"edge_incidence_range={list(edge_range)}"
        )
        if opts.emit_cycles and census.cycles is not None:
            for cyc in census.cycles:
                print(" ".join(map(str, cyc.vertices)))
    return 0


def _write_report(report: Report, path: str) -> None:
    jsonl_path = Path(path)
    if jsonl_path.suffix == ".jsonl":
        csv_path = jsonl_path.with_suffix(".csv")
    else:
        csv_path = Path(str(jsonl_path) + ".csv")
    jsonl_path.write_text(report.to_jsonl(), encoding="utf-8")
    csv_path.write_text(report.to_csv(), encoding="utf-8")


def _cmd_verify(opts) -> int:
    if opts.suite == "borrowed":
        report = verify_borrowed_theorems(opts.k, jobs=opts.jobs, fail_fast=opts.fail_fast)
    else:
        if not opts.corpus:
            print("modk verify: error: --corpus is required for this suite", file=sys.stderr)
            return 1
        corpus = load_corpus(opts.corpus)
        if opts.suite == "main":
            report = verify_theorem_main(corpus, jobs=opts.jobs, fail_fast=opts.fail_fast)
        elif opts.suite == "onemod":
            report = verify_one_mod_k(corpus, opts.k, jobs=opts.jobs, fail_fast=opts.fail_fast)
        else:
            report = verify_structure_lemmas(corpus, jobs=opts.jobs, fail_fast=opts.fail_fast)
    _write_report(report, opts.report)
    for rec in report.records:
        for violation in rec.violations:
            print(f"COUNTEREXAMPLE {rec.graph6}: {violation}", file=sys.stderr)
    summary = " ".join(f"{k}={v}" for k, v in sorted(report.summary.items()))
    print(f"suite={report.suite} {summary}")
    return 0 if report.ok else 2


def _cmd_construct(opts) -> int:
    g = parse_graph6(opts.graph6)
    args = opts.args
    if opts.proc == "thm3":
        if len(args) != 4:
            raise ContractViolation("thm3 needs --args u v r k")
        u, v, r, k = args
        cycles = extract_zero_mod_r(g, Edge(u, v), r, k)
        for cyc in sorted(cycles, key=lambda c: c.vertices):
            print(" ".join(map(str, cyc.vertices)))
    elif opts.proc == "lemma5":
        if len(args) < 5:
            raise ContractViolation("lemma5 needs --args v k c1 c2 c3 [...]")
        v, k, *ring = args
        c = neighbor_prescribed_coloring(g, v, k)
        if c is None:
            raise ContractViolation("no proper coloring with the neighbor prescription exists")
        paths = lemma_paths(g, v, c, CyclicPerm(tuple(ring)))
        for color in sorted(paths):
            print(f"{color}: " + " ".join(map(str, paths[color])))
    elif opts.proc == "injection":
        if len(args) != 2:
            raise ContractViolation("injection needs --args v k")
        v, k = args
        c = neighbor_prescribed_coloring(g, v, k)
        if c is None:
            raise ContractViolation("no proper coloring with the neighbor prescription exists")
        mapping = build_injection_f(g, v, c, k)
        for dom in sorted(mapping, key=lambda cyc: cyc.vertices):
            img = mapping[dom]
            print(
                " ".join(map(str, dom.vertices)) + " -> " + " ".join(map(str, img.vertices))
            )
    else:  # onemod
        if len(args) != 2:
            raise ContractViolation("onemod needs --args v k")
        v, k = args
        cycles = extract_one_mod_k(g, v, k)
        for cyc in sorted(cycles, key=lambda c: c.vertices):
            print(" ".join(map(str, cyc.vertices)))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        opts = parser.parse_args(argv)
        if opts.command == "gen":
            return _cmd_gen(opts)
        if opts.command == "ingest":
            return _cmd_ingest(opts)
        if opts.command == "census":
            return _cmd_census(opts)
        if opts.command == "verify":
            return _cmd_verify(opts)
        return _cmd_construct(opts)
    except SystemExit as exc:
        return int(exc.code or 0)
    except TheoremViolation as exc:
        print(f"modk: THEOREM VIOLATION: {exc}", file=sys.stderr)
        return 2
    except (ContractViolation, Graph6Error, UnsupportedSizeError, CorpusCorruptionError) as exc:
        print(f"modk: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"modk: i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
