"""Command-line front end.

Exit codes are a stable contract: 0 success, 1 usage or lookup error,
2 fatal corpus error.  All reports are UTF-8 and byte-deterministic for a
fixed corpus and flag set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import collab, cop, export, metrics
from .bibtex import parse_bibtex
from .corpus import Corpus, Diagnostic, citation_counts, parse_jsonl
from .errors import CorpusError, ScholarnetError

ENV_CORPUS = "SCHOLARNET_CORPUS"
BIBTEX_SUFFIXES = (".bib", ".bibtex")


@dataclass(frozen=True)
class RunConfig:
    corpus_path: str
    format: str
    include_self_citation: bool = False


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for corpus
    # faults, so usage problems must exit 1 instead.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _guess_format(path: str) -> str:
    return "bibtex" if Path(path).suffix.lower() in BIBTEX_SUFFIXES else "jsonl"


def make_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        corpus_path=args.corpus,
        format=args.format or _guess_format(args.corpus),
        include_self_citation=args.include_self_citation,
    )


def load_corpus(cfg: RunConfig) -> tuple[Corpus, list[Diagnostic]]:
    text = Path(cfg.corpus_path).read_text(encoding="utf-8")
    if cfg.format == "bibtex":
        return parse_bibtex(text)
    return parse_jsonl(text)


def _load_and_build(cfg: RunConfig, main: str) -> tuple[Corpus, collab.Researchers]:
    corpus, _ = load_corpus(cfg)
    r = collab.build_researchers(corpus, main, include_self_citation=cfg.include_self_citation)
    return corpus, r


def _plural(n: int, noun: str) -> str:
    return f"{n} {noun}" if n == 1 else f"{n} {noun}s"


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _emit_json(payload: object) -> None:
    _emit(json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2))


def cmd_ingest(cfg: RunConfig) -> int:
    corpus, diagnostics = load_corpus(cfg)
    resolvable = sum(
        1
        for record in corpus.publications.values()
        for ref in record.cites
        if ref in corpus.publications
    )
    _emit(
        f"{_plural(len(corpus.publications), 'publication')}, "
        f"{_plural(len(corpus.authors), 'author')}, "
        f"{_plural(resolvable, 'citation edge')}"
    )
    if diagnostics:
        _emit(_plural(len(diagnostics), "diagnostic"))
        for diagnostic in diagnostics:
            print(diagnostic, file=sys.stderr)
    return 0


def cmd_dist(cfg: RunConfig, a: str, b: str, max_len: int, max_count: int) -> int:
    _, r = _load_and_build(cfg, a)
    distance = collab.collab_distance(r, a, b)
    if distance is None:
        _emit("unreachable")
        return 0
    _emit(f"distance: {distance}")
    _emit(f"z_dist: {distance + 1}")
    for path in collab.simple_paths(r, a, b, max_len=max_len, max_count=max_count):
        _emit(" -- ".join(path.nodes))
    return 0


def _tier_order(corpus: Corpus, members: frozenset[str]) -> list[str]:
    counts = citation_counts(corpus)
    totals = {
        a: sum(counts[pid] for pid, record in corpus.publications.items() if a in record.authors)
        for a in members
    }
    return sorted(members, key=lambda a: (-totals[a], a))


def cmd_cop(cfg: RunConfig, main: str, radius: int | None, as_json: bool) -> int:
    corpus, r = _load_and_build(cfg, main)
    part = cop.classify(r) if radius is None else cop.classify_with_radius(r, radius)
    if as_json:
        payload = {
            "main": part.main,
            "editorial": sorted(part.editorial),
            "active": sorted(part.active),
            "core": sorted(part.core),
            "peripheral": sorted(part.peripheral),
            "cop": sorted(part.cop),
            "outsiders": sorted(part.outsiders),
        }
        _emit_json(payload)
        return 0
    _emit(f"main (1): {part.main}")
    for name in ("editorial", "active", "peripheral", "outsiders"):
        members: frozenset[str] = getattr(part, name)
        listing = "; ".join(_tier_order(corpus, members))
        _emit(f"{name} ({len(members)}): {listing}" if members else f"{name} (0):")
    return 0


def cmd_metrics(cfg: RunConfig, author: str | None, as_json: bool) -> int:
    corpus, _ = load_corpus(cfg)
    if author is not None:
        rows = [metrics.author_metrics(corpus, author)]
    else:
        rows = [metrics.author_metrics(corpus, a) for a in sorted(corpus.published)]
        rows.sort(key=lambda m: (-m.h, m.author))
    if as_json:
        _emit_json(
            [
                {
                    "author": m.author,
                    "n_pubs": m.n_pubs,
                    "total_citations": m.total_citations,
                    "h": m.h,
                    "g": m.g,
                    "i10": m.i10,
                }
                for m in rows
            ]
        )
        return 0
    _emit("author\tn_pubs\ttotal\th\tg\ti10")
    for m in rows:
        _emit(f"{m.author}\t{m.n_pubs}\t{m.total_citations}\t{m.h}\t{m.g}\t{m.i10}")
    return 0


def cmd_erdos(cfg: RunConfig, main: str, as_json: bool) -> int:
    _, r = _load_and_build(cfg, main)
    numbers = collab.erdos_numbers(r)
    if as_json:
        _emit_json({"main": main, "numbers": numbers})
        return 0
    for key, n in numbers.items():
        _emit(f"{n}\t{key}")
    return 0


def cmd_export(cfg: RunConfig, main: str, kind: str, out: str) -> int:
    corpus, r = _load_and_build(cfg, main)
    if kind == "coauthor":
        graph = export.coauthor_export(corpus, r, cop.classify(r))
    elif kind == "citation":
        graph = export.citation_export(corpus, r)
    else:
        graph = export.erdos_export(corpus, r)
    dot_path, graphml_path = export.write_export(graph, out)
    _emit(f"wrote {dot_path}")
    _emit(f"wrote {graphml_path}")
    return 0


def build_parser() -> _Parser:
    corpus_default = os.environ.get(ENV_CORPUS)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--corpus",
        default=corpus_default,
        required=corpus_default is None,
        help=f"corpus file (default: ${ENV_CORPUS})",
    )
    common.add_argument("--format", choices=("jsonl", "bibtex"), help="override format inference")
    common.add_argument(
        "--include-self-citation",
        action="store_true",
        help="keep author-level self-citation pairs",
    )

    parser = _Parser(prog="scholarnet", description="Coauthorship and citation graph analytics.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    sub.add_parser("ingest", parents=[common], help="parse a corpus and print summary counts")

    dist = sub.add_parser("dist", parents=[common], help="collaborative distance and shortest paths")
    dist.add_argument("a", help="first author key")
    dist.add_argument("b", help="second author key")
    dist.add_argument("--max-len", type=int, default=collab.DEFAULT_MAX_LEN, help="path length cap in edges")
    dist.add_argument("--max-count", type=int, default=collab.DEFAULT_MAX_COUNT, help="most paths to list")

    cop_cmd = sub.add_parser("cop", parents=[common], help="community-of-practice tiers")
    cop_cmd.add_argument("--main", required=True, help="main author key")
    cop_cmd.add_argument("--radius", type=int, help="cap active membership at this distance")
    cop_cmd.add_argument("--json", action="store_true", dest="as_json")

    met = sub.add_parser("metrics", parents=[common], help="citation indices per author")
    met.add_argument("author", nargs="?", help="author key (default: whole corpus)")
    met.add_argument("--json", action="store_true", dest="as_json")

    erd = sub.add_parser("erdos", parents=[common], help="collaboration numbers from a main author")
    erd.add_argument("--main", required=True, help="main author key")
    erd.add_argument("--json", action="store_true", dest="as_json")

    exp = sub.add_parser("export", parents=[common], help="write DOT and GraphML views")
    exp.add_argument("kind", choices=("coauthor", "citation", "erdos"))
    exp.add_argument("--main", required=True, help="main author key")
    exp.add_argument("--out", help="output base path (default: scholarnet-<kind>)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = make_config(args)
    try:
        if args.command == "ingest":
            return cmd_ingest(cfg)
        if args.command == "dist":
            return cmd_dist(cfg, args.a, args.b, args.max_len, args.max_count)
        if args.command == "cop":
            return cmd_cop(cfg, args.main, args.radius, args.as_json)
        if args.command == "metrics":
            return cmd_metrics(cfg, args.author, args.as_json)
        if args.command == "erdos":
            return cmd_erdos(cfg, args.main, args.as_json)
        return cmd_export(cfg, args.main, args.kind, args.out or f"scholarnet-{args.kind}")
    except CorpusError as exc:
        print(f"scholarnet: {exc}", file=sys.stderr)
        return 2
    except (ScholarnetError, ValueError) as exc:
        print(f"scholarnet: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"scholarnet: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    raise SystemExit(main())
