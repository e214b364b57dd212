"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import json
import random
from pathlib import Path

import scholarnet

DEMO_PATH = Path(scholarnet.__file__).parent / "data" / "demo.jsonl"

# Filled by the acceptance suite, printed by the terminal-summary hook.
ACCEPTANCE_VERDICTS: list[str] = []

M = "Meinhof, Marta"
A = "Albers, Anke"
B = "Brandt, Bernd"
C = "Carstens, Claus"
D = "Dahlmann, Dora"
E = "Evertz, Emil"


def make_jsonl(records: list[dict]) -> str:
    return "\n".join(json.dumps(r) for r in records)


def make_corpus(records: list[dict]) -> scholarnet.Corpus:
    corpus, diagnostics = scholarnet.parse_jsonl(make_jsonl(records))
    assert not diagnostics, diagnostics
    return corpus


def pub(pid: str, authors: list[str], cites: list[str] | None = None) -> dict:
    return {"id": pid, "title": f"title {pid}", "authors": authors, "cites": cites or []}


def random_corpus(rng: random.Random, max_authors: int = 12, max_pubs: int = 10) -> scholarnet.Corpus:
    """A small random corpus; shape bounded for oracle tractability."""
    pool = [f"A{i:02d}" for i in range(rng.randint(1, max_authors))]
    ids = [f"P{i}" for i in range(rng.randint(1, max_pubs))]
    records = []
    for pid in ids:
        authors = rng.sample(pool, rng.randint(1, min(4, len(pool))))
        others = [x for x in ids if x != pid]
        cites = rng.sample(others, rng.randint(0, min(3, len(others))))
        records.append(pub(pid, authors, cites))
    return make_corpus(records)


def random_bag_counts(rng: random.Random, max_entries: int = 12, max_count: int = 50) -> dict[str, int]:
    n = rng.randint(0, max_entries)
    return {f"P{i}": rng.randint(1, max_count) for i in range(n)}


def star_corpus(n_partners: int) -> scholarnet.Corpus:
    """One hub author with one two-author publication per partner."""
    records = [pub(f"P{i}", ["Hub", f"A{i:03d}"]) for i in range(n_partners)]
    return make_corpus(records)


def chain_corpus(keys: list[str]) -> scholarnet.Corpus:
    """A linear collaboration chain: one shared publication per adjacent pair."""
    records = [pub(f"P{i}", [a, b]) for i, (a, b) in enumerate(zip(keys, keys[1:]))]
    return make_corpus(records)


def disjoint_chains_corpus(source: str, target: str, n_chains: int, n_intermediates: int) -> scholarnet.Corpus:
    """n_chains vertex-disjoint paths from source to target, each passing
    through n_intermediates fresh authors."""
    records = []
    pid = 0
    for chain in range(n_chains):
        nodes = [source] + [f"X{chain}_{k}" for k in range(n_intermediates)] + [target]
        for a, b in zip(nodes, nodes[1:]):
            records.append(pub(f"P{pid}", [a, b]))
            pid += 1
    return make_corpus(records)
