"""Acceptance suite: one test per criterion, one printed verdict line each.

Verdict lines are collected here and written by the terminal-summary hook
in conftest.py, after pytest's output capture has ended.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager

import pytest

import oracles
from helpers import (
    ACCEPTANCE_VERDICTS,
    DEMO_PATH,
    disjoint_chains_corpus,
    random_bag_counts,
    random_corpus,
    star_corpus,
)
from scholarnet import (
    CitationBag,
    Researchers,
    UndirectedGraph,
    build_researchers,
    classify,
    collab_distance,
    erdos_numbers,
    g_index,
    h_index,
    simple_paths,
)
from scholarnet.cli import main as cli_main
from scholarnet.relation import inverse, transitive_closure


@contextmanager
def criterion(number: int, title: str):
    try:
        yield
    except BaseException:
        ACCEPTANCE_VERDICTS.append(f"criterion {number} ({title}): FAIL")
        raise
    ACCEPTANCE_VERDICTS.append(f"criterion {number} ({title}): PASS")


@pytest.fixture(scope="module")
def random_bags() -> list[dict[str, int]]:
    rng = random.Random(0xC0FFEE)
    return [random_bag_counts(rng, max_entries=12, max_count=50) for _ in range(1000)]


@pytest.fixture(scope="module")
def random_corpora():
    rng = random.Random(0xBEEF)
    return [random_corpus(rng, max_authors=12, max_pubs=10) for _ in range(500)]


def test_criterion_1_erdos_star_fixture():
    with criterion(1, "511-partner star, all direct coauthors at 1, < 1 s"):
        started = time.perf_counter()
        corpus = star_corpus(511)
        r = build_researchers(corpus, "Hub")
        numbers = erdos_numbers(r)
        elapsed = time.perf_counter() - started
        assert numbers["Hub"] == 0
        ones = [a for a, n in numbers.items() if n == 1]
        assert len(ones) == 511
        assert len(numbers) == 512
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_2_five_chain_fixture():
    with criterion(2, "five disjoint chains: distance 4, exactly 5 shortest paths, < 1 s"):
        started = time.perf_counter()
        corpus = disjoint_chains_corpus("SRC", "DST", n_chains=5, n_intermediates=3)
        r = build_researchers(corpus, "SRC")
        distance = collab_distance(r, "SRC", "DST")
        paths = simple_paths(r, "SRC", "DST")
        elapsed = time.perf_counter() - started
        assert distance == 4
        assert len(paths) == 5
        assert all(p.length == 4 for p in paths)
        assert all(len(p.nodes) == 5 for p in paths)
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_3_metric_oracle_equivalence(random_bags):
    with criterion(3, "1000 random bags: h and g match brute force, < 10 s"):
        started = time.perf_counter()
        disagreements = 0
        for counts in random_bags:
            bag = CitationBag(counts)
            values = list(counts.values())
            if h_index(bag) != oracles.h_index_bruteforce(values):
                disagreements += 1
            if g_index(bag) != oracles.g_index_bruteforce(values):
                disagreements += 1
        elapsed = time.perf_counter() - started
        assert len(random_bags) >= 1000
        assert disagreements == 0
        assert elapsed < 10.0, f"took {elapsed:.3f}s"


def test_criterion_4_h_at_most_g_at_most_size(random_bags):
    with criterion(4, "h <= g <= bag size on every random bag"):
        violations = 0
        for counts in random_bags:
            bag = CitationBag(counts)
            if not h_index(bag) <= g_index(bag) <= len(bag):
                violations += 1
        assert violations == 0


def test_criterion_5_cop_partition_laws(random_corpora):
    with criterion(5, "500 random corpora: tiers partition published, match brute force, < 10 s"):
        started = time.perf_counter()
        rng = random.Random(0xABCD)
        for corpus in random_corpora:
            main = rng.choice(sorted(corpus.published))
            r = build_researchers(corpus, main)
            part = classify(r)
            tiers = [frozenset({main}), part.editorial, part.active, part.peripheral, part.outsiders]
            for i, left in enumerate(tiers):
                for right in tiers[i + 1 :]:
                    assert not left & right
            assert frozenset().union(*tiers) == corpus.published
            expected = oracles.cop_bruteforce(
                main, corpus.published, r.coauthors.rel, r.citing_authors
            )
            for name in ("editorial", "active", "core", "peripheral", "cop", "outsiders"):
                assert getattr(part, name) == expected[name], name
        elapsed = time.perf_counter() - started
        assert len(random_corpora) >= 500
        assert elapsed < 10.0, f"took {elapsed:.3f}s"


def test_criterion_6_closure_reachability_agreement(random_corpora):
    with criterion(6, "related = reachability; closure idempotent and symmetry-preserving"):
        for corpus in random_corpora:
            authors = sorted(corpus.published)
            r = build_researchers(corpus, authors[0])
            for a in authors:
                for b in authors:
                    if a == b:
                        continue
                    reachable = collab_distance(r, a, b) is not None
                    assert ((a, b) in r.related) == reachable
            closed = transitive_closure(r.coauthors.rel)
            assert transitive_closure(closed) == closed
            assert closed == inverse(closed)


def _random_connected_graph(rng: random.Random) -> UndirectedGraph:
    n = rng.randint(2, 10)
    nodes = [f"N{i}" for i in range(n)]
    pairs = set()
    for i in range(1, n):
        j = rng.randrange(i)
        pairs.add((nodes[i], nodes[j]))
        pairs.add((nodes[j], nodes[i]))
    for _ in range(rng.randint(0, 2)):
        a, b = rng.sample(nodes, 2)
        pairs.add((a, b))
        pairs.add((b, a))
    return UndirectedGraph(frozenset(pairs))


def test_criterion_7_dist_matches_enumerated_minimum():
    with criterion(7, "BFS distance + 1 = minimum enumerated path cardinality"):
        rng = random.Random(0x5EED)
        for _ in range(150):
            graph = _random_connected_graph(rng)
            nodes = sorted(graph.nodes())
            related = transitive_closure(graph.rel) - frozenset((x, x) for x in nodes)
            r = Researchers(
                main=nodes[0],
                published=frozenset(nodes),
                coauthors=graph,
                citing_authors=frozenset(),
                related=related,
            )
            for a in nodes:
                for b in nodes:
                    if a == b:
                        continue
                    cardinality = oracles.min_path_cardinality(graph.rel, a, b)
                    distance = collab_distance(r, a, b)
                    assert distance is not None
                    assert cardinality == distance + 1


def test_criterion_8_worked_demo_byte_identical(capsys):
    with criterion(8, "bundled demo: tier report and metrics table exact and repeatable"):
        demo = str(DEMO_PATH)

        def run(argv: list[str]) -> str:
            assert cli_main(argv) == 0
            return capsys.readouterr().out

        cop_args = ["cop", "--corpus", demo, "--main", "Meinhof, Marta"]
        metrics_args = ["metrics", "--corpus", demo]
        cop_first, cop_second = run(cop_args), run(cop_args)
        metrics_first, metrics_second = run(metrics_args), run(metrics_args)

        assert cop_first == cop_second
        assert metrics_first == metrics_second
        assert cop_first == (
            "main (1): Meinhof, Marta\n"
            "editorial (2): Albers, Anke; Brandt, Bernd\n"
            "active (1): Carstens, Claus\n"
            "peripheral (1): Dahlmann, Dora\n"
            "outsiders (1): Evertz, Emil\n"
        )
        assert metrics_first == (
            "author\tn_pubs\ttotal\th\tg\ti10\n"
            "Albers, Anke\t2\t1\t1\t1\t0\n"
            "Carstens, Claus\t1\t1\t1\t1\t0\n"
            "Brandt, Bernd\t1\t0\t0\t0\t0\n"
            "Dahlmann, Dora\t1\t0\t0\t0\t0\n"
            "Evertz, Emil\t1\t0\t0\t0\t0\n"
            "Meinhof, Marta\t1\t0\t0\t0\t0\n"
        )
