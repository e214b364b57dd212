"""Coauthorship model and path queries.

A Researchers value fixes one main author and freezes the coauthor graph,
the author-level citation relation, and the reachability relation derived
from it.  All queries here are read-only; distances are reported in edges
(direct coauthors are at distance 1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .corpus import Corpus
from .errors import SameAuthor, UnknownAuthor
from .relation import Relation, UndirectedGraph, transitive_closure

DEFAULT_MAX_LEN = 8
DEFAULT_MAX_COUNT = 25


def _reachability(graph: UndirectedGraph) -> Relation:
    """Transitive closure of the coauthor edges, without the self-pairs
    that closing a symmetric relation always produces."""
    identity = frozenset((n, n) for n in graph.nodes())
    return transitive_closure(graph.rel) - identity


@dataclass(frozen=True)
class Researchers:
    """One main author plus the relational view of the whole corpus.

    related is derived data and is re-checked extensionally on
    construction, so an instance can only exist in a consistent state.
    """

    main: str
    published: frozenset[str]
    coauthors: UndirectedGraph
    citing_authors: Relation
    related: Relation

    def __post_init__(self) -> None:
        if self.main not in self.published:
            raise ValueError(f"main author {self.main!r} is not a published author")
        for a, b in self.coauthors.rel:
            if a not in self.published or b not in self.published:
                raise ValueError("coauthor edges must stay within published authors")
        for cited, citer in self.citing_authors:
            if cited not in self.published or citer not in self.published:
                raise ValueError("citing_authors must stay within published authors")
        if self.related != _reachability(self.coauthors):
            raise ValueError("related must equal the closure of the coauthor graph")


@dataclass(frozen=True)
class CollabPath:
    """An injective node sequence whose adjacent pairs are coauthor edges."""

    nodes: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.nodes) < 2:
            raise ValueError("a path joins two different authors")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("path nodes must be pairwise distinct")

    @property
    def length(self) -> int:
        """Edge count; one less than the number of nodes."""
        return len(self.nodes) - 1


def build_researchers(c: Corpus, main: str, include_self_citation: bool = False) -> Researchers:
    """Assemble the Researchers view of a corpus around one main author.

    Coauthor edges join distinct authors sharing at least one publication;
    repeated collaboration still yields a single edge.  citing_authors
    pairs are oriented (cited, citer); an author citing their own earlier
    work is dropped unless include_self_citation is set.
    """
    if main not in c.published:
        raise UnknownAuthor(f"unknown author {main!r}")

    edges: set[tuple[str, str]] = set()
    for record in c.publications.values():
        for i, a in enumerate(record.authors):
            for b in record.authors[i + 1 :]:
                edges.add((a, b))
                edges.add((b, a))
    graph = UndirectedGraph(frozenset(edges))

    citing: set[tuple[str, str]] = set()
    for record in c.publications.values():
        for ref in record.cites:
            cited_record = c.publications.get(ref)
            if cited_record is None:
                continue
            for cited in cited_record.authors:
                for citer in record.authors:
                    if cited == citer and not include_self_citation:
                        continue
                    citing.add((cited, citer))

    return Researchers(
        main=main,
        published=c.published,
        coauthors=graph,
        citing_authors=frozenset(citing),
        related=_reachability(graph),
    )


def _check_endpoints(r: Researchers, a: str, b: str) -> None:
    if a == b:
        raise SameAuthor(f"endpoints must differ, got {a!r} twice")
    for x in (a, b):
        if x not in r.published:
            raise UnknownAuthor(f"unknown author {x!r}")


def collab_distance(r: Researchers, a: str, b: str) -> int | None:
    """Edges on a shortest coauthor path from a to b, or None if unreachable."""
    _check_endpoints(r, a, b)
    depth = {a: 0}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            return depth[x]
        for y in r.coauthors.neighbors(x):
            if y not in depth:
                depth[y] = depth[x] + 1
                queue.append(y)
    return None


def simple_paths(
    r: Researchers,
    a: str,
    b: str,
    max_len: int = DEFAULT_MAX_LEN,
    max_count: int = DEFAULT_MAX_COUNT,
) -> list[CollabPath]:
    """Up to max_count simple paths from a to b of at most max_len edges.

    Enumeration is by iterative deepening over sorted adjacency, so the
    result is ordered by length and then lexicographically by node keys,
    and shorter paths are never crowded out by longer ones.
    """
    _check_endpoints(r, a, b)
    if max_len < 2:
        raise ValueError("max_len must be at least 2")

    adjacency = {x: sorted(r.coauthors.neighbors(x)) for x in r.coauthors.nodes()}
    found: list[CollabPath] = []

    def walk(path: list[str], edges_left: int) -> None:
        if len(found) >= max_count:
            return
        if edges_left == 0:
            if path[-1] == b:
                found.append(CollabPath(tuple(path)))
            return
        for nxt in adjacency.get(path[-1], ()):
            if nxt in path:
                continue
            if nxt == b and edges_left > 1:
                continue
            path.append(nxt)
            walk(path, edges_left - 1)
            path.pop()

    for depth in range(1, max_len + 1):
        if len(found) >= max_count:
            break
        walk([a], depth)
    return found


def erdos_numbers(r: Researchers) -> dict[str, int]:
    """BFS depths from the main author over coauthor edges.

    main maps to 0; unreachable authors are absent.  Keys are inserted by
    (depth, key) so serializing the map is deterministic.
    """
    numbers = {r.main: 0}
    frontier = [r.main]
    depth = 0
    while frontier:
        depth += 1
        discovered = {
            y
            for x in frontier
            for y in r.coauthors.neighbors(x)
            if y not in numbers
        }
        frontier = sorted(discovered)
        for y in frontier:
            numbers[y] = depth
    return numbers
