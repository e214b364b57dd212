"""Finite binary relations over author ids, and the undirected refinement.

A relation is simply a frozenset of ordered (source, target) pairs of id
strings.  The functions below are the small relational calculus the rest
of the package is written in: inverse, relational image, domain and range
restriction, transitive closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable

Pair = tuple[str, str]
Relation = frozenset[Pair]

EMPTY: Relation = frozenset()


def inverse(r: Relation) -> Relation:
    """Swap every pair: {(b, a) | (a, b) in r}."""
    return frozenset((b, a) for a, b in r)


def image(r: Relation, s: AbstractSet[str]) -> frozenset[str]:
    """Everything related to some member of s: {b | a in s, (a, b) in r}."""
    return frozenset(b for a, b in r if a in s)


def dom_restrict(s: AbstractSet[str], r: Relation) -> Relation:
    """Keep the pairs whose first component lies in s."""
    return frozenset((a, b) for a, b in r if a in s)


def range_restrict(r: Relation, s: AbstractSet[str]) -> Relation:
    """Keep the pairs whose second component lies in s."""
    return frozenset((a, b) for a, b in r if b in s)


def transitive_closure(r: Relation) -> Relation:
    """Smallest transitive relation containing r.

    Breadth-first search from every source node.  A reflexive pair (a, a)
    appears exactly when a lies on a cycle; callers that need an
    irreflexive result subtract those pairs themselves.
    """
    succ: dict[str, set[str]] = {}
    for a, b in r:
        succ.setdefault(a, set()).add(b)
    closed: set[Pair] = set()
    for start, direct in succ.items():
        seen: set[str] = set()
        frontier = list(direct)
        while frontier:
            node = frontier.pop()
            if node in seen:
                continue
            seen.add(node)
            onward = succ.get(node)
            if onward:
                frontier.extend(onward - seen)
        closed.update((start, node) for node in seen)
    return frozenset(closed)


@dataclass(frozen=True)
class UndirectedGraph:
    """A symmetric, irreflexive relation.

    Every edge is stored in both directions and no node is connected to
    itself; construction rejects anything else.
    """

    rel: Relation

    def __post_init__(self):
        for a, b in self.rel:
            if a == b:
                raise ValueError(f"self-loop on {a!r} in undirected graph")
            if (b, a) not in self.rel:
                raise ValueError(f"missing mirror pair for ({a!r}, {b!r})")

    def nodes(self) -> frozenset[str]:
        return frozenset(a for a, _ in self.rel)

    def neighbors(self, a: str) -> frozenset[str]:
        return image(self.rel, {a})


def make_undirected(pairs: Iterable[Pair]) -> tuple[UndirectedGraph, int]:
    """Symmetrize pairs and drop self-pairs.

    Returns the graph together with the number of distinct self-pairs that
    were dropped, as a diagnostic for callers that want to report them.
    """
    distinct = set(pairs)
    dropped = sum(1 for a, b in distinct if a == b)
    sym: set[Pair] = set()
    for a, b in distinct:
        if a != b:
            sym.add((a, b))
            sym.add((b, a))
    return UndirectedGraph(frozenset(sym)), dropped
