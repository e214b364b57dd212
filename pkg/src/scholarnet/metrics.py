"""Citation bags and the classic author indices (h, g, i10).

Counts are corpus-relative: a publication's count is its in-degree inside
the ingested corpus, never an external figure.  Bags omit zero-cited
publications, so every stored count is at least 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .corpus import Corpus, citation_counts
from .errors import UnknownAuthor


@dataclass(frozen=True)
class CitationBag:
    """Multiset of citation counts, keyed by publication id."""

    counts: Mapping[str, int]

    def __post_init__(self) -> None:
        for pid, n in self.counts.items():
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise ValueError(f"bag counts must be positive integers, got {pid!r} -> {n!r}")
        object.__setattr__(self, "counts", MappingProxyType(dict(self.counts)))

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class AuthorMetrics:
    author: str
    total_citations: int
    h: int
    g: int
    i10: int
    n_pubs: int

    def __post_init__(self) -> None:
        if min(self.total_citations, self.h, self.g, self.i10, self.n_pubs) < 0:
            raise ValueError("metrics cannot be negative")
        if not self.h <= self.g <= self.n_pubs:
            raise ValueError("expected h <= g <= publication count")
        if self.i10 > self.n_pubs:
            raise ValueError("i10 cannot exceed the publication count")


def _descending(b: CitationBag) -> list[int]:
    return sorted(b.counts.values(), reverse=True)


def author_bag(c: Corpus, a: str) -> CitationBag:
    """Citation bag for one author: their publications with count >= 1."""
    if a not in c.published:
        raise UnknownAuthor(f"unknown author {a!r}")
    counts = citation_counts(c)
    return CitationBag(
        {
            pid: counts[pid]
            for pid, record in c.publications.items()
            if a in record.authors and counts[pid] >= 1
        }
    )


def bag_sum(b: CitationBag) -> int:
    return sum(b.counts.values())


def h_index(b: CitationBag) -> int:
    """Largest h such that at least h publications have h or more citations."""
    h = 0
    for i, n in enumerate(_descending(b), start=1):
        if n < i:
            break
        h = i
    return h


def g_index(b: CitationBag) -> int:
    """Largest g, at most the bag size, whose g most-cited publications
    total at least g**2 citations."""
    g = 0
    running = 0
    for i, n in enumerate(_descending(b), start=1):
        running += n
        if running < i * i:
            # Descending order makes this final: the prefix sum forces
            # n <= running/i < i, so any later prefix stays below i*j < j*j.
            break
        g = i
    return g


def i10_index(b: CitationBag) -> int:
    return sum(1 for n in b.counts.values() if n >= 10)


def author_metrics(c: Corpus, a: str) -> AuthorMetrics:
    """Bundle the section-4 indices plus totals for one author."""
    if a not in c.published:
        raise UnknownAuthor(f"unknown author {a!r}")
    bag = author_bag(c, a)
    n_pubs = sum(1 for record in c.publications.values() if a in record.authors)
    return AuthorMetrics(
        author=a,
        total_citations=bag_sum(bag),
        h=h_index(bag),
        g=g_index(bag),
        i10=i10_index(bag),
        n_pubs=n_pubs,
    )
