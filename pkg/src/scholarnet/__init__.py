"""Coauthorship and citation graph analytics.

Build a corpus with parse_jsonl or parse_bibtex, wrap it in a Researchers
view with build_researchers, then query distances, community tiers, and
citation indices.
"""

from .collab import (
    CollabPath,
    Researchers,
    build_researchers,
    collab_distance,
    erdos_numbers,
    simple_paths,
)
from .cop import CopPartition, classify, classify_with_radius
from .corpus import (
    AuthorId,
    Corpus,
    Diagnostic,
    PublicationRecord,
    citation_count,
    citation_counts,
    parse_jsonl,
    to_jsonl,
)
from .bibtex import parse_bibtex
from .errors import (
    BibtexParseError,
    CorpusError,
    DuplicateId,
    EmptyCorpus,
    SameAuthor,
    ScholarnetError,
    UnknownAuthor,
    UnknownPublication,
)
from .export import (
    GraphExport,
    citation_export,
    coauthor_export,
    erdos_export,
    to_dot,
    to_graphml,
    write_export,
)
from .metrics import (
    AuthorMetrics,
    CitationBag,
    author_bag,
    author_metrics,
    bag_sum,
    g_index,
    h_index,
    i10_index,
)
from .relation import (
    Relation,
    UndirectedGraph,
    dom_restrict,
    image,
    inverse,
    make_undirected,
    range_restrict,
    transitive_closure,
)

__version__ = "0.1.0"

__all__ = [
    "AuthorId",
    "AuthorMetrics",
    "BibtexParseError",
    "CitationBag",
    "CollabPath",
    "CopPartition",
    "Corpus",
    "CorpusError",
    "Diagnostic",
    "DuplicateId",
    "EmptyCorpus",
    "GraphExport",
    "PublicationRecord",
    "Relation",
    "Researchers",
    "SameAuthor",
    "ScholarnetError",
    "UndirectedGraph",
    "UnknownAuthor",
    "UnknownPublication",
    "author_bag",
    "author_metrics",
    "bag_sum",
    "build_researchers",
    "citation_count",
    "citation_counts",
    "citation_export",
    "classify",
    "classify_with_radius",
    "coauthor_export",
    "collab_distance",
    "dom_restrict",
    "erdos_export",
    "erdos_numbers",
    "g_index",
    "h_index",
    "i10_index",
    "image",
    "inverse",
    "make_undirected",
    "parse_bibtex",
    "parse_jsonl",
    "range_restrict",
    "simple_paths",
    "to_dot",
    "to_graphml",
    "to_jsonl",
    "transitive_closure",
    "write_export",
]
