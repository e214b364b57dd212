"""Publication corpus: JSONL ingestion, validation, citation in-degrees.

A corpus is an immutable map of publication records plus the set of all
authors appearing on them.  Parsing is tolerant: malformed lines and
recoverable constraint violations become diagnostics; only duplicate ids
and an empty result are fatal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import DuplicateId, EmptyCorpus, UnknownPublication

KNOWN_FIELDS = ("id", "title", "year", "authors", "cites")


@dataclass(frozen=True, eq=False)
class AuthorId:
    """Canonical author identifier plus a display name.

    Identity is the key alone; two AuthorIds with equal keys are equal no
    matter how their display names differ.
    """

    key: str
    display_name: str = ""

    def __post_init__(self):
        if not self.key:
            raise ValueError("author key must be non-empty")
        if not self.display_name:
            object.__setattr__(self, "display_name", self.key)

    def __eq__(self, other):
        if isinstance(other, AuthorId):
            return self.key == other.key
        return NotImplemented

    def __hash__(self):
        return hash(self.key)


@dataclass(frozen=True)
class PublicationRecord:
    """One published work with its author keys and outgoing references."""

    id: str
    title: str
    authors: tuple[str, ...]
    cites: tuple[str, ...] = ()
    year: int | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("publication id must be non-empty")
        if not self.authors:
            raise ValueError(f"publication {self.id!r} has no authors")
        if len(set(self.authors)) != len(self.authors):
            raise ValueError(f"publication {self.id!r} repeats an author")
        if len(set(self.cites)) != len(self.cites):
            raise ValueError(f"publication {self.id!r} repeats a reference")
        if self.id in self.cites:
            raise ValueError(f"publication {self.id!r} cites itself")


@dataclass(frozen=True)
class Diagnostic:
    """A recoverable problem found while parsing, tied to a source line."""

    message: str
    line: int | None = None

    def __str__(self):
        if self.line is None:
            return self.message
        return f"line {self.line}: {self.message}"


@dataclass(frozen=True)
class Corpus:
    """Validated publications plus the author universe they span."""

    publications: dict[str, PublicationRecord]
    authors: dict[str, AuthorId]

    def __post_init__(self):
        if not self.publications:
            raise EmptyCorpus("corpus contains no publications")
        for pid, rec in self.publications.items():
            if pid != rec.id:
                raise ValueError(f"publication map key {pid!r} != record id {rec.id!r}")
        on_records = {key for rec in self.publications.values() for key in rec.authors}
        if on_records != set(self.authors):
            raise ValueError("author table out of sync with publication author lists")

    @property
    def published(self) -> frozenset[str]:
        return frozenset(self.authors)


def _attach_dangling_diagnostics(
    publications: dict[str, PublicationRecord],
    lines: dict[str, int | None],
    diagnostics: list[Diagnostic],
) -> None:
    """Report references that do not resolve inside the corpus.

    Dangling references stay on the record; they are simply never counted.
    """
    for pid in publications:
        for ref in publications[pid].cites:
            if ref not in publications:
                diagnostics.append(
                    Diagnostic(
                        f"publication {pid!r} cites unknown publication {ref!r}",
                        lines.get(pid),
                    )
                )


def parse_jsonl(stream: str | Iterable[str]) -> tuple[Corpus, list[Diagnostic]]:
    """Parse one JSON object per line into a validated corpus.

    Recognised fields: id, title, year (optional), authors, cites.  Lines
    that cannot yield a record are skipped with a diagnostic; duplicate
    ids raise DuplicateId and an input with no valid records raises
    EmptyCorpus.
    """
    lines = stream.splitlines() if isinstance(stream, str) else stream
    publications: dict[str, PublicationRecord] = {}
    authors: dict[str, AuthorId] = {}
    record_lines: dict[str, int | None] = {}
    diagnostics: list[Diagnostic] = []

    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            obj = json.loads(text)
        except ValueError as exc:
            diagnostics.append(Diagnostic(f"invalid JSON: {exc}", lineno))
            continue
        if not isinstance(obj, dict):
            diagnostics.append(Diagnostic("record is not a JSON object", lineno))
            continue

        unknown = sorted(k for k in obj if k not in KNOWN_FIELDS)
        if unknown:
            diagnostics.append(
                Diagnostic("ignored unknown field(s): " + ", ".join(unknown), lineno)
            )

        pid = obj.get("id")
        if not isinstance(pid, str) or not pid:
            diagnostics.append(Diagnostic("missing or invalid id; record skipped", lineno))
            continue
        if pid in publications:
            raise DuplicateId(f"duplicate publication id {pid!r} on line {lineno}")

        title = obj.get("title")
        if not isinstance(title, str):
            diagnostics.append(Diagnostic(f"{pid!r}: missing or invalid title", lineno))
            title = ""

        year = obj.get("year")
        if year is not None and (isinstance(year, bool) or not isinstance(year, int)):
            diagnostics.append(Diagnostic(f"{pid!r}: year is not an integer", lineno))
            year = None

        raw_authors = obj.get("authors")
        if not isinstance(raw_authors, list) or not raw_authors:
            diagnostics.append(Diagnostic(f"{pid!r}: no authors; record skipped", lineno))
            continue
        keys: list[str] = []
        for entry in raw_authors:
            if not isinstance(entry, str) or not entry:
                diagnostics.append(Diagnostic(f"{pid!r}: invalid author entry dropped", lineno))
            elif entry in keys:
                diagnostics.append(Diagnostic(f"{pid!r}: duplicate author {entry!r} dropped", lineno))
            else:
                keys.append(entry)
        if not keys:
            diagnostics.append(Diagnostic(f"{pid!r}: no usable authors; record skipped", lineno))
            continue

        raw_cites = obj.get("cites")
        if raw_cites is None:
            diagnostics.append(Diagnostic(f"{pid!r}: missing cites list", lineno))
            raw_cites = []
        elif not isinstance(raw_cites, list):
            diagnostics.append(Diagnostic(f"{pid!r}: cites is not a list", lineno))
            raw_cites = []
        cites: list[str] = []
        for ref in raw_cites:
            if not isinstance(ref, str) or not ref:
                diagnostics.append(Diagnostic(f"{pid!r}: invalid reference dropped", lineno))
            elif ref == pid:
                diagnostics.append(Diagnostic(f"{pid!r}: self-reference dropped", lineno))
            elif ref in cites:
                diagnostics.append(Diagnostic(f"{pid!r}: duplicate reference {ref!r} dropped", lineno))
            else:
                cites.append(ref)

        publications[pid] = PublicationRecord(
            id=pid, title=title, authors=tuple(keys), cites=tuple(cites), year=year
        )
        record_lines[pid] = lineno
        for key in keys:
            authors.setdefault(key, AuthorId(key))

    if not publications:
        raise EmptyCorpus("no valid publication records in input")
    _attach_dangling_diagnostics(publications, record_lines, diagnostics)
    return Corpus(publications=publications, authors=authors), diagnostics


def to_jsonl(c: Corpus) -> str:
    """Serialize a corpus back to JSONL, one record per line, sorted by id."""
    out = []
    for pid in sorted(c.publications):
        rec = c.publications[pid]
        obj: dict = {"id": rec.id, "title": rec.title}
        if rec.year is not None:
            obj["year"] = rec.year
        obj["authors"] = list(rec.authors)
        obj["cites"] = list(rec.cites)
        out.append(json.dumps(obj, ensure_ascii=False))
    return "\n".join(out) + "\n"


def citation_counts(c: Corpus) -> dict[str, int]:
    """In-corpus citation count for every publication (0 for uncited)."""
    counts = {pid: 0 for pid in c.publications}
    for rec in c.publications.values():
        for ref in rec.cites:
            if ref in counts:
                counts[ref] += 1
    return counts


def citation_count(c: Corpus, pub_id: str) -> int:
    """Number of distinct corpus publications whose references include pub_id."""
    if pub_id not in c.publications:
        raise UnknownPublication(f"unknown publication: {pub_id!r}")
    return citation_counts(c)[pub_id]
