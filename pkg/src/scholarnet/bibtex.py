"""Small BibTeX reader for @article, @inproceedings and @book entries.

Only the fields this tool interprets are read: author, title, year, and a
nonstandard cites field holding a comma-separated list of entry keys.
There is no @string expansion and no crossref resolution; LaTeX markup in
values passes through untouched.  Unbalanced braces are fatal and reported
with the byte offset of the offending opening brace.
"""

from __future__ import annotations

import re

from .corpus import (
    AuthorId,
    Corpus,
    Diagnostic,
    PublicationRecord,
    _attach_dangling_diagnostics,
)
from .errors import BibtexParseError, DuplicateId, EmptyCorpus

SUPPORTED_TYPES = ("article", "inproceedings", "book")

_TYPE_RE = re.compile(r"[A-Za-z]+")
_FIELD_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_-]*")
_AND_RE = re.compile(r"\s+and\s+", re.IGNORECASE)


def _byte_offset(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


def _line_of(text: str, i: int) -> int:
    return text.count("\n", 0, i) + 1


def _skip_ws(text: str, i: int, stop: int) -> int:
    while i < stop and text[i].isspace():
        i += 1
    return i


def _balanced_close(text: str, open_pos: int) -> int:
    """Index of the '}' matching the '{' at open_pos."""
    depth = 0
    for j in range(open_pos, len(text)):
        if text[j] == "{":
            depth += 1
        elif text[j] == "}":
            depth -= 1
            if depth == 0:
                return j
    raise BibtexParseError("unbalanced brace", _byte_offset(text, open_pos))


def _parse_value(text: str, i: int, stop: int) -> tuple[str, int]:
    if text[i] == "{":
        close = _balanced_close(text, i)
        return text[i + 1 : close], close + 1
    if text[i] == '"':
        depth = 0
        for j in range(i + 1, stop):
            ch = text[j]
            if ch == "{":
                depth += 1
            elif ch == "}":
                depth -= 1
            elif ch == '"' and depth == 0:
                return text[i + 1 : j], j + 1
        raise BibtexParseError("unterminated quoted value", _byte_offset(text, i))
    j = i
    while j < stop and text[j] not in ",}" and not text[j].isspace():
        j += 1
    return text[i:j], j


def normalize_author(raw: str) -> AuthorId | None:
    """Turn one BibTeX name into an AuthorId keyed as "Family, Given".

    Accepts both "Family, Given" and "Given Family" spellings; returns
    None when nothing usable remains after whitespace cleanup.
    """
    name = " ".join(raw.split())
    if "," in name:
        family, _, given = name.partition(",")
        family, given = family.strip(), given.strip()
    elif " " in name:
        given, _, family = name.rpartition(" ")
    else:
        family, given = name, ""
    if not family:
        return None
    if given:
        return AuthorId(key=f"{family}, {given}", display_name=f"{given} {family}")
    return AuthorId(key=family, display_name=family)


def _parse_entry_body(text: str, body_open: int, close: int):
    """Split one entry body into (key, fields, field_diag_messages)."""
    problems: list[str] = []
    i = _skip_ws(text, body_open + 1, close)
    j = i
    while j < close and text[j] != "," and not text[j].isspace():
        j += 1
    key = text[i:j]
    i = j
    fields: dict[str, str] = {}
    while True:
        i = _skip_ws(text, i, close)
        if i >= close:
            break
        if text[i] == ",":
            i += 1
            continue
        m = _FIELD_NAME_RE.match(text, i)
        if not m:
            problems.append("malformed field; rest of entry ignored")
            break
        name = m.group(0).lower()
        i = _skip_ws(text, m.end(), close)
        if i >= close or text[i] != "=":
            problems.append(f"field {name!r} has no value; rest of entry ignored")
            break
        i = _skip_ws(text, i + 1, close)
        if i >= close:
            problems.append(f"field {name!r} has no value; rest of entry ignored")
            break
        value, i = _parse_value(text, i, close)
        if name in fields:
            problems.append(f"duplicate field {name!r} ignored")
        else:
            fields[name] = value
    return key, fields, problems


def parse_bibtex(stream: str) -> tuple[Corpus, list[Diagnostic]]:
    """Parse BibTeX text into a validated corpus.

    Entries of unsupported types and entries without authors are skipped
    with a diagnostic.  Duplicate keys raise DuplicateId; an input with no
    usable entries raises EmptyCorpus.
    """
    text = stream
    publications: dict[str, PublicationRecord] = {}
    authors: dict[str, AuthorId] = {}
    record_lines: dict[str, int | None] = {}
    diagnostics: list[Diagnostic] = []

    pos = 0
    while True:
        at = text.find("@", pos)
        if at == -1:
            break
        lineno = _line_of(text, at)
        m = _TYPE_RE.match(text, at + 1)
        if not m:
            diagnostics.append(Diagnostic("stray '@' ignored", lineno))
            pos = at + 1
            continue
        etype = m.group(0).lower()
        i = _skip_ws(text, m.end(), len(text))
        if i >= len(text) or text[i] != "{":
            diagnostics.append(Diagnostic(f"@{etype}: expected '{{' after entry type", lineno))
            pos = m.end()
            continue
        close = _balanced_close(text, i)
        pos = close + 1

        if etype not in SUPPORTED_TYPES:
            diagnostics.append(Diagnostic(f"skipped unsupported @{etype} entry", lineno))
            continue

        key, fields, problems = _parse_entry_body(text, i, close)
        if not key:
            diagnostics.append(Diagnostic(f"@{etype} entry with no key skipped", lineno))
            continue
        for message in problems:
            diagnostics.append(Diagnostic(f"{key!r}: {message}", lineno))
        if key in publications:
            raise DuplicateId(f"duplicate publication id {key!r} on line {lineno}")

        raw_author = fields.get("author", "").strip()
        if not raw_author:
            diagnostics.append(Diagnostic(f"{key!r}: no author field; entry skipped", lineno))
            continue
        entry_authors: list[AuthorId] = []
        for raw_name in _AND_RE.split(raw_author):
            aid = normalize_author(raw_name)
            if aid is None:
                diagnostics.append(Diagnostic(f"{key!r}: unusable author name dropped", lineno))
            elif any(aid.key == seen.key for seen in entry_authors):
                diagnostics.append(Diagnostic(f"{key!r}: duplicate author {aid.key!r} dropped", lineno))
            else:
                entry_authors.append(aid)
        if not entry_authors:
            diagnostics.append(Diagnostic(f"{key!r}: no usable authors; entry skipped", lineno))
            continue

        title = " ".join(fields.get("title", "").split())
        if not title:
            diagnostics.append(Diagnostic(f"{key!r}: missing title", lineno))

        year: int | None = None
        raw_year = fields.get("year", "").strip()
        if raw_year:
            if raw_year.isdigit():
                year = int(raw_year)
            else:
                diagnostics.append(Diagnostic(f"{key!r}: year {raw_year!r} is not numeric", lineno))

        cites: list[str] = []
        for token in fields.get("cites", "").split(","):
            ref = token.strip()
            if not ref:
                continue
            if ref == key:
                diagnostics.append(Diagnostic(f"{key!r}: self-reference dropped", lineno))
            elif ref in cites:
                diagnostics.append(Diagnostic(f"{key!r}: duplicate reference {ref!r} dropped", lineno))
            else:
                cites.append(ref)

        publications[key] = PublicationRecord(
            id=key,
            title=title,
            authors=tuple(a.key for a in entry_authors),
            cites=tuple(cites),
            year=year,
        )
        record_lines[key] = lineno
        for aid in entry_authors:
            authors.setdefault(aid.key, aid)

    if not publications:
        raise EmptyCorpus("no usable BibTeX entries in input")
    _attach_dangling_diagnostics(publications, record_lines, diagnostics)
    return Corpus(publications=publications, authors=authors), diagnostics
