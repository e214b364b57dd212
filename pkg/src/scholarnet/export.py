"""Graph exports for external renderers: DOT primary, GraphML secondary.

Every export is a GraphExport value first; the writers are pure functions
of it, so output bytes are fixed by the corpus and flags alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape, quoteattr

from .collab import Researchers, erdos_numbers
from .cop import CopPartition
from .corpus import Corpus
from .relation import dom_restrict

Node = tuple[str, str, str]
Edge = tuple[str, str, str, bool]


@dataclass(frozen=True)
class GraphExport:
    """Nodes are (id, label, tag); edges are (a, b, kind, directed).

    Coauthor edges appear once per unordered pair; citation edges are
    directed cited -> citer.  tag_name says what the node tag means.
    """

    tag_name: str
    directed: bool
    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        ids = {node_id for node_id, _, _ in self.nodes}
        if len(ids) != len(self.nodes):
            raise ValueError("duplicate node ids in export")
        seen: set[tuple[str, str]] = set()
        for a, b, kind, directed in self.edges:
            if a not in ids or b not in ids:
                raise ValueError(f"edge {a!r} -> {b!r} references a missing node")
            if kind == "coauthor" and (b, a) in seen:
                raise ValueError("coauthor edges must appear once per unordered pair")
            if directed != self.directed:
                raise ValueError("mixed edge directedness is not supported")
            seen.add((a, b))


def _display(c: Corpus, key: str) -> str:
    author = c.authors.get(key)
    return author.display_name if author is not None else key


def coauthor_export(c: Corpus, r: Researchers, part: CopPartition) -> GraphExport:
    """The core of the community with its internal coauthor edges, each
    node tagged by its tier."""
    nodes = tuple(
        (key, _display(c, key), part.tier(key)) for key in sorted(part.core)
    )
    pairs = {
        (min(a, b), max(a, b))
        for a, b in r.coauthors.rel
        if a in part.core and b in part.core
    }
    edges = tuple((a, b, "coauthor", False) for a, b in sorted(pairs))
    return GraphExport(tag_name="tier", directed=False, nodes=nodes, edges=edges)


def citation_export(c: Corpus, r: Researchers) -> GraphExport:
    """Authors citing the main author, one arrow per citing author."""
    citing_main = dom_restrict(frozenset({r.main}), r.citing_authors)
    citers = sorted({citer for _, citer in citing_main})
    nodes = [(r.main, _display(c, r.main), "main")]
    nodes.extend((key, _display(c, key), "citer") for key in citers if key != r.main)
    edges = tuple(sorted((cited, citer, "citation", True) for cited, citer in citing_main))
    return GraphExport(tag_name="role", directed=True, nodes=tuple(nodes), edges=edges)


def erdos_export(c: Corpus, r: Researchers) -> GraphExport:
    """Coauthor graph restricted to authors reachable from main, each node
    labelled with its collaboration number."""
    numbers = erdos_numbers(r)
    nodes = tuple(
        (key, f"{_display(c, key)} ({numbers[key]})", str(numbers[key]))
        for key in sorted(numbers)
    )
    pairs = {
        (min(a, b), max(a, b))
        for a, b in r.coauthors.rel
        if a in numbers and b in numbers
    }
    edges = tuple((a, b, "coauthor", False) for a, b in sorted(pairs))
    return GraphExport(tag_name="erdos", directed=False, nodes=nodes, edges=edges)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: GraphExport) -> str:
    kind = "digraph" if g.directed else "graph"
    arrow = "->" if g.directed else "--"
    lines = [f"{kind} scholarnet {{"]
    for node_id, label, tag in g.nodes:
        attrs = f"label={_dot_quote(label)}, {g.tag_name}={_dot_quote(tag)}"
        lines.append(f"  {_dot_quote(node_id)} [{attrs}];")
    for a, b, _, _ in g.edges:
        lines.append(f"  {_dot_quote(a)} {arrow} {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graphml(g: GraphExport) -> str:
    default = "directed" if g.directed else "undirected"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="d0" for="node" attr.name="label" attr.type="string"/>',
        f'  <key id="d1" for="node" attr.name={quoteattr(g.tag_name)} attr.type="string"/>',
        f'  <graph id="scholarnet" edgedefault="{default}">',
    ]
    for node_id, label, tag in g.nodes:
        lines.append(f"    <node id={quoteattr(node_id)}>")
        lines.append(f"      <data key=\"d0\">{escape(label)}</data>")
        lines.append(f"      <data key=\"d1\">{escape(tag)}</data>")
        lines.append("    </node>")
    for a, b, _, _ in g.edges:
        lines.append(f"    <edge source={quoteattr(a)} target={quoteattr(b)}/>")
    lines.extend(["  </graph>", "</graphml>"])
    return "\n".join(lines) + "\n"


def write_export(g: GraphExport, out_path: str) -> tuple[Path, Path]:
    """Write <base>.dot and <base>.graphml next to each other.

    A .dot/.gv/.graphml suffix on out_path is treated as the base name.
    """
    base = Path(out_path)
    if base.suffix in (".dot", ".gv", ".graphml"):
        base = base.parent / base.stem
    dot_path = base.parent / (base.name + ".dot")
    graphml_path = base.parent / (base.name + ".graphml")
    dot_path.write_text(to_dot(g), encoding="utf-8")
    graphml_path.write_text(to_graphml(g), encoding="utf-8")
    return dot_path, graphml_path
