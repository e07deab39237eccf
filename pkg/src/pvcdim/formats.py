"""Text formats for hypergraphs, graphs and level files.

Hypergraph format::

    c optional comment lines
    p phg <n> <m>
    e <i1> <i2> ...        (exactly m lines; a bare "e" is the empty edge)

Graph format uses the header ``p edge <n> <m>`` with lines ``e <u> <v>``.
Level files carry one line ``l <vertex> <level>`` per vertex and complement
a graph file.  Everything is whitespace-separated, 1-indexed and
newline-terminated; emission is canonical (sorted indexes, no comments),
so parse -> emit -> parse is the identity.
"""

from __future__ import annotations

from .core import Graph, Hypergraph, InputError, build_hypergraph, vertices_of


def _content_lines(text: str, what: str) -> list[list[str]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        rows.append(parts)
    if not rows:
        raise InputError(f"empty {what} file")
    return rows


def parse_hypergraph(text: str, name: str = "") -> Hypergraph:
    rows = _content_lines(text, "hypergraph")
    header = rows[0]
    if len(header) != 4 or header[:2] != ["p", "phg"]:
        raise InputError("expected header 'p phg <n> <m>'")
    try:
        n, m = int(header[2]), int(header[3])
    except ValueError:
        raise InputError("non-integer counts in 'p phg' header") from None
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header promises {m} edges, file has {len(body)}")
    edge_sets = []
    for row in body:
        if row[0] != "e":
            raise InputError(f"expected an 'e' line, got {' '.join(row)!r}")
        try:
            edge_sets.append([int(tok) for tok in row[1:]])
        except ValueError:
            raise InputError(f"non-integer vertex in {' '.join(row)!r}") from None
    return build_hypergraph(n, edge_sets, name)


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"p phg {H.n} {H.m}"]
    for e in H.edges:
        vs = vertices_of(e)
        lines.append("e" + "".join(f" {v}" for v in vs))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = _content_lines(text, "graph")
    header = rows[0]
    if len(header) != 4 or header[:2] != ["p", "edge"]:
        raise InputError("expected header 'p edge <n> <m>'")
    try:
        n, m = int(header[2]), int(header[3])
    except ValueError:
        raise InputError("non-integer counts in 'p edge' header") from None
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header promises {m} edges, file has {len(body)}")
    edges = []
    for row in body:
        if row[0] != "e" or len(row) != 3:
            raise InputError(f"expected 'e <u> <v>', got {' '.join(row)!r}")
        try:
            edges.append((int(row[1]), int(row[2])))
        except ValueError:
            raise InputError(f"non-integer vertex in {' '.join(row)!r}") from None
    return Graph.from_edges(n, edges)


def format_graph(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.m}"]
    for u, v in G.edge_list():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def parse_levels(text: str, n: int) -> tuple[int, ...]:
    rows = _content_lines(text, "level")
    levels = [0] * n
    for row in rows:
        if row[0] != "l" or len(row) != 3:
            raise InputError(f"expected 'l <vertex> <level>', got {' '.join(row)!r}")
        try:
            v, lv = int(row[1]), int(row[2])
        except ValueError:
            raise InputError(f"non-integer entry in {' '.join(row)!r}") from None
        if not 1 <= v <= n:
            raise InputError(f"level line names vertex {v} outside 1..{n}")
        if levels[v - 1]:
            raise InputError(f"duplicate level line for vertex {v}")
        levels[v - 1] = lv
    missing = [v for v in range(1, n + 1) if not levels[v - 1]]
    if missing:
        raise InputError(f"no level given for vertex {missing[0]}")
    return tuple(levels)


def format_levels(levels) -> str:
    return "".join(f"l {v} {lv}\n" for v, lv in enumerate(levels, 1))


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def read_hypergraph(path: str) -> Hypergraph:
    return parse_hypergraph(_read(path), name=path)


def read_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def read_levels(path: str, n: int) -> tuple[int, ...]:
    return parse_levels(_read(path), n)
