"""Instance files (``.snzp``) and random instance generation.

Line-oriented, ``#`` starts a comment::

    group z2                      # or: zk 6 | z | free 2 | prod z2;zk 3
    vertices s a b t
    edge s a 1 0                  # edge <tail> <head> <length> <label>
    query path s t                # optional; an extra label is the forbidden one
    query cycle

Embedded graphs use an ``embed`` header instead of ``group``, unlabeled
``edge <u> <v> <length>`` lines, and one ``rot <v>: <edge ids>`` line per
vertex giving the cyclic order of its edges (ids count edge lines from 0).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ParseError, StructuralError, UsageError
from .graph import Edge, LabeledGraph
from .groups import Group, GroupElement, parse_group
from .reductions import RotationSystem


@dataclass(frozen=True)
class Query:
    kind: str  # "path" or "cycle"
    source: int | None = None
    target: int | None = None
    forbidden: GroupElement | None = None


@dataclass(frozen=True)
class Instance:
    graph: LabeledGraph
    queries: tuple[Query, ...] = ()


@dataclass(frozen=True)
class EmbeddedInstance:
    rotation_system: RotationSystem
    queries: tuple[Query, ...] = field(default=())


def format_length(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def _parse_length(tok: str, line: int, col: int) -> float:
    try:
        value = float(tok)
    except ValueError:
        raise ParseError(f"bad length {tok!r}", line, col) from None
    if value != value or value in (float("inf"), float("-inf")):
        raise ParseError(f"length must be finite, got {tok!r}", line, col)
    if value < 0:
        raise ParseError(f"negative length {tok!r}", line, col)
    return int(value) if value.is_integer() else value


def _tokens(text: str) -> list[tuple[str, int]]:
    """Split a line into (token, 1-based column) pairs."""
    out, i = [], 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        out.append((text[i:j], i + 1))
        i = j
    return out


def parse_instance(text: str) -> Instance | EmbeddedInstance:
    """Parse instance text; errors carry line (and column) numbers."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty instance")

    lineno, header = lines[0]
    toks = _tokens(header)
    group: Group | None = None
    if toks[0][0] == "group":
        if len(toks) < 2:
            raise ParseError("missing group after 'group'", lineno)
        try:
            group = parse_group(header.strip()[len("group"):])
        except ParseError as exc:
            raise ParseError(str(exc), lineno, toks[1][1]) from None
    elif toks[0][0] != "embed" or len(toks) != 1:
        raise ParseError("first line must be 'group <spec>' or 'embed'", lineno, toks[0][1])

    if len(lines) < 2 or _tokens(lines[1][1])[0][0] != "vertices":
        raise ParseError("second line must list the vertices", lines[1][0] if len(lines) > 1 else lineno)
    lineno, body = lines[1]
    names = [tok for tok, _ in _tokens(body)[1:]]
    index: dict[str, int] = {}
    for (tok, col) in _tokens(body)[1:]:
        if tok in index:
            raise ParseError(f"duplicate vertex name {tok!r}", lineno, col)
        index[tok] = len(index)

    def vertex(tok: str, ln: int, col: int) -> int:
        if tok not in index:
            raise ParseError(f"unknown vertex {tok!r}", ln, col)
        return index[tok]

    edges: list = []
    rotations: dict[int, tuple[int, ...]] = {}
    queries: list[Query] = []
    for lineno, body in lines[2:]:
        toks = _tokens(body)
        kw, kcol = toks[0]
        if kw == "edge":
            want = 5 if group is not None else 4
            if len(toks) < want or (group is None and len(toks) > want):
                raise ParseError("malformed edge line", lineno, kcol)
            u = vertex(toks[1][0], lineno, toks[1][1])
            v = vertex(toks[2][0], lineno, toks[2][1])
            if u == v:
                raise ParseError(f"edge {len(edges)} is a loop at {toks[1][0]!r}", lineno, toks[1][1])
            length = _parse_length(toks[3][0], lineno, toks[3][1])
            if group is None:
                edges.append((u, v, length))
                continue
            label_col = toks[4][1]
            try:
                label = group.parse(body[label_col - 1:])
            except ParseError as exc:
                raise ParseError(f"bad label: {exc}", lineno, label_col) from None
            edges.append((u, v, length, label))
        elif kw == "rot" and group is None:
            head = toks[1][0] if len(toks) > 1 else ""
            if not head.endswith(":"):
                raise ParseError("expected 'rot <vertex>: <edge ids>'", lineno, kcol)
            v = vertex(head[:-1], lineno, toks[1][1])
            ids = []
            for tok, col in toks[2:]:
                if not tok.isdigit():
                    raise ParseError(f"bad edge id {tok!r}", lineno, col)
                ids.append(int(tok))
            rotations[v] = tuple(ids)
        elif kw == "query":
            if len(toks) >= 2 and toks[1][0] == "cycle" and len(toks) == 2:
                queries.append(Query("cycle"))
            elif len(toks) >= 4 and toks[1][0] == "path":
                s = vertex(toks[2][0], lineno, toks[2][1])
                t = vertex(toks[3][0], lineno, toks[3][1])
                forbidden = None
                if len(toks) > 4:
                    if group is None:
                        raise ParseError("embedded instances take no labels", lineno, toks[4][1])
                    try:
                        forbidden = group.parse(body[toks[4][1] - 1:])
                    except ParseError as exc:
                        raise ParseError(f"bad label: {exc}", lineno, toks[4][1]) from None
                queries.append(Query("path", s, t, forbidden))
            else:
                raise ParseError("expected 'query path <s> <t> [label]' or 'query cycle'", lineno, kcol)
        else:
            raise ParseError(f"unknown directive {kw!r}", lineno, kcol)

    if group is not None:
        graph = LabeledGraph.from_edges(len(names), group, edges, names)
        return Instance(graph, tuple(queries))
    missing = [names[v] for v in range(len(names)) if v not in rotations]
    if missing:
        raise ParseError(f"no rotation given for vertex {missing[0]!r}")
    try:
        rs = RotationSystem(
            len(names), tuple(edges), tuple(rotations[v] for v in range(len(names))), tuple(names)
        )
    except StructuralError as exc:
        raise ParseError(str(exc)) from None
    return EmbeddedInstance(rs, tuple(queries))


def _render_queries(queries, name, group) -> list[str]:
    out = []
    for q in queries:
        if q.kind == "cycle":
            out.append("query cycle")
        else:
            line = f"query path {name(q.source)} {name(q.target)}"
            if q.forbidden is not None:
                line += " " + group.render(q.forbidden)
            out.append(line)
    return out


def render_instance(inst: Instance | EmbeddedInstance) -> str:
    """Canonical text; :func:`parse_instance` inverts it exactly."""
    if isinstance(inst, EmbeddedInstance):
        rs = inst.rotation_system
        names = rs.names or tuple(f"v{i}" for i in range(rs.n))
        out = ["embed", "vertices " + " ".join(names)]
        out += [f"edge {names[u]} {names[v]} {format_length(x)}" for u, v, x in rs.edges]
        out += [f"rot {names[v]}: " + " ".join(map(str, rs.rotations[v])) for v in range(rs.n)]
        out += _render_queries(inst.queries, lambda v: names[v], None)
        return "\n".join(out) + "\n"
    g = inst.graph
    names = g.names or tuple(f"v{i}" for i in range(g.n))
    out = [f"group {g.group.spec()}", "vertices " + " ".join(names)]
    out += [
        f"edge {names[e.tail]} {names[e.head]} {format_length(e.length)} {g.group.render(e.label)}"
        for e in g.edges
    ]
    out += _render_queries(inst.queries, lambda v: names[v], g.group)
    return "\n".join(out) + "\n"


def load_instance(path: str) -> Instance | EmbeddedInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def random_graph(
    rng: random.Random,
    n: int,
    m: int,
    group: Group,
    maxlen: int = 10,
    connected: bool = False,
) -> LabeledGraph:
    """Random multigraph with integer lengths ``0..maxlen`` and random labels.

    With ``connected=True`` the first ``n - 1`` edges form a random spanning
    tree (so ``m >= n - 1`` is required).
    """
    if n < 1:
        raise UsageError("need at least one vertex")
    if m > 0 and n < 2:
        raise UsageError("edges need at least two vertices")
    pairs = []
    if connected:
        if m < n - 1:
            raise UsageError(f"a connected graph on {n} vertices needs at least {n - 1} edges")
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            pairs.append((order[i], order[rng.randrange(i)]))
    while len(pairs) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            pairs.append((u, v))
    edges = tuple(
        Edge(i, u, v, group.random_element(rng), rng.randint(0, maxlen)) for i, (u, v) in enumerate(pairs)
    )
    return LabeledGraph(n, edges, group, tuple(f"v{i}" for i in range(n)))
