"""Edge colorings of complete graphs and the structures we hunt inside them.

A coloring assigns one of k colors (1-based) to every edge of K_N; vertices
are 0-based.  Color 0 means "not assigned yet", which the search engine uses
for partial colorings.  Edges are stored in colex order, i.e. all edges inside
{0..m-1} come before any edge touching vertex m, so a prefix of the edge array
is itself a complete coloring of a smaller complete graph.

The on-disk format (.kcol) is a header line "N k" followed by one line
"u v c" per edge with u < v, in lexicographic (u, v) order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

UNSET = 0


class IncompleteColoring(Exception):
    """Raised when an operation needs every edge colored and some are not."""


class ParseError(Exception):
    """Raised on malformed .kcol input."""


def edge_index(u: int, v: int) -> int:
    """Colex index of the edge {u, v}, u < v: all of K_v precedes vertex v."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def edge_count(n: int) -> int:
    return n * (n - 1) // 2


def all_edges(n: int) -> Iterator[tuple[int, int]]:
    """Edges of K_n in colex order: (0,1), (0,2), (1,2), (0,3), ..."""
    for v in range(n):
        for u in range(v):
            yield (u, v)


class TargetKind(Enum):
    PATH_MATCHING_P3 = "P3"     # disjoint cherries (paths on 3 vertices)
    STAR_FOREST = "K1s"         # disjoint stars K_{1,s}
    CYCLE = "C"                 # a single cycle of given length
    MATCHING = "P2"             # disjoint edges


@dataclass(frozen=True)
class TargetSpec:
    """What must be avoided (or found) inside one color class.

    count is the number of disjoint copies, except for CYCLE where it is the
    cycle length.  star_arity is the s of K_{1,s} and must be given exactly
    for STAR_FOREST targets.
    """

    kind: TargetKind
    count: int
    star_arity: int | None = None

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("target count must be positive")
        if self.kind is TargetKind.CYCLE and self.count < 3:
            raise ValueError("cycle length must be at least 3")
        if self.kind is TargetKind.STAR_FOREST:
            if self.star_arity is None or self.star_arity < 1:
                raise ValueError("star forest target needs star_arity >= 1")
        elif self.star_arity is not None:
            raise ValueError("star_arity only makes sense for star forests")

    def describe(self) -> str:
        if self.kind is TargetKind.CYCLE:
            return f"C{self.count}"
        head = "" if self.count == 1 else str(self.count)
        if self.kind is TargetKind.STAR_FOREST:
            return f"{head}K1s{self.star_arity}"
        return f"{head}{self.kind.value}"


def parse_target(text: str) -> TargetSpec:
    """Parse a target written as <count>P3, <count>P2, C<n> or <count>K1s<s>.

    A missing count means one copy, so "P3" is a single cherry.
    """
    t = text.strip()
    if not t:
        raise ValueError("empty target")
    if t[0] in "Cc" and t[1:].isdigit():
        return TargetSpec(TargetKind.CYCLE, int(t[1:]))
    for tag, kind in (("P3", TargetKind.PATH_MATCHING_P3), ("P2", TargetKind.MATCHING)):
        if t.upper().endswith(tag):
            head = t[: -len(tag)]
            if head == "":
                return TargetSpec(kind, 1)
            if head.isdigit():
                return TargetSpec(kind, int(head))
            raise ValueError(f"bad target {text!r}")
    up = t.upper()
    if "K1S" in up:
        head, _, arity = up.partition("K1S")
        if arity.isdigit() and (head == "" or head.isdigit()):
            return TargetSpec(TargetKind.STAR_FOREST, int(head) if head else 1, int(arity))
    raise ValueError(f"bad target {text!r}")


def parse_target_list(text: str) -> tuple[TargetSpec, ...]:
    """Parse a comma-separated target list, one entry per color."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty target list")
    return tuple(parse_target(p) for p in parts)


@dataclass(frozen=True)
class Witness:
    """Vertex lists realizing copies of a target inside one color class.

    Cherries are triples (a, c, b): the path a-c-b with center c.  Stars are
    (center, leaf_1, ..., leaf_s).  A matching copy is an edge (u, v), u < v.
    A cycle is a single tuple listing the cyclic vertex order.
    """

    kind: TargetKind
    copies: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ColorClassGraph:
    """One color class as a plain graph, adjacency kept as vertex bitmasks."""

    n_vertices: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.adjacency) == self.n_vertices

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def n_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.n_vertices)) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for (u, v) in all_edges(self.n_vertices) if self.has_edge(u, v)]

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adjacency[v])


def bits(mask: int) -> list[int]:
    """Indices of the set bits of mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def graph_from_edges(n: int, edges) -> ColorClassGraph:
    adj = [0] * n
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad edge ({u}, {v}) for {n} vertices")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return ColorClassGraph(n, tuple(adj))


@dataclass(frozen=True)
class ColoredComplete:
    """An edge coloring of K_N with colors 1..k; 0 marks unset edges.

    Value type: instances are immutable after construction.  Anything that
    explores colorings incrementally works on its own arrays and only builds
    a ColoredComplete when handing a result back.
    """

    n_vertices: int
    n_colors: int
    colors: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n_vertices < 1:
            raise ValueError("need at least one vertex")
        if self.n_colors < 1:
            raise ValueError("need at least one color")
        m = edge_count(self.n_vertices)
        if self.colors == ():
            object.__setattr__(self, "colors", (UNSET,) * m)
        if len(self.colors) != m:
            raise ValueError(f"expected {m} edge slots, got {len(self.colors)}")
        for c in self.colors:
            if not (0 <= c <= self.n_colors):
                raise ValueError(f"color {c} out of range 1..{self.n_colors}")

    def color_of(self, u: int, v: int) -> int:
        if u == v or not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
            raise ValueError(f"bad vertex pair ({u}, {v})")
        return self.colors[edge_index(u, v)]

    def is_complete(self) -> bool:
        return UNSET not in self.colors

    def with_color(self, u: int, v: int, c: int) -> "ColoredComplete":
        """Copy of this coloring with one edge recolored (testing helper)."""
        if not (1 <= c <= self.n_colors):
            raise ValueError(f"color {c} out of range")
        slots = list(self.colors)
        slots[edge_index(u, v)] = c
        return ColoredComplete(self.n_vertices, self.n_colors, tuple(slots))


def new_coloring(n: int, k: int) -> ColoredComplete:
    """A fresh all-unset coloring of K_n with k available colors."""
    return ColoredComplete(n, k)


def from_edge_colors(n: int, k: int, assign) -> ColoredComplete:
    """Build a complete coloring from a callable (u, v) -> color."""
    slots = [UNSET] * edge_count(n)
    for u, v in all_edges(n):
        slots[edge_index(u, v)] = assign(u, v)
    return ColoredComplete(n, k, tuple(slots))


def color_class(c: ColoredComplete, i: int) -> ColorClassGraph:
    """The graph formed by the edges of color i.  Needs a complete coloring."""
    if not (1 <= i <= c.n_colors):
        raise ValueError(f"color {i} out of range 1..{c.n_colors}")
    if not c.is_complete():
        raise IncompleteColoring("coloring has unset edges")
    adj = [0] * c.n_vertices
    for u, v in all_edges(c.n_vertices):
        if c.colors[edge_index(u, v)] == i:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return ColorClassGraph(c.n_vertices, tuple(adj))


def serialize(c: ColoredComplete) -> str:
    """Render a complete coloring in the .kcol format (lex edge order)."""
    if not c.is_complete():
        raise IncompleteColoring("cannot serialize a partial coloring")
    lines = [f"{c.n_vertices} {c.n_colors}"]
    for u in range(c.n_vertices):
        for v in range(u + 1, c.n_vertices):
            lines.append(f"{u} {v} {c.colors[edge_index(u, v)]}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> ColoredComplete:
    """Parse a .kcol document; strict about exactly one line per edge."""
    rows = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not rows:
        raise ParseError("empty input")
    head = rows[0].split()
    if len(head) != 2:
        raise ParseError(f"bad header {rows[0]!r}")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad header {rows[0]!r}") from exc
    if n < 1 or k < 1:
        raise ParseError("header needs N >= 1 and k >= 1")
    m = edge_count(n)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, got {len(body)}")
    slots: list[int] = [UNSET] * m
    seen = [False] * m
    for ln in body:
        fields = ln.split()
        if len(fields) != 3:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            u, v, c = int(fields[0]), int(fields[1]), int(fields[2])
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"bad vertex pair ({u}, {v})")
        if u > v:
            raise ParseError(f"edge ({u}, {v}) not written with u < v")
        if not (1 <= c <= k):
            raise ParseError(f"color {c} out of range 1..{k}")
        idx = edge_index(u, v)
        if seen[idx]:
            raise ParseError(f"duplicate edge ({u}, {v})")
        seen[idx] = True
        slots[idx] = c
    return ColoredComplete(n, k, tuple(slots))


def witness_is_valid(c: ColoredComplete, color: int, target: TargetSpec, w: Witness) -> bool:
    """Re-check a witness against the coloring edge by edge.

    Verifies kind, copy count, vertex disjointness across copies, and that
    every edge each copy claims really has the stated color.
    """
    if w.kind is not target.kind:
        return False
    mono = lambda u, v: c.color_of(u, v) == color

    if target.kind is TargetKind.CYCLE:
        if len(w.copies) != 1:
            return False
        cyc = w.copies[0]
        if len(cyc) != target.count or len(set(cyc)) != len(cyc):
            return False
        return all(mono(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))

    if len(w.copies) != target.count:
        return False
    used: set[int] = set()
    for copy in w.copies:
        if len(set(copy)) != len(copy) or used & set(copy):
            return False
        used |= set(copy)
        if target.kind is TargetKind.PATH_MATCHING_P3:
            if len(copy) != 3:
                return False
            a, mid, b = copy
            if not (mono(a, mid) and mono(mid, b)):
                return False
        elif target.kind is TargetKind.STAR_FOREST:
            if len(copy) != 1 + (target.star_arity or 0):
                return False
            center = copy[0]
            if not all(mono(center, leaf) for leaf in copy[1:]):
                return False
        elif target.kind is TargetKind.MATCHING:
            if len(copy) != 2 or not mono(copy[0], copy[1]):
                return False
    return True
