"""Rainbow-triangle-free colorings and their part structure.

A coloring with no rainbow triangle decomposes: the vertices split into at
least two parts so that the edges between any two parts are monochromatic
and at most two colors appear between parts in total.  gallai_partition
recovers such a split by fixing a candidate color pair {a, b}, taking the
components left by the other colors as proto-parts, and merging any two
proto-parts whose cross edges are not uniform in a or b until everything is
consistent.

mono_star_or_proper_cycle settles the two-color base case used by the
extraction argument: every 2-coloring of a complete graph yields either a
vertex whose edges all share one color, or a properly colored even cycle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .core import (
    ColoredComplete,
    IncompleteColoring,
    TargetKind,
    TargetSpec,
    Witness,
    all_edges,
    edge_count,
    edge_index,
)
from .detect import contains_target


class NotGallai(Exception):
    """Raised when a rainbow triangle rules the requested analysis out."""


class TooSmall(Exception):
    """Raised when the coloring has too few vertices to decompose."""


class WrongColorCount(Exception):
    """Raised when an operation needs exactly two colors."""


class BoundNotMet(Exception):
    """Raised when the extraction guarantee does not apply at this size."""


class TheoremViolation(Exception):
    """Raised if a guaranteed monochromatic structure cannot be found."""


def find_rainbow_triangle(c: ColoredComplete) -> tuple[int, int, int] | None:
    """First triangle (lexicographic) whose three edges use three colors."""
    if not c.is_complete():
        raise IncompleteColoring("coloring has unset edges")
    colors = c.colors
    for u in range(c.n_vertices):
        for v in range(u + 1, c.n_vertices):
            cuv = colors[edge_index(u, v)]
            for w in range(v + 1, c.n_vertices):
                cuw = colors[edge_index(u, w)]
                if cuw == cuv:
                    continue
                cvw = colors[edge_index(v, w)]
                if cvw != cuv and cvw != cuw:
                    return (u, v, w)
    return None


def is_gallai(c: ColoredComplete) -> bool:
    return find_rainbow_triangle(c) is None


@dataclass(frozen=True)
class GallaiPartition:
    """A part structure: cross edges uniform per part pair, two colors total.

    parts are vertex tuples ordered by their smallest member; reduced lists
    (i, j, color) for part indices i < j.
    """

    parts: tuple[tuple[int, ...], ...]
    between_colors: tuple[int, ...]
    reduced: tuple[tuple[int, int, int], ...]

    def reduced_color(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        for a, b, col in self.reduced:
            if (a, b) == (i, j):
                return col
        raise KeyError((i, j))


def partition_is_valid(c: ColoredComplete, gp: GallaiPartition) -> bool:
    """Re-check every partition invariant directly against the coloring."""
    flat = [v for part in gp.parts for v in part]
    if sorted(flat) != list(range(c.n_vertices)) or len(gp.parts) < 2:
        return False
    if any(part != tuple(sorted(part)) for part in gp.parts):
        return False
    if len(gp.between_colors) > 2:
        return False
    seen_pairs = set()
    for i, j, col in gp.reduced:
        if not (0 <= i < j < len(gp.parts)) or (i, j) in seen_pairs:
            return False
        seen_pairs.add((i, j))
        if col not in gp.between_colors:
            return False
        if any(c.color_of(u, v) != col for u in gp.parts[i] for v in gp.parts[j]):
            return False
    p = len(gp.parts)
    return len(seen_pairs) == p * (p - 1) // 2


def _pair_partition(c: ColoredComplete, a: int, b: int):
    """Proto-parts from the {a, b} residue, merged to cross-uniformity."""
    n = c.n_vertices
    colors = c.colors
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    edges = list(all_edges(n))
    for u, v in edges:
        if colors[edge_index(u, v)] not in (a, b):
            union(u, v)
    while True:
        cross: dict[tuple[int, int], int] = {}
        bad: set[tuple[int, int]] = set()
        for u, v in edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            key = (min(ru, rv), max(ru, rv))
            col = colors[edge_index(u, v)]
            if col != a and col != b:
                bad.add(key)
            prev = cross.setdefault(key, col)
            if prev != col:
                bad.add(key)
        if not bad:
            break
        for x, y in bad:
            union(x, y)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    parts = tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))
    if len(parts) < 2:
        return None
    root_to_idx = {part[0]: i for i, part in enumerate(parts)}
    reduced = []
    used = set()
    for (ru, rv), col in sorted(cross.items()):
        i, j = root_to_idx[find(ru)], root_to_idx[find(rv)]
        reduced.append((min(i, j), max(i, j), col))
        used.add(col)
    return GallaiPartition(parts, tuple(sorted(used)), tuple(sorted(reduced)))


def gallai_partition(c: ColoredComplete) -> GallaiPartition:
    """Largest part structure over all color pairs (ties: smallest pair).

    Raises NotGallai on a rainbow triangle and TooSmall below two vertices.
    """
    if c.n_vertices < 2:
        raise TooSmall("need at least two vertices to split")
    rainbow = find_rainbow_triangle(c)
    if rainbow is not None:
        raise NotGallai(f"rainbow triangle {rainbow}")
    best: GallaiPartition | None = None
    for a in range(1, c.n_colors + 1):
        for b in range(a, c.n_colors + 1):
            gp = _pair_partition(c, a, b)
            if gp is not None and (best is None or len(gp.parts) > len(best.parts)):
                best = gp
    if best is None:
        raise TheoremViolation("no color pair splits this rainbow-triangle-free coloring")
    return best


class OutcomeKind(Enum):
    MONO_STAR = "mono_star"
    PROPER_CYCLE = "proper_cycle"


@dataclass(frozen=True)
class ProperOutcome:
    """Either a spanning monochromatic star or a properly colored even cycle."""

    kind: OutcomeKind
    center: int | None = None
    leaves: tuple[int, ...] = ()
    color: int | None = None
    cycle: tuple[int, ...] = ()


def outcome_is_valid(c: ColoredComplete, out: ProperOutcome) -> bool:
    n = c.n_vertices
    if out.kind is OutcomeKind.MONO_STAR:
        if out.center is None or out.color is None:
            return False
        if sorted((out.center, *out.leaves)) != list(range(n)):
            return False
        return all(c.color_of(out.center, leaf) == out.color for leaf in out.leaves)
    seq = out.cycle
    if len(seq) < 4 or len(seq) % 2 or len(set(seq)) != len(seq):
        return False
    ring = [c.color_of(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
    return all(ring[i] != ring[(i + 1) % len(ring)] for i in range(len(ring)))


def _longest_properly_colored_path(c: ColoredComplete) -> list[int]:
    """Exact longest path whose consecutive edges never repeat a color."""
    n = c.n_vertices
    best: list[int] = [0]
    cur: list[int] = []

    def rec(u: int, visited: int, last: int) -> bool:
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
            if len(best) == n:
                return True
        if len(cur) + n - visited.bit_count() <= len(best):
            return False
        for w in range(n):
            if visited >> w & 1:
                continue
            col = c.color_of(u, w)
            if col == last:
                continue
            cur.append(w)
            if rec(w, visited | (1 << w), col):
                return True
            cur.pop()
        return False

    for start in range(n):
        cur = [start]
        if rec(start, 1 << start, 0):
            break
    return best


def _middle_pivot_cycle(c: ColoredComplete, p: list[int], hi: int) -> tuple[int, ...]:
    """Close a properly colored cycle through an off-color chord from p[0].

    Premises: the chord p[0]-p[hi] has the color of the path's first edge,
    and p[0] must have an off-color edge into p[2..hi-1] (it has no
    monochromatic star and everything else at p[0] carries the first color).
    """
    e1 = c.color_of(p[0], p[1])
    for j in range(2, hi):
        if c.color_of(p[0], p[j]) == e1:
            continue
        if c.color_of(p[j], p[j + 1]) == e1:
            return (p[0], *p[j:hi + 1])
        return tuple(p[:j + 1])
    raise AssertionError("off-color chord guaranteed by the maximality argument")


def mono_star_or_proper_cycle(c: ColoredComplete) -> ProperOutcome:
    """Two-color dichotomy: a spanning one-colored star or a proper even cycle.

    Follows the extremal-path argument: take a longest properly colored path;
    non-extendability pins the colors at both ends, and one of finitely many
    chords closes an alternating cycle.
    """
    if c.n_colors != 2:
        raise WrongColorCount(f"need exactly 2 colors, got {c.n_colors}")
    n = c.n_vertices
    if n < 2:
        raise TooSmall("need at least two vertices")
    if not c.is_complete():
        raise IncompleteColoring("coloring has unset edges")

    for v in range(n):
        colors = {c.color_of(v, u) for u in range(n) if u != v}
        if len(colors) == 1:
            leaves = tuple(u for u in range(n) if u != v)
            return ProperOutcome(OutcomeKind.MONO_STAR, center=v, leaves=leaves,
                                 color=colors.pop())

    p = _longest_properly_colored_path(c)
    t = len(p)
    assert t >= 4, "no monochromatic star forces a properly colored path on 4 vertices"
    e1 = c.color_of(p[0], p[1])
    e_last = c.color_of(p[-2], p[-1])

    if e1 != e_last:
        if c.color_of(p[0], p[-1]) != e1:
            p.reverse()
            e1 = c.color_of(p[0], p[1])
        cycle = _middle_pivot_cycle(c, p, hi=t - 1)
    elif c.color_of(p[0], p[-1]) != e1:
        cycle = tuple(p)
    elif t == 4:
        # both end edges and both long chords share e1's color would make a
        # monochromatic star at an endpoint, so the short chords alternate
        cycle = (p[0], p[2], p[3], p[1])
    elif c.color_of(p[0], p[-2]) == e1:
        cycle = _middle_pivot_cycle(c, p, hi=t - 2)
    elif c.color_of(p[1], p[-1]) == e1:
        cycle = _middle_pivot_cycle(c, list(reversed(p)), hi=t - 2)
    else:
        cycle = (p[0], p[1], p[-1], p[-2])
    return ProperOutcome(OutcomeKind.PROPER_CYCLE, cycle=cycle)


def random_gallai(n: int, k: int, seed: int) -> ColoredComplete:
    """Seeded rainbow-triangle-free coloring by recursive substitution.

    Each block either becomes a monochromatic clique or splits into 2..5
    parts whose cross edges are filled from a two-color reduced pattern;
    parts then recurse with the full palette.  Deterministic in the seed.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    rng = random.Random(seed)
    slots = [0] * edge_count(n)

    def fill(vs: list[int], depth: int) -> None:
        if len(vs) <= 1:
            return
        if k == 1 or len(vs) == 2 or rng.random() < min(0.85, 0.2 + 0.18 * depth):
            col = rng.randint(1, k)
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    slots[edge_index(vs[i], vs[j])] = col
            return
        p = rng.randint(2, min(len(vs), 5))
        order = vs[:]
        rng.shuffle(order)
        cuts = sorted(rng.sample(range(1, len(vs)), p - 1))
        bounds = [0, *cuts, len(vs)]
        parts = [order[bounds[i]:bounds[i + 1]] for i in range(p)]
        a, b = rng.sample(range(1, k + 1), 2)
        for i in range(p):
            for j in range(i + 1, p):
                col = a if rng.random() < 0.5 else b
                for u in parts[i]:
                    for v in parts[j]:
                        slots[edge_index(u, v)] = col
        for part in parts:
            fill(part, depth + 1)

    fill(list(range(n)), 0)
    return ColoredComplete(n, k, tuple(slots))


def gallai_extract(c: ColoredComplete, targets) -> tuple[int, Witness]:
    """Monochromatic cherry family promised by the rainbow-free bound.

    targets[i] is the cherry-count target of color i+1.  Requires
    N >= 2*max(n_i) + sum(n_i) - k + 1 and a rainbow-triangle-free coloring;
    under those premises some color must contain its family, so failure to
    find one raises TheoremViolation.
    """
    targets = tuple(targets)
    if len(targets) != c.n_colors:
        raise ValueError(f"expected {c.n_colors} targets, got {len(targets)}")
    if any(t.kind is not TargetKind.PATH_MATCHING_P3 for t in targets):
        raise ValueError("extraction handles cherry targets only")
    counts = [t.count for t in targets]
    bound = 2 * max(counts) + sum(counts) - len(counts) + 1
    if c.n_vertices < bound:
        raise BoundNotMet(f"need at least {bound} vertices, have {c.n_vertices}")
    if not is_gallai(c):
        raise NotGallai("coloring has a rainbow triangle")
    for i in range(1, c.n_colors + 1):
        w = contains_target(c, i, targets[i - 1])
        if w is not None:
            return i, w
    raise TheoremViolation(
        f"no color met its cherry target in a rainbow-free coloring on {c.n_vertices} vertices")
