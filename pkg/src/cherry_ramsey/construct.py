"""Extremal colorings certifying the lower bounds.

Three of the constructions share one shape: color a base clique, then grow
it block by block, where every edge leaving a new vertex (to anything older,
or inside its own block) takes the block's color.  Since each added color
class is covered by its few new vertices, it can never hold many disjoint
copies of anything.  Vertices are numbered base first, then blocks in color
order, so the colorings are reproducible.

The fourth is the sporadic 10-vertex six-coloring: two disjoint K_5 in the
first color, and the bipartite edges between them split into five parallel
perfect matchings, one per remaining color.
"""

from __future__ import annotations

from .core import ColoredComplete, from_edge_colors


class InvalidArity(Exception):
    """Raised when a one-factorization of an odd clique is requested."""


class InvalidOrdering(Exception):
    """Raised when the first cherry count is not the largest."""


def one_factorization(m: int) -> list[list[tuple[int, int]]]:
    """Partition the edges of K_m (m even) into m-1 perfect matchings.

    Circle method: vertex m-1 sits at the hub; in round r it pairs with r,
    and the remaining vertices pair off symmetrically around r on the circle
    Z_{m-1}.
    """
    if m < 2 or m % 2:
        raise InvalidArity(f"need an even number of vertices >= 2, got {m}")
    rounds = []
    for r in range(m - 1):
        pairs = [(r, m - 1)]
        for j in range(1, m // 2):
            a = (r - j) % (m - 1)
            b = (r + j) % (m - 1)
            pairs.append((min(a, b), max(a, b)))
        rounds.append(sorted(pairs))
    return rounds


def _check_counts(k: int, counts) -> tuple[int, ...]:
    counts = tuple(counts)
    if k < 1:
        raise ValueError("need at least one color")
    if len(counts) != k:
        raise ValueError(f"expected {k} copy counts, got {len(counts)}")
    if any(c < 1 for c in counts):
        raise ValueError("copy counts must be positive")
    return counts


def _grown_coloring(k: int, base_n: int, base_color, blocks) -> ColoredComplete:
    # blocks: (size, color) in addition order; an edge takes the block color
    # of its later-added endpoint
    owner: list[int] = []
    for size, color in blocks:
        owner.extend([color] * size)

    def assign(u: int, v: int) -> int:
        hi = max(u, v)
        if hi >= base_n:
            return owner[hi - base_n]
        return base_color(u, v)

    return from_edge_colors(base_n + len(owner), k, assign)


def matching_base_construction(k: int, counts) -> ColoredComplete:
    """Coloring of K_{2*ceil(k/2) + sum(n_i) - k} with no n_i cherries in color i.

    The base is a one-factorized clique on k + (k mod 2) vertices, one color
    per matching, so no color sees two base edges at a shared vertex.  Then
    n_i - 1 extra vertices per color i soak up every potential cherry of that
    color.
    """
    counts = _check_counts(k, counts)
    base_n = k + (k % 2)
    rounds = one_factorization(base_n)
    base_of: dict[tuple[int, int], int] = {}
    for r, matching in enumerate(rounds):
        for u, v in matching:
            base_of[(u, v)] = r + 1  # k odd: k rounds; k even: k-1 rounds

    blocks = [(counts[i] - 1, i + 1) for i in range(k)]
    return _grown_coloring(k, base_n, lambda u, v: base_of[(min(u, v), max(u, v))], blocks)


def gallai_nested_construction(k: int, counts) -> ColoredComplete:
    """Rainbow-triangle-free coloring of K_{2*n_1 + sum(n_i) - k}.

    Needs the first count to be the largest (InvalidOrdering otherwise).
    Starts from K_{3*n_1 - 1} in color 1, one vertex short of n_1 disjoint
    cherries, then grows one block per further color.  Substitution keeps
    every triangle within two colors.
    """
    counts = _check_counts(k, counts)
    if counts[0] != max(counts):
        raise InvalidOrdering(f"first count {counts[0]} is not the maximum of {counts}")
    base_n = 3 * counts[0] - 1
    blocks = [(counts[i] - 1, i + 1) for i in range(1, k)]
    return _grown_coloring(k, base_n, lambda u, v: 1, blocks)


def cycle_vs_stars_construction(n: int, k: int, tail) -> ColoredComplete:
    """Coloring of K_{n-1+sum(n_i - 1)} with no C_n in color 1 and no n_i
    disjoint stars in color i >= 2.

    tail lists (n_2, ..., n_k); the star arity never matters because color i
    consists only of edges covered by its n_i - 1 block vertices.
    """
    if n < 3:
        raise ValueError(f"cycle length must be at least 3, got {n}")
    tail = tuple(tail)
    if k != len(tail) + 1:
        raise ValueError(f"expected {k - 1} tail counts, got {len(tail)}")
    if any(c < 1 for c in tail):
        raise ValueError("copy counts must be positive")
    blocks = [(tail[i] - 1, i + 2) for i in range(k - 1)]
    return _grown_coloring(k, n - 1, lambda u, v: 1, blocks)


def k10_six_coloring() -> ColoredComplete:
    """The sporadic six-coloring of K_10 with no 3 disjoint cherries in color
    1 and no cherry at all in colors 2..6.

    Vertices 0..4 and 5..9 each induce a K_5 of color 1.  The bipartite edges
    split into the five shift matchings {(u, 5 + (u+t) mod 5)}; shift t is
    colored t+2, so each of colors 2..6 is a perfect matching.
    """

    def assign(u: int, v: int) -> int:
        u, v = min(u, v), max(u, v)
        if v < 5 or u >= 5:
            return 1
        t = (v - 5 - u) % 5
        return t + 2

    return from_edge_colors(10, 6, assign)
