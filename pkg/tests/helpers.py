"""Shared builders and brute-force oracles for the test suite.

The oracles deliberately use different algorithmic principles than the
package: packings are solved by include/exclude recursion over an explicit
list of copies, matchings by recursion over the edge list, cycles by choosing
a support set and trying vertex orders.  Slow but transparently correct.
"""

from __future__ import annotations

from itertools import combinations, permutations

from cherry_ramsey.core import (
    ColorClassGraph,
    ColoredComplete,
    all_edges,
    edge_count,
    edge_index,
    graph_from_edges,
)

# === graph builders ===


def g_empty(n: int) -> ColorClassGraph:
    return graph_from_edges(n, [])


def g_path(n: int) -> ColorClassGraph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def g_cycle(n: int) -> ColorClassGraph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def g_complete(n: int) -> ColorClassGraph:
    return graph_from_edges(n, list(all_edges(n)))


def g_complete_bipartite(a: int, b: int) -> ColorClassGraph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def g_star(leaves: int) -> ColorClassGraph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def g_matching(pairs: int) -> ColorClassGraph:
    return graph_from_edges(2 * pairs, [(2 * i, 2 * i + 1) for i in range(pairs)])


def g_two_cliques(a: int, b: int) -> ColorClassGraph:
    edges = [(u, v) for u, v in all_edges(a)]
    edges += [(a + u, a + v) for u, v in all_edges(b)]
    return graph_from_edges(a + b, edges)


def random_graph_nm(n: int, m: int, rng) -> ColorClassGraph:
    """Uniform graph with exactly m edges (m clipped to the possible range)."""
    pool = list(all_edges(n))
    m = min(m, len(pool))
    return graph_from_edges(n, rng.sample(pool, m))


def random_graph_p(n: int, p: float, rng) -> ColorClassGraph:
    return graph_from_edges(n, [e for e in all_edges(n) if rng.random() < p])


def all_graphs(n: int):
    """Every labeled graph on n vertices, as edge subsets of K_n."""
    pool = list(all_edges(n))
    for mask in range(1 << len(pool)):
        yield graph_from_edges(n, [pool[i] for i in range(len(pool)) if mask >> i & 1])


def random_coloring(n: int, k: int, rng) -> ColoredComplete:
    return ColoredComplete(n, k, tuple(rng.randint(1, k) for _ in range(edge_count(n))))


def coloring_from_classes(n: int, k: int, classes: dict[int, list[tuple[int, int]]], default: int = 1) -> ColoredComplete:
    """Complete coloring where listed edges get their class color, rest default."""
    slots = [default] * edge_count(n)
    for color, edges in classes.items():
        for u, v in edges:
            slots[edge_index(u, v)] = color
    return ColoredComplete(n, k, tuple(slots))


# === structural helpers (independent of the package) ===


def degrees(g: ColorClassGraph) -> list[int]:
    return [g.adjacency[v].bit_count() for v in range(g.n_vertices)]


def is_connected(g: ColorClassGraph) -> bool:
    n = g.n_vertices
    if n <= 1:
        return True
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        m = g.adjacency[v] & ~seen
        while m:
            low = m & -m
            m ^= low
            seen |= low
            frontier.append(low.bit_length() - 1)
    return seen == (1 << n) - 1


def is_two_connected(g: ColorClassGraph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    n = g.n_vertices
    if n < 3 or not is_connected(g):
        return False
    for cut in range(n):
        rest = [v for v in range(n) if v != cut]
        seen = {rest[0]}
        frontier = [rest[0]]
        while frontier:
            v = frontier.pop()
            for w in range(n):
                if w != cut and w not in seen and g.adjacency[v] >> w & 1:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) != n - 1:
            return False
    return True


# === brute-force oracles ===


def _disjoint_family_max(masks: list[int], n: int, unit: int) -> int:
    """Largest disjoint subfamily, include/exclude over the explicit list."""
    masks = sorted(set(masks))
    best = 0

    def rec(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if i >= len(masks):
            return
        if size + (n - used.bit_count()) // unit <= best:
            return
        for j in range(i, len(masks)):
            if masks[j] & used == 0:
                rec(j + 1, used | masks[j], size + 1)
        return

    rec(0, 0, 0)
    return best


def brute_p3_packing(g: ColorClassGraph) -> int:
    n = g.n_vertices
    p3s = []
    for c in range(n):
        nb = [v for v in range(n) if g.adjacency[c] >> v & 1]
        for x, y in combinations(nb, 2):
            p3s.append((1 << c) | (1 << x) | (1 << y))
    return _disjoint_family_max(p3s, n, 3)


def brute_star_packing(g: ColorClassGraph, arity: int) -> int:
    n = g.n_vertices
    stars = []
    for c in range(n):
        nb = [v for v in range(n) if g.adjacency[c] >> v & 1]
        for leaves in combinations(nb, arity):
            m = 1 << c
            for w in leaves:
                m |= 1 << w
            stars.append(m)
    return _disjoint_family_max(stars, n, arity + 1)


def brute_matching(g: ColorClassGraph) -> int:
    edges = g.edges()

    def rec(i: int, used: int) -> int:
        best = 0
        for j in range(i, len(edges)):
            u, v = edges[j]
            m = (1 << u) | (1 << v)
            if m & used == 0:
                best = max(best, 1 + rec(j + 1, used | m))
        return best

    return rec(0, 0)


def brute_cycle_exists(g: ColorClassGraph, length: int) -> bool:
    n = g.n_vertices
    if length > n:
        return False
    for support in combinations(range(n), length):
        first = support[0]
        for order in permutations(support[1:]):
            seq = (first,) + order
            if all(g.has_edge(seq[i], seq[(i + 1) % length]) for i in range(length)):
                return True
    return False


def brute_longest_path_len(g: ColorClassGraph) -> int:
    n = g.n_vertices
    if n == 0:
        return 0
    best = 1

    def rec(u: int, visited: int, t: int) -> None:
        nonlocal best
        if t > best:
            best = t
        for w in range(n):
            if g.adjacency[u] >> w & 1 and not visited >> w & 1:
                rec(w, visited | (1 << w), t + 1)

    for s in range(n):
        rec(s, 1 << s, 1)
    return best
