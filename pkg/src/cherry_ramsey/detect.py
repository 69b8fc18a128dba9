"""Exact detectors for the structures the Ramsey arguments care about.

Everything here is exact, not heuristic: packing numbers come from branch
and bound, matchings from Edmonds' blossom algorithm, cycle and path queries
from pruned backtracking.  Graphs are small (tens of vertices), so worst-case
exponential searches with good bounds are the right trade.

All detectors are deterministic: branching always picks the lowest-indexed
vertex first, so returned witnesses are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    ColorClassGraph,
    ColoredComplete,
    TargetKind,
    TargetSpec,
    Witness,
    bits,
    color_class,
)


@dataclass(frozen=True)
class PackingResult:
    """Exact packing number together with one realizing family."""

    size: int
    witness: Witness


# === internal engines on raw bitmask adjacency ===
#
# avail is a bitmask of usable vertices; adj never contains self-loops.
# These are shared with the search module, which runs them on its own
# incrementally maintained adjacency arrays.


def _live_count(adj, avail: int) -> int:
    # vertices of avail with at least one neighbor in avail
    count = 0
    m = avail
    while m:
        low = m & -m
        m ^= low
        if adj[low.bit_length() - 1] & avail:
            count += 1
    return count


def _lowest_live(adj, avail: int) -> int:
    m = avail
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if adj[v] & avail:
            return v
        m ^= low
    return -1


def _p3_solver(adj, cap: int | None):
    """Size-only cherry packing solver over available-set masks.

    Branches on the lowest non-isolated vertex v: either v joins some cherry
    (enumerated by 3-vertex support sets, so a triangle is tried once, not
    three times) or v is dropped.  Subproblems are keyed by the available
    set and memoized, which keeps the drop chains from re-solving the same
    residual graph.  Any value below cap is the exact maximum; with cap the
    recursion stops refining once cap copies are known, so stored values
    then only certify "at least cap".
    """
    memo: dict[int, int] = {}

    def solve(a: int) -> int:
        got = memo.get(a)
        if got is not None:
            return got
        v = _lowest_live(adj, a)
        if v < 0 or _live_count(adj, a) < 3:
            memo[a] = 0
            return 0
        vbit = 1 << v
        nv = adj[v] & a
        best = 0
        # v as center: both leaves adjacent to v
        rest_x = nv
        while rest_x:
            xbit = rest_x & -rest_x
            rest_x ^= xbit
            rest_y = rest_x
            while rest_y:
                ybit = rest_y & -rest_y
                rest_y ^= ybit
                s = solve(a & ~(vbit | xbit | ybit)) + 1
                if s > best:
                    best = s
                    if cap is not None and best >= cap:
                        memo[a] = best
                        return best
        # v as leaf: center x, far leaf y not adjacent to v (else the same
        # support set was already tried above)
        rest_x = nv
        while rest_x:
            xbit = rest_x & -rest_x
            rest_x ^= xbit
            x = xbit.bit_length() - 1
            far = adj[x] & a & ~nv & ~vbit
            while far:
                ybit = far & -far
                far ^= ybit
                s = solve(a & ~(vbit | xbit | ybit)) + 1
                if s > best:
                    best = s
                    if cap is not None and best >= cap:
                        memo[a] = best
                        return best
        s = solve(a & ~vbit)
        if s > best:
            best = s
        memo[a] = best
        return best

    return solve


def _pack_p3(adj, avail: int, cap: int | None):
    """Maximum number of vertex-disjoint cherries inside avail.

    Returns (size, triples) with len(triples) == size; with cap both are
    clamped to cap, which is all any caller asks of capped runs.  The
    witness is rebuilt by walking the solver's choices back down.
    """
    solve = _p3_solver(adj, cap)
    size = solve(avail)
    if cap is not None and size > cap:
        size = cap
    triples = []
    a = avail
    need = size
    while need > 0:
        v = _lowest_live(adj, a)
        vbit = 1 << v
        nv = adj[v] & a
        step = None
        rest_x = nv
        while step is None and rest_x:
            xbit = rest_x & -rest_x
            rest_x ^= xbit
            x = xbit.bit_length() - 1
            rest_y = rest_x
            while rest_y:
                ybit = rest_y & -rest_y
                rest_y ^= ybit
                sub = a & ~(vbit | xbit | ybit)
                if solve(sub) >= need - 1:
                    step = ((x, v, ybit.bit_length() - 1), sub)
                    break
            far = adj[x] & a & ~nv & ~vbit
            while step is None and far:
                ybit = far & -far
                far ^= ybit
                sub = a & ~(vbit | xbit | ybit)
                if solve(sub) >= need - 1:
                    step = ((v, x, ybit.bit_length() - 1), sub)
        if step is None:
            a &= ~vbit  # v sits in no optimal copy here
            continue
        triples.append(step[0])
        a = step[1]
        need -= 1
    return size, tuple(triples)


def _pack_stars(adj, avail: int, arity: int, cap: int | None):
    """Maximum number of vertex-disjoint K_{1,arity} inside avail."""
    best_size = 0
    best: tuple = ()
    chosen: list[tuple[int, ...]] = []

    def rec(a: int) -> bool:
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = tuple(chosen)
            if cap is not None and best_size >= cap:
                return True
        v = _lowest_live(adj, a)
        if v < 0:
            return False
        if len(chosen) + _live_count(adj, a) // (arity + 1) <= best_size:
            return False
        nv = adj[v] & a
        nb = bits(nv)
        if len(nb) >= arity:
            for leaves in combinations(nb, arity):
                rm = 1 << v
                for w in leaves:
                    rm |= 1 << w
                chosen.append((v, *leaves))
                if rec(a & ~rm):
                    return True
                chosen.pop()
        if arity >= 2:
            # v as a leaf of a star centered at a neighbor x; skip leaf sets
            # fully inside N(v), those supports were tried with center v
            for x in nb:
                pool = bits(adj[x] & a & ~(1 << v))
                if len(pool) < arity - 1:
                    continue
                for others in combinations(pool, arity - 1):
                    om = 0
                    for w in others:
                        om |= 1 << w
                    if om & ~nv == 0:
                        continue
                    chosen.append((x, v, *others))
                    if rec(a & ~(om | (1 << v) | (1 << x))):
                        return True
                    chosen.pop()
        return rec(a & ~(1 << v))

    rec(avail)
    return best_size, best


def _blossom_matching(adj, n: int) -> list[int]:
    """Edmonds' maximum matching; returns the mate array (-1 = unmatched)."""
    nbr = [bits(adj[v]) for v in range(n)]
    match = [-1] * n
    for v in range(n):  # greedy seed
        if match[v] < 0:
            for u in nbr[v]:
                if match[u] < 0:
                    match[v] = u
                    match[u] = v
                    break
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        x = a
        while True:
            x = base[x]
            on_path[x] = True
            if match[x] < 0:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if on_path[y]:
                return y
            y = parent[match[y]]

    def find_path(root: int) -> int:
        for v in range(n):
            parent[v] = -1
            base[v] = v
        in_tree = [False] * n
        in_tree[root] = True
        queue = [root]
        head = 0

        def mark_blossom(v: int, b: int, child: int, flag: list[bool]) -> None:
            while base[v] != b:
                flag[base[v]] = True
                flag[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while head < len(queue):
            v = queue[head]
            head += 1
            for to in nbr[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    # odd cycle: contract the blossom
                    b = lca(v, to)
                    flag = [False] * n
                    mark_blossom(v, b, to, flag)
                    mark_blossom(to, b, v, flag)
                    for u in range(n):
                        if flag[base[u]]:
                            base[u] = b
                            if not in_tree[u]:
                                in_tree[u] = True
                                queue.append(u)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        return to  # augmenting path found
                    in_tree[match[to]] = True
                    queue.append(match[to])
        return -1

    for root in range(n):
        if match[root] < 0:
            end = find_path(root)
            if end < 0:
                continue
            while end >= 0:  # flip the path back to the root
                pv = parent[end]
                nxt = match[pv]
                match[end] = pv
                match[pv] = end
                end = nxt
    return match


def _find_cycle(adj, n: int, length: int):
    """Lowest-anchored cycle of exactly `length` vertices, or None."""
    full = (1 << n) - 1
    for anchor in range(n - length + 1):
        allowed = full & ~((1 << (anchor + 1)) - 1)  # vertices above the anchor
        if (adj[anchor] & allowed).bit_count() < 2:
            continue
        path = [anchor]
        found = _extend_cycle(adj, anchor, anchor, 1 << anchor, allowed, length, path)
        if found:
            return tuple(path)
    return None


def _extend_cycle(adj, anchor, u, visited, allowed, length, path) -> bool:
    if len(path) == length:
        return bool(adj[u] >> anchor & 1)
    rest = allowed & ~visited
    if adj[anchor] & rest == 0:
        return False  # nothing left that could close the cycle
    reach = _reach_set(adj, 1 << u, rest)
    if len(path) + (reach & rest).bit_count() < length:
        return False
    if adj[anchor] & reach & rest == 0:
        return False
    for w in bits(adj[u] & rest):
        path.append(w)
        if _extend_cycle(adj, anchor, w, visited | (1 << w), allowed, length, path):
            return True
        path.pop()
    return False


def _reach_set(adj, start: int, within: int) -> int:
    # vertices reachable from start using only intermediate vertices of within
    r = start
    while True:
        grown = r
        m = r
        while m:
            low = m & -m
            m ^= low
            grown |= adj[low.bit_length() - 1] & within
        if grown == r:
            return r
        r = grown


def _cycle_through_edge(adj, a: int, b: int, length: int, avail: int) -> bool:
    """Does some cycle of exactly `length` vertices use the edge {a, b}?"""
    if length < 3:
        return False
    path_visited = (1 << a) | (1 << b)

    def rec(u: int, visited: int, t: int) -> bool:
        if t == length:
            return bool(adj[u] >> a & 1)
        rest = avail & ~visited
        reach = _reach_set(adj, 1 << u, rest)
        if t + (reach & rest).bit_count() < length:
            return False
        if adj[a] & reach & rest == 0:
            return False
        for w in bits(adj[u] & rest):
            if rec(w, visited | (1 << w), t + 1):
                return True
        return False

    return rec(b, path_visited, 2)


# === public detectors ===


def max_p3_packing(g: ColorClassGraph, cap: int | None = None) -> PackingResult:
    """Exact maximum vertex-disjoint cherry packing of g.

    With cap the search stops as soon as cap copies are in hand, so the
    reported size is min(cap, true maximum).
    """
    size, triples = _pack_p3(g.adjacency, (1 << g.n_vertices) - 1, cap)
    if cap is not None and size > cap:
        size, triples = cap, triples[:cap]
    return PackingResult(size, Witness(TargetKind.PATH_MATCHING_P3, triples))


def max_star_packing(g: ColorClassGraph, arity: int, cap: int | None = None) -> PackingResult:
    """Exact maximum vertex-disjoint K_{1,arity} packing of g."""
    if arity < 1:
        raise ValueError("star arity must be at least 1")
    size, stars = _pack_stars(g.adjacency, (1 << g.n_vertices) - 1, arity, cap)
    return PackingResult(size, Witness(TargetKind.STAR_FOREST, stars))


def max_matching(g: ColorClassGraph) -> PackingResult:
    """Maximum matching of g via blossom contraction."""
    match = _blossom_matching(g.adjacency, g.n_vertices)
    pairs = tuple((v, match[v]) for v in range(g.n_vertices) if match[v] > v)
    return PackingResult(len(pairs), Witness(TargetKind.MATCHING, pairs))


def is_matching(g: ColorClassGraph) -> bool:
    """True when every vertex has degree at most one."""
    return all(g.adjacency[v].bit_count() <= 1 for v in range(g.n_vertices))


def has_cycle_length(g: ColorClassGraph, length: int) -> Witness | None:
    """A cycle on exactly `length` vertices, if one exists."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if length > g.n_vertices:
        return None
    cyc = _find_cycle(g.adjacency, g.n_vertices, length)
    if cyc is None:
        return None
    return Witness(TargetKind.CYCLE, (cyc,))


def longest_path(g: ColorClassGraph) -> tuple[int, ...]:
    """A longest path of g as a vertex sequence (exact, backtracking)."""
    n = g.n_vertices
    if n == 0:
        return ()
    adj = g.adjacency
    full = (1 << n) - 1
    best: list[int] = [0]
    cur: list[int] = []

    def rec(u: int, visited: int) -> bool:
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
            if len(best) == n:
                return True
        rest = full & ~visited
        reach = _reach_set(adj, 1 << u, rest)
        if len(cur) + (reach & rest).bit_count() <= len(best):
            return False
        for w in bits(adj[u] & rest):
            cur.append(w)
            if rec(w, visited | (1 << w)):
                return True
            cur.pop()
        return False

    for start in range(n):
        cur = [start]
        if rec(start, 1 << start):
            break
    return tuple(best)


def contains_target(c: ColoredComplete, color: int, target: TargetSpec) -> Witness | None:
    """Witness for the target inside the given color class, or None.

    The witness is trimmed to exactly target.count copies (for a cycle, the
    one cycle of the requested length).
    """
    g = color_class(c, color)
    if target.kind is TargetKind.PATH_MATCHING_P3:
        r = max_p3_packing(g, cap=target.count)
        if r.size >= target.count:
            return Witness(r.witness.kind, r.witness.copies[: target.count])
        return None
    if target.kind is TargetKind.STAR_FOREST:
        assert target.star_arity is not None
        r = max_star_packing(g, target.star_arity, cap=target.count)
        if r.size >= target.count:
            return Witness(r.witness.kind, r.witness.copies[: target.count])
        return None
    if target.kind is TargetKind.MATCHING:
        r = max_matching(g)
        if r.size >= target.count:
            return Witness(r.witness.kind, r.witness.copies[: target.count])
        return None
    if target.kind is TargetKind.CYCLE:
        return has_cycle_length(g, target.count)
    raise AssertionError(f"unhandled target kind {target.kind}")
