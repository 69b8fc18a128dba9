"""Exhaustive search for good colorings and exact small Ramsey numbers.

A coloring is good for an instance when no color class contains its target
(and, in rainbow-free mode, the coloring has no rainbow triangle).  The
engine assigns edges in colex order, so every prefix is a full coloring of a
smaller complete graph; a new edge can therefore only complete structures
through itself, which keeps the containment checks incremental and exact.

Pruning, all of it lossless:
  * single-copy targets reduce to degree caps (a lone cherry is exactly a
    vertex of degree 2, a lone K_{1,s} a vertex of degree s, a lone edge any
    edge at all), maintained in O(1);
  * multi-copy targets run the exact packing engines restricted to copies
    through the new edge;
  * colors with identical targets are interchangeable, so each may first
    appear only after the equal color before it has appeared;
  * rainbow-free mode rejects an assignment as soon as it closes a rainbow
    triangle.

Everything is deterministic: fixed edge order, colors tried ascending, and
nodes_explored counts recursion entries, so repeated runs agree exactly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from .core import ColoredComplete, TargetKind, TargetSpec
from .detect import (
    _blossom_matching,
    _cycle_through_edge,
    _p3_solver,
    _pack_stars,
    contains_target,
)
from .gallai import is_gallai


class InconclusiveSearch(Exception):
    """Raised when compute_ramsey runs out of node budget before an answer."""


@dataclass(frozen=True)
class RamseyInstance:
    """One target per color, plus the rainbow-free restriction flag."""

    targets: tuple[TargetSpec, ...]
    gallai_only: bool = False

    def __post_init__(self) -> None:
        if not self.targets:
            raise ValueError("need at least one target")
        object.__setattr__(self, "targets", tuple(self.targets))

    @property
    def k(self) -> int:
        return len(self.targets)

    def describe(self) -> str:
        body = ",".join(t.describe() for t in self.targets)
        return f"GR({body})" if self.gallai_only else f"R({body})"


class SearchStatus(Enum):
    WITNESS_FOUND = "witness_found"
    EXHAUSTED_NONE = "exhausted_none"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    witness: ColoredComplete | None
    nodes_explored: int
    elapsed: float


def _p3_through_edge(adj, u: int, v: int, count: int, full: int) -> bool:
    # cherries using the fresh edge {u, v}: third vertex at u or at v
    for center, other in ((u, v), (v, u)):
        third = adj[center] & ~(1 << other)
        while third:
            low = third & -third
            third ^= low
            w = low.bit_length() - 1
            if count == 1:
                return True
            rest = full & ~((1 << u) | (1 << v) | (1 << w))
            if _p3_solver(adj, count - 1)(rest) >= count - 1:
                return True
    return False


def exists_good_coloring(n: int, inst: RamseyInstance, budget: int | None = None) -> SearchOutcome:
    """Search K_n for a coloring avoiding every target of the instance.

    Returns WITNESS_FOUND with the first good coloring in the canonical
    order, EXHAUSTED_NONE if none exists, or BUDGET_EXCEEDED once more than
    `budget` nodes were entered.
    """
    t0 = time.perf_counter()
    targets = inst.targets
    k = len(targets)
    edges = [(u, v) for v in range(n) for u in range(v)]
    n_edges = len(edges)
    full = (1 << n) - 1
    colors = [0] * n_edges
    adj = [[0] * n for _ in range(k + 1)]
    deg = [[0] * n for _ in range(k + 1)]
    ecount = [0] * (k + 1)

    # interchangeable colors: first use must follow index order
    pred = [0] * (k + 1)
    last_of: dict[TargetSpec, int] = {}
    for c, t in enumerate(targets, start=1):
        pred[c] = last_of.get(t, 0)
        last_of[t] = c

    # single-copy targets collapse to a max-degree condition
    cap: list[int | None] = [None] * (k + 1)
    for c, t in enumerate(targets, start=1):
        if t.count == 1 and t.kind is TargetKind.PATH_MATCHING_P3:
            cap[c] = 1
        elif t.count == 1 and t.kind is TargetKind.STAR_FOREST:
            cap[c] = (t.star_arity or 1) - 1
        elif t.count == 1 and t.kind is TargetKind.MATCHING:
            cap[c] = 0

    gallai_only = inst.gallai_only
    nodes = 0
    witness: ColoredComplete | None = None
    over_budget = False

    def completes_target(u: int, v: int, c: int) -> bool:
        # the class adjacency already includes the fresh edge {u, v}
        t = targets[c - 1]
        if t.kind is TargetKind.PATH_MATCHING_P3:
            return _p3_through_edge(adj[c], u, v, t.count, full)
        if t.kind is TargetKind.STAR_FOREST:
            return _pack_stars(adj[c], full, t.star_arity, t.count)[0] >= t.count
        if t.kind is TargetKind.MATCHING:
            match = _blossom_matching(adj[c], n)
            return sum(1 for x in match if x >= 0) // 2 >= t.count
        if ecount[c] < t.count:
            return False
        return _cycle_through_edge(adj[c], u, v, t.count, full)

    def rec(ei: int) -> bool:
        nonlocal nodes, witness, over_budget
        nodes += 1
        if budget is not None and nodes > budget:
            over_budget = True
            return True
        if ei == n_edges:
            witness = ColoredComplete(n, k, tuple(colors))
            return True
        u, v = edges[ei]
        iu = u * (u - 1) // 2
        iv = v * (v - 1) // 2
        for c in range(1, k + 1):
            if ecount[c] == 0 and pred[c] and ecount[pred[c]] == 0:
                continue  # an identical earlier color is still unused
            dcap = cap[c]
            if dcap is not None and (deg[c][u] >= dcap or deg[c][v] >= dcap):
                continue
            if gallai_only:
                rainbow = False
                for w in range(u):
                    a = colors[iu + w]
                    b = colors[iv + w]
                    if a != b and a != c and b != c:
                        rainbow = True
                        break
                if rainbow:
                    continue
            colors[ei] = c
            adj[c][u] |= 1 << v
            adj[c][v] |= 1 << u
            deg[c][u] += 1
            deg[c][v] += 1
            ecount[c] += 1
            ok = dcap is not None or not completes_target(u, v, c)
            if ok and rec(ei + 1):
                return True
            colors[ei] = 0
            adj[c][u] &= ~(1 << v)
            adj[c][v] &= ~(1 << u)
            deg[c][u] -= 1
            deg[c][v] -= 1
            ecount[c] -= 1
        return False

    rec(0)
    elapsed = time.perf_counter() - t0
    if witness is not None:
        return SearchOutcome(SearchStatus.WITNESS_FOUND, witness, nodes, elapsed)
    if over_budget:
        return SearchOutcome(SearchStatus.BUDGET_EXCEEDED, None, nodes, elapsed)
    return SearchOutcome(SearchStatus.EXHAUSTED_NONE, None, nodes, elapsed)


def validate_witness(c: ColoredComplete, inst: RamseyInstance) -> bool:
    """Independent full check that a coloring is good for the instance."""
    if c.n_colors != inst.k or not c.is_complete():
        return False
    if inst.gallai_only and not is_gallai(c):
        return False
    return all(contains_target(c, i, t) is None
               for i, t in enumerate(inst.targets, start=1))


def compute_ramsey(inst: RamseyInstance, n_hint: int | None = None,
                   budget: int | None = None) -> int:
    """Least N where no good coloring of K_N exists (checked exhaustively).

    The witness at N-1 and the refutation at N both come from the search;
    statuses are monotone in N since good colorings restrict to smaller
    complete graphs.  Raises InconclusiveSearch if any level exceeds the
    per-level node budget.
    """
    def run(n: int) -> SearchOutcome:
        out = exists_good_coloring(n, inst, budget)
        if out.status is SearchStatus.BUDGET_EXCEEDED:
            raise InconclusiveSearch(
                f"{inst.describe()} at N = {n}: budget {budget} exhausted "
                f"after {out.nodes_explored} nodes")
        return out

    n = max(2, n_hint or 2)
    out = run(n)
    if out.status is SearchStatus.WITNESS_FOUND:
        while True:
            prev = out
            n += 1
            out = run(n)
            if out.status is SearchStatus.EXHAUSTED_NONE:
                assert prev.witness is not None and validate_witness(prev.witness, inst)
                return n
    else:
        while n > 2:
            below = run(n - 1)
            if below.status is SearchStatus.WITNESS_FOUND:
                assert below.witness is not None and validate_witness(below.witness, inst)
                return n
            n -= 1
        return n
