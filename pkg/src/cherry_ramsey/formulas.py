"""Closed-form Ramsey values, with their hypotheses checked literally.

Two plain-integer bounds cover every cherry profile: lb_cherries is the
general lower bound certified by matching_base_construction, gr_cherries the
rainbow-triangle-free value certified by gallai_nested_construction.

Everything else carries a hypothesis, so those functions return a
FormulaResult instead of guessing: value is present exactly when the stated
precondition holds.  Inputs are never reordered on the caller's behalf; if a
formula assumes a sorted profile, an unsorted profile is simply inapplicable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil


@dataclass(frozen=True)
class FormulaResult:
    value: int | None
    applicable: bool
    hypothesis_note: str = ""

    def __post_init__(self) -> None:
        assert (self.value is not None) == self.applicable


def _counts(k: int, counts) -> tuple[int, ...]:
    counts = tuple(counts)
    if k < 1 or len(counts) != k:
        raise ValueError(f"expected {k} positive counts, got {counts}")
    if any(c < 1 for c in counts):
        raise ValueError("counts must be positive")
    return counts


def lb_cherries(k: int, counts) -> int:
    """General lower bound for k cherry targets: 2*max(ceil(k/2), n_i) + sum - k + 1."""
    counts = _counts(k, counts)
    return 2 * max(ceil(k / 2), max(counts)) + sum(counts) - k + 1


def gr_cherries(k: int, counts) -> int:
    """Exact rainbow-triangle-free value: 2*max(n_i) + sum - k + 1."""
    counts = _counts(k, counts)
    return 2 * max(counts) + sum(counts) - k + 1


def r_cherries_dominant(k: int, counts) -> FormulaResult:
    """Exact Ramsey value when the first cherry count dominates the rest.

    Applicable when 3*n_1 >= 4*sum(n_2..n_k) - 2k + 4; the value then matches
    the rainbow-free bound 2*n_1 + sum - k + 1.
    """
    counts = _counts(k, counts)
    rest = sum(counts[1:])
    if 3 * counts[0] >= 4 * rest - 2 * k + 4:
        return FormulaResult(2 * counts[0] + sum(counts) - k + 1, True,
                             f"3*{counts[0]} >= 4*{rest} - 2*{k} + 4")
    return FormulaResult(None, False,
                         f"needs 3*n1 >= 4*{rest} - 2*{k} + 4 = {4 * rest - 2 * k + 4}")


def r_cycle_vs_stars(k: int, s: int, n: int, tail) -> FormulaResult:
    """Exact value for one long cycle against k-1 star-forest targets.

    Applicable for s >= 2 once the cycle dominates:
    n >= 2*sum((n_i + 1)*s for i >= 2) - 6k + 8.  Value n + sum(tail) - k + 1.
    """
    tail = tuple(tail)
    if k != len(tail) + 1 or any(c < 1 for c in tail) or n < 3:
        raise ValueError("need n >= 3 and one positive count per non-cycle color")
    threshold = 2 * sum((c + 1) * s for c in tail) - 6 * k + 8
    if s < 2:
        return FormulaResult(None, False, f"needs star arity >= 2, got {s}")
    if n < threshold:
        return FormulaResult(None, False, f"needs cycle length >= {threshold}, got {n}")
    return FormulaResult(n + sum(tail) - k + 1, True, f"s = {s} >= 2 and {n} >= {threshold}")


def r_k_2p3(k: int) -> FormulaResult:
    """k equal targets of two cherries: 2k+2 for odd k >= 9, 2k+1 for even k >= 14."""
    if k < 1:
        raise ValueError("need k >= 1")
    if k % 2 and k >= 9:
        return FormulaResult(2 * k + 2, True, f"k = {k} odd, k >= 9")
    if k % 2 == 0 and k >= 14:
        return FormulaResult(2 * k + 1, True, f"k = {k} even, k >= 14")
    return FormulaResult(None, False, f"k = {k} outside the settled ranges (odd >= 9, even >= 14)")


def r_k_t_cherries_rest_p3(t: int, k: int) -> FormulaResult:
    """One target of t cherries plus k-1 single cherries, for t in {2, 3}.

    Piecewise in k exactly as settled; k outside the stated cases (in
    particular k = 1) is inapplicable.
    """
    if t not in (2, 3):
        raise ValueError(f"only t = 2 and t = 3 are settled, got {t}")
    if k < 1:
        raise ValueError("need k >= 1")
    if t == 2:
        if k == 2:
            return FormulaResult(6, True, "k = 2")
        if k >= 3 and k % 2:
            return FormulaResult(k + 3, True, f"k = {k} odd")
        if k >= 4:
            return FormulaResult(k + 2, True, f"k = {k} even, k >= 4")
    else:
        if k in (2, 3, 4):
            return FormulaResult(9, True, f"k = {k} in {{2, 3, 4}}")
        if k >= 5 and k % 2:
            return FormulaResult(k + 4, True, f"k = {k} odd, k >= 5")
        if k == 6:
            return FormulaResult(11, True, "k = 6, the sporadic ten-vertex witness")
        if k >= 8:
            return FormulaResult(k + 3, True, f"k = {k} even, k >= 8")
    return FormulaResult(None, False, f"k = {k} not covered for t = {t}")


# === cited classical families, same FormulaResult discipline ===


def irving(k: int) -> FormulaResult:
    """k single-cherry targets: k + 1 + (k mod 2)."""
    if k < 1:
        raise ValueError("need k >= 1")
    return FormulaResult(k + 1 + k % 2, True, f"k = {k}")


def faudree_schelp_paths(m: int, n1: int, n2: int) -> FormulaResult:
    """Two path-forest targets n1*P_m vs n2*P_m with n1 >= n2: n1*m + n2*floor(m/2) - 1."""
    if m < 2 or n1 < 1 or n2 < 1:
        raise ValueError("need m >= 2 and positive copy counts")
    if n1 < n2:
        return FormulaResult(None, False, f"needs n1 >= n2, got {n1} < {n2}")
    return FormulaResult(n1 * m + n2 * (m // 2) - 1, True, f"{n1} >= {n2}")


def scobee(m1: int, m2: int, m3: int) -> FormulaResult:
    """Three cherry targets, m1 >= m2 >= m3 and m1 >= 2: 3*m1 + m2 + m3 - 2."""
    if min(m1, m2, m3) < 1:
        raise ValueError("counts must be positive")
    if not (m1 >= m2 >= m3):
        return FormulaResult(None, False, f"needs m1 >= m2 >= m3, got ({m1}, {m2}, {m3})")
    if m1 < 2:
        return FormulaResult(None, False, f"needs m1 >= 2, got {m1}")
    return FormulaResult(3 * m1 + m2 + m3 - 2, True, f"{m1} >= {m2} >= {m3}, {m1} >= 2")


def cockayne_lorimer(counts) -> FormulaResult:
    """Matching targets n_i*P2: max(n_i) + sum(n_i) - k + 1."""
    counts = tuple(counts)
    if not counts or any(c < 1 for c in counts):
        raise ValueError("need a nonempty list of positive counts")
    return FormulaResult(max(counts) + sum(counts) - len(counts) + 1, True,
                         f"k = {len(counts)} matching targets")


def debiasio_pm(counts) -> FormulaResult:
    """Cherry targets met by a perfect matching: n1 + sum(ceil(n_i/3), i >= 2) - k + 1.

    Applicable for k >= 2, n1 >= ... >= nk >= 2 and n1 >= 2k - 2.
    """
    counts = tuple(counts)
    if not counts or any(c < 1 for c in counts):
        raise ValueError("need a nonempty list of positive counts")
    k = len(counts)
    if k < 2:
        return FormulaResult(None, False, "needs at least two colors")
    if any(counts[i] < counts[i + 1] for i in range(k - 1)) or counts[-1] < 2:
        return FormulaResult(None, False, f"needs n1 >= ... >= nk >= 2, got {counts}")
    if counts[0] < 2 * k - 2:
        return FormulaResult(None, False, f"needs n1 >= {2 * k - 2}, got {counts[0]}")
    value = counts[0] + sum(ceil(c / 3) for c in counts[1:]) - k + 1
    return FormulaResult(value, True, f"{counts[0]} >= 2*{k} - 2 and sorted profile")
