"""Isolated-vertex deficiency, independence number, connectivity, and the
edge-count / degree / independence-number sufficient conditions.

Every comparison here is done in integers: the half-integer bound
(k + 1/2)|S| is doubled to (2k+1)|S| throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .errors import InvalidParameters, TooLarge
from .graph import Graph, bits, is_connected, isolated_mask, min_degree, popcount, to_mask
from .verdict import ConditionVerdict

DEFICIENCY_CAP = 24
SEARCH_CAP = 20


def _check_k(k: int) -> None:
    if k < 2:
        raise InvalidParameters(f"k must be >= 2, got {k}")


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise TooLarge(f"{what}: n={g.n} exceeds search cap {cap}")


@dataclass(frozen=True)
class DeficiencyReport:
    k: int
    best_set: frozenset[int]
    isolated: int
    value: int

    @property
    def has_factor(self) -> bool:
        return self.value == 0

    def to_dict(self) -> dict:
        return {"k": self.k, "best_set": sorted(self.best_set),
                "isolated": self.isolated, "value": self.value}


def objective(g: Graph, k: int, s_mask: int) -> tuple[int, int]:
    """(2 i(G-S) - (2k+1)|S|, i(G-S)) for S given as a bitmask."""
    iso = popcount(isolated_mask(g, g.full & ~s_mask))
    return 2 * iso - (2 * k + 1) * popcount(s_mask), iso


def deficiency(g: Graph, k: int, cap: int = DEFICIENCY_CAP) -> DeficiencyReport:
    """Maximise 2 i(G-S) - (2k+1)|S| over all S.

    Branches on membership of each vertex in S.  A maximiser never contains a
    vertex without an isolated neighbour in G - S (dropping it gains at least
    2k+1), so branches where some chosen vertex has lost every chance of such a
    neighbour are cut, as are branches whose optimistic value falls below the
    incumbent.  Ties go to the numerically smallest bitmask.
    """
    _check_k(k)
    _check_cap(g, cap, "deficiency")
    w = 2 * k + 1
    n, adj = g.n, g.adj
    best_val, _ = objective(g, k, 0)
    best_mask = 0
    # decide hubs first; they are the likeliest members of S
    order = sorted(range(n), key=lambda v: (-popcount(adj[v]), v))

    def search(idx: int, s: int, out: int) -> None:
        nonlocal best_val, best_mask
        undecided = 0
        for v in order[idx:]:
            undecided |= 1 << v
        # vertices outside S that may still end up isolated
        maybe_iso = undecided
        for u in bits(out):
            if not adj[u] & out:
                maybe_iso |= 1 << u
        for v in bits(s):
            if not adj[v] & maybe_iso:
                return
        ub = 2 * popcount(maybe_iso) - w * popcount(s)
        if ub < best_val:
            return
        if idx == n:
            val = 2 * popcount(maybe_iso) - w * popcount(s)
            if val > best_val or (val == best_val and s < best_mask):
                best_val, best_mask = val, s
            return
        v = order[idx]
        if adj[v]:
            search(idx + 1, s | 1 << v, out)
        search(idx + 1, s, out | 1 << v)

    search(0, 0, 0)
    _, iso = objective(g, k, best_mask)
    return DeficiencyReport(k, frozenset(bits(best_mask)), iso, best_val)


def has_factor_thm11(g: Graph, k: int, cap: int = DEFICIENCY_CAP) -> bool:
    return deficiency(g, k, cap).value == 0


def check_thm11(g: Graph, k: int, cap: int = DEFICIENCY_CAP) -> ConditionVerdict:
    """The exact criterion; the only verdict allowed to deny a factor."""
    rep = deficiency(g, k, cap)
    return ConditionVerdict("T11", True, rep.value == 0, {
        "violating_set": sorted(rep.best_set) if rep.value > 0 else [],
        "isolated": rep.isolated, "deficiency": rep.value})


# -- independent sets -------------------------------------------------------

def maximum_independent_set(g: Graph, within: int | None = None,
                            cap: int = SEARCH_CAP) -> frozenset[int]:
    """A maximum independent set of G[within] by branch and bound."""
    _check_cap(g, cap, "independence number")
    adj = g.adj
    best = [0, 0]  # size, mask

    def rec(p: int, cur: int, size: int) -> None:
        while p:
            if size + popcount(p) <= best[0]:
                return
            lo_v, lo_d, hi_v, hi_d = -1, 1 << 30, -1, -1
            for v in bits(p):
                d = popcount(adj[v] & p)
                if d < lo_d:
                    lo_v, lo_d = v, d
                if d > hi_d:
                    hi_v, hi_d = v, d
            if lo_d <= 1:
                # some maximum independent set contains a vertex of degree <= 1
                cur |= 1 << lo_v
                size += 1
                p &= ~(adj[lo_v] | 1 << lo_v)
                continue
            rec(p & ~(adj[hi_v] | 1 << hi_v), cur | 1 << hi_v, size + 1)
            p &= ~(1 << hi_v)
        if size > best[0]:
            best[0], best[1] = size, cur

    rec(g.full if within is None else within, 0, 0)
    return frozenset(bits(best[1]))


def independence_number(g: Graph, cap: int = SEARCH_CAP) -> int:
    return len(maximum_independent_set(g, cap=cap))


def independent_sets_of_size(g: Graph, size: int, cap: int = SEARCH_CAP) -> Iterator[frozenset[int]]:
    """Every independent set with exactly ``size`` vertices, in lexicographic order."""
    _check_cap(g, cap, "independent sets")
    adj = g.adj

    def rec(cand: int, cur: int, need: int):
        if need == 0:
            yield frozenset(bits(cur))
            return
        while cand and popcount(cand) >= need:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            yield from rec(cand & ~adj[v], cur | 1 << v, need - 1)

    if size < 0:
        return
    yield from rec(g.full, 0, size)


# -- connectivity -----------------------------------------------------------

def is_t_connected(g: Graph, t: int, cap: int = SEARCH_CAP) -> bool:
    """n >= t+1 and no set of fewer than t vertices disconnects G."""
    if t < 0:
        raise InvalidParameters(f"t must be >= 0, got {t}")
    if g.n < t + 1:
        return False
    _check_cap(g, cap, "connectivity")
    for size in range(t):
        for sep in combinations(range(g.n), size):
            if not is_connected(g, g.full & ~to_mask(sep)):
                return False
    return True


# -- sufficient conditions --------------------------------------------------

def extremal_edge_threshold(n: int, k: int, t: int) -> int:
    """binom(n - floor((k+1/2)t) - 1, 2) + t (floor((k+1/2)t) + 1)."""
    f = (2 * k + 1) * t // 2
    top = n - f - 1
    if top < 0:
        raise InvalidParameters(f"n - floor((k+1/2)t) - 1 = {top} < 0")
    return comb(top, 2) + t * (f + 1)


def thm13_order_ok(n: int, k: int, t: int) -> bool:
    return 2 * k * n >= (2 * k * k + 5 * k + 1) * t + k * k + 5 * k + 2


def check_thm13(g: Graph, k: int, t: int, cap: int = SEARCH_CAP) -> ConditionVerdict:
    _check_k(k)
    if not 1 <= t <= k - 1:
        return ConditionVerdict.not_applicable("T13", f"needs 1 <= t <= k-1, got t={t}", t=t)
    if not thm13_order_ok(g.n, k, t):
        return ConditionVerdict.not_applicable(
            "T13", f"order bound 2kn >= (2k^2+5k+1)t + k^2+5k+2 fails for n={g.n}", t=t)
    if not is_t_connected(g, t, cap):
        return ConditionVerdict.not_applicable("T13", f"graph is not {t}-connected", t=t)
    thr = extremal_edge_threshold(g.n, k, t)
    return ConditionVerdict("T13", True, g.m > thr, {"t": t, "edges": g.m, "threshold": thr})


def thm14_set_size(k: int, delta: int) -> int:
    """floor((k + 1/2) delta) + 1."""
    return (2 * k + 1) * delta // 2 + 1


def check_thm14(g: Graph, k: int, cap: int = SEARCH_CAP) -> ConditionVerdict:
    """Every independent set of size floor((k+1/2)delta)+1 must contain a
    vertex of degree >= 2n/(2k+3).

    Fails exactly when the low-degree vertices ((2k+3) d < 2n) carry an
    independent set of that size, which is searched for directly.
    """
    _check_k(k)
    if g.n == 0:
        return ConditionVerdict.not_applicable("T14", "null graph")
    delta = min_degree(g)
    if delta < 1:
        return ConditionVerdict.not_applicable("T14", "minimum degree 0", delta=0)
    need = thm14_set_size(k, delta)
    low = to_mask(v for v in range(g.n) if (2 * k + 3) * g.degree(v) < 2 * g.n)
    big = maximum_independent_set(g, low, cap)
    if len(big) >= need:
        chosen = sorted(big)[:need]
        return ConditionVerdict("T14", True, False, {
            "delta": delta, "set_size": need,
            "independent_set": chosen, "degrees": [g.degree(v) for v in chosen]})
    vacuous = independence_number(g, cap) < need
    return ConditionVerdict("T14", True, True, {"delta": delta, "set_size": need, "vacuous": vacuous})


def check_thm15(g: Graph, k: int, cap: int = SEARCH_CAP) -> ConditionVerdict:
    _check_k(k)
    if g.n == 0:
        return ConditionVerdict.not_applicable("T15", "null graph")
    delta = min_degree(g)
    alpha = independence_number(g, cap)
    return ConditionVerdict("T15", True, (2 * k + 1) * delta >= 2 * alpha,
                            {"delta": delta, "alpha": alpha})
