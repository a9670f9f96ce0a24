"""Sharpness checks for the extremal constructions.

Each ``verify_*`` returns a list of ``(name, ok, detail)`` rows so callers can
report every check rather than stopping at the first failure.
"""
from __future__ import annotations

from math import comb

from .builder import FACTOR_CAP, find_factor
from .factors import (
    DEFICIENCY_CAP,
    check_thm13,
    check_thm14,
    check_thm15,
    deficiency,
    extremal_edge_threshold,
    independence_number,
    objective,
    thm14_set_size,
)
from .graph import (
    extremal_G1,
    extremal_remark31,
    extremal_remark41,
    extremal_remark51,
    half_floor,
    min_degree,
)
from .trees import enumerate_catalog

Check = tuple[str, bool, str]


def _designed_set(g, k: int, size: int, expect_iso: int) -> list[Check]:
    val, iso = objective(g, k, (1 << size) - 1)
    rows = [
        ("isolated at designed S", iso == expect_iso, f"i(G-S)={iso}, expected {expect_iso}"),
        ("designed S violates criterion", val > 0, f"2i-(2k+1)|S| = {val}"),
    ]
    if g.n <= DEFICIENCY_CAP:
        rep = deficiency(g, k)
        rows.append(("deficiency maximum positive", rep.value > 0, f"max={rep.value} at {sorted(rep.best_set)}"))
    return rows


def _no_factor(g, k: int) -> list[Check]:
    if g.n > FACTOR_CAP:
        return []
    cert = find_factor(g, k, enumerate_catalog(k, g.n))
    return [("factor search finds nothing", cert is None, "absent" if cert is None else "FOUND")]


def verify_remark31(n: int, k: int, t: int) -> list[Check]:
    g = extremal_remark31(n, k, t)
    thr = extremal_edge_threshold(n, k, t)
    rows = [("edges equal threshold", g.m == thr, f"m={g.m}, threshold={thr}")]
    rows += _designed_set(g, k, t, half_floor(k, t) + 1)
    v = check_thm13(g, k, t)
    rows.append(("edge condition not met", v.holds is not True, f"applicable={v.applicable} holds={v.holds}"))
    return rows + _no_factor(g, k)


def verify_remark41(k: int, delta: int) -> list[Check]:
    g = extremal_remark41(k, delta)
    rows = [
        ("minimum degree", min_degree(g) == delta, f"delta(G)={min_degree(g)}"),
        ("order", g.n == (2 * k + 3) * delta // 2 + 1, f"n={g.n}"),
        ("boundary (2k+3)delta = 2n-1", (2 * k + 3) * delta == 2 * g.n - 1,
         f"{(2 * k + 3) * delta} vs {2 * g.n - 1}"),
    ]
    v = check_thm14(g, k)
    leaves = list(range(delta, g.n))
    rows.append(("degree condition fails", v.holds is False, f"holds={v.holds}"))
    rows.append(("witness is the leaf set", v.witness.get("independent_set") == leaves[:thm14_set_size(k, delta)],
                 f"witness={v.witness.get('independent_set')}"))
    rows += _designed_set(g, k, delta, half_floor(k, delta) + 1)
    return rows + _no_factor(g, k)


def verify_remark51(k: int, t: int) -> list[Check]:
    g = extremal_remark51(k, t)
    delta, alpha = min_degree(g), independence_number(g)
    rows = [
        ("minimum degree", delta == 2 + 2 * t, f"delta={delta}"),
        ("independence number", alpha == (1 + t) * (2 * k + 1) + 1, f"alpha={alpha}"),
        ("(2k+1)delta = 2alpha - 2", (2 * k + 1) * delta == 2 * alpha - 2,
         f"{(2 * k + 1) * delta} vs {2 * alpha - 2}"),
    ]
    v = check_thm15(g, k)
    rows.append(("independence condition fails", v.holds is False, f"holds={v.holds}"))
    rows += _designed_set(g, k, 2 + 2 * t, (1 + t) * (2 * k + 1) + 1)
    rep = deficiency(g, k)
    rows.append(("deficiency is 2 at the clique", rep.value == 2 and rep.best_set == frozenset(range(2 + 2 * t)),
                 f"value={rep.value} at {sorted(rep.best_set)}"))
    return rows + _no_factor(g, k)


def verify_g1(n: int, k: int, s: int) -> list[Check]:
    g = extremal_G1(n, k, s)
    f = half_floor(k, s)
    expect = comb(n - f - 1, 2) + s * (f + 1)
    rows = [("edge count", g.m == expect, f"m={g.m}, formula={expect}")]
    # a clique side of order 1 is itself isolated once S is gone
    n1 = n - (2 * k + 3) * s // 2 - 1
    return rows + _designed_set(g, k, s, f + 1 + (n1 == 1))


def g1_margin(n: int, k: int, t: int, s: int) -> int:
    """threshold(n, k, t) - |E(G1(n, k, s))|."""
    return extremal_edge_threshold(n, k, t) - extremal_G1(n, k, s).m


def g1_window(k: int, t: int, s: int, headroom: int = 10) -> range:
    """Orders n where both the order bound for t and G1(n, k, s) make sense."""
    lo_bound = -(-((2 * k * k + 5 * k + 1) * t + k * k + 5 * k + 2) // (2 * k))
    lo = max(lo_bound, (2 * k + 3) * s // 2 + 1)
    return range(lo, lo + headroom + 1)
