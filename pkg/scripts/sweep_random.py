"""Soundness sweep on random graphs of order 9..13.

The bundled corpus stops at 8 vertices, where the edge-count condition never
applies; this draws dense random graphs where it does and checks every
condition that fires against the exact deficiency.

    python3 scripts/sweep_random.py --count 2000 --seed 1
"""
import argparse
import random
from collections import Counter

from compfactor.factors import check_thm13, check_thm14, check_thm15, deficiency
from compfactor.graph import random_gnp, write_graph6
from compfactor.spectral import check_thm12


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--min-n", type=int, default=9)
    ap.add_argument("--max-n", type=int, default=13)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    fired, bad = Counter(), Counter()
    for _ in range(args.count):
        k = rng.randint(2, 4)
        g = random_gnp(rng.randint(args.min_n, args.max_n), rng.uniform(0.3, 0.95), rng.randrange(1 << 30))
        verdicts = [check_thm12(g, k)] + [check_thm13(g, k, t) for t in range(1, k)]
        verdicts += [check_thm14(g, k), check_thm15(g, k)]
        fires = [v.theorem for v in verdicts if v.implies_factor]
        if not fires:
            continue
        ok = deficiency(g, k).value == 0
        for name in fires:
            fired[name] += 1
            if not ok:
                bad[name] += 1
                print(f"COUNTEREXAMPLE {name} k={k} {write_graph6(g)}")
    for name in ("T12", "T13", "T14", "T15"):
        print(f"{name}: fired {fired[name]}, counterexamples {bad[name]}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
