"""Table of threshold(n, k, t) - |E(G1(n, k, s))| over the valid order window.

A margin of 0 only at s = t+1 and positive margins elsewhere mean G1(n, k, t)
is the unique extremal graph among the G1 family.

    python3 scripts/g1_margins.py --max-k 5
"""
import argparse

from compfactor.remarks import g1_margin, g1_window


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=5)
    ap.add_argument("--headroom", type=int, default=10)
    args = ap.parse_args()

    violations = 0
    for k in range(2, args.max_k + 1):
        for t in range(1, k):
            for s in range(t + 1, t + 7):
                window = g1_window(k, t, s, args.headroom)
                margins = [g1_margin(n, k, t, s) for n in window]
                bad = [m for m in margins if m < 0 or (s >= t + 2 and m <= 0)]
                violations += len(bad)
                print(f"k={k} t={t} s={s} n={window.start}..{window.stop - 1} "
                      f"margin min={min(margins)} max={max(margins)}{'  VIOLATION' if bad else ''}")
    print(f"violations: {violations}")
    raise SystemExit(1 if violations else 0)


if __name__ == "__main__":
    main()
