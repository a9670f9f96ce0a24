"""Write every connected graph on 1..8 vertices, one graph6 line each.

Orders up to 7 come straight from the networkx graph atlas.  Order 8 is
built by attaching a new vertex to every graph of order 7 in every possible
way and keeping one representative per isomorphism class (WL hash buckets,
then an exact isomorphism test inside each bucket).

    python scripts/make_corpus.py [OUT]
"""
import argparse
import sys
from collections import Counter, defaultdict
from pathlib import Path

import networkx as nx

from compfactor.graph import new_graph, write_graph6

# OEIS A001349
EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def order8(atlas7):
    buckets = defaultdict(list)
    for base in atlas7:
        for nbrs in range(1, 1 << 7):
            h = base.copy()
            h.add_node(7)
            h.add_edges_from((7, v) for v in range(7) if nbrs >> v & 1)
            if not nx.is_connected(h):
                continue
            key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
            if not any(nx.is_isomorphic(h, other) for other in buckets[key]):
                buckets[key].append(h)
    return [h for group in buckets.values() for h in group]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", nargs="?", default=str(Path(__file__).resolve().parents[1]
                                                  / "src/compfactor/data/connected_le8.g6"))
    args = ap.parse_args(argv)

    atlas = nx.graph_atlas_g()
    graphs = [g for g in atlas if 0 < g.number_of_nodes() <= 7 and nx.is_connected(g)]
    graphs += order8([g for g in atlas if g.number_of_nodes() == 7])

    lines = []
    for h in graphs:
        g = new_graph(h.number_of_nodes(), h.edges())
        lines.append((g.n, g.m, write_graph6(g)))
    lines.sort()
    counts = Counter(n for n, _, _ in lines)
    if dict(counts) != EXPECTED:
        sys.exit(f"unexpected class counts {dict(counts)}")
    Path(args.out).write_text("".join(f"{s}\n" for _, _, s in lines))
    print(f"wrote {len(lines)} graphs to {args.out}")


if __name__ == "__main__":
    main()
