"""Simple undirected graphs on vertices 0..n-1 with bitmask adjacency.

Vertex sets are passed in as any iterable of ints and handed back as
frozensets; internally everything is an int bitmask (bit v <-> vertex v).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import (
    EmptyGraph,
    FormatError,
    InvalidOrder,
    InvalidParameters,
    InvalidVertex,
    SelfLoop,
)

GRAPH6_MAX_ORDER = 62


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighborhood(self, mask: int) -> int:
        """Union of neighbourhoods of the vertices in ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.edges()})"


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    if n < 0:
        raise InvalidOrder(f"negative order {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _from_adj(adj)


def _from_adj(adj: list[int]) -> Graph:
    m = sum(popcount(a) for a in adj) // 2
    return Graph(len(adj), tuple(adj), m)


def standard_graph(kind: str, n: int) -> Graph:
    if n < 1:
        raise InvalidOrder(f"{kind} needs n >= 1, got {n}")
    if kind == "complete":
        return complete(n)
    if kind == "empty":
        return empty(n)
    if kind == "path":
        return new_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise InvalidOrder(f"cycle needs n >= 3, got {n}")
        return new_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "star":
        return new_graph(n, [(0, i) for i in range(1, n)])
    raise InvalidParameters(f"unknown graph kind {kind!r}")


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return _from_adj([full ^ (1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    return _from_adj([0] * n)


def union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return _from_adj(list(g1.adj) + [a << shift for a in g2.adj])


def join(g1: Graph, g2: Graph) -> Graph:
    left = g1.full
    right = g2.full << g1.n
    adj = [a | right for a in g1.adj] + [(a << g1.n) | left for a in g2.adj]
    return _from_adj(adj)


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G - S`` and the map old label -> new label for survivors."""
    smask = s if isinstance(s, int) else to_mask(s)
    if smask >> g.n:
        raise InvalidVertex("vertex set out of range")
    keep = [v for v in range(g.n) if not smask >> v & 1]
    relabel = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        adj.append(to_mask(relabel[w] for w in bits(g.adj[old] & ~smask)))
    return _from_adj(adj), relabel


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` (relabelled in ascending order) and the
    list mapping new label -> old label."""
    keep = sorted(set(vertices))
    sub, _ = delete_vertices(g, g.full & ~to_mask(keep))
    return sub, keep


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``within`` as bitmasks,
    ordered by lowest vertex."""
    rest = g.full if within is None else within
    comps = []
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph, within: int | None = None) -> bool:
    return len(component_masks(g, within)) <= 1


def isolated_mask(g: Graph, within: int | None = None) -> int:
    """Vertices of ``within`` with no neighbour inside ``within``."""
    rest = g.full if within is None else within
    out = 0
    for v in bits(rest):
        if not g.adj[v] & rest:
            out |= 1 << v
    return out


def isolated_count(g: Graph) -> int:
    return popcount(isolated_mask(g))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum degree of the null graph")
    return min(g.degrees())


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    return new_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# -- extremal families ------------------------------------------------------

def half_floor(k: int, t: int) -> int:
    """floor((k + 1/2) * t) for integers k, t >= 0."""
    return (2 * k + 1) * t // 2


def _clique_join(t: int, a: int, b: int) -> Graph:
    """K_t v (K_a u b K_1); the K_t part is vertices 0..t-1."""
    return join(complete(t), union(complete(a), empty(b)))


def extremal_remark31(n: int, k: int, t: int) -> Graph:
    if k < 2 or not 1 <= t <= k - 1:
        raise InvalidParameters(f"need k >= 2 and 1 <= t <= k-1, got k={k}, t={t}")
    small = (2 * k + 3) * t // 2
    if n < small + 1:
        raise InvalidParameters(f"n={n} below floor((k+3/2)t)+1={small + 1}")
    return _clique_join(t, n - small - 1, half_floor(k, t) + 1)


def extremal_remark41(k: int, delta: int) -> Graph:
    if k < 2 or delta < 1 or delta % 2 == 0:
        raise InvalidParameters(f"need k >= 2 and odd delta >= 1, got k={k}, delta={delta}")
    return _clique_join(delta, 0, half_floor(k, delta) + 1)


def extremal_remark51(k: int, t: int) -> Graph:
    if k < 2 or t < 0:
        raise InvalidParameters(f"need k >= 2 and t >= 0, got k={k}, t={t}")
    return _clique_join(2 + 2 * t, 0, (1 + t) * (2 * k + 1) + 1)


def extremal_G1(n: int, k: int, s: int) -> Graph:
    if k < 2 or s < 1:
        raise InvalidParameters(f"need k >= 2 and s >= 1, got k={k}, s={s}")
    n1 = n - (2 * k + 3) * s // 2 - 1
    if n1 < 0:
        raise InvalidParameters(f"n={n} too small for s={s}: n1={n1}")
    return _clique_join(s, n1, half_floor(k, s) + 1)


# -- serialisation ----------------------------------------------------------

def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise FormatError(f"graph6 output limited to n <= {GRAPH6_MAX_ORDER}")
    out = [chr(g.n + 63)]
    bitlist = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    for i in range(0, len(bitlist), 6):
        val = 0
        for b in bitlist[i:i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise FormatError(f"character out of graph6 range in {text!r}")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise FormatError("graph6 headers for n >= 63 are not supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != -(-nbits // 6):
        raise FormatError(f"graph6 body length {len(body)} does not match n={n}")
    stream = 0
    for c in body:
        stream = stream << 6 | (ord(c) - 63)
    pad = 6 * len(body) - nbits
    if stream & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    stream >>= pad
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return new_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (IndexError, ValueError) as exc:
        raise FormatError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return new_graph(n, edges)


def read_graph_text(text: str) -> Graph:
    """Parse either an edge list or a single graph6 line."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) == 2:
        return parse_edge_list(text)
    return parse_graph6(first)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise InvalidParameters(f"p={p} outside [0, 1]")
    rng = random.Random(seed)
    return new_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
