"""The tree family T(2k+1): base-tree validation, the T_R construction,
AHU canonical codes and a desk-scale catalog of members."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import product

from .errors import CatalogTooSmall, InvalidParameters, NotATree
from .graph import Graph, bits, component_masks, induced_subgraph, new_graph, popcount


@dataclass(frozen=True)
class BaseTreeWitness:
    base: Graph
    leaf_set: frozenset[int]
    trimmed: Graph
    trimmed_vertices: tuple[int, ...]  # trimmed label -> base label
    leaf_counts: dict[int, int]  # base label of a trimmed vertex -> adjacent leaves in base

    def trimmed_degree(self, x: int) -> int:
        return self.trimmed.degree(self.trimmed_vertices.index(x))


@dataclass(frozen=True)
class Rejection:
    condition: str
    detail: str

    def __bool__(self) -> bool:
        return False


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and len(component_masks(g)) == 1


def validate_base(r: Graph, k: int) -> BaseTreeWitness | Rejection:
    """Check that ``r`` may serve as a base tree R for T(2k+1).

    Returns a falsy :class:`Rejection` naming the first violated condition.
    """
    if not is_tree(r):
        return Rejection("tree", "R is not a tree")
    leaf_mask = 0
    for v in range(r.n):
        if popcount(r.adj[v]) == 1:
            leaf_mask |= 1 << v
    inner_mask = r.full & ~leaf_mask
    if not inner_mask:
        return Rejection("nonempty", "R - Leaf(R) is empty")
    counts = {}
    for x in bits(inner_mask):
        d = popcount(r.adj[x] & inner_mask)
        ell = popcount(r.adj[x] & leaf_mask)
        if d % 2 == 0 or d > 2 * k + 1:
            return Rejection("a", f"vertex {x} has trimmed degree {d}")
        if 2 * ell + d > 2 * k + 1:
            return Rejection("b", f"vertex {x}: 2*{ell} + {d} > {2 * k + 1}")
        counts[x] = ell
    trimmed, keep = induced_subgraph(r, bits(inner_mask))
    if len(component_masks(trimmed)) != 1:
        return Rejection("connected", "R - Leaf(R) is disconnected")
    leaves = frozenset(bits(leaf_mask))
    return BaseTreeWitness(r, leaves, trimmed, tuple(keep), counts)


def construct_TR(w: BaseTreeWitness, k: int) -> Graph:
    """Subdivide every edge of R - Leaf(R) once and top up each trimmed vertex
    of trimmed degree 2r+1 to exactly k - r pendant leaves.

    Base labels are kept; subdivision vertices follow, then added leaves.
    """
    edges = list(w.base.edges())
    trimmed_edges = {(min(a, b), max(a, b)) for a, b in
                     ((w.trimmed_vertices[i], w.trimmed_vertices[j]) for i, j in w.trimmed.edges())}
    edges = [e for e in edges if e not in trimmed_edges]
    nxt = w.base.n
    for a, b in sorted(trimmed_edges):
        edges += [(a, nxt), (nxt, b)]
        nxt += 1
    for i, x in enumerate(w.trimmed_vertices):
        r = (w.trimmed.degree(i) - 1) // 2
        for _ in range(k - r - w.leaf_counts[x]):
            edges.append((x, nxt))
            nxt += 1
    return new_graph(nxt, edges)


def tree_centers(t: Graph) -> list[int]:
    if not is_tree(t):
        raise NotATree("input is not a tree")
    if t.n <= 2:
        return list(range(t.n))
    deg = t.degrees()
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in bits(t.adj[v]):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_code(t: Graph, root: int) -> str:
    order, parent = [root], {root: -1}
    for v in order:
        for w in bits(t.adj[v]):
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    children: dict[int, list[str]] = {v: [] for v in order}
    code = {}
    for v in reversed(order):
        code[v] = "(" + "".join(sorted(children[v])) + ")"
        if parent[v] >= 0:
            children[parent[v]].append(code[v])
    return code[root]


def canonical_code(t: Graph) -> str:
    """AHU code rooted at the center (the smaller code when bicentral)."""
    return min(rooted_code(t, c) for c in tree_centers(t))


def prufer_decode(seq: tuple[int, ...], r: int) -> Graph:
    if r == 1:
        return new_graph(1)
    adj = [0] * r
    degree = [1] * r
    for v in seq:
        degree[v] += 1
    heap = [v for v in range(r) if degree[v] == 1]
    heapq.heapify(heap)
    for v in seq:
        leaf = heapq.heappop(heap)
        adj[leaf] |= 1 << v
        adj[v] |= 1 << leaf
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(heap, v)
    a, b = heapq.heappop(heap), heapq.heappop(heap)
    adj[a] |= 1 << b
    adj[b] |= 1 << a
    return Graph(r, tuple(adj), r - 1)


def labeled_trees(r: int):
    """Every labelled tree on r vertices (r^(r-2) of them) via Pruefer codes."""
    for seq in product(range(r), repeat=max(r - 2, 0)):
        yield prufer_decode(seq, r)


def member_order(k: int, trimmed_order: int) -> int:
    """|T_R| = (k + 3/2) * |R - Leaf(R)|; the trimmed order is always even."""
    return (2 * k + 3) * trimmed_order // 2


@dataclass
class TreeCatalog:
    k: int
    max_order: int
    members: dict[int, list[str]] = field(default_factory=dict)
    witnesses: dict[str, BaseTreeWitness] = field(default_factory=dict)
    trees: dict[str, Graph] = field(default_factory=dict)

    @property
    def orders(self) -> list[int]:
        return sorted(o for o, codes in self.members.items() if codes)

    def __len__(self) -> int:
        return sum(len(c) for c in self.members.values())

    def contains(self, order: int, code: str) -> bool:
        return code in self.members.get(order, ())


def base_order_bound(k: int, max_order: int) -> int:
    """Largest base order that has to be enumerated.

    T_R only depends on R - Leaf(R), and every admissible trimmed tree with c
    vertices is already the trimmed tree of a base tree with at most 2c
    vertices (hang one leaf on each trimmed leaf).
    """
    c = 0
    while member_order(k, c + 2) <= max_order:
        c += 2
    return 2 * c


def enumerate_catalog(k: int, max_order: int, base_bound: int | None = None) -> TreeCatalog:
    if k < 2:
        raise InvalidParameters(f"k must be >= 2, got {k}")
    if max_order < 1:
        raise InvalidParameters("max_order must be >= 1")
    cat = TreeCatalog(k, max_order)
    r_max = base_order_bound(k, max_order) if base_bound is None else base_bound
    seen_bases: set[str] = set()
    found: dict[int, set[str]] = {}
    for r in range(1, r_max + 1):
        for base in labeled_trees(r):
            w = validate_base(base, k)
            if not w:
                continue
            bcode = canonical_code(base)
            if bcode in seen_bases:
                continue
            seen_bases.add(bcode)
            t = construct_TR(w, k)
            if t.n > max_order:
                continue
            code = canonical_code(t)
            if code not in cat.witnesses:
                cat.witnesses[code] = w
                cat.trees[code] = t
                found.setdefault(t.n, set()).add(code)
    cat.members = {o: sorted(found[o]) for o in sorted(found)}
    return cat


def is_member(t: Graph, k: int, catalog: TreeCatalog) -> bool:
    if catalog.k != k:
        raise InvalidParameters(f"catalog built for k={catalog.k}, asked about k={k}")
    if t.n > catalog.max_order:
        raise CatalogTooSmall(f"order {t.n} exceeds catalog max_order {catalog.max_order}")
    try:
        code = canonical_code(t)
    except NotATree:
        return False
    return catalog.contains(t.n, code)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
