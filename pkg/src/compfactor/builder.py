"""Explicit {K_{1,1},...,K_{1,k},T(2k+1)}-factors: backtracking search and
certificate checking."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CatalogTooSmall, InvalidParameters, NotConnected, TooLarge
from .graph import Graph, bits, induced_subgraph, is_connected, new_graph, popcount, to_mask
from .trees import TreeCatalog, canonical_code, is_tree

FACTOR_CAP = 12
STAR = "star"
MEMBER = "member"


@dataclass(frozen=True)
class Block:
    kind: str  # STAR or MEMBER
    label: int | str  # leaf count j for a star, canonical code for a member
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "label": self.label,
                "vertices": sorted(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, d: dict) -> "Block":
        return cls(d["kind"], d["label"], frozenset(d["vertices"]),
                   tuple((int(a), int(b)) for a, b in d["edges"]))


@dataclass(frozen=True)
class FactorCertificate:
    blocks: tuple[Block, ...]

    def edges(self) -> list[tuple[int, int]]:
        return [e for b in self.blocks for e in b.edges]

    def to_dict(self) -> dict:
        return {"blocks": [b.to_dict() for b in self.blocks]}

    @classmethod
    def from_dict(cls, d: dict) -> "FactorCertificate":
        return cls(tuple(Block.from_dict(b) for b in d["blocks"]))


def spanning_trees(g: Graph) -> Iterator[list[tuple[int, int]]]:
    """Every spanning tree of a connected graph, each exactly once.

    Edges are decided in order; an edge is taken only if it joins two current
    components and skipped only if the remaining edges still connect G.
    """
    if g.n == 0 or not is_connected(g):
        raise NotConnected("spanning trees need a connected graph")
    edges = g.edges()
    n = g.n

    def find(comp: list[int], v: int) -> int:
        while comp[v] != v:
            v = comp[v]
        return v

    def rest_connected(chosen: list[tuple[int, int]], start: int) -> bool:
        comp = list(range(n))
        for a, b in chosen + edges[start:]:
            ra, rb = find(comp, a), find(comp, b)
            if ra != rb:
                comp[ra] = rb
        root = find(comp, 0)
        return all(find(comp, v) == root for v in range(n))

    def rec(i: int, chosen: list[tuple[int, int]], comp: list[int]):
        if len(chosen) == n - 1:
            yield list(chosen)
            return
        if len(chosen) + len(edges) - i < n - 1:
            return
        a, b = edges[i]
        ra, rb = find(comp, a), find(comp, b)
        if ra != rb:
            nxt = list(comp)
            nxt[ra] = rb
            chosen.append(edges[i])
            yield from rec(i + 1, chosen, nxt)
            chosen.pop()
        if rest_connected(chosen, i + 1):
            yield from rec(i + 1, chosen, comp)

    yield from rec(0, [], list(range(n)))


def star_block(g: Graph, mask: int, k: int) -> Block | None:
    size = popcount(mask)
    if not 2 <= size <= k + 1:
        return None
    for c in bits(mask):
        others = mask & ~(1 << c)
        if g.adj[c] & others == others:
            return Block(STAR, size - 1, frozenset(bits(mask)),
                         tuple((min(c, v), max(c, v)) for v in bits(others)))
    return None


def member_block(g: Graph, mask: int, catalog: TreeCatalog) -> Block | None:
    size = popcount(mask)
    if not catalog.members.get(size):
        return None
    sub, keep = induced_subgraph(g, bits(mask))
    if not is_connected(sub):
        return None
    for tree in spanning_trees(sub):
        code = canonical_code(new_graph(size, tree))
        if catalog.contains(size, code):
            edges = tuple(sorted((min(keep[a], keep[b]), max(keep[a], keep[b])) for a, b in tree))
            return Block(MEMBER, code, frozenset(keep), edges)
    return None


def _connected_supersets(g: Graph, v: int, free: int, sizes: list[int]) -> Iterator[int]:
    """Connected subsets of ``free`` containing v with size in ``sizes``,
    by increasing size and then increasing bitmask."""
    wanted = set(sizes)
    level = {1 << v}
    size = 1
    top = max(sizes)
    while level and size <= top:
        if size in wanted:
            yield from sorted(level)
        if size == top:
            break
        nxt = set()
        for s in level:
            border = g.neighborhood(s) & free & ~s
            for u in bits(border):
                nxt.add(s | 1 << u)
        level = nxt
        size += 1


def find_factor(g: Graph, k: int, catalog: TreeCatalog,
                cap: int = FACTOR_CAP) -> FactorCertificate | None:
    """Depth-first search for a factor; ``None`` when there is none.

    The block holding the lowest unassigned vertex is chosen next, candidate
    blocks in increasing size, and a star is preferred over a tree whenever a
    block admits both.
    """
    if k < 2:
        raise InvalidParameters(f"k must be >= 2, got {k}")
    if catalog.k != k:
        raise InvalidParameters(f"catalog built for k={catalog.k}, not k={k}")
    if catalog.max_order < g.n:
        raise CatalogTooSmall(f"catalog max_order {catalog.max_order} < n={g.n}")
    if g.n > cap:
        raise TooLarge(f"find_factor: n={g.n} exceeds cap {cap}")
    limit = min(g.n, catalog.max_order)
    sizes = sorted({s for s in range(2, k + 2)} | set(catalog.orders))
    sizes = [s for s in sizes if s <= limit]
    adj = g.adj
    feasible: dict[int, Block | None] = {}

    def block_for(mask: int) -> Block | None:
        if mask not in feasible:
            feasible[mask] = star_block(g, mask, k) or member_block(g, mask, catalog)
        return feasible[mask]

    def solve(free: int) -> list[Block] | None:
        if not free:
            return []
        v = (free & -free).bit_length() - 1
        for mask in _connected_supersets(g, v, free, sizes):
            rest = free & ~mask
            if any(not adj[u] & rest for u in bits(rest)):
                continue
            blk = block_for(mask)
            if blk is None:
                continue
            tail = solve(rest)
            if tail is not None:
                return [blk] + tail
        return None

    if not sizes:
        return FactorCertificate(()) if g.n == 0 else None
    blocks = solve(g.full)
    return None if blocks is None else FactorCertificate(tuple(blocks))


def verify_certificate(g: Graph, k: int, cert: FactorCertificate,
                       catalog: TreeCatalog) -> tuple[bool, str]:
    """Check a certificate against G and the catalog from scratch."""
    covered = 0
    for b in cert.blocks:
        m = to_mask(b.vertices)
        if m >> g.n:
            return False, "vertex out of range"
        if covered & m:
            return False, "not a partition"
        covered |= m
    if covered != g.full:
        return False, "not a partition"
    for b in cert.blocks:
        m = to_mask(b.vertices)
        if len(set(map(frozenset, b.edges))) != len(b.edges):
            return False, "repeated edge"
        for u, v in b.edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
                return False, f"edge ({u}, {v}) not in graph"
            if not (m >> u & 1 and m >> v & 1):
                return False, f"edge ({u}, {v}) leaves its block"
        keep = sorted(b.vertices)
        index = {x: i for i, x in enumerate(keep)}
        local = new_graph(len(keep), [(index[u], index[v]) for u, v in b.edges])
        if b.kind == STAR:
            j = b.label
            if not isinstance(j, int) or j < 1:
                return False, "bad star label"
            if j > k:
                return False, "star size exceeds k"
            if len(keep) != j + 1 or local.m != j or max(local.degrees()) != j:
                return False, f"block is not K_1,{j}"
        elif b.kind == MEMBER:
            if len(keep) > catalog.max_order:
                return False, "block larger than catalog"
            if not is_tree(local):
                return False, "member block is not a spanning tree"
            code = canonical_code(local)
            if code != b.label:
                return False, "tree does not match its label"
            if not catalog.contains(len(keep), code):
                return False, "tree is not in the family"
        else:
            return False, f"unknown block kind {b.kind!r}"
    return True, "ok"
