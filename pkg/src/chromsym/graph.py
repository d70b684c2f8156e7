"""Labeled graphs with a fixed total order on edges, and broken-circuit machinery.

Vertices are 1..n. ``edges`` is a tuple of vertex pairs; an edge's rank is
its position in that tuple. Parallel edges are allowed (C_2 is a double edge),
loops are not. Edge subsets are ``frozenset`` objects of ranks.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

EdgeSet = frozenset


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {(u, v)} has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return self.n

    def with_edge_order(self, perm: Sequence[int]) -> LabeledGraph:
        """Same graph, edges listed as ``[edges[p] for p in perm]``."""
        if sorted(perm) != list(range(self.num_edges)):
            raise ValueError("not a permutation of edge ranks")
        return LabeledGraph(self.n, tuple(self.edges[p] for p in perm), self.name)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def __str__(self) -> str:
        return self.name or f"G(n={self.n}, m={self.num_edges})"


def _lex(edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def cycle_graph(a: int) -> LabeledGraph:
    """C_a with edges (1,2) < (2,3) < ... < (a-1,a) < (a,1)."""
    if a < 2:
        raise ValueError(f"cycle needs at least 2 vertices, got {a}")
    edges = tuple((j, j + 1) for j in range(1, a)) + ((a, 1),)
    return LabeledGraph(a, edges, f"C{a}")


def clique_graph(k: int) -> LabeledGraph:
    if k < 1:
        raise ValueError("clique needs at least 1 vertex")
    edges = tuple((i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1))
    return LabeledGraph(k, edges, f"K{k}")


def path_graph(k: int) -> LabeledGraph:
    if k < 1:
        raise ValueError("path needs at least 1 vertex")
    return LabeledGraph(k, tuple((j, j + 1) for j in range(1, k)), f"P{k}")


def star_graph(k: int, center: int = 1) -> LabeledGraph:
    """Star on k vertices; the attachment vertex 1 is the center unless ``center`` says otherwise."""
    if k < 1:
        raise ValueError("star needs at least 1 vertex")
    if not 1 <= center <= k:
        raise ValueError("center outside 1..k")
    return tree_graph(k, [(center, j) for j in range(1, k + 1) if j != center], name=f"S{k}")


def tree_graph(k: int, edges: Iterable[tuple[int, int]], name: str = "") -> LabeledGraph:
    """Tree on vertices 1..k, edges ordered lexicographically."""
    edges = _lex(edges)
    if k < 1 or len(edges) != k - 1:
        raise ValueError(f"a tree on {k} vertices needs {k - 1} edges")
    g = LabeledGraph(k, edges, name or f"U{k}")
    if k > 1 and len(_components(k, edges)) != 1:
        raise ValueError("tree edges do not connect all vertices")
    return g


def edgeless_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, (), f"E{n}")


def graph_sum(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Glue vertex |g1| of g1 to vertex 1 of g2; g1's edges precede g2's."""
    if g1.n < 1 or g2.n < 1:
        raise ValueError("both summands need at least one vertex")
    shift = g1.n - 1
    edges = g1.edges + tuple((u + shift, v + shift) for u, v in g2.edges)
    name = f"{g1}+{g2}" if g1.name and g2.name else ""
    return LabeledGraph(g1.n + g2.n - 1, edges, name)


_SEGMENT = re.compile(r"([CK])(\d+)", re.IGNORECASE)


def parse_chain(text: str) -> list[tuple[str, int]]:
    """Parse ``"C4+C3+K5"`` into ``[("cycle", 4), ("cycle", 3), ("clique", 5)]``."""
    pieces = [p.strip() for p in text.strip().split("+")]
    if not pieces or pieces == [""]:
        raise ValueError("empty chain specification")
    out = []
    for piece in pieces:
        m = _SEGMENT.fullmatch(piece)
        if not m:
            raise ValueError(f"malformed chain segment {piece!r}")
        kind = "cycle" if m.group(1).upper() == "C" else "clique"
        out.append((kind, int(m.group(2))))
    return out


def format_chain(spec: Sequence[tuple[str, int]]) -> str:
    return "+".join(("C" if kind == "cycle" else "K") + str(size) for kind, size in spec)


def segment_graph(kind: str, size: int) -> LabeledGraph:
    if kind == "cycle":
        return cycle_graph(size)
    if kind == "clique":
        return clique_graph(size)
    raise ValueError(f"unknown segment kind {kind!r}")


def chain_graph(spec: Sequence[tuple[str, int]] | str) -> LabeledGraph:
    if isinstance(spec, str):
        spec = parse_chain(spec)
    if not spec:
        raise ValueError("empty chain specification")
    g = segment_graph(*spec[0])
    for seg in spec[1:]:
        g = graph_sum(g, segment_graph(*seg))
    return LabeledGraph(g.n, g.edges, format_chain(spec))


def chain_specs(max_n: int, kinds: Sequence[str] = ("cycle",)) -> Iterator[tuple[tuple[str, int], ...]]:
    """Every chain of segments of size >= 2 drawn from ``kinds`` with at most ``max_n`` vertices."""

    def walk(prefix, n):
        if prefix:
            yield tuple(prefix)
        for kind in kinds:
            for size in range(2, max_n + 2):
                grown = n + size - (1 if prefix else 0)
                if grown > max_n:
                    break
                yield from walk(prefix + [(kind, size)], grown)

    yield from walk([], 0)


def parse_graph_text(text: str) -> LabeledGraph:
    """Read the ``n <count>`` / ``e <u> <v>`` text format; edge order is line order."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if fields[0] == "n" and len(fields) == 2:
                if n is not None:
                    raise ValueError("duplicate vertex count")
                n = int(fields[1])
            elif fields[0] == "e" and len(fields) == 3:
                edges.append((int(fields[1]), int(fields[2])))
            else:
                raise ValueError(f"unrecognised record {line!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("missing 'n <count>' line")
    return LabeledGraph(n, tuple(edges))


def format_graph_text(g: LabeledGraph) -> str:
    return "\n".join([f"n {g.n}"] + [f"e {u} {v}" for u, v in g.edges]) + "\n"


# ---------------------------------------------------------------------------
# forests and broken circuits
# ---------------------------------------------------------------------------

def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[frozenset[int]]:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    groups: dict[int, set[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(s) for s in groups.values()]


def forest_components(g: LabeledGraph, s: Iterable[int]) -> list[tuple[frozenset[int], frozenset[int]]]:
    """(vertex set, edge-rank set) of every tree of the spanning forest ``s``, isolated vertices included.

    Sorted by smallest vertex.
    """
    s = frozenset(s)
    comps = _components(g.n, (g.edges[r] for r in s))
    where = {v: i for i, comp in enumerate(comps) for v in comp}
    edge_sets: list[set[int]] = [set() for _ in comps]
    for r in s:
        edge_sets[where[g.edges[r][0]]].add(r)
    out = [(comp, frozenset(es)) for comp, es in zip(comps, edge_sets)]
    out.sort(key=lambda c: min(c[0]))
    return out


def is_forest(g: LabeledGraph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return len(_components(g.n, (g.edges[r] for r in s))) == g.n - len(s)


def simple_cycles(g: LabeledGraph) -> set[frozenset[int]]:
    """Edge-rank sets of all cycles (2-cycles from parallel edges included), by DFS."""
    incident: list[list[tuple[int, int]]] = [[] for _ in range(g.n + 1)]
    for r, (u, v) in enumerate(g.edges):
        incident[u].append((r, v))
        incident[v].append((r, u))
    found: set[frozenset[int]] = set()

    def extend(start, here, used_vertices, used_edges):
        for r, nxt in incident[here]:
            if r in used_edges:
                continue
            if nxt == start:
                found.add(frozenset(used_edges | {r}))
            elif nxt > start and nxt not in used_vertices:
                extend(start, nxt, used_vertices | {nxt}, used_edges | {r})

    # every cycle is discovered from its smallest vertex
    for start in g.vertices:
        extend(start, start, frozenset({start}), frozenset())
    return found


def broken_circuits(g: LabeledGraph) -> set[frozenset[int]]:
    """Every cycle minus its largest-rank edge."""
    return {c - {max(c)} for c in simple_cycles(g)}


def _tree_path(g: LabeledGraph, s: frozenset[int], src: int, dst: int) -> list[int] | None:
    adj: dict[int, list[tuple[int, int]]] = {}
    for r in s:
        u, v = g.edges[r]
        adj.setdefault(u, []).append((r, v))
        adj.setdefault(v, []).append((r, u))
    stack = [(src, [])]
    seen = {src}
    while stack:
        here, path = stack.pop()
        if here == dst:
            return path
        for r, nxt in adj.get(here, ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append((nxt, path + [r]))
    return None


def is_nbc_forest(g: LabeledGraph, s: Iterable[int]) -> bool:
    """True iff ``s`` contains no broken circuit.

    Uses the path-max test: ``s`` must be acyclic, and no edge outside ``s``
    may close a cycle in which it is the largest edge.
    """
    s = frozenset(s)
    if not is_forest(g, s):
        return False
    for f in range(g.num_edges):
        if f in s:
            continue
        path = _tree_path(g, s, *g.edges[f])
        if path is not None and f > max(path):
            return False
    return True


def enumerate_nbc_forests(g: LabeledGraph) -> Iterator[frozenset[int]]:
    """All NBC edge sets, each once.

    Edges are decided in increasing rank. An edge whose endpoints are already
    joined by smaller chosen edges can be neither taken (cycle) nor skipped
    (the joining path is a broken circuit), so that branch is dropped.
    """
    m = g.num_edges
    edges = g.edges

    def walk(r, comp, chosen):
        if r == m:
            yield frozenset(chosen)
            return
        u, v = edges[r]
        cu, cv = comp[u], comp[v]
        if cu == cv:
            return
        yield from walk(r + 1, comp, chosen)
        merged = tuple(cu if c == cv else c for c in comp)
        chosen.append(r)
        yield from walk(r + 1, merged, chosen)
        chosen.pop()

    yield from walk(0, tuple(range(g.n + 1)), [])


def nbc_component_labels(g: LabeledGraph) -> Iterator[tuple[int, ...]]:
    """For each NBC forest, a tuple mapping vertex -> component label (index 0 unused).

    Same walk as ``enumerate_nbc_forests`` without materialising edge sets;
    callers that only need tree sizes use this.
    """
    m = g.num_edges
    edges = g.edges

    def walk(r, comp):
        while r < m:
            u, v = edges[r]
            cu, cv = comp[u], comp[v]
            if cu == cv:
                return
            yield from walk(r + 1, comp)
            comp = tuple(cu if c == cv else c for c in comp)
            r += 1
        yield comp

    yield from walk(0, tuple(range(g.n + 1)))
