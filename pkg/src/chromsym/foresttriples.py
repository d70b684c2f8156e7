"""Tree and forest triples over NBC forests, and the signed e-expansions they give.

A forest triple assigns to every tree T of an NBC forest a composition alpha
of |T| and a root index 1 <= r <= alpha_1. Summing sign * e_type over all of
them yields the chromatic symmetric function in the e-basis; restricting to
triples whose tree through vertex 1 has alpha_1 = i and r = 1 (and dropping
that first part from the type) yields the refinement X^(i).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .algebra import Composition, ESym, Partition, compositions_of, sort_to_partition
from .errors import ResourceLimitError
from .graph import (
    LabeledGraph,
    cycle_graph,
    enumerate_nbc_forests,
    forest_components,
    graph_sum,
    is_nbc_forest,
    nbc_component_labels,
)


@dataclass(frozen=True)
class TreeTriple:
    vertices: frozenset[int]
    edges: frozenset[int]
    alpha: Composition
    r: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def is_unit(self) -> bool:
        return len(self.alpha) == 1

    def __str__(self) -> str:
        vs = ",".join(map(str, sorted(self.vertices)))
        al = ",".join(map(str, self.alpha))
        return f"({{{vs}}},({al}),{self.r})"


@dataclass(frozen=True)
class ForestTriple:
    """A set of tree triples, stored sorted by smallest tree vertex."""

    triples: tuple[TreeTriple, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.triples, key=lambda t: min(t.vertices)))
        object.__setattr__(self, "triples", ordered)

    def __iter__(self):
        return iter(self.triples)

    def __len__(self) -> int:
        return len(self.triples)

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.triples)) + ">"

    @property
    def edges(self) -> frozenset[int]:
        return frozenset().union(*(t.edges for t in self.triples))

    def triple_at(self, vertex: int) -> TreeTriple:
        for t in self.triples:
            if vertex in t.vertices:
                return t
        raise KeyError(vertex)


def triple_type(F: ForestTriple) -> Partition:
    return sort_to_partition(p for t in F for p in t.alpha)


def triple_sign(F: ForestTriple) -> int:
    overcount = sum(len(t.alpha) - 1 for t in F)
    return -1 if overcount % 2 else 1


def is_unit(F: ForestTriple) -> bool:
    return all(t.is_unit for t in F)


def min_triple(F: ForestTriple) -> TreeTriple:
    """The triple whose tree holds vertex 1."""
    return F.triple_at(1)


def type_prime(F: ForestTriple) -> Partition:
    first = min_triple(F)
    parts = list(first.alpha[1:])
    for t in F:
        if t is not first:
            parts.extend(t.alpha)
    return sort_to_partition(parts)


@lru_cache(maxsize=None)
def tree_options(size: int) -> tuple[tuple[Composition, int], ...]:
    """Every (alpha, r) a tree with ``size`` vertices can carry."""
    return tuple((alpha, r) for alpha in compositions_of(size) for r in range(1, alpha[0] + 1))


def count_tree_options(size: int) -> int:
    return len(tree_options(size))


def _triples_on_forest(g: LabeledGraph, forest: frozenset[int]) -> Iterator[ForestTriple]:
    comps = forest_components(g, forest)
    choices = [
        [TreeTriple(vs, es, alpha, r) for alpha, r in tree_options(len(vs))] for vs, es in comps
    ]
    for combo in product(*choices):
        yield ForestTriple(combo)


def enumerate_forest_triples(g: LabeledGraph, max_triples: int | None = None) -> Iterator[ForestTriple]:
    """Stream FT(g). With ``max_triples`` set, a ResourceLimitError is raised before exceeding it."""
    if max_triples is not None:
        total = count_forest_triples(g)
        if total > max_triples:
            raise ResourceLimitError(f"{g} has {total} forest triples, cap is {max_triples}")
    for forest in enumerate_nbc_forests(g):
        yield from _triples_on_forest(g, forest)


def count_forest_triples(g: LabeledGraph) -> int:
    if g.n == 0:
        return 1
    total = 0
    for (first, rest), mult in forest_profiles(g).items():
        prod = count_tree_options(first)
        for t in rest:
            prod *= count_tree_options(t)
        total += prod * mult
    return total


def signed_sum(triples: Iterable[ForestTriple]) -> ESym:
    acc: Counter = Counter()
    for F in triples:
        acc[triple_type(F)] += triple_sign(F)
    return ESym(acc)


def signed_sum_prime(triples: Iterable[ForestTriple]) -> ESym:
    acc: Counter = Counter()
    for F in triples:
        acc[type_prime(F)] += triple_sign(F)
    return ESym(acc)


# ---------------------------------------------------------------------------
# factored sums: each tree contributes independently, so one NBC forest with
# tree sizes (t_1, ..., t_m) contributes prod_j tree_factor(t_j)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def tree_factor(size: int) -> ESym:
    """Sum over alpha of |size| of alpha_1 * (-1)^(l-1) * e_alpha; alpha_1 counts the r choices."""
    acc: Counter = Counter()
    for alpha in compositions_of(size):
        acc[sort_to_partition(alpha)] += alpha[0] * (-1) ** (len(alpha) - 1)
    return ESym(acc)


@lru_cache(maxsize=None)
def tail_factor(size: int) -> ESym:
    """Sum over beta of |size| of (-1)^l(beta) * e_beta: the min tree after removing its first part."""
    acc: Counter = Counter()
    for beta in compositions_of(size):
        acc[sort_to_partition(beta)] += (-1) ** len(beta)
    return ESym(acc)


def forest_profiles(g: LabeledGraph) -> Counter:
    """Multiset of (size of tree through vertex 1, sorted sizes of the other trees) over NBC forests."""
    prof: Counter = Counter()
    if g.n == 0:
        return prof
    for comp in nbc_component_labels(g):
        sizes = Counter(comp[1:])
        first = sizes.pop(comp[1])
        prof[(first, tuple(sorted(sizes.values())))] += 1
    return prof


def _product(factors: Iterable[ESym]) -> ESym:
    out = ESym.one()
    for f in factors:
        out = out * f
    return out


def csf_forest_triples(g: LabeledGraph, method: str = "factored") -> ESym:
    """X_G as the signed sum of e_type over FT(G).

    ``method="enumerate"`` walks every forest triple; ``"factored"`` sums the
    same terms grouped per NBC forest.
    """
    if g.n == 0:
        return ESym.one()
    if method == "enumerate":
        return signed_sum(enumerate_forest_triples(g))
    if method != "factored":
        raise ValueError(f"unknown method {method!r}")
    total = ESym()
    for (first, rest), mult in forest_profiles(g).items():
        total = total + _product([tree_factor(first)] + [tree_factor(t) for t in rest]).scale(mult)
    return total


def ft_i_members(g: LabeledGraph, i: int) -> Iterator[ForestTriple]:
    """FT^(i)(G): the tree through vertex 1 has alpha_1 = i and r = 1."""
    for F in enumerate_forest_triples(g):
        t = min_triple(F)
        if t.alpha[0] == i and t.r == 1:
            yield F


def csf_i_all(g: LabeledGraph, method: str = "factored") -> dict[int, ESym]:
    """X^(i)_G for every i in 1..|G|, from one pass over the NBC forests."""
    if method == "enumerate":
        return {i: signed_sum_prime(ft_i_members(g, i)) for i in range(1, g.n + 1)}
    out = {i: ESym() for i in range(1, g.n + 1)}
    for (first, rest), mult in forest_profiles(g).items():
        others = _product(tree_factor(t) for t in rest).scale(mult)
        for i in range(1, first + 1):
            out[i] = out[i] + tail_factor(first - i) * others
    return out


def csf_i(g: LabeledGraph, i: int, method: str = "factored") -> ESym:
    if not 1 <= i <= g.n:
        raise ValueError(f"refinement index {i} outside 1..{g.n}")
    if method == "enumerate":
        return signed_sum_prime(ft_i_members(g, i))
    return csf_i_all(g, method)[i]


def assemble_from_refinements(pieces: dict[int, ESym]) -> ESym:
    """sum_i e_i * i * X^(i)."""
    total = ESym()
    for i, piece in pieces.items():
        if not piece.is_zero():
            total = total + ESym.e(i) * piece.scale(i)
    return total


# ---------------------------------------------------------------------------
# FT' for a graph with a tree hung at its largest vertex
# ---------------------------------------------------------------------------

def cut_vertex_filter(host: LabeledGraph, tree: LabeledGraph):
    """Return (graph host+tree, predicate selecting the FT' members).

    The tree through the cut vertex |host| must contain every edge of the
    attached tree, and its composition must end in a part >= |tree|.
    """
    g = graph_sum(host, tree)
    cut = host.n
    tree_edges = frozenset(range(host.num_edges, g.num_edges))
    k = tree.n

    def accept(F: ForestTriple) -> bool:
        t = F.triple_at(cut)
        return tree_edges <= t.edges and t.alpha[-1] >= k

    return g, accept


def ft_prime_members_generic(host: LabeledGraph, tree: LabeledGraph, i: int | None = None) -> Iterator[ForestTriple]:
    g, accept = cut_vertex_filter(host, tree)
    for F in enumerate_forest_triples(g):
        if not accept(F):
            continue
        if i is not None:
            t = min_triple(F)
            if t.alpha[0] != i or t.r != 1:
                continue
        yield F


def ft_prime_members(a: int, tree: LabeledGraph, i: int | None = None) -> Iterator[ForestTriple]:
    """FT'(C_a + U_k), or FT'^(i) when ``i`` is given."""
    return ft_prime_members_generic(cycle_graph(a), tree, i)


def is_forest_triple(g: LabeledGraph, F: ForestTriple) -> bool:
    """Full validity check of F as a member of FT(g)."""
    seen: set[int] = set()
    for t in F:
        if seen & t.vertices:
            return False
        seen |= t.vertices
        if sum(t.alpha) != len(t.vertices) or any(p < 1 for p in t.alpha):
            return False
        if not 1 <= t.r <= t.alpha[0]:
            return False
    if seen != set(g.vertices):
        return False
    if not is_nbc_forest(g, F.edges):
        return False
    comps = {(vs, es) for vs, es in forest_components(g, F.edges)}
    return comps == {(t.vertices, t.edges) for t in F}
