"""Compact arc encoding of forest triples on C_a and C_a+U_k.

On a cycle every tree is an arc, so a tree triple is determined by its start
vertex v, its composition alpha and its root index r. A ``CycleFT`` lists
the triples not containing vertex 1 by start vertex, then the triple holding
vertex 1 last. When a tree U with k vertices hangs at vertex a, the triple
whose tree contains a also owns the k-1 vertices of U, so its arc on the
cycle has sum(alpha) - (k - 1) vertices.

The two orderings used by the cycle and cycle+tree involutions coincide
with this one: when edge (a,1) is absent, the tree through a is the
second-to-last entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import Composition
from ..foresttriples import ForestTriple, TreeTriple

Arc = tuple[int, Composition, int]


def cyc(v: int, a: int) -> int:
    """Representative of v modulo a in 1..a."""
    return (v - 1) % a + 1


@dataclass(frozen=True)
class CycleFT:
    a: int
    entries: tuple[Arc, ...]
    k: int = 1

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple((int(v), tuple(al), int(r)) for v, al, r in self.entries)
        )

    @property
    def wrap(self) -> bool:
        """True iff edge (a,1) lies in the tree through vertex 1."""
        return self.entries[-1][0] != 1

    def holder_index(self) -> int:
        """Position of the entry whose tree contains vertex a."""
        return len(self.entries) - 1 if self.wrap else len(self.entries) - 2

    def arc_size(self, idx: int) -> int:
        size = sum(self.entries[idx][1])
        if idx == self.holder_index():
            size -= self.k - 1
        return size

    def __str__(self) -> str:
        body = ",".join(f"({v},({','.join(map(str, al))}),{r})" for v, al, r in self.entries)
        return f"<{body}>"


def _entering_rank(u: int, a: int) -> int:
    # the cycle edge ending at u: (u-1, u) for u >= 2, (a, 1) for u = 1
    return u - 2 if u >= 2 else a - 1


def decode(F: ForestTriple, a: int, k: int = 1) -> CycleFT:
    """Arc encoding of F. Only cycle vertices 1..a and cycle edge ranks 0..a-1 are read."""
    arcs = []
    for t in F:
        on_cycle = [u for u in t.vertices if u <= a]
        if not on_cycle:
            continue
        starts = [u for u in on_cycle if _entering_rank(u, a) not in t.edges]
        if len(starts) != 1:
            raise ValueError(f"tree {sorted(t.vertices)} is not an arc of C_{a}")
        arcs.append((starts[0], t.alpha, t.r, 1 in t.vertices))
    regular = sorted((x for x in arcs if not x[3]), key=lambda x: x[0])
    first = [x for x in arcs if x[3]]
    entries = tuple((v, al, r) for v, al, r, _ in regular + first)
    return CycleFT(a, entries, k)


def default_attachment(a: int, k: int) -> tuple[frozenset[int], frozenset[int]]:
    """Extra vertices and edge ranks of U_k in graph_sum(C_a, U_k)."""
    return frozenset(range(a + 1, a + k)), frozenset(range(a, a + k - 1))


def encode(cft: CycleFT, attachment: tuple[frozenset[int], frozenset[int]] | None = None) -> ForestTriple:
    """Inverse of ``decode``; ``attachment`` is added to the tree through vertex a."""
    a, k = cft.a, cft.k
    if attachment is None:
        attachment = default_attachment(a, k)
    extra_v, extra_e = attachment
    holder = cft.holder_index()
    triples = []
    for idx, (v, al, r) in enumerate(cft.entries):
        size = cft.arc_size(idx)
        verts = [cyc(v + j, a) for j in range(size)]
        # edge (u, u+1) has rank u-1, edge (a, 1) rank a-1
        edges = [u - 1 for u in verts[:-1]]
        vs, es = frozenset(verts), frozenset(edges)
        if idx == holder:
            vs, es = vs | extra_v, es | extra_e
        triples.append(TreeTriple(vs, es, al, r))
    return ForestTriple(tuple(triples))


def tiles_cycle(cft: CycleFT) -> bool:
    """Structural check: arcs are consecutive, cover 1..a once, and the ordering convention holds."""
    a = cft.a
    if not cft.entries:
        return False
    sizes = [cft.arc_size(i) for i in range(len(cft.entries))]
    if any(s < 1 for s in sizes) or sum(sizes) != a:
        return False
    starts = [v for v, _, _ in cft.entries]
    if any(not 1 <= v <= a for v in starts):
        return False
    for idx in range(len(starts)):
        nxt = starts[(idx + 1) % len(starts)]
        if cyc(starts[idx] + sizes[idx], a) != nxt:
            return False
    regs = starts[:-1]
    if regs != sorted(regs) or 1 in regs:
        return False
    last_v, last_size = starts[-1], sizes[-1]
    # the last arc must contain vertex 1
    return last_v == 1 or last_v + last_size - 1 > a
