"""Lifting an involution on FT(G') to FT(C_a+G').

In C_a+G' the cycle's vertex a is glued to vertex 1 of G'. A forest triple
splits at that vertex into an almost forest triple on C_a and a forest
triple on G'. When the G' half is moved by the given involution the halves
are glued back; when it is fixed, the cycle half together with the tree
through a is handled by the cycle+tree involution.
"""

from __future__ import annotations

from collections.abc import Callable

from ..algebra import split_first, split_last
from ..foresttriples import ForestTriple, TreeTriple
from ..graph import LabeledGraph, cycle_graph, graph_sum
from .cycle_tree import cycle_tree_involution_encoded
from .encoding import decode, encode


def _relabel(t: TreeTriple, dv: int, de: int, alpha=None, r=None) -> TreeTriple:
    return TreeTriple(
        frozenset(v + dv for v in t.vertices),
        frozenset(e + de for e in t.edges),
        t.alpha if alpha is None else alpha,
        t.r if r is None else r,
    )


def restrict(F: ForestTriple, a: int) -> tuple[ForestTriple, ForestTriple]:
    """(F restricted to C_a, F restricted to G'), G' relabelled to 1..|G'|.

    The cut tree keeps its first vertices' worth of composition on the cycle
    side (with the original root, possibly beyond the new first part) and
    its last vertices' worth on the G' side with root 1; the cut vertex is
    counted on both sides.
    """
    cycle_side: list[TreeTriple] = []
    other_side: list[TreeTriple] = []
    for t in F:
        if a in t.vertices:
            cv = frozenset(v for v in t.vertices if v <= a)
            ce = frozenset(e for e in t.edges if e < a)
            gv = frozenset(v for v in t.vertices if v >= a)
            ge = frozenset(e for e in t.edges if e >= a)
            cycle_side.append(TreeTriple(cv, ce, split_first(t.alpha, len(cv)), t.r))
            other_side.append(_relabel(TreeTriple(gv, ge, split_last(t.alpha, len(gv)), 1), 1 - a, -a))
        elif max(t.vertices) < a:
            cycle_side.append(t)
        else:
            other_side.append(_relabel(t, 1 - a, -a))
    return ForestTriple(tuple(cycle_side)), ForestTriple(tuple(other_side))


def combine(F1: ForestTriple, F2: ForestTriple, a: int) -> ForestTriple:
    """Glue an almost forest triple on C_a to a forest triple on G' at vertex a.

    The seam parts overlap in the shared vertex, so they merge to
    alpha_l + beta_1 - 1. Raises ValueError when G''s min triple has root
    other than 1 or the cycle root exceeds the merged first part.
    """
    head = F1.triple_at(a)
    tail = F2.triple_at(1)
    if tail.r != 1:
        raise ValueError("the G' triple through its first vertex must have root 1")
    al, be = head.alpha, tail.alpha
    merged = al[:-1] + (al[-1] + be[0] - 1,) + be[1:]
    if head.r > merged[0]:
        raise ValueError(f"root {head.r} exceeds merged first part {merged[0]}")
    seam = _relabel(tail, a - 1, a)
    out = [t for t in F1 if t is not head]
    out.append(TreeTriple(head.vertices | seam.vertices, head.edges | seam.edges, merged, head.r))
    out.extend(_relabel(t, a - 1, a) for t in F2 if t is not tail)
    return ForestTriple(tuple(out))


def composed_host(a: int, g_prime: LabeledGraph) -> LabeledGraph:
    return graph_sum(cycle_graph(a), g_prime)


def composed_involution(
    a: int, phi_prime: Callable[[ForestTriple], ForestTriple]
) -> Callable[[ForestTriple], ForestTriple]:
    """First-preserving involution on FT(C_a+G') from one on FT(G')."""

    def phi(F: ForestTriple) -> ForestTriple:
        cycle_half, other_half = restrict(F, a)
        image = phi_prime(other_half)
        if image != other_half:
            return combine(cycle_half, image, a)
        holder = F.triple_at(a)
        attached_v = frozenset(v for v in holder.vertices if v > a)
        attached_e = frozenset(e for e in holder.edges if e >= a)
        k = len(attached_v) + 1
        head = ForestTriple(tuple(t for t in F if min(t.vertices) <= a))
        rest = [t for t in F if min(t.vertices) > a]
        moved = encode(cycle_tree_involution_encoded(decode(head, a, k)), (attached_v, attached_e))
        return ForestTriple(tuple(moved.triples) + tuple(rest))

    return phi
