"""First-preserving involution on FT(C_a).

Forest triples are split into classes A_i, B_i, C_i, D_i and E. A_i and B_i
are swapped by joining T_i onto T_(i+1) or breaking off the last part of
T_i; C_i and D_i by a rotation of the whole cycle by i steps combined with
a join or break of the two trees around vertex 1; E is fixed pointwise and
consists of unit triples only.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from ..algebra import compositions_of
from ..foresttriples import ForestTriple
from .encoding import CycleFT, cyc, decode, encode


@dataclass(frozen=True)
class InvolutionClass:
    label: str
    index: int | None = None

    def __str__(self) -> str:
        return self.label if self.index is None else f"{self.label}_{self.index}"


PARTNERS = {"A": "B", "B": "A", "C": "D", "D": "C", "E": "E"}


def classify_cycle(cft: CycleFT) -> InvolutionClass:
    a, ent = cft.a, cft.entries
    m = len(ent)
    for j in range(m - 1):
        _, al, r = ent[j]
        if len(al) >= 2:
            return InvolutionClass("B", j + 1)
        if r == 1:
            return InvolutionClass("A", j + 1)
    vm, am, _ = ent[-1]
    if vm == 1:
        # no edge (a,1): T_(m-1) ends at vertex a, and m >= 2 since the
        # spanning path 1..a is the broken circuit
        assert m >= 2, "spanning path is not an NBC forest"
        return InvolutionClass("C", ent[-2][2] - 1)
    if len(am) == 1:
        return InvolutionClass("E")
    if am[-1] <= a - vm + 1:
        return InvolutionClass("B", m)
    return InvolutionClass("D", am[-1] - a + vm - 1)


def _tjoin(cft: CycleFT, i: int) -> CycleFT:
    ent = list(cft.entries)
    v, al, _ = ent[i - 1]
    _, nal, nr = ent[i]
    ent[i - 1:i + 1] = [(v, nal + al, nr)]
    return CycleFT(cft.a, ent, cft.k)


def _tbreak(cft: CycleFT, i: int) -> CycleFT:
    ent = list(cft.entries)
    v, al, r = ent[i - 1]
    tail = al[-1]
    ent[i - 1:i] = [(v, (tail,), 1), (cyc(v + tail, cft.a), al[:-1], r)]
    return CycleFT(cft.a, ent, cft.k)


def _rotatejoin(cft: CycleFT, i: int) -> CycleFT:
    a, ent = cft.a, cft.entries
    shifted = [(cyc(v + i, a), al, r) for v, al, r in ent[:-2]]
    v_prev, al_prev, _ = ent[-2]
    _, al_m, r_m = ent[-1]
    return CycleFT(a, shifted + [(cyc(v_prev + i, a), al_m + al_prev, r_m)], cft.k)


def _rotatebreak(cft: CycleFT, i: int) -> CycleFT:
    a, ent = cft.a, cft.entries
    shifted = [(cyc(v - i, a), al, r) for v, al, r in ent[:-1]]
    v_m, al_m, r_m = ent[-1]
    tail = al_m[-1]
    return CycleFT(a, shifted + [(cyc(v_m - i, a), (tail,), i + 1), (1, al_m[:-1], r_m)], cft.k)


def cycle_involution_encoded(cft: CycleFT) -> CycleFT:
    cls = classify_cycle(cft)
    if cls.label == "A":
        return _tjoin(cft, cls.index)
    if cls.label == "B":
        return _tbreak(cft, cls.index)
    if cls.label == "C":
        return _rotatejoin(cft, cls.index)
    if cls.label == "D":
        return _rotatebreak(cft, cls.index)
    return cft


def cycle_involution(F: ForestTriple, a: int) -> ForestTriple:
    """The involution on FT(C_a), acting on plain forest triples."""
    return encode(cycle_involution_encoded(decode(F, a)))


def cycle_involution_map(a: int):
    return lambda F: cycle_involution(F, a)


def cycle_fixed_points(a: int) -> Iterator[ForestTriple]:
    """Members of class E, generated directly by composition.

    For beta a composition of a, the tree through vertex 1 has |beta_1|
    vertices, contains edge (a,1) and may take any root; the remaining trees
    follow in order with roots >= 2.
    """
    if a < 2:
        raise ValueError("cycle needs at least 2 vertices")
    for beta in compositions_of(a):
        first = beta[0]
        rest = beta[1:]
        if any(b < 2 for b in rest) or first < 2:
            continue
        # vertex 1 sits at offset 1..first-1 inside the first arc
        for offset in range(1, first):
            start = cyc(1 - offset, a)
            for root in range(1, first + 1):
                yield from _fill_rest(a, start, first, rest, root)


def _fill_rest(a, start, first, rest, root):
    def walk(pos, j, acc):
        if j == len(rest):
            yield encode(CycleFT(a, acc + [(start, (first,), root)]))
            return
        for r in range(2, rest[j] + 1):
            yield from walk(pos + rest[j], j + 1, acc + [(cyc(pos, a), (rest[j],), r)])

    return walk(start + first, 0, [])

