"""First-preserving involution on FT'(C_a+U_k).

The tree through vertex a carries all of U_k and its composition ends in a
part >= k. Only sizes matter to the maps below, so U's shape never enters.

Classes and their pairings:
  A_i <-> B_i  join / break of consecutive regular trees
  C   <-> D    join the last regular tree into the second slot of T_min
  E   <-> F    move the last regular tree onto the end of T_min (no edge (a,1))
  G_i <-> H_i  rotate by i while merging T' and T_min
  I1, I2       fixed, unit only
"""

from __future__ import annotations

from ..foresttriples import ForestTriple
from .cycle import InvolutionClass
from .encoding import CycleFT, cyc, decode, encode

PARTNERS = {
    "A": "B", "B": "A", "C": "D", "D": "C", "E": "F", "F": "E",
    "G": "H", "H": "G", "I1": "I1", "I2": "I2",
}


def _split(cft: CycleFT):
    """(regular entries, T' or None, T_min)."""
    ent = cft.entries
    if cft.wrap:
        return list(ent[:-1]), None, ent[-1]
    return list(ent[:-2]), ent[-2], ent[-1]


def in_ft_prime(cft: CycleFT) -> bool:
    holder = cft.entries[cft.holder_index()]
    return holder[1][-1] >= cft.k


def classify_cycle_tree(cft: CycleFT) -> InvolutionClass:
    a, k = cft.a, cft.k
    regs, tp, tmin = _split(cft)
    m = len(regs)
    vmin, amin, _ = tmin
    for j, (_, al, r) in enumerate(regs, 1):
        if len(al) >= 2:
            return InvolutionClass("B", j)
        if r == 1:
            if j <= m - 1:
                return InvolutionClass("A", j)
            if cft.wrap:
                if len(amin) >= 2 or sum(al) >= k:
                    return InvolutionClass("C")
                return InvolutionClass("I1")
            return InvolutionClass("E")
    if cft.wrap:
        if len(amin) == 1:
            return InvolutionClass("I1")
        if amin[1] <= a - vmin:
            return InvolutionClass("D")
        v1 = regs[0][0] if m else vmin
        return InvolutionClass("H", v1 - 1 - amin[0])
    if len(amin) >= 2:
        return InvolutionClass("F")
    _, ap, rp = tp
    size_p, size_min = sum(ap), sum(amin)
    if rp <= size_p + size_min - k:
        return InvolutionClass("G", size_p - k - rp + 1)
    return InvolutionClass("I2")


def _shift(entries, d, a):
    return [(cyc(v + d, a), al, r) for v, al, r in entries]


def _tjoin(cft, i):
    ent = list(cft.entries)
    v, al, _ = ent[i - 1]
    _, nal, nr = ent[i]
    ent[i - 1:i + 1] = [(v, nal + al, nr)]
    return CycleFT(cft.a, ent, cft.k)


def _tbreak(cft, i):
    ent = list(cft.entries)
    v, al, r = ent[i - 1]
    tail = al[-1]
    ent[i - 1:i] = [(v, (tail,), 1), (cyc(v + tail, cft.a), al[:-1], r)]
    return CycleFT(cft.a, ent, cft.k)


def _secondjoin(cft):
    regs, _, (_, amin, rmin) = _split(cft)
    vm, am, _ = regs[-1]
    merged = (vm, (amin[0],) + am + amin[1:], rmin)
    return CycleFT(cft.a, regs[:-1] + [merged], cft.k)


def _secondbreak(cft):
    regs, _, (vmin, amin, rmin) = _split(cft)
    second = amin[1]
    return CycleFT(
        cft.a,
        regs + [(vmin, (second,), 1), (cyc(vmin + second, cft.a), (amin[0],) + amin[2:], rmin)],
        cft.k,
    )


def _shiftjoin(cft):
    regs, tp, (_, amin, rmin) = _split(cft)
    s = sum(regs[-1][1])
    moved = regs[-1][1]
    return CycleFT(cft.a, _shift(regs[:-1], s, cft.a) + [tp, (1, amin + moved, rmin)], cft.k)


def _shiftbreak(cft):
    regs, tp, (_, amin, rmin) = _split(cft)
    s = amin[-1]
    a = cft.a
    piece = (cyc(tp[0] - s, a), (s,), 1)
    return CycleFT(a, _shift(regs, -s, a) + [piece, tp, (1, amin[:-1], rmin)], cft.k)


def _rotatejoin(cft, i):
    regs, (_, ap, rp), (_, amin, rmin) = _split(cft)
    a = cft.a
    return CycleFT(a, _shift(regs, i, a) + [(cyc(a - rp + 1, a), amin + ap, rmin)], cft.k)


def _rotatebreak(cft, i):
    regs, _, (vmin, amin, rmin) = _split(cft)
    a = cft.a
    tp = (cyc(vmin - i, a), amin[1:], a - vmin + 1)
    return CycleFT(a, _shift(regs, -i, a) + [tp, (1, (amin[0],), rmin)], cft.k)


def cycle_tree_involution_encoded(cft: CycleFT) -> CycleFT:
    cls = classify_cycle_tree(cft)
    lab, i = cls.label, cls.index
    if lab == "A":
        return _tjoin(cft, i)
    if lab == "B":
        return _tbreak(cft, i)
    if lab == "C":
        return _secondjoin(cft)
    if lab == "D":
        return _secondbreak(cft)
    if lab == "E":
        return _shiftjoin(cft)
    if lab == "F":
        return _shiftbreak(cft)
    if lab == "G":
        return _rotatejoin(cft, i)
    if lab == "H":
        return _rotatebreak(cft, i)
    return cft


def cycle_tree_involution(F: ForestTriple, a: int, k: int, attachment=None) -> ForestTriple:
    """The involution on FT'(C_a+U_k) for plain forest triples.

    ``attachment`` gives the (vertices, edge ranks) of U beyond vertex a;
    by default the graph_sum(C_a, U_k) layout.
    """
    return encode(cycle_tree_involution_encoded(decode(F, a, k)), attachment)


def cycle_tree_involution_map(a: int, k: int):
    return lambda F: cycle_tree_involution(F, a, k)
