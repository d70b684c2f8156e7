"""Closed e-expansions for cycles, cycle attachments and chains.

Every function evaluates at concrete integers and returns an ``ESym``.
Zero parts produced by ``alpha_1 - 1`` terms are dropped (e_0 = 1).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .algebra import ESym, compositions_of, sort_to_partition
from .errors import ResourceLimitError
from .foresttriples import (
    assemble_from_refinements,
    csf_i_all,
    ft_prime_members_generic,
    signed_sum,
    signed_sum_prime,
)
from .graph import LabeledGraph, chain_graph, format_chain, parse_chain

DEFAULT_FALLBACK_CAP = 11


def _minus_one(parts) -> int:
    return prod(p - 1 for p in parts)


@lru_cache(maxsize=None)
def cycle_csf(a: int) -> ESym:
    """X_{C_a} = sum over alpha of a of alpha_1 (alpha_1 - 1) ... (alpha_l - 1) e_alpha."""
    if a < 2:
        raise ValueError(f"cycle needs at least 2 vertices, got {a}")
    acc: Counter = Counter()
    for alpha in compositions_of(a):
        acc[sort_to_partition(alpha)] += alpha[0] * _minus_one(alpha)
    return ESym(acc)


@lru_cache(maxsize=None)
def cycle_csf_i(a: int, i: int) -> ESym:
    """X^(i)_{C_a} = sum over alpha of a-i of (i-1) (alpha_1 - 1) ... (alpha_l - 1) e_alpha."""
    if a < 2:
        raise ValueError(f"cycle needs at least 2 vertices, got {a}")
    if not 1 <= i <= a:
        raise ValueError(f"refinement index {i} outside 1..{a}")
    acc: Counter = Counter()
    for alpha in compositions_of(a - i):
        acc[sort_to_partition(alpha)] += (i - 1) * _minus_one(alpha)
    return ESym(acc)


def _check_ak(a: int, k: int) -> None:
    if a < 2:
        raise ValueError(f"cycle needs at least 2 vertices, got {a}")
    if k < 1:
        raise ValueError(f"attached tree needs at least 1 vertex, got {k}")


@lru_cache(maxsize=None)
def b_formula(a: int, k: int) -> ESym:
    """B_{a,k}: signed sum over FT'(C_a+U_k)."""
    _check_ak(a, k)
    acc: Counter = Counter()
    for alpha in compositions_of(a + k):
        if len(alpha) < 2:
            continue
        a1, a2 = alpha[0], alpha[1]
        if not (a1 <= k <= a2):
            continue
        coeff = (a2 - a1 + 1) * (a1 + a2 - k - 1) * _minus_one(alpha[2:])
        acc[sort_to_partition((a1 - 1,) + alpha[1:])] += coeff
    return ESym(acc)


@lru_cache(maxsize=None)
def b_i_formula(a: int, k: int, i: int) -> ESym:
    """B^(i)_{a,k}: the refinement of B_{a,k} with alpha_1^(min) = i, r_min = 1."""
    _check_ak(a, k)
    if not 1 <= i <= a + k - 1:
        raise ValueError(f"refinement index {i} outside 1..{a + k - 1}")
    acc: Counter = Counter()
    if i <= k - 1:
        for alpha in compositions_of(a + k - i - 1):
            if alpha[0] >= k:
                acc[sort_to_partition(alpha)] += (k - i) * _minus_one(alpha[1:])
    else:
        for alpha in compositions_of(a + k - i):
            if alpha and alpha[0] <= k:
                acc[sort_to_partition((alpha[0] - 1,) + alpha[1:])] += (i - k) * _minus_one(alpha[1:])
    return ESym(acc)


@lru_cache(maxsize=None)
def two_cycle_csf(a: int, b: int) -> ESym:
    """X_{C_a+C_b} as a double sum over alpha of a and beta of b + alpha_1."""
    if a < 2 or b < 2:
        raise ValueError("both cycles need at least 2 vertices")
    acc: Counter = Counter()
    for alpha in compositions_of(a):
        wa = _minus_one(alpha)
        if wa == 0:
            continue
        k = alpha[0]
        for beta in compositions_of(b + k):
            if len(beta) < 2 or not (beta[0] <= k <= beta[1]):
                continue
            coeff = wa * (beta[1] - beta[0] + 1) * (beta[0] + beta[1] - k - 1) * _minus_one(beta[2:])
            acc[sort_to_partition(alpha[1:] + beta[1:] + (beta[0] - 1,))] += coeff
    return ESym(acc)


def attach_cycle_csf(a: int, xk: Mapping[int, ESym]) -> ESym:
    """X_{C_a+G'} from the refinements X^(k)_{G'}: sum_k X^(k) * B_{a,k}."""
    total = ESym()
    for k, piece in sorted(xk.items()):
        if not piece.is_zero():
            total = total + piece * b_formula(a, k)
    return total


def attach_cycle_csf_i(a: int, xk: Mapping[int, ESym], i: int) -> ESym:
    """X^(i)_{C_a+G'} = sum_k X^(k)_{G'} * B^(i)_{a,k}."""
    total = ESym()
    for k, piece in sorted(xk.items()):
        if piece.is_zero() or i > a + k - 1:
            continue
        total = total + piece * b_i_formula(a, k, i)
    return total


def attach_cycle_refinements(a: int, xk: Mapping[int, ESym]) -> dict[int, ESym]:
    n_prime = max(xk)
    return {i: attach_cycle_csf_i(a, xk, i) for i in range(1, a + n_prime)}


@dataclass(frozen=True)
class ChainSpec:
    segments: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.segments:
            raise ValueError("empty chain specification")
        for kind, size in self.segments:
            if kind == "cycle" and size < 2:
                raise ValueError(f"cycle segment needs size >= 2, got {size}")
            if kind == "clique" and size < 1:
                raise ValueError(f"clique segment needs size >= 1, got {size}")
            if kind not in ("cycle", "clique"):
                raise ValueError(f"unknown segment kind {kind!r}")

    @classmethod
    def parse(cls, text: str) -> ChainSpec:
        return cls(tuple(parse_chain(text)))

    @property
    def n(self) -> int:
        return sum(s for _, s in self.segments) - len(self.segments) + 1

    def __str__(self) -> str:
        return format_chain(self.segments)


def _as_spec(spec) -> ChainSpec:
    if isinstance(spec, ChainSpec):
        return spec
    if isinstance(spec, str):
        return ChainSpec.parse(spec)
    return ChainSpec(tuple(spec))


def chain_refinements(spec, fallback_cap: int = DEFAULT_FALLBACK_CAP) -> dict[int, ESym]:
    """X^(i) of a cycle/clique chain, folding from the last segment leftwards.

    A cycle segment applies the attachment formula to the current pieces; a
    clique segment has no closed formula here, so the pieces of the partial
    chain starting at that clique are enumerated directly.
    """
    spec = _as_spec(spec)
    return dict(_suffix_refinements(spec.segments, fallback_cap))


@lru_cache(maxsize=8192)
def _suffix_refinements(segs: tuple[tuple[str, int], ...], fallback_cap: int) -> tuple[tuple[int, ESym], ...]:
    kind, size = segs[0]
    if kind == "cycle":
        if len(segs) == 1:
            pieces = {i: cycle_csf_i(size, i) for i in range(1, size + 1)}
        else:
            pieces = attach_cycle_refinements(size, dict(_suffix_refinements(segs[1:], fallback_cap)))
    else:
        partial = chain_graph(list(segs))
        if partial.n > fallback_cap:
            raise ResourceLimitError(
                f"clique-headed chain {format_chain(segs)} needs direct enumeration "
                f"on {partial.n} vertices, cap is {fallback_cap}"
            )
        pieces = csf_i_all(partial)
    return tuple(sorted(pieces.items()))


def chain_csf(spec, fallback_cap: int = DEFAULT_FALLBACK_CAP) -> ESym:
    return assemble_from_refinements(chain_refinements(spec, fallback_cap))


def chain_csf_i(spec, i: int, fallback_cap: int = DEFAULT_FALLBACK_CAP) -> ESym:
    pieces = chain_refinements(spec, fallback_cap)
    if i not in pieces:
        raise ValueError(f"refinement index {i} outside 1..{len(pieces)}")
    return pieces[i]


def generic_b(host: LabeledGraph, tree: LabeledGraph) -> ESym:
    """Signed sum over the FT'-style subset of FT(host + tree); experimental for non-cycle hosts."""
    return signed_sum(ft_prime_members_generic(host, tree))


def generic_b_i(host: LabeledGraph, tree: LabeledGraph, i: int) -> ESym:
    return signed_sum_prime(ft_prime_members_generic(host, tree, i))


def compose_at_cut(host: LabeledGraph, xk: Mapping[int, ESym], trees: Sequence[LabeledGraph]) -> ESym:
    """sum_k X^(k)_{G'} * B_{host,k}, with ``trees[k-1]`` the tree used for size k."""
    total = ESym()
    for k, piece in sorted(xk.items()):
        if not piece.is_zero():
            total = total + piece * generic_b(host, trees[k - 1])
    return total
