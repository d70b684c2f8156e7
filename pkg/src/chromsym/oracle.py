"""Ground truth for X_G straight from proper colorings.

X_G is homogeneous of degree n = |G|, so it is determined by its monomial
coefficients in n variables: the coefficient of m_lambda is the number of
proper colorings using colour j exactly lambda_j times. Two counting routes
are provided: literal iteration over all n^n colourings, and a count of
ordered stable-set partitions, which is the same number grouped by colour
class. Neither touches forest triples.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import factorial

from .algebra import ESym, Partition, sort_to_partition
from .errors import ResourceLimitError
from .graph import LabeledGraph

DEFAULT_BRUTE_CAP = 8
DEFAULT_STABLE_CAP = 16


@dataclass(frozen=True)
class MonomialSym:
    """Integer combination of monomial symmetric functions m_lambda."""

    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v != 0})

    def __add__(self, other: MonomialSym) -> MonomialSym:
        acc = Counter(self.terms)
        for k, v in other.terms.items():
            acc[k] += v
        return MonomialSym(dict(acc))

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialSym) and self.terms == other.terms

    def coefficient(self, lam) -> int:
        return self.terms.get(sort_to_partition(lam), 0)


@dataclass(frozen=True)
class PositivityReport:
    positive: bool
    negative_terms: list[tuple[Partition, int]]


def _distinct_adjacent(g: LabeledGraph) -> list[tuple[int, int]]:
    # parallel edges impose one constraint
    return sorted({(min(u, v), max(u, v)) for u, v in g.edges})


def _brute_chunk(n: int, pairs: list[tuple[int, int]], first_color: int) -> Counter:
    tally: Counter = Counter()
    u0 = [(u - 1, v - 1) for u, v in pairs]
    for rest in product(range(n), repeat=n - 1):
        kappa = (first_color,) + rest
        if any(kappa[u] == kappa[v] for u, v in u0):
            continue
        counts = Counter(kappa)
        exps = tuple(counts.get(c, 0) for c in range(n))
        # only the sorted exponent vector's own monomial is kept: one
        # representative per m_lambda
        if all(exps[j] >= exps[j + 1] for j in range(n - 1)):
            tally[sort_to_partition(exps)] += 1
    return tally


def csf_coloring_oracle(
    g: LabeledGraph, cap: int = DEFAULT_BRUTE_CAP, workers: int = 1
) -> MonomialSym:
    """Iterate all colourings V -> {1..n} and read off monomial coefficients.

    The coefficient of m_lambda equals the number of proper colourings whose
    colour multiplicities are exactly (lambda_1, lambda_2, ...) on colours
    1, 2, ...; those are the colourings tallied. Work is split by the colour
    of vertex 1.
    """
    n = g.n
    if n > cap:
        raise ResourceLimitError(f"brute-force oracle capped at {cap} vertices, graph has {n}")
    if n == 0:
        return MonomialSym({(): 1})
    pairs = _distinct_adjacent(g)
    total: Counter = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_brute_chunk, [n] * n, [pairs] * n, range(n)):
                total.update(part)
    else:
        for c in range(n):
            total.update(_brute_chunk(n, pairs, c))
    return MonomialSym(dict(total))


def csf_stable_partitions(g: LabeledGraph, cap: int = DEFAULT_STABLE_CAP) -> MonomialSym:
    """Monomial expansion via stable-set partitions.

    A proper colouring is an ordered choice of colour classes, each a stable
    set. Counting unordered stable partitions of type lambda and multiplying
    by prod(mult_j!) gives the number of colourings with multiplicities
    lambda on colours 1..l.
    """
    n = g.n
    if n > cap:
        raise ResourceLimitError(f"stable-partition oracle capped at {cap} vertices, graph has {n}")
    if n == 0:
        return MonomialSym({(): 1})
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u - 1] |= 1 << (v - 1)
        nbr[v - 1] |= 1 << (u - 1)

    def stable(mask: int) -> bool:
        m = mask
        while m:
            low = m & -m
            idx = low.bit_length() - 1
            if nbr[idx] & mask:
                return False
            m ^= low
        return True

    @lru_cache(maxsize=None)
    def partitions_of(mask: int) -> tuple[tuple[Partition, int], ...]:
        if mask == 0:
            return (((), 1),)
        low = mask & -mask
        rest = mask ^ low
        acc: Counter = Counter()
        sub = rest
        while True:
            block = sub | low
            if stable(block):
                size = block.bit_count() if hasattr(block, "bit_count") else bin(block).count("1")
                for lam, c in partitions_of(mask ^ block):
                    acc[sort_to_partition(lam + (size,))] += c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        return tuple(acc.items())

    out = {}
    for lam, count in partitions_of((1 << n) - 1):
        mult = Counter(lam)
        weight = 1
        for m in mult.values():
            weight *= factorial(m)
        out[lam] = count * weight
    return MonomialSym(out)


@lru_cache(maxsize=None)
def _zero_one_matrices(rows: Partition, cols: Partition) -> int:
    """Number of 0-1 matrices with the given row and column sums."""
    if not rows:
        return 1 if not any(cols) else 0
    first, rest = rows[0], rows[1:]
    live = [j for j, c in enumerate(cols) if c > 0]
    if len(live) < first:
        return 0
    total = 0
    for picked in combinations(live, first):
        new_cols = list(cols)
        for j in picked:
            new_cols[j] -= 1
        total += _zero_one_matrices(rest, tuple(sorted((c for c in new_cols if c), reverse=True)))
    return total


def _partitions(n: int, max_part: int | None = None) -> list[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            out.append((p,) + rest)
    return out


def e_to_monomial(x: ESym, nvars: int) -> MonomialSym:
    """Expand in the monomial basis restricted to ``nvars`` variables.

    <e_lambda, m_mu> is the number of 0-1 matrices with row sums lambda and
    column sums mu; patterns with more than ``nvars`` parts vanish.
    """
    deg = x.degree
    if deg is None:
        return MonomialSym({})
    if any(max(lam, default=0) > nvars for lam in x):
        raise ValueError(f"{nvars} variables cannot carry an e-part larger than {nvars}")
    if nvars < deg:
        # still exact on the patterns that fit, but callers comparing with a
        # degree-n oracle need nvars >= n
        raise ValueError(f"need at least {deg} variables, got {nvars}")
    out: Counter = Counter()
    for mu in _partitions(deg):
        if len(mu) > nvars:
            continue
        for lam, c in x.items():
            out[mu] += c * _zero_one_matrices(lam, mu)
    return MonomialSym(dict(out))


def check_equal(x: ESym, g: LabeledGraph, method: str = "stable", cap: int | None = None) -> bool:
    """True iff ``x`` is X_G, compared monomial by monomial in |G| variables."""
    if method == "brute":
        truth = csf_coloring_oracle(g, cap or DEFAULT_BRUTE_CAP)
    elif method == "stable":
        truth = csf_stable_partitions(g, cap or DEFAULT_STABLE_CAP)
    else:
        raise ValueError(f"unknown oracle method {method!r}")
    if g.n == 0:
        return x == ESym.one()
    try:
        mine = e_to_monomial(x, g.n)
    except ValueError:
        return False
    return mine == truth


def positivity(x: ESym) -> PositivityReport:
    neg = x.negative_terms()
    return PositivityReport(not neg, neg)
