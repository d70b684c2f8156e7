"""Compositions, partitions and exact e-basis arithmetic.

Compositions and partitions are plain tuples of positive ints. ``ESym`` is an
immutable integer combination of elementary symmetric functions e_lambda,
keyed by partition tuples; the empty partition keys the constant 1.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from itertools import product

Composition = tuple[int, ...]
Partition = tuple[int, ...]


def sort_to_partition(parts: Iterable[int]) -> Partition:
    """Sort parts into non-increasing order, dropping zero pseudo-parts (e_0 = 1)."""
    return tuple(sorted((p for p in parts if p != 0), reverse=True))


def compositions_of(n: int) -> Iterator[Composition]:
    """Yield all compositions of ``n`` in lexicographic order.

    For n = 0 the single empty composition is produced.
    """
    if n < 0:
        raise ValueError(f"cannot compose a negative integer: {n}")
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def _locate(alpha: Composition, j: int) -> tuple[int, int]:
    if not 1 <= j <= sum(alpha):
        raise ValueError(f"split point {j} outside 1..{sum(alpha)}")
    acc = 0
    for idx, part in enumerate(alpha):
        if acc + part >= j:
            return idx, j - acc
        acc += part
    raise AssertionError("unreachable")


def split_first(alpha: Composition, j: int) -> Composition:
    """The prefix composition (alpha_1, ..., alpha_{i-1}, k) of ``j``, 1 <= k <= alpha_i."""
    idx, k = _locate(alpha, j)
    return alpha[:idx] + (k,)


def split_last(alpha: Composition, j: int) -> Composition:
    """The suffix composition (k, alpha_{i+1}, ..., alpha_m) of ``j``, 1 <= k <= alpha_i."""
    total = sum(alpha)
    if not 1 <= j <= total:
        raise ValueError(f"split point {j} outside 1..{total}")
    # the suffix starts inside the part holding unit position total - j + 1
    idx, offset = _locate(alpha, total - j + 1)
    return (alpha[idx] - offset + 1,) + alpha[idx + 1:]


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return sort_to_partition(int(p) for p in text.split(","))


class ESym:
    """Integer linear combination of e_lambda.

    Instances are immutable; arithmetic returns new objects. Zero coefficients
    are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, c in items:
            key = sort_to_partition(lam)
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        degrees = {sum(k) for k in self._terms}
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous e-expansion, degrees {sorted(degrees)}")
        self._hash: int | None = None

    @classmethod
    def e(cls, *parts: int, coeff: int = 1) -> ESym:
        return cls({tuple(parts): coeff})

    @classmethod
    def one(cls) -> ESym:
        return cls({(): 1})

    @classmethod
    def zero(cls) -> ESym:
        return cls()

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    @property
    def degree(self) -> int | None:
        """Common degree of all terms, or None for the zero function."""
        for lam in self._terms:
            return sum(lam)
        return None

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, lam: Iterable[int]) -> int:
        return self._terms.get(sort_to_partition(lam), 0)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: ESym) -> ESym:
        if not isinstance(other, ESym):
            if other == 0:
                return self
            return NotImplemented
        if self.degree is not None and other.degree is not None and self.degree != other.degree:
            raise ValueError(f"cannot add degree {self.degree} to degree {other.degree}")
        merged = dict(self._terms)
        for lam, c in other._terms.items():
            merged[lam] = merged.get(lam, 0) + c
        return ESym(merged)

    __radd__ = __add__

    def __neg__(self) -> ESym:
        return ESym({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: ESym) -> ESym:
        return self + (-other)

    def scale(self, c: int) -> ESym:
        return ESym({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: ESym | int) -> ESym:
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, ESym):
            return NotImplemented
        out: dict[Partition, int] = {}
        for (lam, c), (mu, d) in product(self._terms.items(), other._terms.items()):
            key = sort_to_partition(lam + mu)
            out[key] = out.get(key, 0) + c * d
        return ESym(out)

    def __rmul__(self, other: int) -> ESym:
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ESym):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_items(self) -> list[tuple[Partition, int]]:
        """Terms ordered by partition, lexicographically descending."""
        return sorted(self._terms.items(), reverse=True)

    def negative_terms(self) -> list[tuple[Partition, int]]:
        return [(lam, c) for lam, c in self.sorted_items() if c < 0]

    def to_json_terms(self) -> dict[str, int]:
        return {format_partition(lam): c for lam, c in self.sorted_items()}

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for lam, c in self.sorted_items():
            body = "" if not lam else f"e_{{{format_partition(lam)}}}"
            mag = abs(c)
            coef = str(mag) if (mag != 1 or not body) else ""
            chunks.append(("- " if c < 0 else "+ ") + coef + body)
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"ESym({self.pretty()})"


def e_sum(parts: Iterable[ESym]) -> ESym:
    total = ESym()
    for p in parts:
        total = total + p
    return total
