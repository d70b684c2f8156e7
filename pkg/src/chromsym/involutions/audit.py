"""Axiom checks for sign-reversing and first-preserving involutions."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from ..foresttriples import ForestTriple, is_unit, min_triple, triple_sign, triple_type

AXIOMS = ("closure", "involution", "type", "sign", "fixed-unit", "first")


@dataclass
class InvolutionAuditReport:
    domain_size: int = 0
    fixed_points: int = 0
    violations: list[tuple[ForestTriple, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self, limit: int = 20) -> dict:
        return {
            "domain_size": self.domain_size,
            "fixed_points": self.fixed_points,
            "violations": [{"forest_triple": str(F), "axiom": ax} for F, ax in self.violations[:limit]],
            "violation_count": len(self.violations),
        }


def audit_involution(
    domain: Iterable[ForestTriple],
    phi: Callable[[ForestTriple], ForestTriple],
    first_preserving: bool = True,
) -> InvolutionAuditReport:
    """Check every axiom on a materialised domain; violations are collected, not raised."""
    members = list(domain)
    universe = set(members)
    report = InvolutionAuditReport(domain_size=len(members))
    for F in members:
        try:
            G = phi(F)
        except Exception as exc:  # a crash is a failed axiom for that input
            report.violations.append((F, f"closure: {type(exc).__name__}: {exc}"))
            continue
        if G not in universe:
            report.violations.append((F, "closure"))
            continue
        if phi(G) != F:
            report.violations.append((F, "involution"))
        if triple_type(G) != triple_type(F):
            report.violations.append((F, "type"))
        if G == F:
            report.fixed_points += 1
            if not is_unit(F) or triple_sign(F) != 1:
                report.violations.append((F, "fixed-unit"))
        elif triple_sign(G) == triple_sign(F):
            report.violations.append((F, "sign"))
        if first_preserving:
            t, u = min_triple(F), min_triple(G)
            if (t.alpha[0], t.r) != (u.alpha[0], u.r):
                report.violations.append((F, "first"))
    return report


def matching_involution(domain: Iterable[ForestTriple]) -> Callable[[ForestTriple], ForestTriple]:
    """Some first-preserving involution on ``domain``, built by pairing.

    Triples are grouped by (type, alpha_1 and r of the min triple); inside a
    group negative triples are paired with non-unit positive ones first,
    then with unit positive ones. Leftover unit positives are fixed. Raises
    ValueError when no such involution exists for this grouping.
    """
    groups: dict[tuple, list[ForestTriple]] = defaultdict(list)
    for F in domain:
        t = min_triple(F)
        groups[(triple_type(F), t.alpha[0], t.r)].append(F)
    table: dict[ForestTriple, ForestTriple] = {}
    for key, members in groups.items():
        members.sort(key=str)
        neg = [F for F in members if triple_sign(F) < 0]
        pos_nonunit = [F for F in members if triple_sign(F) > 0 and not is_unit(F)]
        pos_unit = [F for F in members if triple_sign(F) > 0 and is_unit(F)]
        if len(pos_nonunit) > len(neg):
            raise ValueError(f"non-unit positive triples cannot all be cancelled in class {key}")
        pos = pos_nonunit + pos_unit
        if len(neg) > len(pos):
            raise ValueError(f"class {key} has more negative than positive triples")
        for F, G in zip(neg, pos):
            table[F] = G
            table[G] = F
        for F in pos[len(neg):]:
            table[F] = F
    return table.__getitem__
