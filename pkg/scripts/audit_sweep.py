"""Audit the cycle, cycle+tree and composed involutions over a range of sizes."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from chromsym.foresttriples import enumerate_forest_triples, ft_prime_members
from chromsym.graph import chain_graph, cycle_graph, path_graph, star_graph
from chromsym.involutions import (
    audit_involution,
    composed_involution,
    cycle_involution_map,
    cycle_tree_involution_map,
    matching_involution,
)


@dataclass
class AuditConfig:
    max_cycle: int = 8
    max_cycle_tree: int = 9
    composed_cycles: tuple[int, ...] = (3, 4)
    composed_onto: tuple[str, ...] = ("C3", "C4", "K3", "K2+K2")


def _row(kind, label, report, seconds):
    return {"kind": kind, "case": label, "domain": report.domain_size, "fixed": report.fixed_points,
            "violations": len(report.violations), "seconds": round(seconds, 2)}


def run(cfg: AuditConfig) -> list[dict]:
    rows = []
    for a in range(2, cfg.max_cycle + 1):
        t0 = time.perf_counter()
        rep = audit_involution(enumerate_forest_triples(cycle_graph(a)), cycle_involution_map(a))
        rows.append(_row("cycle", f"C{a}", rep, time.perf_counter() - t0))
    for a in range(2, cfg.max_cycle_tree):
        for k in range(1, cfg.max_cycle_tree - a + 1):
            for shape, tree in (("path", path_graph(k)), ("star", star_graph(k))):
                t0 = time.perf_counter()
                rep = audit_involution(ft_prime_members(a, tree), cycle_tree_involution_map(a, k))
                rows.append(_row("cycle+tree", f"C{a}+{shape}{k}", rep, time.perf_counter() - t0))
    for a in cfg.composed_cycles:
        for onto in cfg.composed_onto:
            t0 = time.perf_counter()
            g_prime = chain_graph(onto)
            if g_prime.name.startswith("C") and "+" not in onto:
                phi_prime = cycle_involution_map(g_prime.n)
            else:
                phi_prime = matching_involution(enumerate_forest_triples(g_prime))
            host = chain_graph(f"C{a}+{onto}")
            rep = audit_involution(enumerate_forest_triples(host), composed_involution(a, phi_prime))
            rows.append(_row("composed", host.name, rep, time.perf_counter() - t0))
    return rows


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-cycle", type=int, default=AuditConfig.max_cycle)
    p.add_argument("--max-cycle-tree", type=int, default=AuditConfig.max_cycle_tree, help="bound on a+k")
    args = p.parse_args(argv)
    cfg = AuditConfig(max_cycle=args.max_cycle, max_cycle_tree=args.max_cycle_tree)
    rows = run(cfg)
    print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=1))
    return 1 if any(r["violations"] for r in rows) else 0


if __name__ == "__main__":
    raise SystemExit(main())
