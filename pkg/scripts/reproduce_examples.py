"""Print the worked examples: small expansions, the two-cycle example and the non-adjacent witnesses."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from chromsym.foresttriples import count_forest_triples, csf_forest_triples
from chromsym.formulas import b_formula, cycle_csf, two_cycle_csf
from chromsym.graph import LabeledGraph, chain_graph, cycle_graph, path_graph
from chromsym.oracle import check_equal, positivity

WITNESSES = {
    "edge+C4+C3, cut vertices opposite on C4": LabeledGraph(
        7, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 2), (4, 6), (6, 7), (7, 4))
    ),
    "edge+C5+P3, cut vertices non-adjacent on C5": LabeledGraph(
        8, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2), (5, 7), (7, 8))
    ),
}


@dataclass
class ExampleConfig:
    max_cycle: int = 8
    max_b: int = 6


def line(label, x, g=None):
    tail = ""
    if g is not None:
        tail = f"   [oracle {'agrees' if check_equal(x, g) else 'DISAGREES'}]"
    print(f"{label:<46} {x.pretty()}{tail}")


def run(cfg: ExampleConfig) -> None:
    p2 = path_graph(2)
    print(f"|FT(P2)| = {count_forest_triples(p2)}")
    line("X(P2)", csf_forest_triples(p2), p2)
    for a in range(2, cfg.max_cycle + 1):
        line(f"X(C{a}) closed form", cycle_csf(a), cycle_graph(a))
    for a in range(2, cfg.max_b):
        for k in range(1, cfg.max_b - a + 1):
            line(f"B({a},{k})", b_formula(a, k))
    line("X(C4+C3) two-cycle formula", two_cycle_csf(4, 3), chain_graph("C4+C3"))
    for name, g in WITNESSES.items():
        x = csf_forest_triples(g)
        rep = positivity(x)
        line(name, x, g)
        print(f"{'':<46} e-positive: {rep.positive}")


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-cycle", type=int, default=ExampleConfig.max_cycle)
    p.add_argument("--max-b", type=int, default=ExampleConfig.max_b, help="bound on a+k for B(a,k)")
    args = p.parse_args(argv)
    run(ExampleConfig(args.max_cycle, args.max_b))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
