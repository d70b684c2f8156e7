"""Sweep cycle and cycle+clique chains, checking e-positivity and the colouring oracle."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from chromsym.formulas import chain_csf
from chromsym.graph import chain_graph, chain_specs, format_chain
from chromsym.oracle import check_equal, positivity


@dataclass
class SweepConfig:
    max_cycle_vertices: int = 10
    max_mixed_vertices: int = 9
    check_oracle: bool = True


def run(cfg: SweepConfig) -> dict:
    t0 = time.perf_counter()
    families = {
        "cycle": list(chain_specs(cfg.max_cycle_vertices, ("cycle",))),
        "cycle+clique": [
            c for c in chain_specs(cfg.max_mixed_vertices, ("cycle", "clique")) if any(k == "clique" for k, _ in c)
        ],
    }
    summary = {"config": asdict(cfg), "families": {}}
    for name, specs in families.items():
        negative, mismatched = [], []
        for spec in specs:
            x = chain_csf(spec)
            if not positivity(x).positive:
                negative.append(format_chain(spec))
            if cfg.check_oracle and not check_equal(x, chain_graph(spec)):
                mismatched.append(format_chain(spec))
        summary["families"][name] = {"chains": len(specs), "not_e_positive": negative, "oracle_mismatch": mismatched}
    summary["seconds"] = round(time.perf_counter() - t0, 1)
    return summary


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-cycle-vertices", type=int, default=SweepConfig.max_cycle_vertices)
    p.add_argument("--max-mixed-vertices", type=int, default=SweepConfig.max_mixed_vertices)
    p.add_argument("--no-oracle", action="store_true", help="skip the colouring comparison")
    args = p.parse_args(argv)
    cfg = SweepConfig(args.max_cycle_vertices, args.max_mixed_vertices, not args.no_oracle)
    summary = run(cfg)
    print(json.dumps(summary, indent=2))
    bad = any(f["not_e_positive"] or f["oracle_mismatch"] for f in summary["families"].values())
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
