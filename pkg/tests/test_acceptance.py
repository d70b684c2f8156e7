"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import random
import time
from collections import Counter

import pytest

from chromsym.algebra import ESym, compositions_of
from chromsym.foresttriples import (
    assemble_from_refinements,
    count_forest_triples,
    csf_forest_triples,
    csf_i_all,
    enumerate_forest_triples,
    ft_prime_members,
    signed_sum,
    signed_sum_prime,
)
from chromsym.formulas import (
    attach_cycle_csf,
    b_formula,
    b_i_formula,
    chain_csf,
    cycle_csf,
    cycle_csf_i,
    two_cycle_csf,
)
from chromsym.graph import LabeledGraph, chain_graph, chain_specs, cycle_graph, path_graph, star_graph
from chromsym.involutions import (
    audit_involution,
    combine,
    composed_involution,
    cycle_involution_map,
    cycle_tree_involution_map,
    decode,
    restrict,
)
from chromsym.oracle import check_equal, csf_coloring_oracle, e_to_monomial, positivity

from conftest import small_graphs

pytestmark = pytest.mark.acceptance


def E(terms):
    return ESym({tuple(k): v for k, v in terms.items()})


def _minus_one_product(beta):
    out = beta[0]
    for b in beta:
        out *= b - 1
    return out


def test_criterion_01_path_p2(criterion):
    g = path_graph(2)
    timings = []
    for _ in range(5):
        t0 = time.perf_counter()
        count = count_forest_triples(g)
        x = signed_sum(enumerate_forest_triples(g))
        timings.append(time.perf_counter() - t0)
    ok = count == 4 and x == E({(2,): 2}) and min(timings) < 1e-3
    assert criterion(1, ok, f"|FT(P2)|={count}, X={x.pretty()}, {min(timings) * 1e6:.0f}us")


def test_criterion_02_c6(criterion):
    t0 = time.perf_counter()
    expected = E({(6,): 30, (4, 2): 18, (3, 3): 12, (2, 2, 2): 2})
    g = cycle_graph(6)
    by_triples = csf_forest_triples(g, method="enumerate")
    by_formula = cycle_csf(6)
    by_oracle = e_to_monomial(expected, 6) == csf_coloring_oracle(g)
    elapsed = time.perf_counter() - t0
    ok = by_triples == expected and by_formula == expected and by_oracle and elapsed < 1
    assert criterion(2, ok, f"C6 = {by_triples.pretty()} by triples, formula and colourings, {elapsed:.2f}s")


def test_criterion_03_small_graphs(criterion):
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    graphs = small_graphs(5)
    checked = 0
    mismatches = []
    for g in graphs:
        mono = csf_coloring_oracle(g)
        for _ in range(3):
            perm = list(range(g.num_edges))
            rng.shuffle(perm)
            h = g.with_edge_order(perm)
            if e_to_monomial(csf_forest_triples(h), g.n) != mono:
                mismatches.append((g.edges, perm))
            checked += 1
    elapsed = time.perf_counter() - t0
    ok = len(graphs) == 52 and not mismatches and elapsed < 120
    assert criterion(3, ok, f"{len(graphs)} graphs x 3 edge orders = {checked} checks, "
                            f"{len(mismatches)} mismatches, {elapsed:.1f}s")


def test_criterion_04_cycle_audit(criterion):
    t0 = time.perf_counter()
    problems = []
    slowest = 0.0
    for a in range(2, 9):
        ta = time.perf_counter()
        domain = list(enumerate_forest_triples(cycle_graph(a)))
        report = audit_involution(domain, cycle_involution_map(a))
        fixed = [F for F in domain if cycle_involution_map(a)(F) == F]
        by_beta = Counter()
        for F in fixed:
            entries = decode(F, a).entries
            beta = (entries[-1][1][0],) + tuple(al[0] for _, al, _ in entries[:-1])
            by_beta[beta] += 1
        expected = {b: _minus_one_product(b) for b in compositions_of(a) if _minus_one_product(b)}
        if not report.ok:
            problems.append(f"a={a}: {len(report.violations)} violations")
        if dict(by_beta) != expected:
            problems.append(f"a={a}: fixed-point counts {dict(by_beta)}")
        slowest = max(slowest, time.perf_counter() - ta)
    elapsed = time.perf_counter() - t0
    ok = not problems and slowest < 120
    assert criterion(4, ok, f"a=2..8 {'clean' if not problems else problems}, slowest a {slowest:.1f}s, total {elapsed:.1f}s")


def _trees(k):
    return {"path": path_graph(k), "star": star_graph(k)}


def test_criterion_05_cycle_tree(criterion):
    t0 = time.perf_counter()
    problems = []
    cases = 0
    for a in range(2, 9):
        for k in range(1, 10 - a):
            for shape, tree in _trees(k).items():
                cases += 1
                domain = list(ft_prime_members(a, tree))
                if not audit_involution(domain, cycle_tree_involution_map(a, k)).ok:
                    problems.append(f"audit {a},{k},{shape}")
                if signed_sum(domain) != b_formula(a, k):
                    problems.append(f"B {a},{k},{shape}")
                for i in range(1, a + k):
                    piece = signed_sum_prime(ft_prime_members(a, tree, i))
                    if piece != b_i_formula(a, k, i):
                        problems.append(f"B^({i}) {a},{k},{shape}")
                    if piece.negative_terms():
                        problems.append(f"negative B^({i}) {a},{k}")
                    if i == k and not piece.is_zero():
                        problems.append(f"B^({k}) nonzero {a},{k}")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 300
    assert criterion(5, ok, f"{cases} (a,k,shape) cases with a+k<=9, "
                            f"{'all checks hold' if not problems else problems[:5]}, {elapsed:.1f}s")


def test_criterion_06_shape_independence(criterion):
    differing = []
    cases = 0
    for a in range(2, 9):
        for k in range(1, 10 - a):
            sums = {shape: signed_sum(ft_prime_members(a, tree)) for shape, tree in _trees(k).items()}
            cases += 1
            if sums["path"] != sums["star"]:
                differing.append((a, k))
    assert criterion(6, not differing, f"B_(a,k) path vs star agree on {cases - len(differing)}/{cases} pairs")


def test_criterion_07_c4_c3(criterion):
    t0 = time.perf_counter()
    expected = E({(3, 2, 1): 4, (4, 2): 20, (5, 1): 24, (6,): 36})
    g = chain_graph("C4+C3")
    routes = {
        "two-cycle formula": two_cycle_csf(4, 3),
        "attachment formula": attach_cycle_csf(4, {i: cycle_csf_i(3, i) for i in range(1, 4)}),
        "enumeration": signed_sum(enumerate_forest_triples(g)),
    }
    oracle_ok = e_to_monomial(expected, g.n) == csf_coloring_oracle(g)
    elapsed = time.perf_counter() - t0
    bad = [name for name, x in routes.items() if x != expected]
    ok = not bad and oracle_ok and elapsed < 60
    assert criterion(7, ok, f"C4+C3 = {expected.pretty()}; mismatched routes {bad}, oracle {oracle_ok}, {elapsed:.1f}s")


def test_criterion_08_decomposition(criterion):
    graphs = small_graphs(4) + [cycle_graph(a) for a in range(2, 8)]
    graphs += [chain_graph(s) for s in ("C4+C3", "C3+K3", "K3+C4", "C2+C4+C3", "K4+C3")]
    bad = []
    for g in graphs:
        if assemble_from_refinements(csf_i_all(g)) != csf_forest_triples(g):
            bad.append(str(g))
    pairs = 0
    for a in range(2, 9):
        for k in range(1, 10 - a):
            pairs += 1
            pieces = {i: b_i_formula(a, k, i) for i in range(1, a + k)}
            if assemble_from_refinements(pieces) != b_formula(a, k):
                bad.append(f"B({a},{k})")
    assert criterion(8, not bad, f"{len(graphs)} graphs and {pairs} B_(a,k) decompose exactly, failures {bad}")


def test_criterion_09_chain_positivity(criterion):
    t0 = time.perf_counter()
    cycle_chains = list(chain_specs(10, ("cycle",)))
    mixed_chains = [c for c in chain_specs(9, ("cycle", "clique")) if any(k == "clique" for k, _ in c)]
    negative, mismatched = [], []
    for spec in cycle_chains + mixed_chains:
        x = chain_csf(spec)
        if not positivity(x).positive:
            negative.append(spec)
        if not check_equal(x, chain_graph(spec), method="stable"):
            mismatched.append(spec)
    elapsed = time.perf_counter() - t0
    ok = not negative and not mismatched and elapsed < 600
    assert criterion(9, ok, f"{len(cycle_chains)} cycle chains (n<=10) and {len(mixed_chains)} cycle+clique "
                            f"chains (n<=9): {len(negative)} not e-positive, {len(mismatched)} oracle mismatches, "
                            f"{elapsed:.0f}s")


# An edge, a 4-cycle and a triangle; the cut vertices 2 and 4 are opposite on the 4-cycle.
FIG6_RIGHT = LabeledGraph(7, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 2), (4, 6), (6, 7), (7, 4)))
# An edge, a 5-cycle and a pendant path; the cut vertices 2 and 5 are not adjacent.
FIG7 = LabeledGraph(8, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2), (5, 7), (7, 8)))


def test_criterion_10_nonadjacent_witnesses(criterion):
    t0 = time.perf_counter()
    x6 = csf_forest_triples(FIG6_RIGHT)
    x7 = csf_forest_triples(FIG7)
    coeff = x6.coefficient((3, 2, 2))
    agree = check_equal(x6, FIG6_RIGHT) and check_equal(x7, FIG7)
    pos7 = positivity(x7).positive
    elapsed = time.perf_counter() - t0
    ok = coeff == -8 and pos7 and agree and elapsed < 120
    assert criterion(10, ok, f"e_(3,2,2) coefficient {coeff}, second witness e-positive {pos7}, "
                             f"oracle agreement {agree}, {elapsed:.1f}s")


def test_criterion_11_composed(criterion):
    t0 = time.perf_counter()
    problems = []
    sizes = []
    for a in (3, 4):
        g = chain_graph(f"C{a}+C3")
        domain = list(enumerate_forest_triples(g))
        sizes.append(len(domain))
        report = audit_involution(domain, composed_involution(a, cycle_involution_map(3)))
        if not report.ok:
            problems.append(f"C{a}+C3: {len(report.violations)} violations")
        trips = sum(1 for F in domain if combine(*restrict(F, a), a) != F)
        if trips:
            problems.append(f"C{a}+C3: {trips} round-trip failures")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 300
    assert criterion(11, ok, f"FT(C3+C3), FT(C4+C3) sizes {sizes}: "
                             f"{'audit clean, round-trips exact' if not problems else problems}, {elapsed:.1f}s")
