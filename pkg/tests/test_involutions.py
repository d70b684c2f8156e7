import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromsym.foresttriples import (
    ForestTriple,
    TreeTriple,
    enumerate_forest_triples,
    ft_prime_members,
    is_unit,
    triple_sign,
)
from chromsym.graph import chain_graph, clique_graph, cycle_graph, path_graph, star_graph
from chromsym.involutions import (
    CycleFT,
    audit_involution,
    classify_cycle,
    classify_cycle_tree,
    combine,
    composed_involution,
    cycle_fixed_points,
    cycle_involution_encoded,
    cycle_involution_map,
    cycle_tree_involution_encoded,
    cycle_tree_involution_map,
    decode,
    encode,
    matching_involution,
    restrict,
    tiles_cycle,
)
from chromsym.involutions.cycle import PARTNERS as CYCLE_PARTNERS
from chromsym.involutions.cycle_tree import PARTNERS as CYCLE_TREE_PARTNERS


def C(a, entries, k=1):
    return CycleFT(a, entries, k)


# (input, class of input, image, class of image) on C_6
CYCLE_FIXTURES = [
    ([(2, (1,), 1), (3, (3,), 3), (6, (1, 1), 1)], "A_1",
     [(2, (3, 1), 3), (6, (1, 1), 1)], "B_1"),
    ([(2, (2,), 2), (4, (3,), 2), (1, (1,), 1)], "C_1",
     [(3, (2,), 2), (5, (1, 3), 1)], "D_1"),
    ([(3, (2,), 2), (5, (1, 1, 2), 1)], "B_2",
     [(3, (2,), 2), (5, (2,), 1), (1, (1, 1), 1)], "A_2"),
]

# the same, on C_6 with a 4-vertex tree hung at vertex 6
CYCLE_TREE_FIXTURES = [
    ([(2, (1,), 1), (3, (1, 2), 1), (6, (1, 4), 1)], "A_1",
     [(2, (1, 2, 1), 1), (6, (1, 4), 1)], "B_1"),
    ([(2, (2,), 2), (4, (1,), 1), (5, (2, 4), 2)], "C",
     [(2, (2,), 2), (4, (2, 1, 4), 2)], "D"),
    ([(2, (2,), 2), (4, (2,), 1), (6, (4,), 2), (1, (1,), 1)], "E",
     [(4, (2,), 2), (6, (4,), 2), (1, (1, 2), 1)], "F"),
    ([(2, (2,), 2), (4, (2, 4), 1), (1, (1,), 1)], "G_2",
     [(4, (2,), 2), (6, (1, 2, 4), 1)], "H_2"),
    ([(2, (2,), 2), (4, (2, 4), 2), (1, (1,), 1)], "G_1",
     [(3, (2,), 2), (5, (1, 2, 4), 1)], "H_1"),
    ([(3, (7,), 5), (1, (2,), 2)], "G_-1",
     [(2, (2, 7), 2)], "H_-1"),
]


@pytest.mark.parametrize("src,src_cls,dst,dst_cls", CYCLE_FIXTURES)
def test_cycle_fixtures(src, src_cls, dst, dst_cls):
    x, y = C(6, src), C(6, dst)
    assert str(classify_cycle(x)) == src_cls
    assert cycle_involution_encoded(x) == y
    assert str(classify_cycle(y)) == dst_cls
    assert cycle_involution_encoded(y) == x


@pytest.mark.parametrize("src,src_cls,dst,dst_cls", CYCLE_TREE_FIXTURES)
def test_cycle_tree_fixtures(src, src_cls, dst, dst_cls):
    x, y = C(6, src, 4), C(6, dst, 4)
    assert str(classify_cycle_tree(x)) == src_cls
    assert cycle_tree_involution_encoded(x) == y
    assert str(classify_cycle_tree(y)) == dst_cls
    assert cycle_tree_involution_encoded(y) == x


def test_encoding_string():
    assert str(C(6, [(3, (2,), 2), (5, (1, 3), 1)])) == "<(3,(2),2),(5,(1,3),1)>"


@pytest.mark.parametrize("a", range(2, 7))
def test_decode_encode_round_trip(a):
    for F in enumerate_forest_triples(cycle_graph(a)):
        cft = decode(F, a)
        assert tiles_cycle(cft)
        assert encode(cft) == F


@pytest.mark.parametrize("a", range(2, 7))
def test_cycle_classes_total_and_partnered(a):
    phi = cycle_involution_map(a)
    for F in enumerate_forest_triples(cycle_graph(a)):
        cls = classify_cycle(decode(F, a))
        image_cls = classify_cycle(decode(phi(F), a))
        assert cls.label in CYCLE_PARTNERS
        assert image_cls.label == CYCLE_PARTNERS[cls.label]
        assert image_cls.index == cls.index


@pytest.mark.parametrize("a", range(2, 8))
def test_cycle_fixed_points_are_class_e(a):
    domain = list(enumerate_forest_triples(cycle_graph(a)))
    phi = cycle_involution_map(a)
    fixed = {F for F in domain if phi(F) == F}
    generated = list(cycle_fixed_points(a))
    assert len(generated) == len(set(generated))
    assert set(generated) == fixed
    assert all(is_unit(F) and triple_sign(F) == 1 for F in fixed)
    assert len(fixed) == 2 ** a - 2


@pytest.mark.parametrize("a,k", [(a, k) for a in range(2, 7) for k in range(1, 9 - a)])
def test_cycle_tree_classes_total_and_partnered(a, k):
    phi = cycle_tree_involution_map(a, k)
    for F in ft_prime_members(a, path_graph(k)):
        cls = classify_cycle_tree(decode(F, a, k))
        image_cls = classify_cycle_tree(decode(phi(F), a, k))
        assert image_cls.label == CYCLE_TREE_PARTNERS[cls.label]
        assert image_cls.index == cls.index


@pytest.mark.parametrize("a,k,tree", [(3, 4, star_graph(4)), (4, 3, star_graph(3, center=2)), (5, 2, path_graph(2))])
def test_cycle_tree_audit_other_shapes(a, k, tree):
    # the map only reads sizes, so any tree hung at the cut vertex works
    domain = list(ft_prime_members(a, tree))
    report = audit_involution(domain, cycle_tree_involution_map(a, k))
    assert report.ok, report.to_json()


@given(st.integers(2, 6), st.data())
def test_cycle_involution_pairs_opposite_signs(a, data):
    domain = list(enumerate_forest_triples(cycle_graph(a)))
    F = data.draw(st.sampled_from(domain))
    G = cycle_involution_map(a)(F)
    assert cycle_involution_map(a)(G) == F
    if G != F:
        assert triple_sign(G) == -triple_sign(F)


@pytest.mark.parametrize("a,spec", [(3, "C3"), (3, "C4"), (4, "C3"), (4, "C2")])
def test_restrict_combine_round_trip(a, spec):
    g = chain_graph(f"C{a}+{spec}")
    for F in enumerate_forest_triples(g):
        left, right = restrict(F, a)
        assert combine(left, right, a) == F


def test_combine_rejects_bad_root():
    # C_3 + C_3 glued at vertex 3; the G' side is relabelled 1..3
    single = lambda v, r=1: TreeTriple(frozenset({v}), frozenset(), (1,), r)
    left = ForestTriple((single(1), single(2), single(3, r=2)))
    right = ForestTriple((single(1), single(2), single(3)))
    with pytest.raises(ValueError, match="exceeds merged first part"):
        combine(left, right, 3)
    left_ok = ForestTriple((single(1), single(2), single(3)))
    right_bad = ForestTriple((single(1, r=2), single(2), single(3)))
    with pytest.raises(ValueError, match="root 1"):
        combine(left_ok, right_bad, 3)
    glued = combine(left_ok, right, 3)
    assert sorted(min(t.vertices) for t in glued) == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("a,spec,phi_factory", [
    (3, "C3", lambda: cycle_involution_map(3)),
    (4, "C4", lambda: cycle_involution_map(4)),
    (3, "K3", None),
    (4, "K2+K2", None),
])
def test_composed_involution_audits(a, spec, phi_factory):
    g_prime = chain_graph(spec)
    if phi_factory is None:
        phi_prime = matching_involution(enumerate_forest_triples(g_prime))
    else:
        phi_prime = phi_factory()
    domain = list(enumerate_forest_triples(chain_graph(f"C{a}+{spec}")))
    report = audit_involution(domain, composed_involution(a, phi_prime))
    assert report.ok, report.to_json(5)


def test_matching_involution_is_valid():
    for g in (clique_graph(3), path_graph(3), chain_graph("C3+K3")):
        domain = list(enumerate_forest_triples(g))
        assert audit_involution(domain, matching_involution(domain)).ok


def test_matching_involution_fails_on_unbalanced_class():
    negatives = [F for F in enumerate_forest_triples(path_graph(2)) if triple_sign(F) < 0]
    with pytest.raises(ValueError):
        matching_involution(negatives)


def test_audit_reports_violations():
    domain = list(enumerate_forest_triples(cycle_graph(3)))
    report = audit_involution(domain, lambda F: F)
    assert not report.ok
    assert {ax for _, ax in report.violations} == {"fixed-unit"}
    assert report.to_json(2)["violation_count"] == len(report.violations)
    assert len(report.to_json(2)["violations"]) == 2

    def crash(F):
        raise RuntimeError("boom")

    crashed = audit_involution(domain[:3], crash)
    assert all(ax.startswith("closure") for _, ax in crashed.violations)


def test_cycle_tree_fixed_set_is_class_i():
    a, k = 5, 3
    phi = cycle_tree_involution_map(a, k)
    domain = list(ft_prime_members(a, path_graph(k)))
    fixed = {F for F in domain if phi(F) == F}
    labelled = {F for F in domain if classify_cycle_tree(decode(F, a, k)).label in ("I1", "I2")}
    assert fixed == labelled


@pytest.mark.parametrize("a", [3, 4])
def test_composed_fixed_points(a):
    # fixed exactly when the G' half is fixed and the head lands in I1 or I2
    phi_prime = cycle_involution_map(3)
    phi = composed_involution(a, phi_prime)

    def predicted(F):
        _, other = restrict(F, a)
        if phi_prime(other) != other:
            return False
        k = sum(1 for v in F.triple_at(a).vertices if v > a) + 1
        head = ForestTriple(tuple(t for t in F if min(t.vertices) <= a))
        return classify_cycle_tree(decode(head, a, k)).label in ("I1", "I2")

    domain = list(enumerate_forest_triples(chain_graph(f"C{a}+C3")))
    assert {F for F in domain if phi(F) == F} == {F for F in domain if predicted(F)}
