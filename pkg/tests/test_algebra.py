import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromsym.algebra import (
    ESym,
    compositions_of,
    e_sum,
    format_partition,
    parse_partition,
    sort_to_partition,
    split_first,
    split_last,
)

compositions = st.lists(st.integers(1, 5), min_size=1, max_size=5).map(tuple)


@st.composite
def homogeneous(draw, degree=None):
    d = draw(st.integers(0, 6)) if degree is None else degree
    parts = [alpha for alpha in compositions_of(d)]
    chosen = draw(st.lists(st.sampled_from(parts), max_size=4)) if parts else []
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(chosen), max_size=len(chosen)))
    return ESym({sort_to_partition(a): c for a, c in zip(chosen, coeffs)}) if chosen else ESym.zero()


def test_compositions_count_and_order():
    for n in range(1, 9):
        comps = list(compositions_of(n))
        assert len(comps) == 2 ** (n - 1)
        assert comps == sorted(comps)
        assert all(sum(c) == n and min(c) >= 1 for c in comps)
    assert list(compositions_of(0)) == [()]
    with pytest.raises(ValueError):
        list(compositions_of(-1))


def test_sort_to_partition_drops_zeros():
    assert sort_to_partition((0, 2, 3, 0, 1)) == (3, 2, 1)
    assert sort_to_partition(()) == ()


def test_partition_text_round_trip():
    assert parse_partition("2,3,2") == (3, 2, 2)
    assert format_partition((3, 2, 2)) == "3,2,2"
    assert parse_partition("") == ()


def test_split_examples():
    assert split_first((2, 3), 3) == (2, 1)
    assert split_first((2, 3), 2) == (2,)
    assert split_last((2, 3), 3) == (3,)
    assert split_last((2, 3), 4) == (1, 3)
    with pytest.raises(ValueError):
        split_first((2, 3), 0)
    with pytest.raises(ValueError):
        split_last((2, 3), 6)


@given(compositions, st.data())
def test_split_pieces_glue_back(alpha, data):
    n = sum(alpha)
    j = data.draw(st.integers(1, n))
    head = split_first(alpha, j)
    tail = split_last(alpha, n - j + 1)
    assert sum(head) == j and sum(tail) == n - j + 1
    assert head[:-1] + (head[-1] + tail[0] - 1,) + tail[1:] == alpha


@given(compositions, st.data())
def test_split_first_is_the_unique_prefix(alpha, data):
    j = data.draw(st.integers(1, sum(alpha)))
    head = split_first(alpha, j)
    matches = [c for c in compositions_of(j) if c[:-1] == alpha[: len(c) - 1] and c[-1] <= alpha[len(c) - 1]]
    assert matches == [head]


def test_esym_basics():
    x = ESym.e(2, 1, coeff=3)
    assert x.degree == 3 and x.coefficient((1, 2)) == 3
    assert ESym.one().degree == 0 and ESym.zero().is_zero()
    assert ESym({(2,): 0}).is_zero()
    with pytest.raises(ValueError):
        ESym({(2,): 1, (1,): 1})
    with pytest.raises(ValueError):
        ESym.e(2) + ESym.e(1)
    assert (ESym.e(2) * ESym.e(1)) == ESym.e(2, 1)
    assert 2 * ESym.e(3) == ESym.e(3).scale(2)
    assert ESym.zero() + ESym.e(2) == ESym.e(2)


@given(homogeneous(degree=3), homogeneous(degree=3), homogeneous(degree=3))
def test_addition_is_an_abelian_group(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert (x - x).is_zero()


@given(homogeneous(), homogeneous(), homogeneous())
def test_product_is_commutative_associative(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * ESym.one() == x


@given(homogeneous(), homogeneous(degree=2), homogeneous(degree=2))
def test_product_distributes(x, y, z):
    assert x * (y + z) == x * y + x * z


@given(homogeneous(), homogeneous())
def test_hash_agrees_with_equality(x, y):
    if x == y:
        assert hash(x) == hash(y)
    assert hash(x) == hash(ESym(dict(x.items())))


def test_e_sum_and_rendering():
    x = e_sum([ESym.e(4), ESym.e(2, 2, coeff=-8), ESym.e(3, 1, coeff=2)])
    assert x.sorted_items() == [((4,), 1), ((3, 1), 2), ((2, 2), -8)]
    assert x.negative_terms() == [((2, 2), -8)]
    assert x.to_json_terms() == {"4": 1, "3,1": 2, "2,2": -8}
    assert x.pretty() == "e_{4} + 2e_{3,1} - 8e_{2,2}"

