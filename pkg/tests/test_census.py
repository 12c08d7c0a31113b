import pytest

from flatland import (
    ResourceLimit,
    classify_census,
    degree_profile,
    enumerate_degree_regular,
    euler_characteristic,
)

EXPECTED_SPLITS = {7: (1, 0), 8: (1, 0), 9: (2, 1), 10: (1, 1), 11: (1, 0), 12: (4, 3)}


def test_small_n_empty():
    for n in range(1, 7):
        assert enumerate_degree_regular(n) == []


@pytest.mark.parametrize("n", sorted(EXPECTED_SPLITS))
def test_counts_and_splits(n):
    report = classify_census(n)
    torus, klein = EXPECTED_SPLITS[n]
    assert report.total == torus + klein
    assert (report.torus_count, report.klein_bottle_count) == (torus, klein)


def test_items_are_valid_degree_six_and_distinct():
    report = classify_census(9)
    codes = {item.code for item in report.items}
    assert len(codes) == report.total
    for item in report.items:
        assert degree_profile(item.triangulation)[1] == 6
        assert euler_characteristic(item.triangulation) == 0


def test_every_item_matches_the_catalog():
    for n in (7, 8, 9, 10):
        for item in classify_census(n).items:
            assert item.matched_family_names


def test_classification_n9():
    report = classify_census(9)
    matched = {name for item in report.items for name in item.matched_family_names}
    assert {"T_{9,1,2}", "T_{3,3,0}", "B_{3,3}"} <= matched


def test_torus_items_weakly_regular():
    for n in (7, 8, 9, 10, 11, 12):
        for item in classify_census(n).items:
            if item.surface.kind == "torus":
                assert item.weakly_regular


def test_parallel_matches_serial():
    serial = enumerate_degree_regular(10, jobs=1)
    parallel = enumerate_degree_regular(10, jobs=4)
    assert [t.faces for t in serial] == [t.faces for t in parallel]


def test_node_budget_raises():
    with pytest.raises(ResourceLimit):
        enumerate_degree_regular(12, max_nodes=100)


def test_time_budget_raises():
    with pytest.raises(ResourceLimit):
        enumerate_degree_regular(12, budget_seconds=0.0)
