import pytest

import convex_blockers as cb


def test_spm_counts():
    assert [len(cb.enumerate_spms(m)) for m in range(1, 7)] == [1, 2, 5, 14, 42, 132]


def test_reference_fixtures():
    assert cb.triangular_spm(6, 3, 8, 11) == [(0, 5), (1, 4), (2, 3), (6, 9), (7, 8), (10, 11)]
    assert cb.generate_blocker(6, 0, 3, [1, 2, 4]) == [
        (0, 1), (1, 2), (1, 10), (2, 3), (2, 5), (2, 7)]
    assert not cb.is_blocking_set(3, [(0, 1), (4, 5)])


def test_parse_blocker():
    ok = cb.parse_blocker(6, [(0, 1), (1, 10), (1, 2), (2, 3), (2, 5), (2, 7)])
    assert (ok["start"], ok["t"], ok["eps"]) == (0, 3, [1, 2, 4])
    bad = cb.parse_blocker(3, [(0, 1), (2, 3), (4, 5)])
    assert bad["violation"] == "boundary_not_consecutive"


def test_counts_are_python_ints():
    assert cb.count_blockers(6) == 192
    assert cb.count_blockers(100) == 100 * 2 ** 99
    assert cb.count_blockers_by_spine(6, 4) == 6


def test_oracle_matches_generator():
    result = cb.find_minimum_blockers(4)
    assert result["count"] == 32
    got = sorted(tuple(map(tuple, s)) for s in result["sets"])
    assert got == sorted(tuple(s) for s in cb.enumerate_blockers(4))


def test_verify_and_classify():
    reports = cb.verify_theorem(2, 3, 3)
    assert [r["verdict"] for r in reports] == ["PASS", "PASS"]
    assert cb.classify_boundary_set(6, [(0, 1), (6, 7)]) == ["OppositePair"]


def test_restrict_and_render():
    m, edges = cb.restrict_blocker(3, [(0, 1), (1, 2), (2, 3)], (2, 3), (3, 4))
    assert (m, edges) == (2, [(0, 1), (1, 2)])
    svg = cb.render_figure(2, solid=[(0, 1)])
    assert svg.startswith("<?xml") and svg == cb.render_figure(2, solid=[(0, 1)])


def test_errors():
    with pytest.raises(ValueError):
        cb.generate_blocker(6, 0, 1, [1, 2, 3, 4, 5])
    with pytest.raises(cb.InfeasibleError):
        cb.triangular_spm(6, 1, 2, 9)
    with pytest.raises(cb.ResourceError):
        cb.find_minimum_blockers(6, "naive")
