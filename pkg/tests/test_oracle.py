import math

import pytest

from permaps.errors import LimitExceeded
from permaps.oracle import (
    FAULTS,
    count_transitive_pairs,
    enum_fpf_involutions,
    enum_permutations,
    hypermap_census,
    joint_distribution,
    verify_suite,
)
from permaps.perm import Permutation


def test_enum_permutations():
    assert [sum(1 for _ in enum_permutations(n)) for n in (1, 2, 3, 4)] == [1, 2, 6, 24]
    lex = [p.images for p in enum_permutations(3)]
    assert lex == sorted(lex)
    assert lex[0] == (1, 2, 3) and lex[-1] == (3, 2, 1)
    with pytest.raises(ValueError):
        next(enum_permutations(0))


def test_enum_fpf_involutions():
    assert [sum(1 for _ in enum_fpf_involutions(n)) for n in (2, 4, 6, 8)] == [1, 3, 15, 105]
    for t in enum_fpf_involutions(6):
        assert all(t(t(i)) == i and t(i) != i for i in range(1, 7))
    assert next(enum_fpf_involutions(4)) == Permutation((2, 1, 4, 3))
    with pytest.raises(ValueError):
        next(enum_fpf_involutions(5))
    with pytest.raises(ValueError):
        next(enum_fpf_involutions(0))


def test_joint_distribution_marginals():
    t4 = joint_distribution(4)
    assert t4.total() == 24
    # the 13 indecomposable permutations of S_4, by either statistic
    assert t4.project(("lr_maxima",), indecomposable_only=True) == {1: 6, 2: 6, 3: 1}
    assert t4.project(("rl_minima",), indecomposable_only=True) == {1: 6, 2: 6, 3: 1}
    assert t4.project(("cycles",), indecomposable_only=True) == {1: 6, 2: 6, 3: 1}
    t3 = joint_distribution(3)
    assert t3.project(("cycles",)) == {1: 2, 2: 3, 3: 1}
    assert t3.project(("indecomposable",)) == {True: 3, False: 3}
    pair = t3.project(("cycles", "lr_maxima"))
    assert pair[(1, 1)] == 1  # 3,1,2 alone
    assert sum(pair.values()) == 6


def test_joint_distribution_symmetry():
    for n in range(1, 6):
        t = joint_distribution(n)
        assert t.total() == math.factorial(n)
        by_cyc = t.project(("cycles",))
        assert by_cyc == t.project(("lr_maxima",))
        assert by_cyc == t.project(("rl_minima",))


def test_joint_distribution_limit():
    with pytest.raises(LimitExceeded):
        joint_distribution(3, limit=2)
    assert joint_distribution(3, limit=3).total() == 6


def test_count_transitive_pairs():
    assert count_transitive_pairs(1) == 1
    assert count_transitive_pairs(2) == 3
    assert count_transitive_pairs(3) == 26
    assert count_transitive_pairs(4) == 426
    with pytest.raises(LimitExceeded):
        count_transitive_pairs(6)
    with pytest.raises(ValueError):
        count_transitive_pairs(0)
    with pytest.raises(ValueError):
        count_transitive_pairs(3, partitions=0)


def test_count_transitive_pairs_partitions_agree():
    for parts in (1, 2, 5, 7):
        assert count_transitive_pairs(3, partitions=parts) == 26
    assert count_transitive_pairs(4, partitions=3) == 426


def test_hypermap_census():
    assert hypermap_census(1) == (1, 1)
    assert hypermap_census(2) == (3, 3)
    assert hypermap_census(3) == (26, 13)
    assert hypermap_census(4) == (426, 71)
    with pytest.raises(LimitExceeded):
        hypermap_census(6)
    with pytest.raises(ValueError):
        hypermap_census(0)


def test_verify_suite_passes_small():
    report = verify_suite(max_n=4, pair_max_n=3, fpf_max_size=6)
    assert report.passed
    names = [r.check for r in report.results]
    assert names == [
        "indecomposable-count",
        "stirling-triangle",
        "fundamental-transform",
        "interval-split-round-trip",
        "statistic-swap-involution",
        "hypermap-census",
        "transitive-probability",
        "path-round-trip",
        "labeling-counts",
        "path-polynomials",
        "joint-polynomial",
        "map-counts",
        "map-round-trip",
        "map-functional-equation",
    ]
    assert all(r.witness is None for r in report.results)


def test_verify_suite_deterministic():
    a = verify_suite(max_n=3, pair_max_n=3, fpf_max_size=4)
    b = verify_suite(max_n=3, pair_max_n=3, fpf_max_size=4)
    assert a.to_json_obj() == b.to_json_obj()
    assert a.passed and b.passed


def test_verify_suite_fault_injection():
    assert FAULTS == ("skip-canonicalization",)
    report = verify_suite(max_n=3, pair_max_n=3, fault="skip-canonicalization")
    assert not report.passed
    failed = [r for r in report.results if r.status == "fail"]
    assert [r.check for r in failed] == ["hypermap-census"]
    # smallest counterexample: the first transitive pair on 3 darts
    assert failed[0].witness == {
        "n": 3,
        "sigma": "1,2,3",
        "alpha": "2,3,1",
        "relabel": "2,1,3",
        "reason": "canonical form depends on the labeling",
    }


def test_verify_suite_json_and_text():
    report = verify_suite(max_n=2, pair_max_n=2, fpf_max_size=4)
    obj = report.to_json_obj()
    assert isinstance(obj, list) and len(obj) == 14
    for entry in obj:
        assert set(entry) == {"check", "status"}  # witness omitted on pass
        assert entry["status"] == "pass"
    text = report.to_text()
    lines = text.splitlines()
    assert lines[0] == "PASS indecomposable-count"
    assert lines[-1] == "all checks passed"

    bad = verify_suite(max_n=3, pair_max_n=3, fault="skip-canonicalization")
    obj = bad.to_json_obj()
    rows = [e for e in obj if e["status"] == "fail"]
    assert rows and set(rows[0]) == {"check", "status", "witness"}
    assert "FAIL hypermap-census" in bad.to_text()
    assert bad.to_text().splitlines()[-1] == "1 check(s) failed"


def test_verify_suite_guards():
    with pytest.raises(ValueError):
        verify_suite(max_n=0)
    with pytest.raises(ValueError):
        verify_suite(max_n=9)
    with pytest.raises(ValueError):
        verify_suite(pair_max_n=6)
    with pytest.raises(ValueError):
        verify_suite(fpf_max_size=7)
    with pytest.raises(ValueError):
        verify_suite(fault="no-such-fault")
