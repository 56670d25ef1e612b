"""Labeled Dyck paths: validation, the placement bijection, scheme
conversion, and enumeration."""

import itertools

import pytest

from permaps.dyck import (
    DELTA,
    RV,
    LabeledDyckPath,
    convert_label_scheme,
    count_labelings,
    delta,
    delta_inverse,
    enum_dyck_paths,
    enum_labelings,
    format_labeled_path,
    is_primitive,
    parse_labeled_path,
    validate_dyck,
    validate_labeling,
)
from permaps.errors import InvalidLabeling, InvalidPath, ParseError, PlacementOutOfRange
from permaps.perm import Permutation, cycles, identity, is_indecomposable, lr_maxima


def all_perms(n):
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


# --- words and validation ---------------------------------------------------


def test_validate_dyck():
    assert validate_dyck("")
    assert validate_dyck("ab")
    assert validate_dyck("aabbab")
    assert not validate_dyck("ba")
    assert not validate_dyck("aab")
    assert not validate_dyck("abx")


def test_is_primitive():
    assert is_primitive("ab")
    assert is_primitive("aabb")
    assert not is_primitive("abab")
    assert not is_primitive("")
    with pytest.raises(InvalidPath):
        is_primitive("ba")


def test_token_syntax():
    with pytest.raises(ParseError):
        LabeledDyckPath(("a", "b"), DELTA)
    with pytest.raises(ParseError):
        LabeledDyckPath(("c",), DELTA)
    with pytest.raises(ValueError):
        LabeledDyckPath(("a", "b0"), "other")


def test_validate_labeling_delta():
    assert validate_labeling(parse_labeled_path("a b0"))
    assert validate_labeling(parse_labeled_path("a a b0 b1"))
    # peak must carry 0
    assert not validate_labeling(parse_labeled_path("a b1"))
    assert not validate_labeling(parse_labeled_path("a a b2 b1"))
    # non-peak label bounded by the height in front of it
    assert not validate_labeling(parse_labeled_path("a a b0 b2"))
    assert not validate_labeling(parse_labeled_path("a a b0 b0"))
    # underlying word must be Dyck
    assert not validate_labeling(LabeledDyckPath(("b0",), DELTA))
    assert not validate_labeling(LabeledDyckPath(("a", "b0", "b1"), DELTA))


def test_validate_labeling_rv():
    assert validate_labeling(parse_labeled_path("a b1", RV))
    assert validate_labeling(parse_labeled_path("a a b1 b1", RV))
    assert validate_labeling(parse_labeled_path("a a a b1 b2 b1", RV))
    # peak must carry 1, 0 is never legal, and labels stay within height
    assert not validate_labeling(parse_labeled_path("a b0", RV))
    assert not validate_labeling(parse_labeled_path("a a b2 b1", RV))
    assert not validate_labeling(parse_labeled_path("a a b1 b2", RV))


# --- the placement bijection --------------------------------------------------


def test_delta_worked_example():
    p = Permutation((3, 7, 5, 8, 9, 2, 6, 4, 1))
    w = delta(p)
    assert format_labeled_path(w) == "a a a a b0 a a a b0 b1 a a b0 b4 b2 b1 b1 b1"
    assert delta_inverse(w) == p


def test_delta_small_cases():
    assert format_labeled_path(delta(Permutation((1,)))) == "a b0"
    assert format_labeled_path(delta(Permutation((2, 1)))) == "a a b0 b1"
    assert format_labeled_path(delta(identity(2))) == "a b0 a b0"


def test_delta_round_trip_exhaustive():
    for n in range(1, 7):
        seen = set()
        for p in all_perms(n):
            w = delta(p)
            assert len(w.word) == 2 * n
            assert validate_labeling(w)
            assert delta_inverse(w) == p
            seen.add(w.word)
        assert len(seen) == len(list(all_perms(n)))


def test_delta_statistics_exhaustive():
    for n in range(1, 7):
        for p in all_perms(n):
            w = delta(p)
            b0 = sum(1 for t in w.word if t == "b0")
            b1 = sum(1 for t in w.word if t == "b1")
            fixed = sum(1 for i in range(1, n + 1) if p(i) == i)
            k = len(lr_maxima(p))
            assert b0 == len(cycles(p).cycles)
            assert is_primitive(w.underlying()) == is_indecomposable(p)
            assert b1 <= k <= b1 + fixed
            if is_indecomposable(p) and n >= 2:
                assert b1 == k


def test_delta_inverse_guards():
    with pytest.raises(InvalidLabeling):
        delta_inverse(parse_labeled_path("a a b1 b1", RV))
    with pytest.raises(InvalidLabeling):
        delta_inverse(parse_labeled_path("a b1"))
    with pytest.raises(InvalidLabeling):
        delta_inverse(LabeledDyckPath((), DELTA))
    # the out-of-range error is defensive: validation caps every label by
    # the free-slot count, so catching InvalidLabeling also covers it
    assert issubclass(PlacementOutOfRange, InvalidLabeling)


# --- scheme conversion ----------------------------------------------------------


def test_convert_examples():
    lp = parse_labeled_path("a a b0 b1")
    out = convert_label_scheme(lp)
    assert out.scheme == RV
    assert format_labeled_path(out) == "a a b1 b1"
    assert convert_label_scheme(out) == lp


def test_convert_rejects_invalid():
    with pytest.raises(InvalidLabeling):
        convert_label_scheme(parse_labeled_path("a b1"))


def test_convert_involution_exhaustive():
    for n in range(0, 5):
        for word in enum_dyck_paths(n):
            for lp in enum_labelings(word, DELTA):
                out = convert_label_scheme(lp)
                assert out.underlying() == word
                assert validate_labeling(out)
                assert convert_label_scheme(out) == lp
            for lp in enum_labelings(word, RV):
                out = convert_label_scheme(lp)
                assert out.scheme == DELTA
                assert validate_labeling(out)
                assert convert_label_scheme(out) == lp


# --- enumeration -----------------------------------------------------------------


def test_enum_dyck_paths_catalan():
    counts = [len(list(enum_dyck_paths(n))) for n in range(7)]
    assert counts == [1, 1, 2, 5, 14, 42, 132]
    assert list(enum_dyck_paths(2)) == ["aabb", "abab"]
    with pytest.raises(ValueError):
        list(enum_dyck_paths(-1))


def test_labeling_counts():
    # per-path counts multiply the heights-plus-one over non-peak b's,
    # agree across schemes, and sum to n! over all paths of length 2n
    for n in range(0, 6):
        total = 0
        for word in enum_dyck_paths(n):
            cnt = count_labelings(word, DELTA)
            assert cnt == count_labelings(word, RV)
            assert cnt == len(list(enum_labelings(word, DELTA)))
            assert cnt == len(list(enum_labelings(word, RV)))
            total += cnt
        import math

        assert total == math.factorial(n)


def test_enum_labelings_guards():
    with pytest.raises(InvalidPath):
        list(enum_labelings("ba"))
    with pytest.raises(ValueError):
        list(enum_labelings("ab", "other"))
    with pytest.raises(InvalidPath):
        count_labelings("ba")


def test_parse_format_round_trip():
    text = "a a a a b0 a a a b0 b1 a a b0 b4 b2 b1 b1 b1"
    lp = parse_labeled_path(text)
    assert format_labeled_path(lp) == text
    assert lp.underlying() == "aaaabaaabbaabbbbbb"
    with pytest.raises(ParseError):
        parse_labeled_path("")
    with pytest.raises(ParseError):
        parse_labeled_path("a b")
