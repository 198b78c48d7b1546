from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bruhat_hecke.perm import Permutation, all_permutations, compose, identity, longest, ostar, star
from bruhat_hecke.weak_order import (
    Interval,
    NotComparable,
    descent_preserving_iso,
    frak_I,
    interval,
    leq_left,
    perm_lower,
    perm_upper,
    restriction_data,
    shuffle_set,
    shuffle_set_by_standardization,
    split,
    word_shuffle_inverse,
)

P = Permutation.parse


def perms(lo: int = 1, hi: int = 5):
    return st.integers(lo, hi).flatmap(lambda n: st.permutations(range(1, n + 1))).map(lambda w: Permutation(tuple(w)))


def value_inversions(g: Permutation) -> set[tuple[int, int]]:
    pos = g.inverse
    return {(a, b) for a, b in itertools.combinations(range(1, g.n + 1), 2) if pos(b) < pos(a)}


def test_leq_examples():
    assert leq_left(identity(4), P("4312"))
    assert leq_left(P("14325"), P("24315"))
    assert not leq_left(P("21"), P("12"))


def test_interval_examples():
    assert interval(P("231"), P("231")).vertices == (P("231"),)
    iv = interval(P("14325"), P("24315"))
    assert iv.vertices == (P("14325"), P("24315")) and iv.edges == ((0, 1, 1),)
    assert len(interval(P("1234"), P("3421"))) == 12
    with pytest.raises(NotComparable):
        interval(P("213"), P("231"))


def test_interval_json_and_dot():
    iv = interval(P("2134"), P("4312"))
    assert Interval.from_json(json.dumps(iv.to_json())) == iv
    dot = interval(P("14325"), P("24315")).to_dot()
    assert 'v0 -> v1 [label="1"]' in dot


def test_shuffles():
    assert shuffle_set(P("1"), P("1")) == {P("12"), P("21")}
    for a, b in [(P("21"), P("132")), (P("12"), P("21")), (P("312"), P("1"))]:
        s = shuffle_set(a, b)
        assert s == shuffle_set_by_standardization(a, b) == word_shuffle_inverse(a, b)
        assert min(s, key=lambda g: g.length) == star(a, b)
        assert max(s, key=lambda g: g.length) == ostar(a, b)


def test_perm_lower_upper():
    assert perm_lower({2, 3}, 4) == P("3124")
    assert perm_upper({2, 3}, 4) == P("4213")
    assert perm_lower({1, 2}, 4) == identity(4)


def test_split():
    assert split(P("58326147"), 3) == (P("321"), P("25314"))
    assert split(star(P("21"), P("132")), 2) == (P("21"), P("132"))
    assert split(P("3412"), 2) == (P("12"), P("12"))
    with pytest.raises(ValueError):
        split(P("12"), 2)


def test_restriction_data_example():
    data = restriction_data(P("2134"), P("4312"), 2)
    assert [sorted(J) for J, _, _ in data] == [[1, 2], [2, 3], [3, 4]]


def test_restriction_data_endpoints():
    assert [J for J, _, _ in restriction_data(P("213"), P("321"), 0)] == [frozenset()]
    assert [J for J, _, _ in restriction_data(P("213"), P("321"), 3)] == [frozenset({1, 2, 3})]


def test_descent_preserving_iso_examples():
    A = interval(P("14325"), P("24315"))
    assert descent_preserving_iso(A, A) == {g: g for g in A.vertices}
    assert descent_preserving_iso(A, interval(P("41352"), P("42351"))) is not None
    assert descent_preserving_iso(A, interval(P("45312"), P("45321"))) is None


@given(perms(), perms())
def test_leq_left_is_inversion_containment(a, b):
    if a.n != b.n:
        return
    assert leq_left(a, b) == (value_inversions(a) <= value_inversions(b))


@given(perms(1, 4), st.data())
def test_interval_is_order_filter(sigma, data):
    tops = [g for g in all_permutations(sigma.n) if leq_left(sigma, g)]
    rho = data.draw(st.sampled_from(tops))
    iv = interval(sigma, rho)
    brute = {g for g in all_permutations(sigma.n) if leq_left(sigma, g) and leq_left(g, rho)}
    assert set(iv.vertices) == brute
    for a, b, i in iv.edges:
        assert iv.vertices[b] == iv.vertices[a].left_mult(i)
        assert iv.vertices[b].length == iv.vertices[a].length + 1


@given(perms(1, 3), perms(1, 3))
def test_shuffle_of_intervals_is_interval(a, b):
    # [a, w0] shuffle [b, w0] covers [a*b, w0 ostar w0]
    wa, wb = longest(a.n), longest(b.n)
    union = set()
    for g in interval(a, wa).vertices:
        for h in interval(b, wb).vertices:
            union |= shuffle_set(g, h)
    assert union == set(interval(star(a, b), ostar(wa, wb)).vertices)


@given(perms(2, 5), st.data())
def test_restriction_blocks_partition(sigma, data):
    tops = [g for g in all_permutations(sigma.n) if leq_left(sigma, g)]
    rho = data.draw(st.sampled_from(tops))
    m = data.draw(st.integers(1, sigma.n - 1))
    seen = set()
    for J, sJ, rJ in restriction_data(sigma, rho, m):
        block = frak_I(sigma, rho, J)
        assert block
        assert set(block) == set(interval(sJ, rJ).vertices)
        seen |= set(block)
    assert seen == set(interval(sigma, rho).vertices)
