from __future__ import annotations

import itertools

from hypothesis import given
from hypothesis import strategies as st

from bruhat_hecke.hecke import (
    HeckeElement,
    left_ideal_basis,
    pi_mul_basis,
    pi_pibar,
    pibar_of,
)
from bruhat_hecke.interval_mod import regular_module
from bruhat_hecke.linalg import Matrix
from bruhat_hecke.perm import Permutation, all_permutations, compose, from_word, identity, longest, reduced_word

P = Permutation.parse
pi = HeckeElement.pi


def perms(n: int):
    return st.permutations(range(1, n + 1)).map(lambda w: Permutation(tuple(w)))


def elements(n: int):
    return st.dictionaries(perms(n), st.integers(-2, 2), max_size=4).map(lambda t: HeckeElement(n, t))


def regular_matrix(x: HeckeElement) -> Matrix:
    """Left multiplication by x on the regular representation, built from generator matrices."""
    R = regular_module(x.n)
    out = Matrix.zero(R.dim, R.dim)
    for g, c in x.terms.items():
        M = Matrix.identity(R.dim)
        for i in reduced_word(g):
            M = M @ R.actions[i]
        out = out + M.scale(c)
    return out


def test_generator_relations():
    s1, s2 = P("213"), P("132")
    assert pi_mul_basis(s1, s1) == s1
    assert pi_mul_basis(s1, s2) == compose(s1, s2)
    for t in all_permutations(3):
        assert pi_mul_basis(longest(3), t) == longest(3)


def test_bar_products():
    b1 = HeckeElement.bar_generator(1, 3)
    assert (pi(identity(3)) * b1) == b1
    assert (b1 * HeckeElement.generator(1, 3)).is_zero()
    assert b1 * b1 == -b1


def test_pibar_expansion():
    assert pibar_of(identity(3)) == pi(identity(3))
    assert pibar_of(P("213")) == pi(P("213")) - pi(identity(3))
    s1s2 = from_word([1, 2], 3)
    expected = pi(s1s2) - pi(P("213")) - pi(P("132")) + pi(identity(3))
    assert pibar_of(s1s2) == expected


def test_pi_pibar_examples():
    x, rep = pi_pibar(P("21"), P("21"))
    assert x.is_zero() and not rep["nonzero"]
    x, rep = pi_pibar(identity(3), P("231"))
    assert x == pibar_of(P("231")) and rep["top"] == [(P("231"), 1)]


def test_left_ideal_dimensions():
    assert len(left_ideal_basis(pi(identity(3)))) == 6
    x = pi(P("14325")) * pibar_of(P("52314"))
    assert len(left_ideal_basis(x)) == 2
    # alpha = (2,1): pi_{w0(alpha^c)} pibar_{w0(alpha)} spans [213, w0 * 132]_L = [213, 312]_L
    y = pi(P("213")) * pibar_of(P("132"))
    assert len(left_ideal_basis(y)) == 2


def test_str_and_json():
    x = pi(P("21")) - pi(P("12")).scale(2)
    assert HeckeElement.from_json(x.to_json()) == x
    assert "π[21]" in str(x)


@given(perms(4), perms(4))
def test_pibar_independent_of_reduced_word(a, b):
    g = compose(a, b)
    w = reduced_word(g)
    # any other reduced word: read one off the reversed inverse
    w2 = list(reversed(reduced_word(g.inverse)))
    assert from_word(w2, 4) == g
    assert pibar_of(g, w) == pibar_of(g, w2)


@given(elements(3), elements(3))
def test_product_matches_regular_representation(x, y):
    assert regular_matrix(x * y) == regular_matrix(x) @ regular_matrix(y)


@given(elements(3), elements(3), elements(3))
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


def test_zero_criterion_exhaustive_s3():
    for s, r in itertools.product(all_permutations(3), repeat=2):
        x, rep = pi_pibar(s, r)
        assert rep["nonzero"] == rep["lengths_add"] == rep["below_w0_rho_inv"]
