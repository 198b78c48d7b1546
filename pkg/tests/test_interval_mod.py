from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from bruhat_hecke.comp import Composition, GeneralizedComposition, compositions
from bruhat_hecke.hmod import check_relations, is_isomorphic
from bruhat_hecke.interval_mod import (
    TWISTS,
    NotInInterval,
    build,
    embed,
    induction_product,
    irreducible,
    mackey_check,
    omegahat_forms,
    projective,
    projective_gc,
    restriction,
    sub_quot_maps,
    basic_twist_check,
    twist,
    twist_functoriality_check,
    twist_table_check,
)
from bruhat_hecke.perm import Permutation, all_permutations, identity, longest
from bruhat_hecke.weak_order import leq_left

import pytest

P = Permutation.parse


def pairs(n: int):
    ps = list(all_permutations(n))
    return st.sampled_from([(s, r) for s in ps for r in ps if leq_left(s, r)])


def test_build_full_interval():
    assert build(identity(4), longest(4)).dim == 24


def test_irreducible_and_projective():
    irr = irreducible(Composition((2, 1)))
    assert (irr.sigma, irr.rho) == (P("213"), P("213"))
    # set((3)^c) = {1, 2}, so P_(3) is the one-dimensional B(321, 321)
    proj = projective(Composition((3,)))
    assert (proj.sigma, proj.rho, proj.dim) == (longest(3), longest(3), 1)
    assert projective(Composition((1, 1, 1))).dim == 1
    assert projective(Composition((1, 2))).dim == 2
    for a in compositions(4):
        p = projective(a)
        assert is_isomorphic(p.module, projective_gc(GeneralizedComposition((a,)))) is not None


def test_embedding_example():
    e = embed(build(P("14325"), P("24315")))
    assert e.verified() and e.ideal_dim == 2


def test_bar_embedding():
    e = embed(build(P("2134"), P("4312"), "bar"))
    assert e.verified()


def test_induction_example():
    out = induction_product(build(P("12"), P("12")), build(P("12"), P("21")))
    assert out.map.is_isomorphism() and str(out.target) == "B(1234,3421)"


def test_restriction_examples():
    out = restriction(build(P("2134"), P("4312")), 2)
    assert [(str(s.left), str(s.right)) for s in out.summands] == [
        ("B(21,21)", "B(12,12)"),
        ("B(12,21)", "B(12,21)"),
        ("B(12,12)", "B(21,21)"),
    ]
    out = restriction(build(P("2413"), P("2413")), 2)
    assert len(out.summands) == 1 and out.map.is_isomorphism()
    out = restriction(build(identity(4), longest(4)), 1)
    assert len(out.summands) == 4 and out.map.is_isomorphism()


def test_mackey_example():
    assert mackey_check(P("21"), P("21"), P("12"), P("21"), 2).ok
    # seam case with trivial right factor
    assert mackey_check(P("12"), P("21"), P("12"), P("12"), 2).ok


def test_sub_quot_maps():
    M = build(P("2134"), P("4312"))
    iota = sub_quot_maps(M, sub_bottom=P("2134"))
    assert iota.matrix.to_rows() == [[1 if r == c else 0 for c in range(M.dim)] for r in range(M.dim)]
    pr = sub_quot_maps(M, quot_top=P("2134"))
    assert pr.verify() and pr.is_surjective() and pr.matrix.rank() == 1
    sink = sub_quot_maps(M, sub_bottom=P("4312"))
    assert sink.verify() and sink.is_injective()
    with pytest.raises(NotInInterval):
        sub_quot_maps(M, sub_bottom=P("1234"))


def test_twist_examples():
    M = build(P("2134"), P("4123")).module
    assert is_isomorphic(twist(M, "phi"), build(P("1243"), P("2341")).module) is not None
    assert is_isomorphic(twist(M, "chi"), build(P("3214"), P("4312"), "bar").module) is not None
    assert is_isomorphic(twist(M, "theta"), build(P("2134"), P("4123"), "bar").module) is not None


def test_omegahat_orderings():
    forms = omegahat_forms(P("2134"), P("4123"))
    assert forms == {"B(w0 rho, w0 sigma)": True, "B(w0 sigma, w0 rho)": False}


def test_basic_twists_on_simples_and_projectives():
    for a in compositions(3):
        assert all(ok for _, _, ok in basic_twist_check(a))


def test_functoriality_small():
    reps = twist_functoriality_check([(P("12"), P("21"))], [(P("21"), P("21")), (P("1"), P("1"))])
    assert reps and all(r.ok for r in reps)


@given(pairs(4))
def test_twists_are_involutive_up_to_equality(pair):
    M = build(*pair).module
    for which in TWISTS:
        back = twist(twist(M, which), which)
        assert back.actions == M.actions
        assert check_relations(twist(M, which))


@given(pairs(4))
def test_twist_table_cells(pair):
    assert all(c.ok for c in twist_table_check(*pair))


@given(pairs(4))
def test_relations_both_variants(pair):
    assert check_relations(build(*pair).module)
    assert check_relations(build(*pair, "bar").module)
