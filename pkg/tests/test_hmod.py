from __future__ import annotations

import json

from hypothesis import given
from hypothesis import strategies as st

from bruhat_hecke.comp import Composition, QSymElement, compositions
from bruhat_hecke.hmod import (
    HModule,
    ch,
    check_relations,
    composition_factors,
    direct_sum,
    end_radical,
    find_idempotent,
    hom_space,
    is_indecomposable,
    is_isomorphic,
    outer_tensor,
    source_sink,
    trace_multiplicities,
    zero_module,
)
from bruhat_hecke.interval_mod import build, f_module, regular_module
from bruhat_hecke.linalg import Matrix
from bruhat_hecke.perm import Permutation, all_permutations
from bruhat_hecke.weak_order import leq_left

P = Permutation.parse


def pairs(n: int):
    ps = list(all_permutations(n))
    return st.sampled_from([(s, r) for s in ps for r in ps if leq_left(s, r)])


def test_relations():
    assert check_relations(zero_module(3))
    assert check_relations(build(P("14325"), P("24315")).module)
    M = build(P("2134"), P("4312")).module
    bad = dict(M.actions)
    bad[1] = bad[1] @ bad[2]
    assert not check_relations(HModule(M.n, M.dim, bad))


def test_hom_dimensions():
    for a in compositions(3):
        for b in compositions(3):
            assert len(hom_space(f_module(a), f_module(b))) == (1 if a == b else 0)
    B = build(P("45312"), P("45321")).module
    assert len(hom_space(B, B)) == 2


def test_isomorphism_examples():
    A = build(P("14325"), P("24315")).module
    assert is_isomorphic(A, A) is not None
    assert is_isomorphic(A, build(P("41352"), P("42351")).module) is not None
    assert is_isomorphic(A, build(P("45312"), P("45321")).module) is None


def test_end_radical():
    End, rad = end_radical(f_module(Composition((2, 1))))
    assert len(End) == 1 and not rad
    End, rad = end_radical(build(P("45312"), P("45321")).module)
    assert len(End) - len(rad) == 2
    End, rad = end_radical(build(P("14325"), P("24315")).module)
    assert len(End) - len(rad) == 1


def test_indecomposable():
    assert is_indecomposable(f_module(Composition((1, 2))))
    B = build(P("45312"), P("45321")).module
    assert not is_indecomposable(B)
    e = find_idempotent(B)
    assert e is not None and e @ e == e and all(A @ e == e @ A for A in B.actions.values())


def test_composition_factors_examples():
    a = Composition((2, 1, 1))
    assert composition_factors(f_module(a)) == {a: 1}
    g = P("2413")
    assert composition_factors(build(g, g).module) == {Composition.from_set(g.left_descents, 4).complement(): 1}
    assert composition_factors(regular_module(2)) == {Composition((2,)): 1, Composition((1, 1)): 1}


def test_ch_examples():
    a = Composition((1, 3))
    assert ch(f_module(a)) == QSymElement.F(a)
    assert ch(build(P("213"), P("213")).module) == QSymElement.F((2, 1))
    # labels 14325 (Des {2,3}) and 24315 (Des {1,3})
    assert ch(build(P("14325"), P("24315")).module) == QSymElement.F((1, 3, 1)) + QSymElement.F((2, 2, 1))


def test_source_sink():
    M = build(P("2134"), P("4312")).module
    assert source_sink(M) == (P("2134"), P("4312"))
    S = direct_sum(build(P("12"), P("12")).module, build(P("21"), P("21")).module)
    assert source_sink(S) == (None, None)


def test_outer_tensor_generators():
    T = outer_tensor(build(P("12"), P("21")).module, build(P("21"), P("21")).module)
    assert T.generators == (1, 3) and T.dim == 2


def test_json_round_trip():
    M = build(P("2134"), P("4312")).module
    N = HModule.from_json(json.dumps(M.to_json()))
    assert N.actions == M.actions and N.dim == M.dim


@given(pairs(4))
def test_factor_routes_agree(pair):
    M = build(*pair).module
    fast = composition_factors(M)
    assert fast == composition_factors(M, fast=False) == trace_multiplicities(M)
    assert QSymElement(fast) == ch(M)


@given(pairs(4))
def test_bar_module_character_is_complemented(pair):
    B = build(*pair, "bar").module
    assert QSymElement(composition_factors(B)) == ch(build(*pair).module).map_compositions(Composition.complement)


@given(pairs(3), pairs(3))
def test_hom_space_intertwines(p, q):
    M, N = build(*p).module, build(*q).module
    for f in hom_space(M, N):
        assert f.verify()
