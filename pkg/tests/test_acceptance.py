from __future__ import annotations

import itertools
import time
from collections import Counter

from bruhat_hecke.comp import Composition, QSymElement, compositions, f_product
from bruhat_hecke.hecke import HeckeElement, left_ideal_basis, pi_pibar, pibar_of
from bruhat_hecke.hmod import ModuleMap, find_idempotent, is_indecomposable, is_isomorphic
from bruhat_hecke.interval_mod import (
    build,
    embed,
    induction_product,
    mackey_check,
    projective,
    restriction,
    twist_certificate,
    twist_target,
    twist,
)
from bruhat_hecke.linalg import Matrix
from bruhat_hecke.perm import Permutation, all_permutations, compose
from bruhat_hecke.tableaux import D_set, class_module, spct_classes, tread
from bruhat_hecke.verify import verify
from bruhat_hecke.weak_order import descent_preserving_iso, interval

P = Permutation.parse
EVERYTHING = 10**9


def _sweep(theorem: str, n: int, trials: int = 256) -> None:
    res = verify(theorem, n, seed=0, trials=trials)
    assert res.checked > 0
    assert res.ok, res.failures[:3]


def _shuffle_product(alpha: Composition, beta: Composition) -> QSymElement:
    """F_alpha F_beta as a sum over shuffles of two words with prescribed descents."""
    a, b = alpha.size, beta.size
    u = _word_with_descents(alpha)
    v = [x + a for x in _word_with_descents(beta)]
    out: Counter[Composition] = Counter()
    for pos in itertools.combinations(range(a + b), a):
        w, iu, iv = [], iter(u), iter(v)
        for k in range(a + b):
            w.append(next(iu) if k in pos else next(iv))
        des = {k for k in range(1, a + b) if w[k - 1] > w[k]}
        out[Composition.from_set(des, a + b)] += 1
    return QSymElement(out)


def _word_with_descents(alpha: Composition) -> list[int]:
    """A word on 1..n whose descent positions are exactly set(alpha)."""
    out, top = [], alpha.size
    for part in alpha.parts:
        out.extend(range(top - part + 1, top + 1))
        top -= part
    return out


def test_criterion_01_relations(criterion):
    with criterion(1, "relations for B and Bbar, exhaustive S_4 and 256 pairs in S_5"):
        t = time.time()
        _sweep("relations", 5)
        assert time.time() - t < 60


def test_criterion_02_embedding(criterion):
    with criterion(2, "embedding into the regular representation"):
        _sweep("embedding", 4)
        M = build(P("14325"), P("24315"))
        e = embed(M)
        assert e.verified()
        assert e.ideal_dim == 2
        tail = pibar_of(P("52314"))
        assert list(e.images) == [HeckeElement.pi(P("14325")) * tail, HeckeElement.pi(P("24315")) * tail]
        assert len(left_ideal_basis(HeckeElement.pi(P("14325")) * tail)) == 2


def test_criterion_03_zero_criterion(criterion):
    with criterion(3, "pi_sigma pibar_rho vanishing criterion on S_4 x S_4"):
        for n in range(1, 5):
            perms = list(all_permutations(n))
            for s, r in itertools.product(perms, perms):
                x, rep = pi_pibar(s, r)
                assert rep["nonzero"] == rep["lengths_add"] == rep["below_w0_rho_inv"], (s, r)
                if rep["nonzero"]:
                    assert rep["top"] == [(compose(s, r), 1)], (s, r)


def test_criterion_04_induction(criterion):
    with criterion(4, "induction product isomorphisms for m+n <= 5"):
        _sweep("tensor", 5)
        out = induction_product(build(P("12"), P("12")), build(P("12"), P("21")))
        assert out.map.is_isomorphism()
        assert (out.target.sigma, out.target.rho) == (P("1234"), P("3421"))
        assert out.induced.dim == 12
        listed = "1234 1324 1423 2314 2413 3412 1243 1342 1432 2341 2431 3421".split()
        assert set(out.target.interval.vertices) == {P(w) for w in listed}


def test_criterion_05_restriction(criterion):
    with criterion(5, "restriction decompositions for n <= 5"):
        _sweep("restriction", 5, trials=EVERYTHING)
        out = restriction(build(P("2134"), P("4312")), 2)
        assert out.map.is_isomorphism()
        got = [(str(s.left), str(s.right)) for s in out.summands]
        assert got == [("B(21,21)", "B(12,12)"), ("B(12,21)", "B(12,21)"), ("B(12,12)", "B(21,21)")]


def test_criterion_06_mackey(criterion):
    with criterion(6, "Mackey formula, exhaustive m = n = 2, sampled m+n = 5"):
        _sweep("mackey", 5)
        assert mackey_check(P("21"), P("21"), P("12"), P("21"), 2).ok


def test_criterion_07_twists(criterion):
    with criterion(7, "twist tables and compatibility with induction and restriction"):
        _sweep("twist-table", 4)
        _sweep("twist-functoriality", 4)
        M = build(P("2134"), P("4123"))
        expected = {"phi": ("1243", "2341", "plain"), "theta": ("2134", "4123", "bar"), "chi": ("3214", "4312", "bar")}
        for which, (lo, hi, v) in expected.items():
            a, b, var = twist_target(M.sigma, M.rho, "plain", which)
            assert (str(a), str(b), var) == (lo, hi, v)
            target = build(a, b, var)
            T = twist_certificate(M, which, target)
            assert ModuleMap(twist(M.module, which), target.module, T).is_isomorphism()


def test_criterion_08_characteristic(criterion):
    with criterion(8, "characteristic by labels, factors, traces and products"):
        _sweep("characters", 4)
        _sweep("characters", 5, trials=64)
        for a in range(1, 5):
            for b in range(1, 6 - a):
                for alpha in compositions(a):
                    for beta in compositions(b):
                        assert f_product(QSymElement.F(alpha), QSymElement.F(beta)) == _shuffle_product(alpha, beta)


def test_criterion_09_tableaux(criterion):
    with criterion(9, "SIT/SET n <= 7/8, SPCT classes n <= 6, the two-element (3,2) class and a negative control"):
        t = time.time()
        res = verify("sit-set", 8)
        assert res.ok, res.failures[:3]
        _sweep("spct", 6)
        pair = next(E for E in spct_classes(Composition((3, 2)), P("12")) if len(E) == 2)
        C = class_module(pair)
        assert [str(x) for x in C.tableaux] == ["4,3,1/5,2", "4,3,2/5,1"]
        assert str(C.source) == "4,3,2/5,1"
        assert D_set(C.source) == {1, 4}
        assert {str(x): str(tread(x, C.source)) for x in pair} == {"4,3,2/5,1": "14325", "4,3,1/5,2": "24315"}
        B0 = build(P("14325"), P("24315")).module
        assert is_isomorphic(C.module, B0) is not None
        Bc = build(P("45312"), P("45321"))
        assert is_isomorphic(C.module, Bc.module) is None
        _check_splitting(Bc)
        assert time.time() - t < 300


def _check_splitting(Bc) -> None:
    e = find_idempotent(Bc.module)
    assert e is not None
    ident = Matrix.identity(2)
    assert e @ e == e and e != ident and not e.is_zero()
    i1, i2 = Bc.interval.index[P("45312")], Bc.interval.index[P("45321")]
    line_a = {i2: 1}
    line_b = {i1: 1, i2: -1}
    for vec in (line_a, line_b):
        for i in Bc.module.generators:
            img = Bc.module.actions[i].apply(vec)
            assert not img or _parallel(img, vec)
    images = {_normalize(e.apply(line_a)), _normalize(e.apply(line_b))}
    assert images in ({(), _normalize(line_a)}, {(), _normalize(line_b)})


def _parallel(a: dict, b: dict) -> bool:
    return _normalize(a) == _normalize(b)


def _normalize(v: dict) -> tuple:
    v = {k: x for k, x in v.items() if x}
    if not v:
        return ()
    lead = v[min(v)]
    return tuple(sorted((k, x / lead) for k, x in v.items()))


def test_criterion_10_indecomposability(criterion):
    with criterion(10, "indecomposable projectives and the two five-element examples"):
        for n in range(1, 5):
            for alpha in compositions(n):
                assert is_indecomposable(projective(alpha).module), alpha
        assert is_indecomposable(build(P("14325"), P("24315")).module)
        Bc = build(P("45312"), P("45321")).module
        assert not is_indecomposable(Bc)
        e = find_idempotent(Bc)
        assert e is not None and e @ e == e
        assert all(A @ e == e @ A for A in Bc.actions.values())


def test_criterion_11_descent_preserving(criterion):
    with criterion(11, "descent-preserving interval isomorphisms"):
        A = interval(P("14325"), P("24315"))
        B = interval(P("41352"), P("42351"))
        C = interval(P("45312"), P("45321"))
        f = descent_preserving_iso(A, B)
        assert f == {P("14325"): P("41352"), P("24315"): P("42351")}
        assert descent_preserving_iso(A, C) is None
        MA, MB = build(A.bottom, A.top).module, build(B.bottom, B.top).module
        perm = [B.index[f[g]] for g in A.vertices]
        for i in MA.generators:
            assert MA.actions[i].permuted(perm) == MB.actions[i]
