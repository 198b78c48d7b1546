"""Weak Bruhat interval modules and the constructions built from them.

``build(sigma, rho)`` gives B(sigma, rho): pi_i fixes gamma on a left descent,
kills it when s_i*gamma leaves the interval, and moves it to s_i*gamma
otherwise.  ``build(..., "bar")`` gives the signed companion, whose pi_i
matrix is the pibar_i matrix plus the identity.

Every isomorphism asserted here comes with an explicit matrix that is checked
to intertwine the actions; nothing is accepted on dimension grounds alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal, Sequence

from .comp import Composition, GeneralizedComposition
from .hecke import HeckeElement, left_ideal_basis, pibar_of
from .hmod import HModule, ModuleMap, direct_sum, is_intertwiner, outer_tensor
from .linalg import Echelon, Matrix, block_diagonal, kron
from .perm import (
    Permutation,
    all_permutations,
    compose,
    identity,
    longest,
    min_coset_reps,
    ostar,
    reduced_word,
    standardize,
    star,
)
from .weak_order import Interval, interval, leq_left, restriction_data, split

Variant = Literal["plain", "bar"]
TWISTS = ("phi", "theta", "omega", "chi", "phihat", "thetahat", "omegahat")


class NotInInterval(ValueError):
    pass


@dataclass(frozen=True)
class IntervalModule:
    interval: Interval
    module: HModule
    variant: Variant = "plain"

    @property
    def sigma(self) -> Permutation:
        return self.interval.bottom

    @property
    def rho(self) -> Permutation:
        return self.interval.top

    @property
    def dim(self) -> int:
        return self.module.dim

    def __str__(self) -> str:
        name = "B" if self.variant == "plain" else "Bbar"
        return f"{name}({self.sigma},{self.rho})"


def _actions(iv: Interval, variant: Variant) -> dict[int, Matrix]:
    n = iv.n
    d = len(iv)
    actions = {}
    for i in range(1, n):
        cols = []
        for k, g in enumerate(iv.vertices):
            if i in g.left_descents:
                cols.append({k: 1} if variant == "plain" else {})
            else:
                h = g.left_mult(i)
                if h in iv.index:
                    cols.append({iv.index[h]: 1} if variant == "plain" else {k: 1, iv.index[h]: 1})
                else:
                    cols.append({} if variant == "plain" else {k: 1})
        actions[i] = Matrix(d, d, cols)
    return actions


def build(sigma: Permutation, rho: Permutation, variant: Variant = "plain") -> IntervalModule:
    if variant not in ("plain", "bar"):
        raise ValueError(f"unknown variant {variant!r}")
    iv = interval(sigma, rho)
    mod = HModule(sigma.n, len(iv), _actions(iv, variant), iv.vertices, variant == "plain")
    return IntervalModule(iv, mod, variant)


def pibar_matrix(M: IntervalModule, i: int) -> Matrix:
    """Matrix of pibar_i = pi_i - 1."""
    return M.module.actions[i] - Matrix.identity(M.dim)


def f_module(alpha: Composition) -> HModule:
    """The one-dimensional module F_alpha: pi_i acts by 0 on set(alpha), by 1 elsewhere."""
    n = alpha.size
    S = alpha.set()
    return HModule(n, 1, {i: Matrix(1, 1, [{} if i in S else {0: 1}]) for i in range(1, n)}, (alpha,), True)


def irreducible(alpha: Composition) -> IntervalModule:
    s = alpha.complement().w0()
    return build(s, s)


def projective(alpha: Composition) -> IntervalModule:
    n = alpha.size
    return build(alpha.complement().w0(), compose(longest(n), alpha.w0()))


def _column_order(n: int) -> list[Permutation]:
    return sorted(all_permutations(n), key=lambda p: (p.length, p.word))


def regular_module(n: int) -> HModule:
    perms = _column_order(n)
    index = {p: k for k, p in enumerate(perms)}
    actions = {}
    for i in range(1, n):
        cols = [{index[p if i in p.left_descents else p.left_mult(i)]: 1} for p in perms]
        actions[i] = Matrix(len(perms), len(perms), cols)
    return HModule(n, len(perms), actions, tuple(perms), True)


def ideal_module(x: HeckeElement) -> tuple[HModule, list[HeckeElement]]:
    """H_n(0) * x as a module, in its echelon basis."""
    basis = left_ideal_basis(x)
    perms = _column_order(x.n)
    order = {p: k for k, p in enumerate(perms)}
    pivots = [min(order[p] for p in b.terms) for b in basis]
    d = len(basis)
    actions = {}
    for i in range(1, x.n):
        cols = []
        for b in basis:
            y = b.left_generator(i)
            vec = {order[p]: c for p, c in y.terms.items()}
            cols.append({k: vec[p] for k, p in enumerate(pivots) if vec.get(p)})
        actions[i] = Matrix(d, d, cols)
    return HModule(x.n, d, actions), basis


def projective_gc(alpha: GeneralizedComposition) -> HModule:
    x = HeckeElement.pi(alpha.complement().w0()) * pibar_of(alpha.w0())
    return ideal_module(x)[0]


@dataclass(frozen=True)
class Embedding:
    map: ModuleMap
    generator: HeckeElement
    ideal_dim: int
    images: tuple[HeckeElement, ...]

    def verified(self) -> bool:
        M = self.map
        return M.verify() and M.is_injective() and self.ideal_dim == M.source.dim


def embed(M: IntervalModule) -> Embedding:
    """gamma -> pi_gamma pibar_{rho^-1 w0} (plain) or pibar_gamma pi_{rho^-1 w0} (bar)."""
    n = M.interval.n
    tail_perm = compose(M.rho.inverse, longest(n))
    reg = regular_module(n)
    order = {p: k for k, p in enumerate(reg.labels)}
    if M.variant == "plain":
        tail = pibar_of(tail_perm)
        images = [HeckeElement.pi(g) * tail for g in M.interval.vertices]
    else:
        tail = HeckeElement.pi(tail_perm)
        images = [pibar_of(g) * tail for g in M.interval.vertices]
    T = Matrix(reg.dim, M.dim, [{order[p]: c for p, c in y.terms.items()} for y in images])
    gen = images[0]
    ideal = left_ideal_basis(gen)
    ech = Echelon()
    for b in ideal:
        ech.add({order[p]: c for p, c in b.terms.items()})
    if not all(ech.contains(c) for c in T.cols):
        raise AssertionError("embedding image escapes the left ideal")
    return Embedding(ModuleMap(M.module, reg, T), gen, len(ideal), tuple(images))


def induce(M: HModule, N: HModule) -> HModule:
    """(M ⊗ N) induced from H_m(0) ⊗ H_k(0) to H_{m+k}(0).

    Basis pi_delta ⊗ x ⊗ y over delta in the minimal coset representatives.
    pi_i fixes a basis element on a left descent of delta, moves delta when
    s_i*delta is again a representative, and otherwise (s_i*delta = delta*s_j)
    passes pi_j through to the tensor factor.
    """
    m, k = M.n, N.n
    reps = min_coset_reps(m, k)
    rindex = {d: t for t, d in enumerate(reps)}
    inner = outer_tensor(M, N)
    dt = inner.dim
    N_all = m + k
    actions = {}
    for i in range(1, N_all):
        cols: list[dict] = []
        for d in reps:
            base = rindex[d] * dt
            if i in d.left_descents:
                cols.extend({base + x: 1} for x in range(dt))
                continue
            e = d.left_mult(i)
            if e in rindex:
                nb = rindex[e] * dt
                cols.extend({nb + x: 1} for x in range(dt))
                continue
            j = d.inverse(i)
            if d.inverse(i + 1) != j + 1 or j == m:
                raise AssertionError("coset factorization failed")
            A = inner.actions[j]
            cols.extend({base + r: v for r, v in A.cols[x].items()} for x in range(dt))
        actions[i] = Matrix(len(reps) * dt, len(reps) * dt, cols)
    labels = None
    if inner.labels is not None:
        labels = tuple((d,) + tuple(lab) for d in reps for lab in inner.labels)
    return HModule(N_all, len(reps) * dt, actions, labels, inner.monomial)


def induce_map(f: Matrix, g: Matrix, m: int, k: int) -> Matrix:
    """Induced morphism pi_delta ⊗ x ⊗ y -> pi_delta ⊗ f(x) ⊗ g(y)."""
    r = len(min_coset_reps(m, k))
    return block_diagonal([kron(f, g)] * r)


def act_word(M: HModule, word: Sequence[int], vec: dict) -> dict:
    """pi_{i1} ... pi_{ip} applied to vec (rightmost first)."""
    for i in reversed(list(word)):
        vec = M.actions[i].apply(vec)
    return vec


@dataclass(frozen=True)
class InductionResult:
    induced: HModule
    target: IntervalModule
    map: ModuleMap


def induction_product(M: IntervalModule, N: IntervalModule) -> InductionResult:
    if M.variant != "plain" or N.variant != "plain":
        raise ValueError("induction product is implemented for plain interval modules")
    ind = induce(M.module, N.module)
    target = build(star(M.sigma, N.sigma), ostar(M.rho, N.rho))
    cols = []
    for d, g, h in ind.labels:
        img = compose(d, star(g, h))
        cols.append({target.interval.index[img]: 1})
    T = Matrix(target.dim, ind.dim, cols)
    return InductionResult(ind, target, ModuleMap(ind, target.module, T))


@dataclass(frozen=True)
class Summand:
    J: frozenset[int]
    left: IntervalModule
    right: IntervalModule


@dataclass(frozen=True)
class RestrictionResult:
    summands: tuple[Summand, ...]
    restricted: HModule
    total: HModule
    map: ModuleMap


def restriction(M: IntervalModule, m: int) -> RestrictionResult:
    n = M.interval.n
    if not 1 <= m < n:
        raise ValueError(f"m = {m} out of range for n = {n}")
    summands = []
    for J, sJ, rJ in restriction_data(M.sigma, M.rho, m):
        a1, a2 = split(sJ, m)
        b1, b2 = split(rJ, m)
        summands.append(Summand(J, build(a1, b1, M.variant), build(a2, b2, M.variant)))
    gens = [i for i in range(1, n) if i != m]
    restricted = M.module.restrict(gens)
    total = direct_sum(*(outer_tensor(s.left.module, s.right.module) for s in summands))
    offsets = {}
    off = 0
    for s in summands:
        offsets[s.J] = (off, s)
        off += s.left.dim * s.right.dim
    cols = []
    for g in M.interval.vertices:
        J = frozenset(g.inverse.word[:m])
        base, s = offsets[J]
        g1, g2 = split(g, m)
        cols.append({base + s.left.interval.index[g1] * s.right.dim + s.right.interval.index[g2]: 1})
    T = Matrix(total.dim, M.dim, cols)
    return RestrictionResult(tuple(summands), restricted, total, ModuleMap(restricted, total, T))


def sub_quot_maps(M: IntervalModule, sub_bottom: Permutation | None = None, quot_top: Permutation | None = None) -> ModuleMap:
    """Inclusion B(sigma', rho) -> B(sigma, rho) or projection B(sigma, rho) -> B(sigma, rho')."""
    if (sub_bottom is None) == (quot_top is None):
        raise ValueError("give exactly one of sub_bottom, quot_top")
    if sub_bottom is not None:
        if sub_bottom not in M.interval:
            raise NotInInterval(f"{sub_bottom} is not in {M}")
        S = build(sub_bottom, M.rho, M.variant)
        T = Matrix(M.dim, S.dim, [{M.interval.index[g]: 1} for g in S.interval.vertices])
        return ModuleMap(S.module, M.module, T)
    if quot_top not in M.interval:
        raise NotInInterval(f"{quot_top} is not in {M}")
    Q = build(M.sigma, quot_top, M.variant)
    T = Matrix(Q.dim, M.dim, [{Q.interval.index[g]: 1} if g in Q.interval else {} for g in M.interval.vertices])
    return ModuleMap(M.module, Q.module, T)


# --- twists -------------------------------------------------------------


def twist(M: HModule, which: str) -> HModule:
    """Twist by one of the seven (anti-)involutions.

    phi: pi_i -> pi_{n-i}; theta: pi_i -> 1 - pi_i; chi: anti, pi_i -> pi_i.
    Anti-involution twists act on the dual space, so their matrices are
    transposes (dual basis ordered like the primal one).
    """
    n = M.n
    ident = Matrix.identity(M.dim)
    flip = which in ("phi", "omega", "phihat", "omegahat")
    neg = which in ("theta", "omega", "thetahat", "omegahat")
    dual = which in ("chi", "phihat", "thetahat", "omegahat")
    if which not in TWISTS:
        raise ValueError(f"unknown twist {which!r}")
    actions = {}
    for i in M.generators:
        j = n - i if flip else i
        A = M.actions[i]
        if neg:
            A = ident - A
        if dual:
            A = A.T
        actions[j] = A
    mono = all(a.is_monomial() for a in actions.values())
    return HModule(n, M.dim, actions, M.labels, mono)


def _conj(g: Permutation) -> Permutation:
    return g.conj_w0()


# which -> (target bounds from (sigma, rho), flips variant, label map, sign base)
_TWIST_RULES: dict[str, tuple] = {
    "phi": (lambda s, r: (_conj(s), _conj(r)), False, lambda g, w0: _conj(g), None),
    "theta": (lambda s, r: (s, r), True, lambda g, w0: g, "bottom"),
    "omega": (lambda s, r: (_conj(s), _conj(r)), True, lambda g, w0: _conj(g), "bottom"),
    "chi": (lambda s, r: (compose(r, longest(r.n)), compose(s, longest(s.n))), True, lambda g, w0: compose(g, w0), None),
    "phihat": (lambda s, r: (compose(longest(r.n), r), compose(longest(s.n), s)), True, lambda g, w0: compose(w0, g), None),
    "thetahat": (lambda s, r: (compose(r, longest(r.n)), compose(s, longest(s.n))), False, lambda g, w0: compose(g, w0), "top"),
    "omegahat": (lambda s, r: (compose(longest(r.n), r), compose(longest(s.n), s)), False, lambda g, w0: compose(w0, g), "top"),
}


def twist_target(sigma: Permutation, rho: Permutation, variant: Variant, which: str) -> tuple[Permutation, Permutation, Variant]:
    bounds, flips, _, _ = _TWIST_RULES[which]
    lo, hi = bounds(sigma, rho)
    v: Variant = variant
    if flips:
        v = "bar" if variant == "plain" else "plain"
    return lo, hi, v


def twist_certificate(M: IntervalModule, which: str, target: IntervalModule) -> Matrix:
    """Composite of the maps gamma -> gamma^{w0}, gamma -> ±gamma, gamma* -> gamma w0."""
    _, _, label, sign_base = _TWIST_RULES[which]
    w0 = longest(M.interval.n)
    cols = []
    for g in M.interval.vertices:
        sign = 1
        if sign_base == "bottom":
            sign = (-1) ** compose(g, M.sigma.inverse).length
        elif sign_base == "top":
            sign = (-1) ** compose(g, M.rho.inverse).length
        cols.append({target.interval.index[label(g, w0)]: sign})
    return Matrix(target.dim, M.dim, cols)


@dataclass(frozen=True)
class TwistCell:
    which: str
    variant: Variant
    target: str
    ok: bool


def twist_table_check(sigma: Permutation, rho: Permutation) -> list[TwistCell]:
    """All 14 cells of the interval-module twist table, each by an explicit certificate."""
    out = []
    for variant in ("plain", "bar"):
        M = build(sigma, rho, variant)
        for which in TWISTS:
            lo, hi, v = twist_target(sigma, rho, variant, which)
            try:
                target = build(lo, hi, v)
            except ValueError:
                out.append(TwistCell(which, variant, f"{v}({lo},{hi})", False))
                continue
            src = twist(M.module, which)
            T = twist_certificate(M, which, target)
            ok = ModuleMap(src, target.module, T).is_isomorphism()
            out.append(TwistCell(which, variant, str(target), ok))
    return out


def omegahat_forms(sigma: Permutation, rho: Permutation) -> dict[str, bool]:
    """Which of the two stated forms of the omegahat twist of B(sigma, rho) holds."""
    from .hmod import is_isomorphic

    w0 = longest(sigma.n)
    src = twist(build(sigma, rho).module, "omegahat")
    out = {}
    for name, (a, b) in {
        "B(w0 rho, w0 sigma)": (compose(w0, rho), compose(w0, sigma)),
        "B(w0 sigma, w0 rho)": (compose(w0, sigma), compose(w0, rho)),
    }.items():
        if not leq_left(a, b):
            out[name] = False
            continue
        out[name] = is_isomorphic(src, build(a, b).module) is not None
    return out


_BASIC_TWISTS = {
    "F": {"phi": "r", "theta": "c", "omega": "t", "chi": "", "phihat": "r", "thetahat": "c", "omegahat": "t"},
    "P": {"phi": "r", "theta": "c", "omega": "t", "chi": "r", "phihat": "", "thetahat": "t", "omegahat": "c"},
}


def basic_twist_expected(kind: str, alpha: Composition, which: str) -> Composition:
    op = _BASIC_TWISTS[kind][which]
    return alpha.involution(op) if op else alpha


def basic_twist_check(alpha: Composition) -> list[tuple[str, str, bool]]:
    from .hmod import is_isomorphic

    out = []
    for which in TWISTS:
        src = twist(f_module(alpha), which)
        tgt = f_module(basic_twist_expected("F", alpha, which))
        out.append(("F", which, src.actions == tgt.actions))
        src = twist(projective(alpha).module, which)
        tgt = projective(basic_twist_expected("P", alpha, which)).module
        out.append(("P", which, is_isomorphic(src, tgt) is not None))
    return out


# --- Mackey ---------------------------------------------------------------

Maybe = Permutation | None


def _split0(g: Permutation, t: int) -> tuple[Maybe, Maybe]:
    if t == 0:
        return None, g
    if t == g.n:
        return g, None
    return split(g, t)


def _star0(a: Maybe, b: Maybe) -> Maybe:
    if a is None:
        return b
    if b is None:
        return a
    return star(a, b)


def _ostar0(a: Maybe, b: Maybe) -> Maybe:
    if a is None:
        return b
    if b is None:
        return a
    return ostar(a, b)


@dataclass(frozen=True)
class MackeyReport:
    bijection: bool
    equalities: bool
    isomorphism: bool
    lhs_dim: int
    rhs_dim: int
    labels: tuple

    @property
    def ok(self) -> bool:
        return self.bijection and self.equalities and self.isomorphism


def _pair_module(a: Maybe, b: Maybe, c: Maybe, d: Maybe) -> tuple[HModule, dict]:
    """B(a,b) ⊠ B(c,d) with empty factors dropped; returns module and a locator.

    The locator sends a permutation eps of the induced interval to the basis
    index of pi_delta ⊗ g ⊗ h with eps = delta (g * h).
    """
    if a is None:
        X = build(c, d)
        return X.module, {g: k for k, g in enumerate(X.interval.vertices)}
    if c is None:
        X = build(a, b)
        return X.module, {g: k for k, g in enumerate(X.interval.vertices)}
    L, R = build(a, b), build(c, d)
    ind = induce(L.module, R.module)
    loc = {}
    for k, (dl, g, h) in enumerate(ind.labels):
        loc[compose(dl, star(g, h))] = k
    return ind, loc


def mackey_check(sigma: Permutation, rho: Permutation, sigma2: Permutation, rho2: Permutation, k: int) -> MackeyReport:
    m, n = sigma.n, sigma2.n
    if not (leq_left(sigma, rho) and leq_left(sigma2, rho2)):
        raise ValueError("pairs must be comparable")
    if not 1 <= k < m + n:
        raise ValueError(f"k = {k} out of range")
    big_s, big_r = star(sigma, sigma2), ostar(rho, rho2)
    big = restriction_data(big_s, big_r, k)
    S1 = {t: {J: (a, b) for J, a, b in restriction_data(sigma, rho, t)} for t in range(0, m + 1)}
    S2 = {s: {J: (a, b) for J, a, b in restriction_data(sigma2, rho2, s)} for s in range(0, n + 1)}
    rhs_keys = [
        (J1, J2)
        for t in range(0, m + 1)
        for s in [k - t]
        if 0 <= s <= n
        for J1 in S1[t]
        for J2 in S2[s]
    ]
    f = {}
    for J, _, _ in big:
        J1 = frozenset(j for j in J if j <= m)
        J2 = frozenset(j - m for j in J if j > m)
        f[J] = (J1, J2)
    bijection = len(f) == len(rhs_keys) and set(f.values()) == set(rhs_keys)

    equalities = True
    labels = []
    blocks = []
    for J, sJ, rJ in big:
        J1, J2 = f[J]
        t, s = len(J1), len(J2)
        if J1 not in S1[t] or J2 not in S2[s]:
            equalities = False
            continue
        s1, r1 = S1[t][J1]
        s2, r2 = S2[s][J2]
        a1, a2 = _split0(s1, t)
        b1, b2 = _split0(r1, t)
        c1, c2 = _split0(s2, s)
        d1, d2 = _split0(r2, s)
        L1, L2 = _split0(sJ, k)
        U1, U2 = _split0(rJ, k)
        eq = (
            L1 == _star0(a1, c1),
            U1 == _ostar0(b1, d1),
            L2 == _star0(a2, c2),
            U2 == _ostar0(b2, d2),
        )
        equalities = equalities and all(eq)
        labels.append((tuple(sorted(J)), tuple(sorted(J1)), tuple(sorted(J2)), eq))
        X1, loc1 = _pair_module(a1, b1, c1, d1)
        X2, loc2 = _pair_module(a2, b2, c2, d2)
        blocks.append((J, X1, loc1, X2, loc2))

    gens = [i for i in range(1, m + n) if i != k]
    M, N = build(sigma, rho), build(sigma2, rho2)
    lhs = induce(M.module, N.module).restrict(gens)
    isomorphism = False
    rhs_dim = 0
    if bijection and equalities:
        parts = [outer_tensor(X1, X2) for _, X1, _, X2, _ in blocks]
        rhs = direct_sum(*parts)
        rhs_dim = rhs.dim
        offsets = {}
        off = 0
        for (J, X1, loc1, X2, loc2), P in zip(blocks, parts):
            offsets[J] = (off, X2.dim, loc1, loc2)
            off += P.dim
        cols = []
        ok = True
        for d, g, h in induce(M.module, N.module).labels:
            eps = compose(d, star(g, h))
            J = frozenset(eps.inverse.word[:k])
            if J not in offsets:
                ok = False
                break
            base, d2, loc1, loc2 = offsets[J]
            e1, e2 = split(eps, k)
            if e1 not in loc1 or e2 not in loc2:
                ok = False
                break
            cols.append({base + loc1[e1] * d2 + loc2[e2]: 1})
        if ok and rhs.dim == lhs.dim:
            T = Matrix(rhs.dim, lhs.dim, cols)
            isomorphism = ModuleMap(lhs, rhs, T).is_isomorphism()
    return MackeyReport(bijection, equalities, isomorphism, lhs.dim, rhs_dim, tuple(labels))


# --- twists versus induction and restriction -----------------------------


def twisted_induction_certificate(M: HModule, N: HModule, which: Literal["phi", "theta"]) -> tuple[HModule, HModule, Matrix]:
    """Explicit map into twist(M ⊠ N) from twist(N) ⊠ twist(M) (phi) or
    twist(M) ⊠ twist(N) (theta): pi_delta ⊗ u goes to twist(pi_delta) acting on 1 ⊗ u.
    """
    lhs = twist(induce(M, N), which)
    dM, dN = M.dim, N.dim
    if which == "phi":
        rhs = induce(twist(N, "phi"), twist(M, "phi"))
        reps = min_coset_reps(N.n, M.n)
    else:
        rhs = induce(twist(M, "theta"), twist(N, "theta"))
        reps = min_coset_reps(M.n, N.n)
    cols = []
    for d in reps:
        word = reduced_word(d)
        for u in range(dM * dN):
            if which == "phi":
                y, x = divmod(u, dM)
                start = x * dN + y
            else:
                start = u
            cols.append(act_word(lhs, word, {start: 1}))
    return rhs, lhs, Matrix(lhs.dim, rhs.dim, cols)


@dataclass(frozen=True)
class FunctorialityReport:
    label: str
    ok: bool
    method: str


def twist_functoriality_check(
    pairs_m: Sequence[tuple[Permutation, Permutation]],
    pairs_n: Sequence[tuple[Permutation, Permutation]],
    seed: int = 0,
    trials: int = 64,
) -> list[FunctorialityReport]:
    """Twists against induction on every M ⊠ N from the given pairs, and against
    restriction on B(sigma*sigma', rho ostar rho')."""
    from .hmod import is_isomorphic

    out = []
    for (s1, r1), (s2, r2) in itertools.product(pairs_m, pairs_n):
        M, N = build(s1, r1).module, build(s2, r2).module
        m, n = M.n, N.n
        tag = f"M=B({s1},{r1}) N=B({s2},{r2})"
        for which, code in (("phi", "ind-phi"), ("theta", "ind-theta")):
            rhs, lhs, T = twisted_induction_certificate(M, N, which)
            ok = ModuleMap(rhs, lhs, T).is_isomorphism()
            out.append(FunctorialityReport(f"{code} {tag}", ok, "explicit"))
        lhs = twist(induce(M, N), "chi")
        rhs = induce(twist(N, "chi"), twist(M, "chi"))
        ok = is_isomorphic(rhs, lhs, seed=seed, trials=trials) is not None
        out.append(FunctorialityReport(f"ind-chi {tag}", ok, "hom-search"))

        L = build(star(s1, s2), ostar(r1, r2)).module
        tot = m + n
        for which, code in (("phi", "res-phi"), ("theta", "res-theta"), ("chi", "res-chi")):
            if which == "phi":
                down = L.restrict([i for i in range(1, tot) if i != n])
                a = twist(down, "phi")
                b = twist(L, "phi").restrict([i for i in range(1, tot) if i != m])
            else:
                gens = [i for i in range(1, tot) if i != m]
                a = twist(L.restrict(gens), which)
                b = twist(L, which).restrict(gens)
            ok = ModuleMap(a, b, Matrix.identity(L.dim)).is_isomorphism()
            out.append(FunctorialityReport(f"{code} L=B({star(s1, s2)},{ostar(r1, r2)})", ok, "identity"))
    return out
