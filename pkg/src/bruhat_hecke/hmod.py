"""Finite-dimensional H_n(0)-modules given by action matrices.

A module stores one matrix per generator it knows about.  Full H_n(0)-modules
carry generators 1..n-1; modules over a parabolic subalgebra such as
H_m(0) ⊗ H_k(0) (generators i != m) simply omit the missing ones, so the same
machinery handles restrictions.

Column ``j`` of ``actions[i]`` is the image of basis vector ``j`` under pi_i.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .comp import Composition, QSymElement, comp_of_perm
from .linalg import (
    Echelon,
    Matrix,
    block_diagonal,
    charpoly,
    fmt,
    inverse,
    kron,
    nullspace,
    parse_rational,
    rational_roots,
    row_reduce,
)
from .perm import Permutation

__all__ = [
    "HModule",
    "ModuleMap",
    "NotMonomial",
    "ZeroModule",
    "ch",
    "check_relations",
    "composition_factors",
    "direct_sum",
    "end_radical",
    "find_idempotent",
    "hom_space",
    "is_indecomposable",
    "is_intertwiner",
    "is_isomorphic",
    "outer_tensor",
    "source_sink",
    "trace_multiplicities",
]


class NotMonomial(ValueError):
    pass


class ZeroModule(ValueError):
    pass


@dataclass(frozen=True)
class HModule:
    n: int
    dim: int
    actions: dict[int, Matrix]
    labels: tuple[Hashable, ...] | None = None
    monomial: bool = False
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for i, a in self.actions.items():
            if not 1 <= i < self.n:
                raise ValueError(f"generator {i} out of range for n = {self.n}")
            if a.shape != (self.dim, self.dim):
                raise ValueError(f"action {i} has shape {a.shape}, expected {(self.dim, self.dim)}")
        if self.labels is not None and len(self.labels) != self.dim:
            raise ValueError("label count does not match dimension")
        if self.monomial and not all(a.is_monomial() for a in self.actions.values()):
            raise NotMonomial("monomial flag set on a non-monomial action")

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(sorted(self.actions))

    def A(self, i: int) -> Matrix:
        return self.actions[i]

    def is_full(self) -> bool:
        return self.generators == tuple(range(1, self.n))

    def restrict(self, generators: Iterable[int]) -> HModule:
        gens = set(generators)
        return HModule(self.n, self.dim, {i: a for i, a in self.actions.items() if i in gens}, self.labels, self.monomial)

    def relabel(self, labels: Sequence[Hashable] | None, name: str = "") -> HModule:
        return HModule(self.n, self.dim, self.actions, None if labels is None else tuple(labels), self.monomial, name)

    def act(self, i: int, vec: dict[int, object]) -> dict:
        return self.actions[i].apply(vec)

    def move_graph(self) -> dict[int, list[tuple[int, int]]]:
        """For monomial modules: j -> [(i, k)] whenever pi_i sends basis j to basis k != j."""
        if not self.monomial:
            raise NotMonomial("move graph needs a monomial module")
        out: dict[int, list[tuple[int, int]]] = {j: [] for j in range(self.dim)}
        for i in self.generators:
            for j, col in enumerate(self.actions[i].cols):
                for k in col:
                    if k != j:
                        out[j].append((i, k))
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "generators": list(self.generators),
            "actions": [[[fmt(x) for x in row] for row in self.actions[i].to_rows()] for i in self.generators],
            "labels": None if self.labels is None else [str(x) for x in self.labels],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> HModule:
        if isinstance(data, str):
            data = json.loads(data)
        gens = data.get("generators", list(range(1, data["n"])))
        actions = {}
        for i, rows in zip(gens, data["actions"]):
            if rows:
                actions[i] = Matrix.from_rows([[parse_rational(x) for x in row] for row in rows])
            else:
                actions[i] = Matrix.zero(data["dim"], data["dim"])
        labels = data.get("labels")
        mono = all(a.is_monomial() for a in actions.values())
        return cls(data["n"], data["dim"], actions, None if labels is None else tuple(labels), mono)


@dataclass(frozen=True)
class ModuleMap:
    source: HModule
    target: HModule
    matrix: Matrix

    def verify(self) -> bool:
        return is_intertwiner(self.matrix, self.source, self.target)

    def is_injective(self) -> bool:
        return self.matrix.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.matrix.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective() and self.verify()

    def to_json(self) -> dict:
        return {"rows": [[fmt(x) for x in row] for row in self.matrix.to_rows()]}


def zero_module(n: int) -> HModule:
    return HModule(n, 0, {i: Matrix.zero(0, 0) for i in range(1, n)}, (), True)


def check_relations(M: HModule) -> bool:
    gens = M.generators
    A = M.actions
    for i in gens:
        if A[i] @ A[i] != A[i]:
            return False
    for i, j in itertools.combinations(gens, 2):
        if j - i >= 2 and A[i] @ A[j] != A[j] @ A[i]:
            return False
        if j == i + 1 and A[i] @ A[j] @ A[i] != A[j] @ A[i] @ A[j]:
            return False
    return True


def is_intertwiner(T: Matrix, M: HModule, N: HModule) -> bool:
    if M.generators != N.generators:
        raise ValueError("modules over different generator sets")
    if T.shape != (N.dim, M.dim):
        return False
    return all(T @ M.actions[i] == N.actions[i] @ T for i in M.generators)


def _hom_equations(M: HModule, N: HModule) -> list[dict[int, object]]:
    dm, dn = M.dim, N.dim
    rows = []
    for i in M.generators:
        A = M.actions[i]
        Brows = N.actions[i].row_dicts()
        for c in range(dm):
            acol = A.cols[c]
            for r in range(dn):
                eq: dict[int, object] = {r * dm + k: v for k, v in acol.items()}
                for k, v in Brows[r].items():
                    key = k * dm + c
                    s = eq.get(key, 0) - v
                    if s:
                        eq[key] = s
                    else:
                        eq.pop(key, None)
                if eq:
                    rows.append(eq)
    return rows


def hom_space(M: HModule, N: HModule) -> list[ModuleMap]:
    """Basis of Hom(M, N), solving X A_i = B_i X for the dim(N) x dim(M) matrix X."""
    if M.n != N.n or M.generators != N.generators:
        raise ValueError("modules over different algebras")
    dm, dn = M.dim, N.dim
    if dm == 0 or dn == 0:
        return []
    sols = nullspace(_hom_equations(M, N), dm * dn)
    out = []
    for v in sols:
        cols: list[dict[int, object]] = [{} for _ in range(dm)]
        for idx, x in v.items():
            r, c = divmod(idx, dm)
            cols[c][r] = x
        out.append(ModuleMap(M, N, Matrix(dn, dm, cols)))
    return out


def is_isomorphic(
    M: HModule,
    N: HModule,
    seed: int = 0,
    trials: int = 64,
    candidates: Iterable[Matrix] = (),
) -> ModuleMap | None:
    """A verified isomorphism M -> N, or None.

    Candidate matrices (for instance an explicit map from a proof) are tried
    first.  Otherwise the hom space is computed and its basis elements, then
    seeded random small-integer combinations, are tested for invertibility.
    A None answer is probabilistic.
    """
    if M.dim != N.dim or M.n != N.n or M.generators != N.generators:
        return None
    for T in candidates:
        f = ModuleMap(M, N, T)
        if f.is_isomorphism():
            return f
    if M.dim == 0:
        return ModuleMap(M, N, Matrix.zero(0, 0))
    basis = hom_space(M, N)
    if not basis:
        return None
    if len(hom_space(N, M)) == 0:
        return None
    for f in basis:
        if f.matrix.is_invertible():
            return f
    rng = random.Random(seed)
    for _ in range(trials):
        T = Matrix.zero(N.dim, M.dim)
        for f in basis:
            T = T + f.matrix.scale(rng.randint(-3, 3))
        if T.is_invertible():
            return ModuleMap(M, N, T)
    return None


def end_radical(M: HModule) -> tuple[list[Matrix], list[Matrix]]:
    """Basis of End(M) and of its radical, the kernel of the trace form."""
    end = [f.matrix for f in hom_space(M, M)]
    k = len(end)
    gram = [{b: (end[a] @ end[b]).trace() for b in range(k)} for a in range(k)]
    gram = [{b: v for b, v in row.items() if v} for row in gram]
    rad = []
    for v in nullspace(gram, k):
        x = Matrix.zero(M.dim, M.dim)
        for b, c in v.items():
            x = x + end[b].scale(c)
        rad.append(x)
    return end, rad


def is_indecomposable(M: HModule) -> bool:
    if M.dim == 0:
        raise ZeroModule("the zero module is neither decomposable nor indecomposable")
    end, rad = end_radical(M)
    return len(end) - len(rad) == 1


def _fitting_idempotent(x: Matrix) -> Matrix | None:
    """Projection onto a generalized eigenspace of x along the rest, if proper."""
    d = x.nrows
    ident = Matrix.identity(d)
    for lam in rational_roots(charpoly(x)):
        y = x - ident.scale(lam)
        yd = ident
        for _ in range(d):
            yd = yd @ y
        ker = nullspace(yd.row_dicts(), d)
        if not 0 < len(ker) < d:
            continue
        img = row_reduce(yd.cols)[0]
        P = Matrix(d, d, ker + img)
        Pinv = inverse(P)
        if Pinv is None:
            continue
        e = P @ Matrix.diagonal([1] * len(ker) + [0] * len(img)) @ Pinv
        return e
    return None


def find_idempotent(M: HModule, seed: int = 0, trials: int = 32) -> Matrix | None:
    """A nontrivial idempotent endomorphism of M, verified, or None."""
    end, rad = end_radical(M)
    if len(end) - len(rad) <= 1:
        return None
    rng = random.Random(seed)
    pool = list(end)
    for _ in range(trials):
        x = Matrix.zero(M.dim, M.dim)
        for b in end:
            x = x + b.scale(rng.randint(-3, 3))
        pool.append(x)
    ident = Matrix.identity(M.dim)
    for x in pool:
        e = _fitting_idempotent(x)
        if e is not None and e @ e == e and not e.is_zero() and e != ident and is_intertwiner(e, M, M):
            return e
    return None


def _support_order(M: HModule) -> list[int] | None:
    """Topological order of the off-diagonal support digraph, or None if cyclic."""
    succ: dict[int, set[int]] = {j: set() for j in range(M.dim)}
    indeg = [0] * M.dim
    for a in M.actions.values():
        for j, col in enumerate(a.cols):
            for k in col:
                if k != j and k not in succ[j]:
                    succ[j].add(k)
                    indeg[k] += 1
    queue = deque(j for j in range(M.dim) if indeg[j] == 0)
    order = []
    while queue:
        j = queue.popleft()
        order.append(j)
        for k in sorted(succ[j]):
            indeg[k] -= 1
            if indeg[k] == 0:
                queue.append(k)
    return order if len(order) == M.dim else None


def _triangular_factors(M: HModule) -> Counter[Composition] | None:
    if _support_order(M) is None:
        return None
    out: Counter[Composition] = Counter()
    for j in range(M.dim):
        S = set()
        for i in range(1, M.n):
            d = M.actions[i].cols[j].get(j, 0)
            if d == 0:
                S.add(i)
            elif d != 1:
                return None
        out[Composition.from_set(S, M.n)] += 1
    return out


def _one_dim_submodule(M: HModule) -> tuple[frozenset[int], dict] | None:
    n = M.n
    gens = range(1, n)
    d = M.dim
    ident = Matrix.identity(d)
    for k in range(n):
        for S in itertools.combinations(gens, k):
            rows = []
            for i in gens:
                B = M.actions[i] if i in S else M.actions[i] - ident
                rows.extend(B.row_dicts())
            sol = nullspace(rows, d)
            if sol:
                return frozenset(S), sol[0]
    return None


def _quotient_line(M: HModule, v: dict) -> HModule:
    p = min(v)
    vp = Fraction(v[p])
    keep = [j for j in range(M.dim) if j != p]
    new_index = {j: t for t, j in enumerate(keep)}
    actions = {}
    for i, A in M.actions.items():
        cols = []
        for j in keep:
            col = A.cols[j]
            apj = col.get(p, 0)
            newcol = {}
            for k in keep:
                val = col.get(k, 0) - apj * v.get(k, 0) / vp
                if val:
                    newcol[new_index[k]] = val
            cols.append(newcol)
        actions[i] = Matrix(len(keep), len(keep), cols)
    return HModule(M.n, len(keep), actions)


def composition_factors(M: HModule, fast: bool = True) -> Counter[Composition]:
    """Multiset of composition factors, as compositions alpha with [F_alpha].

    When the off-diagonal support of the action is acyclic the matrices are
    simultaneously triangular in a topological order, and the factors are read
    off the diagonal.  Otherwise one-dimensional submodules are peeled off.
    """
    if not M.is_full():
        raise ValueError("composition factors need all generators")
    if fast:
        tri = _triangular_factors(M)
        if tri is not None:
            return tri
    out: Counter[Composition] = Counter()
    cur = M
    while cur.dim:
        found = _one_dim_submodule(cur)
        if found is None:
            raise RuntimeError("no one-dimensional submodule found")
        S, v = found
        out[Composition.from_set(S, M.n)] += 1
        cur = _quotient_line(cur, v)
    return out


def ch(M: HModule) -> QSymElement:
    if M.monomial and M.labels is not None and all(isinstance(x, Permutation) for x in M.labels):
        return QSymElement(Counter(comp_of_perm(g).complement() for g in M.labels))
    return QSymElement(composition_factors(M))


def source_sink(M: HModule) -> tuple[Hashable | None, Hashable | None]:
    if not M.monomial:
        raise NotMonomial("source/sink need a monomial module")
    graph = M.move_graph()
    reach = []
    for s in range(M.dim):
        seen = {s}
        queue = deque([s])
        while queue:
            j = queue.popleft()
            for _, k in graph[j]:
                if k not in seen:
                    seen.add(k)
                    queue.append(k)
        reach.append(seen)
    sources = [s for s in range(M.dim) if len(reach[s]) == M.dim]
    sinks = [t for t in range(M.dim) if all(t in r for r in reach)]
    lab = M.labels if M.labels is not None else tuple(range(M.dim))
    src = lab[sources[0]] if len(sources) == 1 else None
    snk = lab[sinks[0]] if len(sinks) == 1 else None
    return src, snk


def direct_sum(*mods: HModule) -> HModule:
    if not mods:
        raise ValueError("empty direct sum")
    gens = mods[0].generators
    if any(m.generators != gens or m.n != mods[0].n for m in mods):
        raise ValueError("summands over different algebras")
    actions = {i: block_diagonal([m.actions[i] for m in mods]) for i in gens}
    labels = None
    if all(m.labels is not None for m in mods):
        labels = tuple((k, x) for k, m in enumerate(mods) for x in m.labels)
    return HModule(mods[0].n, sum(m.dim for m in mods), actions, labels, all(m.monomial for m in mods))


def outer_tensor(M: HModule, N: HModule) -> HModule:
    """M ⊗ N as a module over H_m(0) ⊗ H_k(0), generators i != m of H_{m+k}(0)."""
    m, k = M.n, N.n
    IM, IN = Matrix.identity(M.dim), Matrix.identity(N.dim)
    actions = {}
    for i in M.generators:
        actions[i] = kron(M.actions[i], IN)
    for j in N.generators:
        actions[m + j] = kron(IM, N.actions[j])
    labels = None
    if M.labels is not None and N.labels is not None:
        labels = tuple((x, y) for x in M.labels for y in N.labels)
    return HModule(m + k, M.dim * N.dim, actions, labels, M.monomial and N.monomial)


def trace_multiplicities(M: HModule) -> Counter[Composition]:
    """Composition multiplicities from traces of pi_{w0(J)}, by Möbius inversion.

    pi_{w0(J)} acts on F_alpha by 1 if J misses set(alpha) and by 0 otherwise,
    so tr(pi_{w0(J)}) counts factors with set inside the complement of J.
    """
    from .perm import parabolic_longest, reduced_word

    n = M.n
    full = frozenset(range(1, n))
    g: dict[frozenset[int], object] = {}
    for k in range(n):
        for U in itertools.combinations(sorted(full), k):
            U = frozenset(U)
            J = full - U
            x = Matrix.identity(M.dim)
            for i in reduced_word(parabolic_longest(J, n)):
                x = M.actions[i] @ x
            g[U] = x.trace()
    out: Counter[Composition] = Counter()
    for S in g:
        total = 0
        for k in range(len(S) + 1):
            for U in itertools.combinations(sorted(S), k):
                total += (-1) ** (len(S) - k) * g[frozenset(U)]
        if total:
            out[Composition.from_set(S, n)] = total
    return out
