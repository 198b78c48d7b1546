"""Standard immaculate, extended, permuted composition and permuted Young
row-strict tableaux, and their identification with interval modules.

Tableaux are stored row by row from the top; ``rows[i][j]`` is the entry in
row ``i + 1`` and column ``j + 1`` of a left-justified diagram.  For SPYRT of
shape alpha the diagram is that of the reversed composition.

The SPCT action is not given directly.  It is obtained from the SPYRT action
by transport through T -> n + 1 - T and the omegahat twist, followed by a
diagonal sign change (-1)^(distance from the class source).
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Sequence

from .comp import Composition, QSymElement, comp_of_perm, compositions
from .hmod import HModule, ModuleMap, ch, check_relations, direct_sum, source_sink
from .interval_mod import build, twist
from .linalg import Matrix
from .perm import Permutation, all_permutations, compose, identity, longest, reduced_word
from .weak_order import interval, leq_left

Family = Literal["SIT", "SET", "SPCT", "SPYRT"]
Rule = Literal["valid", "adjacent"]


@dataclass(frozen=True, order=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    family: str
    shape: Composition
    type: Permutation | None = None

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry(self, i: int, j: int) -> int | None:
        """Entry in row i, column j (1-based), or None outside the diagram."""
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return None

    @property
    def position(self) -> dict[int, tuple[int, int]]:
        return {v: (i, j) for i, row in enumerate(self.rows, 1) for j, v in enumerate(row, 1)}

    def col(self, v: int) -> int:
        return self.position[v][1]

    def swap(self, i: int) -> Tableau:
        """s_i . T: exchange the entries i and i+1."""
        f = lambda v: i + 1 if v == i else i if v == i + 1 else v
        return Tableau(tuple(tuple(f(v) for v in r) for r in self.rows), self.family, self.shape, self.type)

    def complement(self, family: str, shape: Composition, type_: Permutation | None) -> Tableau:
        n = self.n
        return Tableau(tuple(tuple(n + 1 - v for v in r) for r in self.rows), family, shape, type_)

    def reading_key(self) -> tuple[int, ...]:
        return tuple(v for r in self.rows for v in reversed(r))

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "rows": [list(r) for r in self.rows],
            "family": self.family,
            "type": None if self.type is None else list(self.type.word),
        }

    @classmethod
    def from_json(cls, data: dict | str) -> Tableau:
        if isinstance(data, str):
            data = json.loads(data)
        t = data.get("type")
        return cls(
            tuple(tuple(r) for r in data["rows"]),
            data["family"],
            Composition(tuple(data["shape"])),
            None if t is None else Permutation(tuple(t)),
        )

    def pretty(self) -> str:
        width = len(str(self.n))
        return "\n".join(" ".join(f"{v:>{width}}" for v in r) for r in self.rows)

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)


def _standardize(vals: Sequence[int]) -> Permutation:
    order = sorted(vals)
    return Permutation(tuple(order.index(v) + 1 for v in vals))


# --- validity ------------------------------------------------------------


def _rows_increase(rows) -> bool:
    return all(all(a < b for a, b in zip(r, r[1:])) for r in rows)


def _rows_decrease(rows) -> bool:
    return all(all(a > b for a, b in zip(r, r[1:])) for r in rows)


def _is_standard(rows) -> bool:
    vals = sorted(v for r in rows for v in r)
    return vals == list(range(1, len(vals) + 1))


def is_valid(T: Tableau) -> bool:
    rows = T.rows
    if not _is_standard(rows) or any(len(r) == 0 for r in rows):
        return False
    if T.family in ("SIT", "SET"):
        if tuple(map(len, rows)) != T.shape.parts or not _rows_increase(rows):
            return False
        first = [r[0] for r in rows]
        if any(a > b for a, b in zip(first, first[1:])):
            return False
        if T.family == "SET":
            for j in range(max(map(len, rows))):
                col = [r[j] for r in rows if len(r) > j]
                if any(a > b for a, b in zip(col, col[1:])):
                    return False
        return True
    if T.family == "SPCT":
        if tuple(map(len, rows)) != T.shape.parts or not _rows_decrease(rows):
            return False
        if T.type is not None and _standardize([r[0] for r in rows]) != T.type:
            return False
        return _triple_ok(T, lambda a, b: a > b)
    if T.family == "SPYRT":
        if tuple(map(len, rows)) != T.shape.reverse().parts or not _rows_increase(rows):
            return False
        if T.type is not None and _standardize([r[0] for r in reversed(rows)]) != T.type:
            return False
        return _triple_ok(T, lambda a, b: a < b)
    raise ValueError(f"unknown family {T.family!r}")


def _triple_ok(T: Tableau, rel) -> bool:
    """If i < j and rel(T[i,k], T[j,k+1]) then (i,k+1) exists and rel(T[i,k+1], T[j,k+1])."""
    L = len(T.rows)
    for i in range(1, L + 1):
        for j in range(i + 1, L + 1):
            for k in range(1, len(T.rows[i - 1]) + 1):
                b = T.entry(j, k + 1)
                if b is None:
                    continue
                if rel(T.entry(i, k), b):
                    c = T.entry(i, k + 1)
                    if c is None or not rel(c, b):
                        return False
    return True


# --- generation ----------------------------------------------------------


def _generate_sit_set(alpha: Composition, family: str) -> list[Tableau]:
    parts = alpha.parts
    n = alpha.size
    rows: list[list[int]] = [[] for _ in parts]
    out = []

    def rec(v: int) -> None:
        if v > n:
            out.append(Tableau(tuple(tuple(r) for r in rows), family, alpha))
            return
        for r in range(len(parts)):
            c = len(rows[r])
            if c >= parts[r]:
                continue
            if c == 0 and r > 0 and not rows[r - 1]:
                continue
            if family == "SET" and any(parts[q] > c and len(rows[q]) <= c for q in range(r)):
                continue
            rows[r].append(v)
            rec(v + 1)
            rows[r].pop()

    rec(1)
    return out


@lru_cache(maxsize=None)
def _all_fillings(parts: tuple[int, ...], decreasing: bool) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(parts)
    out = []

    def rec(r: int, remaining: frozenset[int], acc: list[tuple[int, ...]]) -> None:
        if r == len(parts):
            out.append(tuple(acc))
            return
        for chosen in itertools.combinations(sorted(remaining), parts[r]):
            row = tuple(sorted(chosen, reverse=decreasing))
            acc.append(row)
            rec(r + 1, remaining - set(chosen), acc)
            acc.pop()

    rec(0, frozenset(range(1, n + 1)), [])
    return tuple(out)


def generate(family: Family, alpha: Composition, type_: Permutation | None = None) -> list[Tableau]:
    """All tableaux of the family and shape (and type, if given), sorted by reading word."""
    alpha = Composition.parse(alpha)
    if alpha.size > 9:
        raise ValueError("tableau generation is limited to n <= 9")
    if family in ("SIT", "SET"):
        out = _generate_sit_set(alpha, family)
    elif family in ("SPCT", "SPYRT"):
        if type_ is not None and type_.n != len(alpha):
            raise ValueError(f"type must lie in S_{len(alpha)}")
        if family == "SPCT":
            grids = _all_fillings(alpha.parts, True)
        else:
            grids = _all_fillings(alpha.reverse().parts, False)
        out = []
        for rows in grids:
            first = [r[0] for r in rows] if family == "SPCT" else [r[0] for r in reversed(rows)]
            t = _standardize(first)
            if type_ is not None and t != type_:
                continue
            T = Tableau(rows, family, alpha, t)
            if is_valid(T):
                out.append(T)
    else:
        raise ValueError(f"unknown family {family!r}")
    return sorted(out, key=Tableau.reading_key)


def sources_sinks(family: Family, alpha: Composition) -> tuple[Tableau, Tableau]:
    alpha = Composition.parse(alpha)
    parts = alpha.parts
    n = alpha.size
    if family not in ("SIT", "SET"):
        raise ValueError("sources/sinks by construction exist for SIT and SET")
    it = iter(range(1, n + 1))
    source = tuple(tuple(next(it) for _ in range(p)) for p in parts)
    grid: list[list[int]] = [[0] * p for p in parts]
    if family == "SIT":
        for i in range(len(parts)):
            grid[i][0] = i + 1
        v = len(parts) + 1
        for i in reversed(range(len(parts))):
            for j in range(1, parts[i]):
                grid[i][j] = v
                v += 1
    else:
        v = 1
        for j in range(max(parts)):
            for i in range(len(parts)):
                if j < parts[i]:
                    grid[i][j] = v
                    v += 1
    sink = tuple(tuple(r) for r in grid)
    return Tableau(source, family, alpha), Tableau(sink, family, alpha)


def read(T: Tableau) -> Permutation:
    """Rows top to bottom, each read right to left."""
    return Permutation(T.reading_key())


def immaculate_descents(T: Tableau) -> frozenset[int]:
    """i such that i+1 sits in a row strictly below i."""
    pos = T.position
    return frozenset(i for i in range(1, T.n) if pos[i + 1][0] > pos[i][0])


@dataclass(frozen=True)
class SitSetReport:
    alpha: Composition
    family: str
    injective: bool
    interval_match: bool
    descents_match: bool
    size: int

    @property
    def ok(self) -> bool:
        return self.injective and self.interval_match and self.descents_match


def sit_set_theorem_check(alpha: Composition, family: Literal["SIT", "SET"] = "SIT") -> SitSetReport:
    tabs = generate(family, alpha)
    words = [read(T) for T in tabs]
    src, snk = sources_sinks(family, alpha)
    injective = len(set(words)) == len(words)
    try:
        iv = interval(read(src), read(snk))
        interval_match = set(iv.vertices) == set(words)
    except ValueError:
        interval_match = False
    desc = all(
        immaculate_descents(T) == frozenset(range(1, T.n)) - w.left_descents for T, w in zip(tabs, words)
    )
    return SitSetReport(Composition.parse(alpha), family, injective, interval_match, desc, len(tabs))


# --- SPYRT action ----------------------------------------------------------


def spyrt_action(T: Tableau, i: int, rule: Rule = "valid") -> Tableau | None:
    """pi_i on T.

    T if i+1 is weakly left of i.  Otherwise s_i.T, unless that swap is not
    allowed: under ``rule="valid"`` when s_i.T is not an SPYRT, under
    ``rule="adjacent"`` when i+1 sits in the column right next to i.
    """
    ci, cj = T.col(i), T.col(i + 1)
    if cj <= ci:
        return T
    U = T.swap(i)
    if rule == "adjacent":
        return None if cj == ci + 1 else U
    if rule == "valid":
        return U if is_valid(U) else None
    raise ValueError(f"unknown rule {rule!r}")


def _action_module(basis: Sequence[Tableau], n: int, rule: Rule = "valid") -> HModule:
    index = {T: k for k, T in enumerate(basis)}
    actions = {}
    for i in range(1, n):
        cols = []
        for T in basis:
            U = spyrt_action(T, i, rule)
            if U is None:
                cols.append({})
            elif U not in index:
                raise AssertionError(f"pi_{i} sends {T} outside the basis")
            else:
                cols.append({index[U]: 1})
        actions[i] = Matrix(len(basis), len(basis), cols)
    return HModule(n, len(basis), actions, tuple(basis), True)


def spyrt_module(alpha: Composition, type_: Permutation, rule: Rule = "valid") -> HModule:
    alpha = Composition.parse(alpha)
    basis = generate("SPYRT", alpha, type_)
    return _action_module(basis, alpha.size, rule)


def tau_of(T: Tableau) -> Tableau:
    """tau_T = n + 1 - T, an SPCT of shape alpha^r and type (type of T)^{w0}."""
    return T.complement("SPCT", T.shape.reverse(), None if T.type is None else T.type.conj_w0())


def spyrt_of(tau: Tableau) -> Tableau:
    return tau.complement("SPYRT", tau.shape.reverse(), None if tau.type is None else tau.type.conj_w0())


# --- SPCT classes -----------------------------------------------------------


def _column_pattern(tau: Tableau) -> tuple:
    out = []
    for j in range(1, max(len(r) for r in tau.rows) + 1):
        col = [r[j - 1] for r in tau.rows if len(r) >= j]
        out.append(tuple(_standardize(col).word))
    return tuple(out)


def spct_classes(alpha: Composition, type_: Permutation) -> list[list[Tableau]]:
    groups: dict[tuple, list[Tableau]] = {}
    for tau in generate("SPCT", alpha, type_):
        groups.setdefault(_column_pattern(tau), []).append(tau)
    return sorted(groups.values(), key=lambda E: E[0].reading_key())


@dataclass(frozen=True)
class ClassModule:
    tableaux: tuple[Tableau, ...]
    module: HModule
    source: Tableau
    distance: tuple[int, ...]
    spyrt: HModule


def class_module(E: Sequence[Tableau], rule: Rule = "valid") -> ClassModule:
    """SPCT class module by transport of the SPYRT action on the complementary class."""
    E = tuple(E)
    n = E[0].n
    R = _action_module([spyrt_of(t) for t in E], n, rule)
    d = len(E)
    ident = Matrix.identity(d)
    U = {j: (ident - R.actions[n - j]).T for j in range(1, n)}
    incoming = [0] * d
    succ: dict[int, set[int]] = {k: set() for k in range(d)}
    for A in U.values():
        for c, col in enumerate(A.cols):
            for r in col:
                if r != c:
                    succ[c].add(r)
    for c in succ:
        for r in succ[c]:
            incoming[r] += 1
    sources = [k for k in range(d) if incoming[k] == 0]
    if len(sources) != 1:
        raise AssertionError(f"class has {len(sources)} candidate sources")
    src = sources[0]
    dist = [-1] * d
    dist[src] = 0
    queue = deque([src])
    while queue:
        c = queue.popleft()
        for r in sorted(succ[c]):
            if dist[r] < 0:
                dist[r] = dist[c] + 1
                queue.append(r)
    if min(dist) < 0:
        raise AssertionError("class source does not reach every tableau")
    D = Matrix.diagonal([(-1) ** x for x in dist])
    actions = {j: D @ U[j] @ D for j in U}
    M = HModule(n, d, actions, E, monomial=False)
    if not all(a.is_monomial() for a in actions.values()):
        raise AssertionError("sign normalization did not reach a monomial action")
    M = HModule(n, d, actions, E, monomial=True)
    return ClassModule(E, M, E[src], tuple(dist), R)


def D_set(tau: Tableau) -> frozenset[int]:
    """i such that i+1 lies weakly right of i."""
    pos = tau.position
    return frozenset(i for i in range(1, tau.n) if pos[i + 1][1] >= pos[i][1])


def strips(source: Tableau) -> list[list[tuple[int, int]]]:
    pos = source.position
    ds = [0] + sorted(D_set(source)) + [source.n]
    out = []
    for a, b in zip(ds, ds[1:]):
        boxes = sorted((pos[v] for v in range(a + 1, b + 1)), key=lambda p: p[1])
        if len({p[1] for p in boxes}) != len(boxes):
            raise AssertionError("strip is not horizontal")
        out.append(boxes)
    return out


def tread(tau: Tableau, source: Tableau) -> Permutation:
    word = []
    for boxes in strips(source):
        word.extend(tau.entry(i, j) for i, j in boxes)
    return Permutation(tuple(word))


def column_word(tau: Tableau) -> Permutation:
    """Columns left to right, each read top to bottom."""
    word = []
    for j in range(1, max(len(r) for r in tau.rows) + 1):
        word.extend(r[j - 1] for r in tau.rows if len(r) >= j)
    return Permutation(tuple(word))


def distance_rank_agrees(C: ClassModule) -> bool:
    """Distance from the source equals min length of gamma with pi_gamma . source = tau."""
    M = C.module
    n = M.n
    src = C.tableaux.index(C.source)
    best: dict[int, int] = {}
    for g in all_permutations(n):
        v = {src: 1}
        for i in reversed(reduced_word(g)):
            v = M.actions[i].apply(v)
            if not v:
                break
        if len(v) == 1:
            (k,) = v
            best[k] = min(best.get(k, g.length), g.length)
    return all(best.get(k) == C.distance[k] for k in range(M.dim))


@dataclass(frozen=True)
class SpctClassReport:
    size: int
    source: Tableau
    sink: Tableau | None
    tread_bounds: tuple[Permutation, Permutation]
    tread_bijection: bool
    module_iso: bool
    spyrt_iso: bool
    relations: bool

    @property
    def ok(self) -> bool:
        return self.tread_bijection and self.module_iso and self.spyrt_iso and self.relations


def spct_class_check(E: Sequence[Tableau]) -> SpctClassReport:
    C = class_module(E)
    M = C.module
    n = M.n
    w0 = longest(n)
    src, snk = source_sink(M)
    relations = check_relations(M) and check_relations(C.spyrt) and src == C.source
    lo = tread(C.source, C.source)
    hi = tread(snk, C.source) if snk is not None else lo
    words = [tread(t, C.source) for t in C.tableaux]
    bij = False
    iso = False
    r_iso = False
    if snk is not None and leq_left(lo, hi):
        B = build(lo, hi)
        bij = len(set(words)) == len(words) and set(words) == set(B.interval.vertices)
        if bij:
            T = Matrix(B.dim, M.dim, [{B.interval.index[w]: 1} for w in words])
            iso = ModuleMap(M, B.module, T).is_isomorphism()
        a, b = compose(w0, hi), compose(w0, lo)
        if leq_left(a, b):
            BR = build(a, b)
            imgs = [compose(w0, w) for w in words]
            if set(imgs) == set(BR.interval.vertices):
                T = Matrix(BR.dim, M.dim, [{BR.interval.index[g]: 1} for g in imgs])
                r_iso = ModuleMap(C.spyrt, BR.module, T).is_isomorphism()
    return SpctClassReport(len(E), C.source, snk, (lo, hi), bij, iso, r_iso, relations)


def spct_theorem_check(alpha: Composition, type_: Permutation) -> list[SpctClassReport]:
    return [spct_class_check(E) for E in spct_classes(alpha, type_)]


def spct_module(alpha: Composition, type_: Permutation) -> HModule:
    return direct_sum(*(class_module(E).module for E in spct_classes(alpha, type_)))


def character_diagram_check(alpha: Composition) -> dict[str, bool]:
    """Character identities for S^id_alpha and its twists, with R^id_{alpha^r} for omegahat."""
    alpha = Composition.parse(alpha)
    ident = identity(len(alpha))
    S = spct_module(alpha, ident)
    chS = ch(S)
    R = spyrt_module(alpha.reverse(), ident)
    by_tread = QSymElement(
        Counter(
            comp_of_perm(tread(t, C.source)).complement()
            for C in (class_module(E) for E in spct_classes(alpha, ident))
            for t in C.tableaux
        )
    )
    return {
        "tread": chS == by_tread,
        "omegahat": ch(R) == chS.map_compositions(Composition.transpose),
        "theta": ch(twist(S, "theta")) == chS.map_compositions(Composition.complement),
        "phi": ch(twist(S, "phi")) == chS.map_compositions(Composition.reverse),
        "chi": ch(twist(S, "chi")) == chS,
    }
