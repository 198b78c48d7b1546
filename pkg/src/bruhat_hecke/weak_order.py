"""Left weak Bruhat order, intervals as colored digraphs, shuffles and the
subset permutations used to slice an interval for restriction.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .perm import (
    Permutation,
    compose,
    identity,
    longest,
    min_coset_reps,
    ostar,
    standardize,
    star,
)

__all__ = [
    "Interval",
    "NotComparable",
    "descent_preserving_iso",
    "frak_I",
    "interval",
    "leq_left",
    "perm_lower",
    "perm_upper",
    "restriction_data",
    "shuffle_set",
    "shuffle_set_by_standardization",
    "split",
    "word_shuffle_inverse",
]


class NotComparable(ValueError):
    pass


def leq_left(sigma: Permutation, rho: Permutation) -> bool:
    if sigma.n != rho.n:
        raise ValueError(f"size mismatch: {sigma.n} vs {rho.n}")
    return rho.length == sigma.length + compose(rho, sigma.inverse).length


@dataclass(frozen=True)
class Interval:
    bottom: Permutation
    top: Permutation
    vertices: tuple[Permutation, ...]
    edges: tuple[tuple[int, int, int], ...]
    index: dict[Permutation, int] = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.bottom.n

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, gamma: Permutation) -> bool:
        return gamma in self.index

    def rank(self, gamma: Permutation) -> int:
        return gamma.length - self.bottom.length

    def to_json(self) -> dict:
        return {
            "bottom": str(self.bottom),
            "top": str(self.top),
            "vertices": [str(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> Interval:
        if isinstance(data, str):
            data = json.loads(data)
        iv = interval(Permutation.parse(data["bottom"]), Permutation.parse(data["top"]))
        if [str(v) for v in iv.vertices] != data["vertices"] or [list(e) for e in iv.edges] != data["edges"]:
            raise ValueError("JSON interval does not match its recomputation")
        return iv

    def to_dot(self) -> str:
        lines = ["digraph interval {", "  rankdir=BT;"]
        for k, v in enumerate(self.vertices):
            loops = ",".join(f"pi{i}" for i in sorted(v.left_descents))
            label = f"{v}" + (f"\\n[{loops}]" if loops else "")
            lines.append(f'  v{k} [label="{label}"];')
        for a, b, i in self.edges:
            lines.append(f'  v{a} -> v{b} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def interval(sigma: Permutation, rho: Permutation) -> Interval:
    if not leq_left(sigma, rho):
        raise NotComparable(f"{sigma} is not below {rho} in the left weak order")
    n = sigma.n
    seen = {sigma}
    queue = deque([sigma])
    while queue:
        g = queue.popleft()
        for i in range(1, n):
            if i in g.left_descents:
                continue
            h = g.left_mult(i)
            if h not in seen and leq_left(h, rho):
                seen.add(h)
                queue.append(h)
    verts = tuple(sorted(seen, key=lambda g: (g.length, g.word)))
    index = {g: k for k, g in enumerate(verts)}
    edges = []
    for k, g in enumerate(verts):
        for i in range(1, n):
            if i not in g.left_descents:
                h = g.left_mult(i)
                if h in index:
                    edges.append((k, index[h], i))
    return Interval(sigma, rho, verts, tuple(edges), index)


def shuffle_set(sigma: Permutation, rho: Permutation) -> set[Permutation]:
    base = star(sigma, rho)
    return {compose(d, base) for d in min_coset_reps(sigma.n, rho.n)}


def shuffle_set_by_standardization(sigma: Permutation, rho: Permutation) -> set[Permutation]:
    from .perm import all_permutations

    m, n = sigma.n, rho.n
    return {
        g
        for g in all_permutations(m + n)
        if standardize(g, (1, m)) == sigma and standardize(g, (m + 1, m + n)) == rho
    }


def word_shuffle_inverse(sigma: Permutation, rho: Permutation) -> set[Permutation]:
    """{g^-1 : g a word shuffle of sigma^-1 and (rho^-1 shifted by m)}."""
    m = sigma.n
    a = sigma.inverse.word
    b = tuple(v + m for v in rho.inverse.word)
    out: set[Permutation] = set()

    def rec(i: int, j: int, acc: tuple[int, ...]) -> None:
        if i == len(a) and j == len(b):
            out.add(Permutation(acc).inverse)
            return
        if i < len(a):
            rec(i + 1, j, acc + (a[i],))
        if j < len(b):
            rec(i, j + 1, acc + (b[j],))

    rec(0, 0, ())
    return out


def _check_subset(J: Iterable[int], N: int) -> list[int]:
    J = sorted(set(J))
    if any(not 1 <= j <= N for j in J):
        raise ValueError(f"{J} is not a subset of [{N}]")
    return J


def perm_lower(J: Iterable[int], N: int) -> Permutation:
    """perm_J: j_k -> k and the k-th element of the complement -> m + k."""
    J = _check_subset(J, N)
    m = len(J)
    Jc = [x for x in range(1, N + 1) if x not in J]
    w = [0] * N
    for k, j in enumerate(J, start=1):
        w[j - 1] = k
    for s, j in enumerate(Jc, start=1):
        w[j - 1] = m + s
    return Permutation(tuple(w))


def perm_upper(J: Iterable[int], N: int) -> Permutation:
    """perm^J: j_k -> m - k + 1 and the s-th element of the complement -> N - s + 1."""
    J = _check_subset(J, N)
    m = len(J)
    Jc = [x for x in range(1, N + 1) if x not in J]
    w = [0] * N
    for k, j in enumerate(J, start=1):
        w[j - 1] = m - k + 1
    for s, j in enumerate(Jc, start=1):
        w[j - 1] = N - s + 1
    return Permutation(tuple(w))


def _image(p: Permutation, J: Iterable[int]) -> list[int]:
    return sorted(p(j) for j in J)


def sigma_J(sigma: Permutation, J: Iterable[int]) -> Permutation:
    return compose(perm_lower(_image(sigma, J), sigma.n), sigma)


def rho_J(rho: Permutation, J: Iterable[int]) -> Permutation:
    N = rho.n
    w0rho = compose(longest(N), rho)
    return compose(perm_upper(_image(w0rho, J), N), w0rho)


def restriction_data(sigma: Permutation, rho: Permutation, m: int) -> list[tuple[frozenset[int], Permutation, Permutation]]:
    """Admissible J (m-subsets, lexicographic) with their bounds sigma_J, rho^J.

    J is admissible when perm_{sigma(J)} lies in [id, rho sigma^-1]_L.  The
    endpoints m = 0 and m = n are allowed and give the single block J = ∅ or
    J = [n].
    """
    import itertools

    if not leq_left(sigma, rho):
        raise NotComparable(f"{sigma} is not below {rho} in the left weak order")
    N = sigma.n
    if not 0 <= m <= N:
        raise ValueError(f"m = {m} out of range for n = {N}")
    bound = compose(rho, sigma.inverse)
    out = []
    for J in itertools.combinations(range(1, N + 1), m):
        if leq_left(perm_lower(_image(sigma, J), N), bound):
            out.append((frozenset(J), sigma_J(sigma, J), rho_J(rho, J)))
    return out


def frak_I(sigma: Permutation, rho: Permutation, J: Iterable[int]) -> list[Permutation]:
    """Vertices g of [sigma, rho]_L with g^-1([1, m]) = J, by filtering."""
    J = frozenset(J)
    m = len(J)
    iv = interval(sigma, rho)
    return [g for g in iv.vertices if frozenset(g.inverse.word[:m]) == J]


def split(gamma: Permutation, m: int) -> tuple[Permutation, Permutation]:
    """(gamma_{<=m}, gamma_{>m}): standardized restrictions to the preimages of [1, m] and [m+1, N]."""
    N = gamma.n
    if not 0 < m < N:
        raise ValueError(f"m = {m} out of range for n = {N}")
    low = [v for v in gamma.word if v <= m]
    high = [v - m for v in gamma.word if v > m]
    return Permutation(tuple(low)), Permutation(tuple(high))


def descent_preserving_iso(A: Interval, B: Interval) -> dict[Permutation, Permutation] | None:
    """Colored-digraph isomorphism anchored at the bottoms, or None."""
    if len(A) != len(B) or A.n != B.n:
        return None
    f = {A.bottom: B.bottom}
    queue = deque([A.bottom])
    while queue:
        g = queue.popleft()
        h = f[g]
        if g.left_descents != h.left_descents:
            return None
        for i in range(1, A.n):
            if i in g.left_descents:
                continue
            g2 = g.left_mult(i)
            h2 = h.left_mult(i)
            if (g2 in A) != (h2 in B):
                return None
            if g2 in A:
                if g2 in f:
                    if f[g2] != h2:
                        return None
                else:
                    f[g2] = h2
                    queue.append(g2)
    if len(f) != len(A) or len(set(f.values())) != len(B):
        return None
    return f
