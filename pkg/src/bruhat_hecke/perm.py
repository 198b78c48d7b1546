"""Permutations of [n] in one-line notation.

Conventions used throughout the package:

* ``a * b`` is composition, ``(a * b)(i) = a(b(i))``.
* ``s_i * sigma`` (left multiplication) swaps the *values* i and i+1 in the
  word of ``sigma``; ``sigma * s_i`` swaps the *positions* i and i+1.
* ``from_word([i1, ..., ip], n) = s_{i1} * ... * s_{ip}``.

>>> p = Permutation.parse("24315")
>>> sorted(p.descents("L")), sorted(p.descents("R"))
([1, 3], [2, 3])
>>> compose(Permutation.parse("213"), Permutation.parse("132"))
Permutation('231')
>>> reduced_word(longest(3))
[1, 2, 1]
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Literal, Sequence

__all__ = [
    "MAX_N",
    "Permutation",
    "all_permutations",
    "compose",
    "from_word",
    "identity",
    "length",
    "descents",
    "longest",
    "min_coset_reps",
    "ostar",
    "parabolic_longest",
    "reduced_word",
    "simple",
    "standardize",
    "star",
]

MAX_N = int(os.environ.get("BRUHAT_HECKE_MAX_N", "12"))

Side = Literal["L", "R"]


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.word)
        if n < 1:
            raise ValueError("permutations must have n >= 1")
        if n > MAX_N:
            raise ValueError(f"n = {n} exceeds the cap {MAX_N} (set BRUHAT_HECKE_MAX_N to raise it)")
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"{self.word} is not a permutation of 1..{n}")

    @classmethod
    def parse(cls, s: str | Sequence[int] | Permutation) -> Permutation:
        if isinstance(s, Permutation):
            return s
        if not isinstance(s, str):
            return cls(tuple(int(x) for x in s))
        s = s.strip()
        if "," in s:
            return cls(tuple(int(x) for x in s.split(",")))
        return cls(tuple(int(ch) for ch in s))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation('{self}')"

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.word, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    @cached_property
    def length(self) -> int:
        w = self.word
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    @cached_property
    def _positions(self) -> tuple[int, ...]:
        return self.inverse.word

    @cached_property
    def left_descents(self) -> frozenset[int]:
        pos = self._positions
        return frozenset(i for i in range(1, self.n) if pos[i - 1] > pos[i])

    @cached_property
    def right_descents(self) -> frozenset[int]:
        w = self.word
        return frozenset(i for i in range(1, self.n) if w[i - 1] > w[i])

    def descents(self, side: Side = "L") -> frozenset[int]:
        if side in ("L", "left", "Left"):
            return self.left_descents
        if side in ("R", "right", "Right"):
            return self.right_descents
        raise ValueError(f"unknown side {side!r}")

    def left_mult(self, i: int) -> Permutation:
        """s_i * self: swap the values i and i+1."""
        self._check_gen(i)
        return Permutation(tuple(i + 1 if v == i else i if v == i + 1 else v for v in self.word))

    def right_mult(self, i: int) -> Permutation:
        """self * s_i: swap positions i and i+1."""
        self._check_gen(i)
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def conj_w0(self) -> Permutation:
        """w0 * self * w0."""
        n = self.n
        return Permutation(tuple(n + 1 - v for v in reversed(self.word)))

    def _check_gen(self, i: int) -> None:
        if not 1 <= i < self.n:
            raise ValueError(f"generator index {i} out of range for n = {self.n}")


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def simple(i: int, n: int) -> Permutation:
    return identity(n).left_mult(i)


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation(w)


def compose(a: Permutation, b: Permutation) -> Permutation:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    return Permutation(tuple(a.word[v - 1] for v in b.word))


def length(sigma: Permutation) -> int:
    return sigma.length


def descents(sigma: Permutation, side: Side = "L") -> frozenset[int]:
    return sigma.descents(side)


def from_word(word: Iterable[int], n: int) -> Permutation:
    p = identity(n)
    for i in reversed(list(word)):
        p = p.left_mult(i)
    return p


def reduced_word(sigma: Permutation) -> list[int]:
    """Lexicographically smallest reduced word."""
    word = []
    p = sigma
    while p.length:
        i = min(p.left_descents)
        word.append(i)
        p = p.left_mult(i)
    return word


def parabolic_longest(I: Iterable[int], n: int) -> Permutation:
    """Longest element of the parabolic subgroup generated by s_i, i in I."""
    I = set(I)
    if any(not 1 <= i < n for i in I):
        raise ValueError(f"{sorted(I)} is not a subset of [{n - 1}]")
    w = list(range(1, n + 1))
    i = 1
    while i < n:
        if i in I:
            j = i
            while j in I:
                j += 1
            w[i - 1 : j] = reversed(w[i - 1 : j])
            i = j
        else:
            i += 1
    return Permutation(tuple(w))


def _standardize_values(vals: Sequence[int]) -> Permutation:
    order = sorted(vals)
    rank = {v: k for k, v in enumerate(order, start=1)}
    return Permutation(tuple(rank[v] for v in vals))


def standardize(sigma: Permutation, window: tuple[int, int]) -> Permutation:
    """st(sigma; [k1, k]): relabel sigma(k1) ... sigma(k) order-preservingly."""
    k1, k = window
    if not 1 <= k1 <= k <= sigma.n:
        raise ValueError(f"bad window {window} for n = {sigma.n}")
    return _standardize_values(sigma.word[k1 - 1 : k])


def star(sigma: Permutation, rho: Permutation) -> Permutation:
    m = sigma.n
    return Permutation(sigma.word + tuple(v + m for v in rho.word))


def ostar(sigma: Permutation, rho: Permutation) -> Permutation:
    n = rho.n
    return Permutation(tuple(v + n for v in sigma.word) + rho.word)


def min_coset_reps(m: int, n: int) -> list[Permutation]:
    """Permutations increasing on [1, m] and on [m+1, m+n], lexicographic."""
    out = []
    full = range(1, m + n + 1)
    for A in itertools.combinations(full, m):
        rest = tuple(v for v in full if v not in A)
        out.append(Permutation(A + rest))
    return sorted(out)
