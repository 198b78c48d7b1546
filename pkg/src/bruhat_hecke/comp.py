"""Compositions, generalized compositions and quasisymmetric functions.

A quasisymmetric function is stored by its coefficients in the fundamental
basis.  Products are computed through explicit polynomial expansions rather
than a combinatorial product rule: expand both factors in enough variables,
multiply, and read the result back in the fundamental basis.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Literal, Mapping

from .linalg import fmt, parse_rational
from .perm import Permutation, parabolic_longest

__all__ = [
    "Composition",
    "GeneralizedComposition",
    "QSymElement",
    "comp_of_perm",
    "compositions",
    "f_expand",
    "f_product",
    "qsym_automorphism",
]


@dataclass(frozen=True, order=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @classmethod
    def parse(cls, s: str | Iterable[int] | Composition) -> Composition:
        if isinstance(s, Composition):
            return s
        if isinstance(s, str):
            s = s.strip().strip("()[]")
            return cls(tuple(int(x) for x in s.split(",") if x.strip()))
        return cls(tuple(s))

    @classmethod
    def from_set(cls, I: Iterable[int], n: int) -> Composition:
        cuts = sorted(set(I))
        if any(not 1 <= i < n for i in cuts):
            raise ValueError(f"{cuts} is not a subset of [{n - 1}]")
        if n == 0:
            return cls(())
        bounds = [0] + cuts + [n]
        return cls(tuple(b - a for a, b in zip(bounds, bounds[1:])))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Composition(({self}))"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def set(self) -> frozenset[int]:
        return frozenset(itertools.accumulate(self.parts[:-1]))

    def reverse(self) -> Composition:
        return Composition(self.parts[::-1])

    def complement(self) -> Composition:
        n = self.size
        return Composition.from_set(set(range(1, n)) - self.set(), n)

    def transpose(self) -> Composition:
        return self.reverse().complement()

    def involution(self, which: str) -> Composition:
        return comp_involution(self, which)

    def w0(self) -> Permutation:
        return parabolic_longest(self.set(), self.size)


def comp_involution(alpha: Composition, which: Literal["reverse", "complement", "transpose", "r", "c", "t"]) -> Composition:
    if which in ("reverse", "r"):
        return alpha.reverse()
    if which in ("complement", "c"):
        return alpha.complement()
    if which in ("transpose", "t"):
        return alpha.transpose()
    raise ValueError(f"unknown involution {which!r}")


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, ordered by their sets (as sorted tuples)."""
    if n == 0:
        yield Composition(())
        return
    subsets = []
    for k in range(n):
        subsets.extend(itertools.combinations(range(1, n), k))
    for S in sorted(subsets):
        yield Composition.from_set(S, n)


def comp_of_perm(gamma: Permutation) -> Composition:
    return Composition.from_set(gamma.left_descents, gamma.n)


@dataclass(frozen=True)
class GeneralizedComposition:
    blocks: tuple[Composition, ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("a generalized composition needs at least one block")

    @property
    def size(self) -> int:
        return sum(b.size for b in self.blocks)

    def concatenation(self) -> Composition:
        return Composition(tuple(p for b in self.blocks for p in b.parts))

    def complement(self) -> GeneralizedComposition:
        return GeneralizedComposition(tuple(b.complement() for b in self.blocks))

    def w0(self) -> Permutation:
        return self.concatenation().w0()

    def __str__(self) -> str:
        return " + ".join(f"({b})" for b in self.blocks)


Monomial = tuple[int, ...]
Poly = dict[Monomial, int]


@lru_cache(maxsize=None)
def _f_expand(parts: tuple[int, ...], k: int) -> tuple[tuple[Monomial, int], ...]:
    n = sum(parts)
    strict = Composition(parts).set()
    out: Counter[Monomial] = Counter()

    def rec(pos: int, last: int, expo: list[int]) -> None:
        if pos > n:
            out[tuple(expo)] += 1
            return
        start = 1 if pos == 1 else last + (1 if pos - 1 in strict else 0)
        for idx in range(start, k + 1):
            expo[idx - 1] += 1
            rec(pos + 1, idx, expo)
            expo[idx - 1] -= 1

    rec(1, 1, [0] * k)
    return tuple(sorted(out.items()))


def f_expand(alpha: Composition, k: int) -> Poly:
    """F_alpha(x_1, ..., x_k) as {exponent vector: coefficient}."""
    if k < 1:
        raise ValueError("need at least one variable")
    return dict(_f_expand(alpha.parts, k))


def _poly_mul(a: Mapping[Monomial, Rational], b: Mapping[Monomial, Rational]) -> dict[Monomial, Rational]:
    out: dict[Monomial, Rational] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def _from_poly(poly: Mapping[Monomial, Rational]) -> QSymElement:
    """Read a quasisymmetric polynomial back in the fundamental basis.

    The coefficient of x_1^{b_1}...x_l^{b_l} is the monomial-basis coefficient
    of M_b; F_a = sum of M_b over set(b) containing set(a), so
    coeff(F_a) = sum over set(b) inside set(a) of (-1)^{|a|-|b|} coeff(M_b).
    """
    mono: dict[Composition, Rational] = {}
    for expo, c in poly.items():
        nz = [e for e in expo if e]
        if all(expo[i] for i in range(len(nz))):
            mono[Composition(tuple(nz))] = c
    out: dict[Composition, Rational] = {}
    for beta, c in mono.items():
        n = beta.size
        bset = beta.set()
        rest = sorted(set(range(1, n)) - bset)
        for k in range(len(rest) + 1):
            for extra in itertools.combinations(rest, k):
                alpha = Composition.from_set(bset | set(extra), n)
                out[alpha] = out.get(alpha, 0) + (-1) ** k * c
    return QSymElement(out)


class QSymElement:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Composition, Rational] | None = None):
        self.coeffs: dict[Composition, Rational] = {}
        for a, c in (coeffs or {}).items():
            if c != 0:
                c = Fraction(c)
                self.coeffs[a] = c.numerator if c.denominator == 1 else c

    @classmethod
    def F(cls, alpha: Composition | str | Iterable[int], coeff: Rational = 1) -> QSymElement:
        return cls({Composition.parse(alpha): coeff})

    @classmethod
    def one(cls) -> QSymElement:
        return cls.F(Composition(()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: QSymElement) -> QSymElement:
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return QSymElement(out)

    def __sub__(self, other: QSymElement) -> QSymElement:
        return self + other.scale(-1)

    def scale(self, x: Rational) -> QSymElement:
        return QSymElement({a: c * x for a, c in self.coeffs.items()})

    def __mul__(self, other: QSymElement) -> QSymElement:
        return f_product(self, other)

    def homogeneous(self) -> dict[int, QSymElement]:
        out: dict[int, dict[Composition, Rational]] = {}
        for a, c in self.coeffs.items():
            out.setdefault(a.size, {})[a] = c
        return {d: QSymElement(v) for d, v in out.items()}

    def expand(self, k: int) -> dict[Monomial, Rational]:
        out: dict[Monomial, Rational] = {}
        for a, c in self.coeffs.items():
            for m, v in f_expand(a, k).items():
                out[m] = out.get(m, 0) + c * v
        return {m: v for m, v in out.items() if v}

    def map_compositions(self, f) -> QSymElement:
        out: dict[Composition, Rational] = {}
        for a, c in self.coeffs.items():
            b = f(a)
            out[b] = out.get(b, 0) + c
        return QSymElement(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for a in sorted(self.coeffs, key=lambda a: (a.size, a.parts)):
            c = self.coeffs[a]
            body = f"F[{a}]"
            if c == 1:
                terms.append(("+", body))
            elif c == -1:
                terms.append(("-", body))
            elif c < 0:
                terms.append(("-", f"{fmt(-c)}*{body}"))
            else:
                terms.append(("+", f"{fmt(c)}*{body}"))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"QSymElement({self})"

    def to_json(self) -> dict:
        return {
            "F": [
                {"comp": list(a.parts), "coeff": fmt(self.coeffs[a])}
                for a in sorted(self.coeffs, key=lambda a: (a.size, a.parts))
            ]
        }

    @classmethod
    def from_json(cls, data: dict | str) -> QSymElement:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({Composition(tuple(t["comp"])): parse_rational(t["coeff"]) for t in data["F"]})


def f_product(a: QSymElement, b: QSymElement) -> QSymElement:
    out = QSymElement()
    for da, xa in a.homogeneous().items():
        for db, xb in b.homogeneous().items():
            d = da + db
            if d == 0:
                out = out + QSymElement.one().scale(xa.coeffs[Composition(())] * xb.coeffs[Composition(())])
                continue
            out = out + _from_poly(_poly_mul(xa.expand(d), xb.expand(d)))
    return out


def qsym_automorphism(x: QSymElement, which: Literal["psi", "rho", "omega"]) -> QSymElement:
    if which == "psi":
        return x.map_compositions(Composition.complement)
    if which == "rho":
        return x.map_compositions(Composition.reverse)
    if which == "omega":
        return x.map_compositions(Composition.transpose)
    raise ValueError(f"unknown automorphism {which!r}")
