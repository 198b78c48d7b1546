"""The 0-Hecke algebra H_n(0) in the pi basis, with exact coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

from .linalg import Echelon, fmt, parse_rational
from .perm import Permutation, all_permutations, compose, identity, longest, reduced_word
from .weak_order import leq_left


def pi_mul_basis(sigma: Permutation, tau: Permutation) -> Permutation:
    """pi_sigma * pi_tau = pi_gamma; returns gamma."""
    if sigma.n != tau.n:
        raise ValueError("size mismatch")
    return _pi_mul(sigma, tau)


@lru_cache(maxsize=1 << 18)
def _pi_mul(sigma: Permutation, tau: Permutation) -> Permutation:
    g = sigma
    for j in reduced_word(tau):
        if j not in g.right_descents:
            g = g.right_mult(j)
    return g


def _pi_gen_left(i: int, gamma: Permutation) -> Permutation:
    return gamma if i in gamma.left_descents else gamma.left_mult(i)


class HeckeElement:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Rational] | None = None):
        self.n = n
        self.terms: dict[Permutation, Rational] = {}
        for p, c in (terms or {}).items():
            if p.n != n:
                raise ValueError(f"{p} is not in S_{n}")
            if c != 0:
                c = Fraction(c)
                self.terms[p] = c.numerator if c.denominator == 1 else c

    @classmethod
    def pi(cls, sigma: Permutation, coeff: Rational = 1) -> HeckeElement:
        return cls(sigma.n, {sigma: coeff})

    @classmethod
    def one(cls, n: int) -> HeckeElement:
        return cls.pi(identity(n))

    @classmethod
    def generator(cls, i: int, n: int) -> HeckeElement:
        return cls.pi(identity(n).left_mult(i))

    @classmethod
    def bar_generator(cls, i: int, n: int) -> HeckeElement:
        return cls.generator(i, n) - cls.one(n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return HeckeElement(self.n, out)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + other.scale(-1)

    def __neg__(self) -> HeckeElement:
        return self.scale(-1)

    def scale(self, x: Rational) -> HeckeElement:
        return HeckeElement(self.n, {p: c * x for p, c in self.terms.items()})

    def __mul__(self, other: HeckeElement) -> HeckeElement:
        return mul(self, other)

    def _check(self, other: HeckeElement) -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    def left_generator(self, i: int) -> HeckeElement:
        """pi_i * self."""
        out: dict[Permutation, Rational] = {}
        for p, c in self.terms.items():
            q = _pi_gen_left(i, p)
            out[q] = out.get(q, 0) + c
        return HeckeElement(self.n, out)

    def left_basis(self, gamma: Permutation) -> HeckeElement:
        """pi_gamma * self, folding the reduced word from the right."""
        x = self
        for i in reversed(reduced_word(gamma)):
            x = x.left_generator(i)
        return x

    def sorted_terms(self) -> list[tuple[Permutation, Rational]]:
        return sorted(self.terms.items(), key=lambda t: (-t[0].length, t[0].word))

    def top_terms(self) -> list[tuple[Permutation, Rational]]:
        if not self.terms:
            return []
        top = max(p.length for p in self.terms)
        return [(p, c) for p, c in self.sorted_terms() if p.length == top]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (p, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = f"π[{p}]" if a == 1 else f"{fmt(a)}*π[{p}]"
            if k == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {'−' if sign == '-' else '+'} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"HeckeElement({self})"

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"pi": str(p), "coeff": fmt(c)} for p, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: dict | str) -> HeckeElement:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["n"], {Permutation.parse(t["pi"]): parse_rational(t["coeff"]) for t in data["terms"]})


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    a._check(b)
    out: dict[Permutation, Rational] = {}
    for p, c in a.terms.items():
        for q, d in b.terms.items():
            g = _pi_mul(p, q)
            out[g] = out.get(g, 0) + c * d
    return HeckeElement(a.n, out)


def pi_of(sigma: Permutation) -> HeckeElement:
    return HeckeElement.pi(sigma)


def pibar_of(sigma: Permutation, word: Iterable[int] | None = None) -> HeckeElement:
    """Product of (pi_i - 1) over a reduced word of sigma (default: the lex-least one)."""
    n = sigma.n
    x = HeckeElement.one(n)
    for i in (reduced_word(sigma) if word is None else word):
        x = x * HeckeElement.bar_generator(i, n)
    return x


def pi_pibar(sigma: Permutation, rho: Permutation) -> tuple[HeckeElement, dict]:
    """pi_sigma * pibar_rho together with the facts about it that are tested."""
    x = HeckeElement.pi(sigma) * pibar_of(rho)
    product = compose(sigma, rho)
    w0 = longest(sigma.n)
    report = {
        "nonzero": not x.is_zero(),
        "lengths_add": product.length == sigma.length + rho.length,
        "below_w0_rho_inv": leq_left(sigma, compose(w0, rho.inverse)),
        "top": x.top_terms(),
        "product": product,
    }
    return x, report


def _column_order(n: int) -> list[Permutation]:
    return sorted(all_permutations(n), key=lambda p: (p.length, p.word))


def to_vector(x: HeckeElement, order: dict[Permutation, int]) -> dict[int, Rational]:
    return {order[p]: c for p, c in x.terms.items()}


def left_ideal_basis(x: HeckeElement) -> list[HeckeElement]:
    """Echelon basis of H_n(0) * x, spanned by pi_gamma * x over all gamma."""
    perms = _column_order(x.n)
    order = {p: k for k, p in enumerate(perms)}
    ech = Echelon()
    for g in perms:
        ech.add(to_vector(x.left_basis(g), order))
    return [HeckeElement(x.n, {perms[c]: v for c, v in row.items()}) for row in ech.sorted_rows()]
