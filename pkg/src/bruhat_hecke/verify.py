"""Theorem sweeps shared by the CLI and the acceptance tests.

Every sweep covers sizes 1..n.  Sizes up to ``EXHAUSTIVE_N`` are enumerated
completely; larger sizes draw ``trials`` instances from a seeded generator.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .comp import Composition, QSymElement, compositions, f_product
from .hmod import ch, check_relations, composition_factors, outer_tensor, trace_multiplicities
from .interval_mod import (
    build,
    embed,
    induction_product,
    mackey_check,
    restriction,
    basic_twist_check,
    twist_functoriality_check,
    twist_table_check,
)
from .perm import Permutation, all_permutations
from .tableaux import (
    character_diagram_check,
    generate,
    is_valid,
    sit_set_theorem_check,
    spct_theorem_check,
    spyrt_action,
    spyrt_module,
    tau_of,
)
from .weak_order import leq_left

EXHAUSTIVE_N = 4
DEFAULT_TRIALS = 256

THEOREMS = (
    "relations",
    "embedding",
    "tensor",
    "restriction",
    "mackey",
    "twist-table",
    "twist-functoriality",
    "sit-set",
    "spct",
    "spyrt",
    "characters",
)

Pair = tuple[Permutation, Permutation]


@dataclass
class VerifyResult:
    theorem: str
    n: int
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **info) -> None:
        self.checked += 1
        if not ok:
            self.failures.append({k: str(v) for k, v in info.items()})

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "checked": self.checked,
            "ok": self.ok,
            "failures": self.failures,
        }


@lru_cache(maxsize=None)
def comparable_pairs(n: int) -> tuple[Pair, ...]:
    perms = tuple(all_permutations(n))
    return tuple((s, r) for s in perms for r in perms if leq_left(s, r))


def pairs_for(n: int, seed: int = 0, trials: int = DEFAULT_TRIALS) -> tuple[Pair, ...]:
    pairs = comparable_pairs(n)
    if n <= EXHAUSTIVE_N or len(pairs) <= trials:
        return pairs
    idx = sorted(random.Random(f"{seed}:{n}").sample(range(len(pairs)), trials))
    return tuple(pairs[i] for i in idx)


def _split_sizes(total: int) -> Iterator[tuple[int, int]]:
    for m in range(1, total):
        yield m, total - m


def _pair_products(total: int, seed: int, trials: int) -> list[tuple[Pair, Pair]]:
    out = []
    for m, k in _split_sizes(total):
        out.extend(itertools.product(comparable_pairs(m), comparable_pairs(k)))
    if total <= EXHAUSTIVE_N + 1 or len(out) <= trials:
        return out
    idx = sorted(random.Random(f"{seed}:{total}:prod").sample(range(len(out)), trials))
    return [out[i] for i in idx]


def _relations(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for s, r in pairs_for(size, seed, trials):
        for v in ("plain", "bar"):
            res.record(check_relations(build(s, r, v).module), sigma=s, rho=r, variant=v)


def _embedding(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for s, r in pairs_for(size, seed, trials):
        M = build(s, r)
        res.record(embed(M).verified(), sigma=s, rho=r)


def _tensor(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for (s1, r1), (s2, r2) in _pair_products(size, seed, trials):
        out = induction_product(build(s1, r1), build(s2, r2))
        res.record(out.map.is_isomorphism(), left=(s1, r1), right=(s2, r2))


def _restriction(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for s, r in pairs_for(size, seed, trials):
        M = build(s, r)
        for m in range(1, size):
            res.record(restriction(M, m).map.is_isomorphism(), sigma=s, rho=r, m=m)


def _mackey(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for (s1, r1), (s2, r2) in _pair_products(size, seed, trials):
        for k in range(1, size):
            res.record(mackey_check(s1, r1, s2, r2, k).ok, left=(s1, r1), right=(s2, r2), k=k)


def _twist_table(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for s, r in pairs_for(size, seed, trials):
        for cell in twist_table_check(s, r):
            res.record(cell.ok, sigma=s, rho=r, twist=cell.which, variant=cell.variant)
    for alpha in compositions(size):
        for kind, which, ok in basic_twist_check(alpha):
            res.record(ok, alpha=alpha, kind=kind, twist=which)


def _twist_functoriality(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for left, right in _pair_products(size, seed, trials):
        for rep in twist_functoriality_check([left], [right], seed=seed):
            res.record(rep.ok, check=rep.label, method=rep.method)


def _sit_set(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for alpha in compositions(size):
        for family in ("SIT", "SET"):
            res.record(sit_set_theorem_check(alpha, family).ok, alpha=alpha, family=family)


def _spct(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for alpha in compositions(size):
        for t in all_permutations(len(alpha)):
            for rep in spct_theorem_check(alpha, t):
                res.record(rep.ok, alpha=alpha, type=t, source=rep.source)


def _spyrt(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for alpha in compositions(size):
        for t in all_permutations(len(alpha)):
            basis = generate("SPYRT", alpha, t)
            swaps_ok = all(
                U is None or U == T or is_valid(U)
                for T in basis
                for U in (spyrt_action(T, i) for i in range(1, size))
            )
            taus = {tau_of(T) for T in basis}
            target = set(generate("SPCT", alpha.reverse(), t.conj_w0()))
            rel = check_relations(spyrt_module(alpha, t))
            res.record(swaps_ok and rel and taus == target and len(taus) == len(basis), alpha=alpha, type=t)


def _characters(res: VerifyResult, size: int, seed: int, trials: int) -> None:
    for s, r in pairs_for(size, seed, trials):
        M = build(s, r).module
        by_labels = ch(M)
        factors = QSymElement(composition_factors(M, fast=False))
        traces = QSymElement(trace_multiplicities(M))
        res.record(by_labels == factors == traces, sigma=s, rho=r)
    for (s1, r1), (s2, r2) in _pair_products(size, seed, trials):
        A, B = build(s1, r1), build(s2, r2)
        ind = induction_product(A, B).induced
        res.record(
            QSymElement(composition_factors(ind)) == f_product(ch(A.module), ch(B.module)),
            left=(s1, r1),
            right=(s2, r2),
        )
    if size <= 6:
        for alpha in compositions(size):
            out = character_diagram_check(alpha)
            res.record(all(out.values()), alpha=alpha, **{k: v for k, v in out.items()})


_SWEEPS: dict[str, Callable[[VerifyResult, int, int, int], None]] = {
    "relations": _relations,
    "embedding": _embedding,
    "tensor": _tensor,
    "restriction": _restriction,
    "mackey": _mackey,
    "twist-table": _twist_table,
    "twist-functoriality": _twist_functoriality,
    "sit-set": _sit_set,
    "spct": _spct,
    "spyrt": _spyrt,
    "characters": _characters,
}


def verify(theorem: str, n: int, seed: int = 0, trials: int = DEFAULT_TRIALS) -> VerifyResult:
    if theorem not in _SWEEPS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if n < 1:
        raise ValueError("n must be positive")
    res = VerifyResult(theorem, n)
    for size in range(1, n + 1):
        _SWEEPS[theorem](res, size, seed, trials)
    return res
