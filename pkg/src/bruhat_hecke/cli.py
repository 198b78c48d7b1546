"""Command line driver: ``python -m bruhat_hecke VERB ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .comp import Composition
from .hmod import ch
from .interval_mod import (
    TWISTS,
    build,
    embed,
    induction_product,
    mackey_check,
    restriction,
    twist_certificate,
    twist_target,
    twist,
)
from .hmod import ModuleMap
from .linalg import fmt
from .perm import Permutation
from .tableaux import generate, spct_class_check, spct_classes
from .verify import DEFAULT_TRIALS, THEOREMS, verify
from .weak_order import interval


class CheckFailed(Exception):
    def __init__(self, record: dict):
        super().__init__(record.get("check", "check failed"))
        self.record = record


def _perm(s: str) -> Permutation:
    try:
        return Permutation.parse(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _comp(s: str) -> Composition:
    try:
        return Composition.parse(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _rows(A) -> list[str]:
    return [" ".join(f"{fmt(x):>3}" for x in row) for row in A.to_rows()]


def cmd_interval(args) -> str:
    iv = interval(args.sigma, args.rho)
    if args.format == "dot":
        return iv.to_dot()
    if args.format == "json":
        return _dump(iv.to_json())
    lines = [f"[{iv.bottom}, {iv.top}]_L  dim {len(iv)}"]
    for k, v in enumerate(iv.vertices):
        lines.append(f"  {k}: {v}  rank {iv.rank(v)}  Des_L {sorted(v.left_descents)}")
    for a, b, i in iv.edges:
        lines.append(f"  {iv.vertices[a]} --{i}--> {iv.vertices[b]}")
    return "\n".join(lines)


def cmd_module(args) -> str:
    M = build(args.sigma, args.rho, "bar" if args.bar else "plain")
    if args.format == "json":
        data = M.module.to_json()
        data["interval"] = M.interval.to_json()
        data["variant"] = M.variant
        return _dump(data)
    if args.format == "dot":
        return M.interval.to_dot()
    lines = [f"{M}  basis {' '.join(str(g) for g in M.interval.vertices)}"]
    for i in M.module.generators:
        lines.append(f"pi_{i}:" if M.variant == "plain" else f"pi_{i} (on Bbar):")
        lines.extend("  " + r for r in _rows(M.module.actions[i]))
    return "\n".join(lines)


def cmd_ch(args) -> str:
    x = ch(build(args.sigma, args.rho).module)
    if args.format == "json":
        return _dump(x.to_json())
    return str(x)


def cmd_embed(args) -> str:
    M = build(args.sigma, args.rho)
    e = embed(M)
    ok = e.verified()
    data = {
        "module": str(M),
        "generator": str(e.generator),
        "ideal_dim": e.ideal_dim,
        "images": {str(g): str(y) for g, y in zip(M.interval.vertices, e.images)},
        "verified": ok,
    }
    if not ok:
        raise CheckFailed({"check": "embed", **data})
    if args.format == "json":
        return _dump(data)
    lines = [f"{M} -> H_{M.interval.n}(0) {e.generator}  (ideal dim {e.ideal_dim}, verified)"]
    lines.extend(f"  {g} -> {y}" for g, y in data["images"].items())
    return "\n".join(lines)


def cmd_induce(args) -> str:
    out = induction_product(build(args.sigma, args.rho), build(args.sigma2, args.rho2))
    ok = out.map.is_isomorphism()
    data = {
        "left": [str(args.sigma), str(args.rho)],
        "right": [str(args.sigma2), str(args.rho2)],
        "target": [str(out.target.sigma), str(out.target.rho)],
        "dim": out.induced.dim,
        "isomorphism": ok,
    }
    if not ok:
        raise CheckFailed({"check": "induce", **data})
    if args.format == "json":
        return _dump(data)
    return f"B({args.sigma},{args.rho}) ⊠ B({args.sigma2},{args.rho2}) ≅ {out.target}  dim {out.induced.dim}"


def cmd_restrict(args) -> str:
    M = build(args.sigma, args.rho)
    out = restriction(M, args.m)
    ok = out.map.is_isomorphism()
    summands = [
        {
            "J": sorted(s.J),
            "left": [str(s.left.sigma), str(s.left.rho)],
            "right": [str(s.right.sigma), str(s.right.rho)],
        }
        for s in out.summands
    ]
    data = {"module": str(M), "m": args.m, "summands": summands, "isomorphism": ok}
    if not ok:
        raise CheckFailed({"check": "restrict", **data})
    if args.format == "json":
        return _dump(data)
    lines = [f"Res {M} to H_{args.m}(0) ⊗ H_{M.interval.n - args.m}(0):"]
    for s in summands:
        lines.append(f"  J={{{','.join(map(str, s['J']))}}}: B({s['left'][0]},{s['left'][1]}) ⊗ B({s['right'][0]},{s['right'][1]})")
    return "\n".join(lines)


def cmd_mackey(args) -> str:
    rep = mackey_check(args.sigma, args.rho, args.sigma2, args.rho2, args.k)
    data = {
        "bijection": rep.bijection,
        "equalities": rep.equalities,
        "isomorphism": rep.isomorphism,
        "dim": rep.lhs_dim,
        "summands": [{"J": list(J), "J1": list(J1), "J2": list(J2)} for J, J1, J2, _ in rep.labels],
    }
    if not rep.ok:
        raise CheckFailed({"check": "mackey", **data})
    if args.format == "json":
        return _dump(data)
    lines = [f"Mackey k={args.k}: {len(rep.labels)} summands, dim {rep.lhs_dim}, verified"]
    lines.extend(f"  J={s['J']} -> ({s['J1']}, {s['J2']})" for s in data["summands"])
    return "\n".join(lines)


def cmd_twist(args) -> str:
    variant = "bar" if args.bar else "plain"
    M = build(args.sigma, args.rho, variant)
    lo, hi, v = twist_target(args.sigma, args.rho, variant, args.which)
    target = build(lo, hi, v)
    T = twist_certificate(M, args.which, target)
    ok = ModuleMap(twist(M.module, args.which), target.module, T).is_isomorphism()
    data = {"source": str(M), "twist": args.which, "target": str(target), "certificate": ok}
    if not ok:
        raise CheckFailed({"check": "twist", **data})
    if args.format == "json":
        return _dump(data)
    return f"{args.which}[{M}] ≅ {target}"


def cmd_tableaux(args) -> str:
    if args.family in ("SPCT", "SPYRT") and args.type is None:
        raise ValueError(f"{args.family} needs --type")
    tabs = generate(args.family, args.alpha, args.type)
    if args.format == "json":
        return _dump([T.to_json() for T in tabs])
    blocks = [f"{len(tabs)} {args.family} of shape {args.alpha}"]
    blocks.extend(T.pretty() for T in tabs)
    return "\n\n".join(blocks)


def cmd_classes(args) -> str:
    reports = [spct_class_check(E) for E in spct_classes(args.alpha, args.type)]
    data = [
        {
            "size": r.size,
            "source": r.source.to_json(),
            "sink": None if r.sink is None else r.sink.to_json(),
            "tread": [str(r.tread_bounds[0]), str(r.tread_bounds[1])],
            "ok": r.ok,
        }
        for r in reports
    ]
    bad = [d for d in data if not d["ok"]]
    if bad:
        raise CheckFailed({"check": "classes", "failures": bad})
    if args.format == "json":
        return _dump(data)
    lines = []
    for r in reports:
        lines.append(f"class of size {r.size}: source {r.source}, sink {r.sink}, ≅ B({r.tread_bounds[0]},{r.tread_bounds[1]})")
    return "\n".join(lines)


def cmd_verify(args) -> str:
    res = verify(args.theorem, args.n, seed=args.seed, trials=args.trials)
    if not res.ok:
        raise CheckFailed({"check": "verify", **res.to_json()})
    if args.format == "json":
        return _dump(res.to_json())
    return f"PASS {args.theorem} n<={args.n}: {res.checked} checks"


def build_parser() -> argparse.ArgumentParser:
    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument("--format", choices=("text", "json", "dot"), default="text")
    fmt_parent.add_argument("--json", dest="format", action="store_const", const="json")
    fmt_parent.add_argument("--dot", dest="format", action="store_const", const="dot")

    p = argparse.ArgumentParser(prog="bruhat-hecke", description="0-Hecke modules from weak Bruhat intervals")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_):
        sp = sub.add_parser(name, parents=[fmt_parent], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = verb("interval", cmd_interval, "left weak order interval")
    sp.add_argument("sigma", type=_perm)
    sp.add_argument("rho", type=_perm)

    sp = verb("module", cmd_module, "action matrices of B(sigma, rho)")
    sp.add_argument("sigma", type=_perm)
    sp.add_argument("rho", type=_perm)
    sp.add_argument("--bar", action="store_true")

    sp = verb("ch", cmd_ch, "quasisymmetric characteristic")
    sp.add_argument("sigma", type=_perm)
    sp.add_argument("rho", type=_perm)

    sp = verb("embed", cmd_embed, "embedding into the regular representation")
    sp.add_argument("sigma", type=_perm)
    sp.add_argument("rho", type=_perm)

    sp = verb("induce", cmd_induce, "induction product of two interval modules")
    for a in ("sigma", "rho", "sigma2", "rho2"):
        sp.add_argument(a, type=_perm)

    sp = verb("restrict", cmd_restrict, "restriction to H_m(0) ⊗ H_{n-m}(0)")
    sp.add_argument("sigma", type=_perm)
    sp.add_argument("rho", type=_perm)
    sp.add_argument("m", type=int)

    sp = verb("mackey", cmd_mackey, "Mackey formula for an induction product")
    for a in ("sigma", "rho", "sigma2", "rho2"):
        sp.add_argument(a, type=_perm)
    sp.add_argument("k", type=int)

    sp = verb("twist", cmd_twist, "(anti-)involution twist with certificate")
    sp.add_argument("which", choices=TWISTS)
    sp.add_argument("sigma", type=_perm)
    sp.add_argument("rho", type=_perm)
    sp.add_argument("--bar", action="store_true")

    sp = verb("tableaux", cmd_tableaux, "list standard tableaux")
    sp.add_argument("family", choices=("SIT", "SET", "SPCT", "SPYRT"))
    sp.add_argument("alpha", type=_comp)
    sp.add_argument("--type", type=_perm, default=None)

    sp = verb("classes", cmd_classes, "SPCT classes and their interval modules")
    sp.add_argument("alpha", type=_comp)
    sp.add_argument("type", type=_perm)

    sp = verb("verify", cmd_verify, "run a theorem sweep")
    sp.add_argument("theorem", choices=THEOREMS)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        out = args.func(args)
    except CheckFailed as e:
        print(_dump({"status": "FAIL", **e.record}))
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(out)
    return 0
