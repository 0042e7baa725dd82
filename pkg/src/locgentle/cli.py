"""Command-line frontend.

Exit codes: 0 success / verified, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional

from . import cartan as ca
from .configurations import (
    count_closed,
    count_closed_up_to_dihedral,
    critical_quiver_from,
    enumerate_Pn_prime,
    hz_a_n1,
    hz_coefficients,
    hz_polynomial_check,
    is_closed,
)
from .koszul import UnknownVertex, resolution
from .polynomial import Monomial, parse_monomial
from .quiver import QuiverError, WeightFunction, dual, is_critical, is_gentle, minimal_cycles, validate
from .rational import RationalFunction, series_expand
from .quiverio import QuiverParseError, format_quiver, load_quiver

OK, FAILED, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str):
    try:
        q, w = load_quiver(path)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except (QuiverParseError, QuiverError) as exc:
        raise InputError(f"{path}: {exc}") from None
    try:
        return validate(q), w
    except QuiverError as exc:
        raise InputError(f"{path}: {exc}") from None


def parse_spec(text: str) -> Dict[str, Monomial]:
    """``x_a=q^2*t,x_b=q`` -> substitution map."""
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise InputError(f"bad substitution {part!r}; expected name=monomial")
        name, mono = part.split("=", 1)
        try:
            out[name.strip()] = parse_monomial(mono)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return out


def _apply_spec(w: WeightFunction, spec: Optional[str]) -> WeightFunction:
    if not spec:
        return w
    sub = parse_spec(spec)
    new = {}
    for a, m in w.items():
        out = Monomial()
        for v, e in m.exponents:
            out = out * (sub[v] ** e if v in sub else Monomial.var(v, e))
        new[a] = out
    try:
        return WeightFunction(new)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_validate(args, out) -> int:
    lgq, _ = _load(args.file)
    print(f"valid: {len(lgq.vertices)} vertices, {len(lgq.arrows)} arrows, {len(lgq.relations)} relations", file=out)
    print(f"gentle: {'yes' if is_gentle(lgq) else 'no'}", file=out)
    print(f"critical: {'yes' if is_critical(lgq) else 'no'}", file=out)
    return OK


def cmd_cycles(args, out) -> int:
    lgq, w = _load(args.file)
    zc, ic = minimal_cycles(lgq, w)
    for label, cycles in (("ZC", zc), ("IC", ic)):
        for k, c in enumerate(cycles, 1):
            print(f"{label}{k} length={c.length} weight={c.weight} arrows={' '.join(c.arrows)}", file=out)
    print(f"ZC={len(zc)} IC={len(ic)}", file=out)
    return OK


def cmd_dual(args, out) -> int:
    lgq, w = _load(args.file)
    text = format_quiver(dual(lgq), w)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return OK


def cmd_cartan(args, out) -> int:
    lgq, w = _load(args.file)
    w = _apply_spec(w, args.spec)
    cm = ca.cartan_exact(lgq, w)
    if args.series is None:
        print(cm, file=out)
        return OK
    for a, i in enumerate(cm.vertices):
        for b, j in enumerate(cm.vertices):
            s = series_expand(cm.entries[a][b], None, args.series)
            print(f"[{i},{j}] {s.poly}", file=out)
    return OK


def cmd_det(args, out) -> int:
    lgq, w = _load(args.file)
    w = _apply_spec(w, args.spec)
    code = OK
    f = e = None
    if args.method in ("formula", "both"):
        f = ca.det_formula(lgq, w)
        print(f"formula: {f}", file=out)
    if args.method in ("elim", "both"):
        e = ca.det_elimination(lgq, w)
        print(f"elimination: {e}", file=out)
    if f is not None and e is not None:
        same = f.equals(e)
        print("EQUAL" if same else "DIFFERENT", file=out)
        code = OK if same else FAILED
    return code


def _pick_cycle(lgq, w, ident: str):
    zc, _ = minimal_cycles(lgq, w)
    key = ident[2:] if ident.upper().startswith("ZC") else ident
    if key.isdigit():
        k = int(key)
        if 1 <= k <= len(zc):
            return zc[k - 1]
    for c in zc:
        if ident in c.arrows:
            return c
    raise InputError(f"no cycle with full relations matches {ident!r} (have {len(zc)})")


def cmd_reduce(args, out) -> int:
    lgq, w = _load(args.file)
    c = _pick_cycle(lgq, w, args.cycle)
    try:
        res = ca.reduce_step(lgq, w, c, args.vertex)
    except ca.PreconditionViolated as exc:
        raise InputError(str(exc)) from None
    out.write(format_quiver(res.quiver, res.weights))
    print("factors: " + " ; ".join(str(f) for f in res.extracted_factors), file=out)
    lhs = ca.det_elimination(lgq, w)
    rhs = RationalFunction(res.factor_product()) * ca.det_elimination(res.quiver, res.weights)
    same = lhs.equals(rhs)
    print("identity: " + ("OK" if same else "FAILED"), file=out)
    return OK if same else FAILED


def cmd_koszul(args, out) -> int:
    lgq, _ = _load(args.file)
    try:
        res = resolution(lgq, args.vertex, args.terms)
    except UnknownVertex:
        raise InputError(f"unknown vertex {args.vertex}") from None
    for d, term in enumerate(res.terms):
        body = " + ".join(f"P{v}<{s}>" for v, s in term) if term else "0"
        print(f"{d}: {body}", file=out)
    print("finite" if res.finite else "truncated", file=out)
    return OK


def cmd_critical(args, out) -> int:
    n = args.n
    if n < 1:
        raise InputError("--n must be positive")
    if args.dihedral:
        print(f"n={n} closed_up_to_dihedral={count_closed_up_to_dihedral(n)}", file=out)
        return OK
    if args.emit:
        target = Path(args.emit)
        target.mkdir(parents=True, exist_ok=True)
        k = 0
        for c in enumerate_Pn_prime(n):
            if is_closed(c):
                k += 1
                lgq, w = critical_quiver_from(c)
                (target / f"critical_n{n}_{k:04d}.quiver").write_text(f"# configuration {c}\n" + format_quiver(lgq, w))
        print(f"wrote {k} quivers to {target}", file=out)
        return OK
    print(f"n={n} closed={count_closed(n)}", file=out)
    return OK


def cmd_hz(args, out) -> int:
    n = args.n
    if n < 1:
        raise InputError("--n must be positive")
    closed, formula = count_closed(n), hz_a_n1(n)
    good = closed == formula
    print(f"closed={closed} formula={formula} {'OK' if good else 'MISMATCH'}", file=out)
    if args.poly:
        coeffs = hz_coefficients(n)
        print("a_{n,k}: " + " ".join(f"k={k}:{coeffs[k]}" for k in sorted(coeffs)), file=out)
        ok = hz_polynomial_check(n)
        print(f"polynomial identity {'OK' if ok else 'MISMATCH'}", file=out)
        good = good and ok
    return OK if good else FAILED


def cmd_verify(args, out) -> int:
    lgq, w = _load(args.file)
    N = args.max_degree
    results = []
    results.append(("duality", ca.verify_duality(lgq, w)))
    results.append(("determinant", ca.det_formula(lgq, w).equals(ca.det_elimination(lgq, w))))
    try:
        ex = ca.cartan_exact(lgq, w).series(None, N)
        orc = ca.cartan_series_oracle(lgq, w, N)
        n = len(lgq.vertices)
        results.append(("oracle", all(ex[i][j] == orc[i][j] for i in range(n) for j in range(n))))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for name, ok in results:
        print(f"{name}: {'OK' if ok else 'FAILED'}", file=out)
    return OK if all(ok for _, ok in results) else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="locgentle", description="Weighted locally gentle quivers and Cartan determinants")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("cycles")
    s.add_argument("file")
    s.set_defaults(func=cmd_cycles)

    s = sub.add_parser("dual")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("cartan")
    s.add_argument("file")
    s.add_argument("--series", type=int)
    s.add_argument("--spec")
    s.set_defaults(func=cmd_cartan)

    s = sub.add_parser("det")
    s.add_argument("file")
    s.add_argument("--method", choices=["formula", "elim", "both"], default="both")
    s.add_argument("--spec")
    s.set_defaults(func=cmd_det)

    s = sub.add_parser("reduce")
    s.add_argument("file")
    s.add_argument("--cycle", required=True, help="ZC index (1-based, e.g. 1 or ZC1) or an arrow on the cycle")
    s.add_argument("--vertex", required=True)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("koszul")
    s.add_argument("file")
    s.add_argument("--vertex", required=True)
    s.add_argument("--terms", type=int, default=8)
    s.set_defaults(func=cmd_koszul)

    s = sub.add_parser("critical")
    s.add_argument("--n", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--emit", metavar="DIR")
    g.add_argument("--dihedral", action="store_true")
    s.set_defaults(func=cmd_critical)

    s = sub.add_parser("hz")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--poly", action="store_true")
    s.set_defaults(func=cmd_hz)

    s = sub.add_parser("verify")
    s.add_argument("file")
    s.add_argument("--max-degree", type=int, default=8)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else INPUT_ERROR
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
